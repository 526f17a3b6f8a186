/*
   Copyright 2026 The chevtool Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file parallel.hpp
 * @brief Process-wide worker count and an index-parallel loop.
 *
 * Work items write only to their own output slot, so results do not depend on
 * the worker count.
 */

#ifndef CHEV_PARALLEL_HPP
#define CHEV_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace chev {

/// 0 selects the hardware concurrency.
void set_thread_count(unsigned n);
unsigned thread_count();

/// Calls fn(i) for i in [0, n); rethrows the first exception after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace chev

#endif
