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
 * @file cache.hpp
 * @brief On-disk result cache: one file per key, written to a temporary file
 *        and renamed into place, with a CRC-32 of the payload in the header.
 */

#ifndef CHEV_CACHE_HPP
#define CHEV_CACHE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace chev {

constexpr int kCacheSchemaVersion = 1;

struct CacheKey {
    std::string command;
    std::string group;
    unsigned n = 0, d = 0;
    std::uint32_t p = 0;
    unsigned degree = 0;
    /// anything else that changes the value (field, slice kind, ...)
    std::string extra;
    int schema_version = kCacheSchemaVersion;

    std::string to_string() const;
    std::string file_name() const;
};

class ResultCache {
   public:
    /// Warnings (corrupt entries) go to warn; the default prints to stderr.
    explicit ResultCache(std::string dir, std::function<void(const std::string&)> warn = {});

    const std::string& dir() const noexcept { return dir_; }
    std::optional<std::string> get(const CacheKey& key) const;
    void put(const CacheKey& key, const std::string& value) const;

   private:
    std::string dir_;
    std::function<void(const std::string&)> warn_;
};

/// Name of the environment variable holding the default cache directory.
constexpr const char* kCacheDirEnv = "CHEVTOOL_CACHE_DIR";

}  // namespace chev

#endif
