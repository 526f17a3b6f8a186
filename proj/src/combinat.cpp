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

#include "chev/combinat.hpp"

#include <algorithm>
#include <boost/multiprecision/miller_rabin.hpp>
#include <boost/random/mersenne_twister.hpp>
#include <functional>
#include <stdexcept>

namespace chev {

namespace {

// strictly increasing m-subsets of 1..n, in lexicographic order
void for_each_subset(unsigned n, unsigned m, const std::function<void(const Point&)>& fn) {
    Point s(m);
    std::function<void(unsigned, std::int64_t)> rec = [&](unsigned i, std::int64_t lo) {
        if (i == m) {
            fn(s);
            return;
        }
        for (std::int64_t v = lo; v <= static_cast<std::int64_t>(n) - static_cast<std::int64_t>(m - i - 1); ++v) {
            s[i] = v;
            rec(i + 1, v + 1);
        }
    };
    rec(0, 1);
}

BigInt pow_big(BigInt base, std::uint64_t e) {
    BigInt r = 1;
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

}  // namespace

std::int64_t eval_F(unsigned n, unsigned m, const Point& x) {
    if (x.size() != 2 * std::size_t(m)) throw std::invalid_argument("eval_F: expected " + std::to_string(2 * m) + " coordinates");
    const std::int64_t N = n;
    auto at = [&](std::size_t i) -> std::int64_t { return (i == 0 || i == 2 * std::size_t(m) + 1) ? 0 : x[i - 1]; };
    std::int64_t s = 0;
    for (std::size_t i = 1; i <= m; ++i) {
        s += (at(i) - at(i - 1)) * at(m + i) * (N - at(m + i));
        s += (at(m + i) - at(m + i + 1)) * at(i) * (N - at(i));
    }
    return s;
}

bool in_W(unsigned n, unsigned m, const Point& a) {
    if (a.size() != m || m == 0) return false;
    if (a[0] <= 0 || a[m - 1] > static_cast<std::int64_t>(n)) return false;
    for (std::size_t i = 1; i < m; ++i)
        if (a[i] <= a[i - 1]) return false;
    return true;
}

bool in_V(unsigned n, unsigned m, const Point& a) {
    if (a.size() != 2 * std::size_t(m)) return false;
    Point lo(a.begin(), a.begin() + m), hi(a.rbegin(), a.rbegin() + m);
    return in_W(n, m, lo) && in_W(n, m, hi);
}

std::int64_t lemma_max_bruteforce(unsigned n) {
    if (n < 2 || n > 8) throw std::invalid_argument("lemma_max_bruteforce needs 2 <= n <= 8");
    std::int64_t best = 0;
    bool any = false;
    for (unsigned m = 1; m <= n; ++m) {
        std::vector<Point> subsets;
        for_each_subset(n, m, [&](const Point& s) { subsets.push_back(s); });
        for (const auto& lo : subsets)
            for (const auto& hi : subsets) {
                Point a = lo;
                a.insert(a.end(), hi.rbegin(), hi.rend());
                std::int64_t v = eval_F(n, m, a);
                if (!any || v > best) best = v;
                any = true;
            }
    }
    return best;
}

std::int64_t lemma_max_closed(unsigned n) {
    const std::int64_t N = n;
    return (N * N * N - N) / 3;
}

std::int64_t h_beta(unsigned n, unsigned m) {
    if (m < 1 || m > n) throw std::invalid_argument("h_beta needs 1 <= m <= n");
    const std::int64_t N = n, M = m, r = N - M;
    return (N * N * N - r * r * r - M) / 3;
}

HReduction h_reduction_check(unsigned n, unsigned m, const Point& a) {
    if (!in_W(n, m, a)) throw std::invalid_argument("h_reduction_check: point is not in W_m");
    HReduction out{0, {}, true};
    const std::int64_t N = n;
    std::int64_t prev = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const std::int64_t s = a[i] + prev;
        // 4 f_i = 2(2n - s) + 1 - (-1)^s
        const std::int64_t four = 2 * (2 * N - s) + (s % 2 ? 2 : 0);
        if (four % 4) out.matches = false;
        out.f.push_back(four / 4);
        prev = a[i];
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (out.f[i] <= 0 || out.f[i] > N) out.matches = false;
        if (i && out.f[i] >= out.f[i - 1]) out.matches = false;
    }
    Point full = a;
    full.insert(full.end(), out.f.begin(), out.f.end());
    out.value = eval_F(n, m, full);
    return out;
}

std::int64_t h_reduction_max(unsigned n) {
    std::int64_t best = 0;
    for (unsigned m = 1; m <= n; ++m)
        for_each_subset(n, m, [&](const Point& a) { best = std::max(best, h_reduction_check(n, m, a).value); });
    return best;
}

bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) return false;
        if (i && p[i] > p[i - 1]) return false;
    }
    return true;
}

Partition conjugate(const Partition& p) {
    if (!is_partition(p)) throw std::invalid_argument("conjugate: not a partition");
    Partition c;
    if (p.empty()) return c;
    for (unsigned j = 1; j <= p[0]; ++j) {
        unsigned cnt = 0;
        for (unsigned part : p)
            if (part >= j) ++cnt;
        c.push_back(cnt);
    }
    return c;
}

std::vector<Partition> partitions_of(unsigned k) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned maxpart) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (unsigned v = std::min(left, maxpart); v >= 1; --v) {
            cur.push_back(v);
            rec(left - v, v);
            cur.pop_back();
        }
    };
    rec(k, k);
    return out;
}

BigInt schur_dim(const Partition& lambda, unsigned N) {
    if (!is_partition(lambda)) throw std::invalid_argument("schur_dim: not a partition");
    if (lambda.size() > N) return 0;
    if (lambda.empty()) return 1;
    // fill row by row, left to right: rows weakly increase, columns strictly increase
    std::vector<std::vector<unsigned>> T(lambda.size());
    for (std::size_t r = 0; r < lambda.size(); ++r) T[r].assign(lambda[r], 0);
    BigInt count = 0;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t r, std::size_t c) {
        if (r == lambda.size()) {
            ++count;
            return;
        }
        if (c == lambda[r]) {
            rec(r + 1, 0);
            return;
        }
        unsigned lo = 1;
        if (c > 0) lo = std::max(lo, T[r][c - 1]);
        if (r > 0) lo = std::max(lo, T[r - 1][c] + 1);
        // leave room for the strictly increasing cells below in this column
        unsigned below = 0;
        for (std::size_t q = r + 1; q < lambda.size() && lambda[q] > c; ++q) ++below;
        const unsigned hi = N - below;
        for (unsigned v = lo; v <= hi; ++v) {
            T[r][c] = v;
            rec(r, c + 1);
        }
    };
    rec(0, 0);
    return count;
}

CauchyResult cauchy_check(unsigned k, unsigned dimF, unsigned dimG) {
    const std::uint64_t N = std::uint64_t(dimF) * dimG;
    BigInt lhs = 0;
    if (k <= N) {
        lhs = 1;
        for (std::uint64_t i = 1; i <= k; ++i) lhs = lhs * (N - k + i) / i;
    }
    BigInt rhs = 0;
    for (const auto& lambda : partitions_of(k)) rhs += schur_dim(lambda, dimF) * schur_dim(conjugate(lambda), dimG);
    return {lhs, rhs, lhs == rhs};
}

bool semisimple_bound_check(const std::vector<unsigned>& dims, const std::vector<unsigned>& exts, std::uint64_t p) {
    if (dims.size() != exts.size()) throw std::invalid_argument("semisimple_bound_check: dims and exts differ in length");
    BigInt s = 0;
    for (std::size_t j = 0; j < dims.size(); ++j) {
        if (exts[j] > dims[j]) throw std::invalid_argument("semisimple_bound_check: exterior degree exceeds the dimension");
        s += BigInt(exts[j]) * (dims[j] - exts[j]);
    }
    return s < p;
}

BigInt thm_bound_goodfil(unsigned n, unsigned d, std::int64_t reg) {
    return 2 * BigInt(reg - 1) * (n - 1) + BigInt(d) * lemma_max_closed(n);
}

BigInt thm_bound_iso(unsigned n, unsigned d, std::size_t lie_dim) {
    const std::uint64_t prod = std::uint64_t(d) * lie_dim;
    if (prod < 4) throw std::domain_error("formula undefined: d*dim(g) = " + std::to_string(prod) + " < 4");
    const std::uint64_t e = prod - 4;
    if (e > kMaxTowerExponent)
        throw std::overflow_error("12^(2^" + std::to_string(e) + ") is too large to materialize (limit 2^" + std::to_string(kMaxTowerExponent) + ")");
    return pow_big(12, std::uint64_t(1) << e) * (2 * BigInt(n) - 2) + BigInt(d) * lemma_max_closed(n);
}

BigInt lemma31_bound(unsigned n, unsigned m, std::int64_t alpha) {
    return 2 * BigInt(alpha) * (n - 1) + BigInt(m) * lemma_max_closed(n);
}

BigInt next_prime(const BigInt& x) {
    if (x < 2) return 2;
    boost::random::mt19937 gen(42);
    BigInt c = x + 1;
    if (c > 2 && c % 2 == 0) ++c;
    while (!boost::multiprecision::miller_rabin_test(c, 25, gen)) c += 2;
    return c;
}

}  // namespace chev
