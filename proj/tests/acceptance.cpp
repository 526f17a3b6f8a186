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

// Acceptance suite: one PASS/FAIL line per criterion. Every criterion also
// emits a JSON record; C11 recomputes them under another thread count and
// through the CLI dispatcher (cold and warm cache) and compares bytes.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>

#include "chev/betti.hpp"
#include "chev/characters.hpp"
#include "chev/chevalley.hpp"
#include "chev/cli.hpp"
#include "chev/combinat.hpp"
#include "chev/parallel.hpp"
#include "chev/report.hpp"

using namespace chev;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    Json json;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (detail.empty()) detail = what;
        }
    }
};

struct Criterion {
    std::string id, title;
    double limit_seconds;
    std::function<Outcome()> run;
};

std::int64_t closed_max(std::int64_t n) { return (n * n * n - n) / 3; }

// F_m and f_i written out from their definitions, in exact rationals.
Rational F_direct(unsigned n, unsigned m, const std::vector<Rational>& x) {
    auto at = [&](std::size_t i) -> Rational { return (i == 0 || i == 2 * std::size_t(m) + 1) ? Rational(0) : x[i - 1]; };
    Rational s = 0;
    for (std::size_t i = 1; i <= m; ++i)
        s += (at(i) - at(i - 1)) * at(m + i) * (n - at(m + i)) + (at(m + i) - at(m + i + 1)) * at(i) * (n - at(i));
    return s;
}

Rational H_at_beta(unsigned n, unsigned m) {
    std::vector<Rational> x;
    for (unsigned i = 1; i <= m; ++i) x.push_back(i);
    for (unsigned i = 1; i <= m; ++i) {
        const long s = static_cast<long>(i) + static_cast<long>(i - 1);
        const Rational sign = s % 2 ? -1 : 1;
        x.push_back(Rational(2 * static_cast<long>(n) - s, 2) + (1 - sign) / 4);
    }
    return F_direct(n, m, x);
}

// Coefficients of prod_i 1 / (1 - q^{deg_i}) up to q^top.
std::vector<std::size_t> hilbert_of_free_algebra(const std::vector<unsigned>& degs, unsigned top) {
    std::vector<std::size_t> h(top + 1, 0);
    h[0] = 1;
    for (unsigned dg : degs)
        for (unsigned m = dg; m <= top; ++m) h[m] += h[m - dg];
    return h;
}

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Outcome c1() {
    Outcome o;
    const std::int64_t literal[] = {2, 8, 20, 40, 70};
    Json rows = Json::array();
    for (unsigned n = 2; n <= 6; ++n) {
        const std::int64_t v = lemma_max_bruteforce(n);
        o.expect(v == closed_max(n) && v == literal[n - 2], "n=" + std::to_string(n) + ": got " + std::to_string(v));
        rows.push_back(Json{{"n", int_string(n)}, {"max", int_string(v)}});
    }
    o.json = rows;
    return o;
}

Outcome c2() {
    Outcome o;
    Json rows = Json::array();
    for (unsigned n = 2; n <= 6; ++n) {
        const std::int64_t v = h_reduction_max(n);
        o.expect(v == closed_max(n), "reduction max at n=" + std::to_string(n));
        rows.push_back(Json{{"n", int_string(n)}, {"reduction-max", int_string(v)}});
    }
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned m = 1; m <= n; ++m) {
            const std::int64_t N = n, M = m;
            const std::int64_t formula = (N * N * N - (N - M) * (N - M) * (N - M) - M) / 3;
            const Rational direct = H_at_beta(n, m);
            o.expect(Rational(h_beta(n, m)) == direct && Rational(formula) == direct,
                     "h_beta(" + std::to_string(n) + "," + std::to_string(m) + ")");
            rows.push_back(Json{{"n", int_string(n)}, {"m", int_string(m)}, {"h-beta", int_string(h_beta(n, m))}});
        }
    o.json = rows;
    return o;
}

Outcome c3() {
    Outcome o;
    const std::vector<std::tuple<unsigned, unsigned, int>> cases{{2, 3, 4}, {2, 4, 13}, {2, 5, 145}, {3, 2, 5}};
    Json rows = Json::array();
    for (auto [k, r, v] : cases) {
        BigInt b = chardin_bound(k, r);
        o.expect(b == v, "chardin(" + std::to_string(k) + "," + std::to_string(r) + ") = " + b.str());
        rows.push_back(Json{{"kappa", int_string(k)}, {"vars", int_string(r)}, {"value", int_string(b)}});
    }
    o.json = rows;
    return o;
}

Outcome c4() {
    Outcome o;
    const Field f = Field::prime(101);
    auto x = SparsePoly::variable(f, 2, 0), y = SparsePoly::variable(f, 2, 1);
    auto M = GradedModuleSlices::ideal(f, {x, y}, 2, 3);
    BettiTable t = betti_table(M, 3);
    Regularity r = regularity_of(t, M);
    o.expect(t.entries == std::map<std::pair<int, int>, std::size_t>{{{0, 1}, 2}, {{1, 2}, 1}}, "(x,y) table");
    o.expect(r.reg == 1 && r.complete, "(x,y) regularity");
    auto X = SparsePoly::variable(f, 3, 0), Y = SparsePoly::variable(f, 3, 1), Z = SparsePoly::variable(f, 3, 2);
    auto N = GradedModuleSlices::ideal(f, {X * Y, X * Z}, 3, 6);
    BettiTable u = betti_table(N, 6);
    Regularity s = regularity_of(u, N);
    o.expect(u.entries == std::map<std::pair<int, int>, std::size_t>{{{0, 2}, 2}, {{1, 3}, 1}}, "(xy,xz) table");
    o.expect(s.reg == 2 && s.complete, "(xy,xz) regularity");
    o.json = Json{{"xy", to_json(t, r)}, {"xy-xz", to_json(u, s)}};
    return o;
}

Outcome c5() {
    Outcome o;
    std::size_t checked = 0;
    for (unsigned a = 1; a <= 4; ++a)
        for (unsigned b = 1; b <= 4; ++b)
            for (unsigned k = 0; k <= 8; ++k) {
                CauchyResult c = cauchy_check(k, a, b);
                o.expect(c.equal && c.lhs == choose(a * b, k),
                         "k=" + std::to_string(k) + " dims " + std::to_string(a) + "," + std::to_string(b));
                ++checked;
            }
    o.json = Json{{"cases", int_string(checked)}};
    return o;
}

Outcome c6() {
    Outcome o;
    struct Case {
        GroupKind kind;
        unsigned n;
        std::uint32_t p;
        std::vector<unsigned> invariant_degrees;
    };
    const std::vector<Case> cases{{GroupKind::GL, 2, 7, {1, 2}}, {GroupKind::GL, 3, 11, {1, 2, 3}}, {GroupKind::Sp, 2, 13, {2}}};
    Json rows = Json::array();
    for (const auto& c : cases) {
        auto h = hilbert_of_free_algebra(c.invariant_degrees, 6);
        std::vector<DegreeReport> reports(7);
        parallel_for(7, [&](std::size_t m) { reports[m] = phi_degree_check(group_spec(c.kind, c.n), 1, c.p, static_cast<unsigned>(m)); });
        for (unsigned m = 0; m <= 6; ++m) {
            const DegreeReport& r = reports[m];
            const std::string tag = group_name(c.kind) + std::to_string(c.n) + " m=" + std::to_string(m);
            o.expect(r.bijective(), tag + " not bijective");
            o.expect(r.dim_source == h[m] && r.dim_target == h[m], tag + " dims differ from the Hilbert function");
            o.expect(r.consistent(), tag + " inconsistent report");
            rows.push_back(to_json(r));
        }
    }
    o.json = rows;
    return o;
}

Outcome c7() {
    Outcome o;
    RunConfig cfg;
    cfg.command = "phi-check";
    cfg.group = GroupKind::GL;
    cfg.n = 2;
    cfg.d = 2;
    cfg.p = 101;
    cfg.max_degree = 4;
    cfg.format = OutputFormat::Json;
    cfg.threads = thread_count();
    DispatchResult r = dispatch(cfg);
    o.expect(r.exit_code == 0, "exit code " + std::to_string(r.exit_code) + " " + r.error);
    if (r.exit_code != 0) return o;
    Json j = Json::parse(r.output);
    o.expect(j["all-bijective"].get<bool>(), "not bijective");
    o.expect(j["p-below-theorem-bound"].get<bool>(), "bound not recorded as above p");
    o.expect(j["theorem-bound"] == "369768517790072836", "bound value");
    // S_2 acting diagonally on K[t1, t2, s1, s2]: half of all monomials plus the swap-fixed ones
    for (unsigned m = 0; m <= 4; ++m) {
        const std::size_t fixed = m % 2 ? 0 : m / 2 + 1;
        const std::size_t expect = (choose(m + 3, 3) + fixed) / 2;
        const Json& row = j["degrees"][m];
        o.expect(row["dim-target"] == std::to_string(expect) && row["dim-source"] == std::to_string(expect),
                 "m=" + std::to_string(m) + " dims");
    }
    o.json = j;
    return o;
}

Outcome c8() {
    Outcome o;
    Json rows = Json::array();
    for (std::uint32_t p : {5u, 7u, 101u}) {
        const Field f = Field::prime(p);
        auto gl2 = group_spec(GroupKind::GL, 2);
        const std::size_t ib = ibar_component(gl2, 2, 2, f).dim();
        const std::size_t h = commuting_hilbert(gl2, 2, 2, f);
        o.expect(ib == 3 && h == 33 && h + ib == choose(9, 2), "p=" + std::to_string(p));
        rows.push_back(Json{{"p", int_string(p)}, {"dim-ibar-2", int_string(ib)}, {"hilbert-2", int_string(h)}});
    }
    o.json = rows;
    return o;
}

Outcome c9() {
    Outcome o;
    Certificate c = goodfil_certificate(group_spec(GroupKind::GL, 2), 2, 101, 4);
    o.expect(c.pass() && c.degrees.size() == 5, "Ibar certificate failed");
    Json rows = Json::array();
    for (const auto& d : c.degrees) rows.push_back(to_json(d));
    CharacterVector frob;
    frob.add({2, 0}, 1);
    frob.add({0, 2}, 1);
    CertificateDegree bad = certify_character(frob, group_spec(GroupKind::GL, 2), 2);
    o.expect(!bad.pass && bad.witness && bad.witness->first == Weight{1, 1} && bad.witness->second == -1, "synthetic character");
    o.json = Json{{"ibar", rows}, {"synthetic", to_json(bad)}};
    return o;
}

Outcome c10() {
    Outcome o;
    BigInt twelve16 = 1;
    for (int i = 0; i < 16; ++i) twelve16 *= 12;
    const BigInt iso = thm_bound_iso(2, 2, 4);
    o.expect(iso == BigInt("369768517790072836") && iso == twelve16 * 2 + 4, "iso bound " + iso.str());
    o.expect(thm_bound_goodfil(2, 2, 3) == 8, "goodfil bound");
    bool refused = false;
    try {
        thm_bound_iso(3, 1, 3);
    } catch (const std::domain_error&) {
        refused = true;
    }
    o.expect(refused, "d*dim g = 3 was not refused");
    o.json = Json{{"iso", int_string(iso)}, {"goodfil", int_string(thm_bound_goodfil(2, 2, 3))}, {"refuses-small", refused}};
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"C1", "lattice maximum by exhaustion, n = 2..6", 30, c1},
        {"C2", "maximum through the reduction, h_beta against direct evaluation", 60, c2},
        {"C3", "regularity bound values", 5, c3},
        {"C4", "Betti tables of (x,y) and (xy,xz)", 1, c4},
        {"C5", "Cauchy dimension identity, dims <= 4, k <= 8", 5, c5},
        {"C6", "classical restriction (d = 1) bijective for m <= 6 on GL2, GL3, Sp2", 120, c6},
        {"C7", "restriction for GL2, d = 2, p = 101 bijective for m <= 4", 600, c7},
        {"C8", "commuting slices for GL2, d = 2: dim Ibar_2 = 3, dim K[c]_2 = 33", 30, c8},
        {"C9", "character certificate for Ibar_m, m <= 4, and the synthetic failure", 60, c9},
        {"C10", "bound evaluators", 5, c10},
    };

    bool all = true;
    std::vector<std::string> first_json;
    for (const auto& c : criteria) {
        set_thread_count(1);
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.limit_seconds) o.expect(false, "took " + std::to_string(secs) + " s");
        all = all && o.pass;
        first_json.push_back(o.json.dump());
        std::printf("%-4s %s  %s (%.2f s)%s%s\n", c.id.c_str(), o.pass ? "PASS" : "FAIL", c.title.c_str(), secs,
                    o.detail.empty() ? "" : " -- ", o.detail.c_str());
    }

    // C11: identical JSON with four workers, and through the dispatcher with a cold and a warm cache
    Outcome det;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        set_thread_count(4);
        Outcome again;
        try {
            again = criteria[i].run();
        } catch (const std::exception& e) {
            det.expect(false, criteria[i].id + " threw on rerun: " + e.what());
            continue;
        }
        det.expect(again.json.dump() == first_json[i], criteria[i].id + " differs with 4 threads");
    }
    const auto cache_dir = std::filesystem::temp_directory_path() / ("chevtool-acceptance-" + std::to_string(std::random_device{}()));
    std::vector<RunConfig> configs;
    {
        RunConfig base;
        base.group = GroupKind::GL;
        base.n = 2;
        base.d = 2;
        base.p = 101;
        base.max_degree = 4;
        base.format = OutputFormat::Json;
        for (const char* cmd : {"phi-check", "certificate", "hilbert", "invariants"}) {
            RunConfig c = base;
            c.command = cmd;
            configs.push_back(c);
        }
        RunConfig b = base;
        b.command = "betti";
        b.max_degree = 4;
        configs.push_back(b);
        RunConfig l;
        l.command = "lemma-max";
        l.n = 5;
        l.format = OutputFormat::Json;
        configs.push_back(l);
    }
    for (auto cfg : configs) {
        cfg.threads = 1;
        const DispatchResult plain = dispatch(cfg);
        det.expect(plain.exit_code == 0, cfg.command + " failed: " + plain.error);
        cfg.cache_dir = cache_dir.string();
        for (unsigned threads : {4u, 2u}) {
            cfg.threads = threads;
            const DispatchResult r = dispatch(cfg);
            det.expect(r.output == plain.output && r.exit_code == plain.exit_code,
                       cfg.command + " differs with " + std::to_string(threads) + " threads and the cache");
        }
    }
    std::filesystem::remove_all(cache_dir);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && det.pass;
    std::printf("%-4s %s  %s (%.2f s)%s%s\n", "C11", det.pass ? "PASS" : "FAIL",
                "byte-identical JSON across thread counts and cache states", secs, det.detail.empty() ? "" : " -- ", det.detail.c_str());
    std::printf("%s\n", all ? "acceptance: all criteria PASS" : "acceptance: FAIL");
    return all ? 0 : 1;
}
