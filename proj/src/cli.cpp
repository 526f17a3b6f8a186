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

#include "chev/cli.hpp"

#include <iomanip>
#include <set>
#include <sstream>

#include "chev/betti.hpp"
#include "chev/cache.hpp"
#include "chev/characters.hpp"
#include "chev/chevalley.hpp"
#include "chev/combinat.hpp"
#include "chev/invariants.hpp"
#include "chev/parallel.hpp"
#include "chev/report.hpp"

namespace chev {

namespace {

constexpr int kExitOk = 0, kExitUsage = 1, kExitFail = 2;

bool uses_group(const RunConfig& c) {
    return c.command == "betti" || c.command == "hilbert" || c.command == "invariants" || c.command == "phi-check" ||
           c.command == "certificate" || (c.command == "bound" && c.bound_kind == "iso");
}

bool uses_prime(const RunConfig& c) { return uses_group(c) && c.command != "bound"; }

Field choose_field(const RunConfig& c, const GroupSpec& spec) {
    switch (c.field) {
        case FieldPolicy::Auto:
            return working_field(spec, c.p);
        case FieldPolicy::Prime:
            return Field::prime(c.p);
        case FieldPolicy::Quadratic:
            return Field::quadratic(c.p);
        case FieldPolicy::Rational:
            return Field::rationals();
    }
    return Field::prime(c.p);
}

std::string field_policy_name(FieldPolicy f) {
    switch (f) {
        case FieldPolicy::Auto:
            return "auto";
        case FieldPolicy::Prime:
            return "fp";
        case FieldPolicy::Quadratic:
            return "fp2";
        case FieldPolicy::Rational:
            return "q";
    }
    return "?";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// Shared header of every group-based report.
Json group_header(const RunConfig& c, const GroupSpec& spec, Field f) {
    Json j;
    j["command"] = c.command;
    j["group"] = group_name(spec.kind);
    j["n"] = int_string(spec.n);
    j["d"] = int_string(c.d);
    j["p"] = int_string(f.characteristic());
    j["field"] = f.name();
    j["field-policy"] = field_policy_name(c.field);
    return j;
}

// Per-degree results, computed in parallel and cached one degree at a time.
std::vector<Json> per_degree(const RunConfig& c, const GroupSpec& spec, Field f, const std::string& extra,
                             const std::function<Json(unsigned)>& compute) {
    const unsigned lo = c.min_degree, hi = c.max_degree;
    std::vector<Json> out(hi - lo + 1);
    std::optional<ResultCache> cache;
    if (!c.cache_dir.empty()) cache.emplace(c.cache_dir);
    parallel_for(out.size(), [&](std::size_t i) {
        const unsigned m = lo + static_cast<unsigned>(i);
        CacheKey key{c.command, group_name(spec.kind), spec.n, c.d, f.characteristic(), m, f.name() + ";" + extra};
        if (cache)
            if (auto hit = cache->get(key)) {
                out[i] = Json::parse(*hit);
                return;
            }
        out[i] = compute(m);
        if (cache) cache->put(key, out[i].dump());
    });
    return out;
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + cells[i];
    return s + "\n";
}

std::string render_table(const Json& rows, const std::vector<std::string>& keys, OutputFormat fmt) {
    std::ostringstream os;
    if (fmt == OutputFormat::Csv) {
        os << csv_line(keys);
        for (const auto& r : rows) {
            std::vector<std::string> cells;
            for (const auto& k : keys) cells.push_back(r[k].is_string() ? r[k].get<std::string>() : r[k].dump());
            os << csv_line(cells);
        }
        return os.str();
    }
    std::vector<std::size_t> width;
    for (const auto& k : keys) width.push_back(k.size());
    for (const auto& r : rows)
        for (std::size_t i = 0; i < keys.size(); ++i) {
            const Json& v = r[keys[i]];
            width[i] = std::max(width[i], (v.is_string() ? v.get<std::string>() : v.dump()).size());
        }
    for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << keys[i];
    os << "\n";
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < keys.size(); ++i) {
            const Json& v = r[keys[i]];
            os << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << (v.is_string() ? v.get<std::string>() : v.dump());
        }
        os << "\n";
    }
    return os.str();
}

void require_no_csv(const RunConfig& c) {
    if (c.format == OutputFormat::Csv) throw UsageError("csv output is only available for betti, hilbert, invariants and phi-check");
}

std::string finish(const Json& j, const RunConfig& c, const std::string& text) {
    if (c.format == OutputFormat::Json) return j.dump(2) + "\n";
    return text;
}

std::vector<std::string> variable_names(const LieFrame& frame, unsigned d) {
    std::vector<std::string> out;
    for (unsigned q = 0; q < d; ++q)
        for (const auto& s : frame.names()) out.push_back(d > 1 ? s + "_" + std::to_string(q + 1) : s);
    return out;
}

SliceKind parse_slice(const std::string& s) {
    if (s.empty() || s == "free") return SliceKind::Free;
    if (s == "quotient") return SliceKind::Quotient;
    if (s == "ambient") return SliceKind::Ambient;
    throw UsageError("unknown slice '" + s + "' (expected free, quotient or ambient)");
}

CharacterVector parse_character(const std::string& s, unsigned rank) {
    CharacterVector c;
    std::istringstream in(s);
    std::string term;
    while (in >> term) {
        const auto colon = term.find(':');
        if (colon == std::string::npos) throw UsageError("character term '" + term + "' needs the form w1,w2,...:coeff");
        Weight w;
        std::istringstream ws(term.substr(0, colon));
        std::string part;
        try {
            while (std::getline(ws, part, ',')) w.push_back(std::stoi(part));
            if (w.size() != rank) throw UsageError("character weight '" + term.substr(0, colon) + "' needs " + std::to_string(rank) + " entries");
            c.add(w, std::stoll(term.substr(colon + 1)));
        } catch (const std::logic_error& e) {
            if (dynamic_cast<const UsageError*>(&e)) throw;
            throw UsageError("cannot parse character term '" + term + "'");
        }
    }
    return c;
}

// ---- commands ----

DispatchResult run_lemma_max(const RunConfig& c) {
    require_no_csv(c);
    if (c.n < 2 || c.n > 16) throw UsageError("lemma-max needs 2 <= n <= 16");
    const bool exhaustive = c.n <= 8;
    const std::int64_t v = exhaustive ? lemma_max_bruteforce(c.n) : h_reduction_max(c.n);
    const std::int64_t closed = lemma_max_closed(c.n);
    Json j;
    j["command"] = c.command;
    j["n"] = int_string(c.n);
    j["max"] = int_string(v);
    j["closed-form"] = int_string(closed);
    j["method"] = exhaustive ? "exhaustive" : "reduction";
    j["matches-closed-form"] = v == closed;
    std::string text = std::to_string(v) + "\nmatches closed form: " + yes_no(v == closed) + "\n";
    return {v == closed ? kExitOk : kExitFail, finish(j, c, text), ""};
}

DispatchResult run_bound(const RunConfig& c) {
    require_no_csv(c);
    Json j;
    j["command"] = c.command;
    j["kind"] = c.bound_kind;
    BigInt v;
    if (c.bound_kind == "iso") {
        GroupSpec spec = group_spec(*c.group, c.n);
        j["group"] = group_name(spec.kind);
        j["n"] = int_string(c.n);
        j["d"] = int_string(c.d);
        j["lie-dim"] = int_string(spec.lie_dim);
        try {
            v = thm_bound_iso(c.n, c.d, spec.lie_dim);
        } catch (const std::domain_error& e) {
            throw UsageError(e.what());
        } catch (const std::overflow_error& e) {
            throw UsageError(e.what());
        }
    } else if (c.bound_kind == "goodfil") {
        j["n"] = int_string(c.n);
        j["d"] = int_string(c.d);
        j["reg"] = int_string(c.reg);
        v = thm_bound_goodfil(c.n, c.d, c.reg);
    } else if (c.bound_kind == "chardin") {
        j["kappa"] = int_string(c.kappa);
        j["vars"] = int_string(c.vars);
        v = chardin_bound(c.kappa, c.vars);
    } else if (c.bound_kind == "lemma31") {
        j["n"] = int_string(c.n);
        j["m"] = int_string(c.m);
        j["alpha"] = int_string(c.alpha);
        v = lemma31_bound(c.n, c.m, c.alpha);
    } else {
        throw UsageError("unknown bound '" + c.bound_kind + "' (expected iso, goodfil, chardin or lemma31)");
    }
    j["value"] = int_string(v);
    std::string text = v.str() + "\n";
    if (c.next_prime) {
        const BigInt q = next_prime(v);
        j["next-prime"] = int_string(q);
        text += "next prime: " + q.str() + "\n";
    }
    return {kExitOk, finish(j, c, text), ""};
}

DispatchResult run_cauchy(const RunConfig& c) {
    require_no_csv(c);
    CauchyResult r = cauchy_check(c.k, c.dim_f, c.dim_g);
    Json j;
    j["command"] = c.command;
    j["k"] = int_string(c.k);
    j["dim-f"] = int_string(c.dim_f);
    j["dim-g"] = int_string(c.dim_g);
    j["lhs"] = int_string(r.lhs);
    j["rhs"] = int_string(r.rhs);
    j["equal"] = r.equal;
    std::string text = "dim Wedge^" + std::to_string(c.k) + "(F (x) G) = " + r.lhs.str() + "\nsum over partitions = " + r.rhs.str() +
                       "\nequal: " + yes_no(r.equal) + "\n";
    return {r.equal ? kExitOk : kExitFail, finish(j, c, text), ""};
}

DispatchResult run_hilbert(const RunConfig& c, const GroupSpec& spec, Field f) {
    auto rows = per_degree(c, spec, f, "", [&](unsigned m) {
        LinSpace I = ibar_component(lie_frame(spec, f), c.d, m);
        Json r;
        r["degree"] = int_string(m);
        r["dim-rbar"] = int_string(I.ambient_dim());
        r["dim-ibar"] = int_string(I.dim());
        r["dim-commuting"] = int_string(I.ambient_dim() - I.dim());
        return r;
    });
    Json j = group_header(c, spec, f);
    j["degrees"] = rows;
    const std::vector<std::string> keys{"degree", "dim-rbar", "dim-ibar", "dim-commuting"};
    return {kExitOk, c.format == OutputFormat::Json ? j.dump(2) + "\n" : render_table(j["degrees"], keys, c.format), ""};
}

DispatchResult run_betti(const RunConfig& c, const GroupSpec& spec, Field f) {
    const std::string module = c.module.empty() ? "ibar" : c.module;
    if (module != "ibar" && module != "quotient") throw UsageError("betti module must be ibar or quotient");
    std::optional<ResultCache> cache;
    if (!c.cache_dir.empty()) cache.emplace(c.cache_dir);
    CacheKey key{c.command, group_name(spec.kind), spec.n, c.d, f.characteristic(), c.max_degree, f.name() + ";" + module};
    Json body;
    if (auto hit = cache ? cache->get(key) : std::nullopt) {
        body = Json::parse(*hit);
    } else {
        LieFrame frame = lie_frame(spec, f);
        GenericMatrices g = generic_matrices(frame, c.d);
        auto gens = commutator_generators(g);
        auto M = module == "ibar" ? GradedModuleSlices::ideal(f, gens, g.nvars, c.max_degree)
                                  : GradedModuleSlices::quotient(f, gens, g.nvars, c.max_degree);
        BettiTable t = betti_table(M, static_cast<int>(c.max_degree));
        body = to_json(t, regularity_of(t, M));
        if (cache) cache->put(key, body.dump());
    }
    Json j = group_header(c, spec, f);
    j["module"] = module;
    for (auto& [k, v] : body.items()) j[k] = v;
    if (c.format == OutputFormat::Json) return {kExitOk, j.dump(2) + "\n", ""};
    if (c.format == OutputFormat::Csv) return {kExitOk, render_table(j["entries"], {"i", "j", "beta"}, c.format), ""};
    std::string text = render_table(j["entries"], {"i", "j", "beta"}, c.format);
    text += "regularity: " + (j["regularity"].is_null() ? std::string("none (zero module)") : j["regularity"].get<std::string>()) +
            (j["complete"].get<bool>() ? " (complete)" : " (window " + j["window"].get<std::string>() + ", may be incomplete)") + "\n";
    return {kExitOk, text, ""};
}

DispatchResult run_invariants(const RunConfig& c, const GroupSpec& spec, Field f) {
    const SliceKind kind = parse_slice(c.module);
    const std::string slice = c.module.empty() ? "free" : c.module;
    auto rows = per_degree(c, spec, f, slice, [&](unsigned m) {
        LinSpace inv = group_invariants(spec, c.d, m, f, kind);
        LinSpace w0 = torus_weight_zero(spec, c.d, m, f, kind);
        auto names = variable_names(slice_frame(spec, f, kind), c.d);
        Json basis = Json::array();
        for (const auto& v : inv.vectors()) basis.push_back(SparsePoly::from_vector(f, *inv.labels(), v).to_string(names));
        Json r;
        r["degree"] = int_string(m);
        r["dim"] = int_string(inv.dim());
        r["weight-zero-dim"] = int_string(w0.dim());
        r["basis"] = basis;
        return r;
    });
    Json j = group_header(c, spec, f);
    j["slice"] = slice;
    j["degrees"] = rows;
    if (c.format == OutputFormat::Json) return {kExitOk, j.dump(2) + "\n", ""};
    std::string text = render_table(j["degrees"], {"degree", "dim", "weight-zero-dim"}, c.format);
    if (c.format == OutputFormat::Text)
        for (const auto& r : j["degrees"])
            for (const auto& b : r["basis"]) text += "  m=" + r["degree"].get<std::string>() + ": " + b.get<std::string>() + "\n";
    return {kExitOk, text, ""};
}

DispatchResult run_phi_check(const RunConfig& c, const GroupSpec& spec, Field f) {
    if (c.with_split && !(spec.kind == GroupKind::SO && spec.n % 2 == 0)) throw UsageError("--split needs SO with even n");
    if (c.with_split && c.field != FieldPolicy::Auto) throw UsageError("--split always works over the automatic field");
    std::string extra = std::string(c.with_ambient ? "ambient;" : "") + (c.with_split ? "split;" : "");
    auto rows = per_degree(c, spec, f, extra, [&](unsigned m) {
        Json r = to_json(phi_degree_check(spec, c.d, f, m));
        if (c.with_ambient) r["ambient"] = to_json(phi_from_ambient(spec, c.d, f.characteristic(), m));
        if (c.with_split) r["split"] = to_json(so_even_split_check(spec.n, c.d, f.characteristic(), m));
        return r;
    });
    bool ok = true;
    for (const auto& r : rows) {
        ok = ok && r["injective"].get<bool>() && r["surjective"].get<bool>() && r["image-in-target"].get<bool>();
        if (r.contains("split")) ok = ok && r["split"]["preserves-split"].get<bool>();
    }
    Json j = group_header(c, spec, f);
    j["degrees"] = rows;
    j["all-bijective"] = ok;
    // where p sits relative to the isomorphism theorem's characteristic bound
    std::string bound_text, note;
    bool below = true;
    try {
        BigInt b = thm_bound_iso(spec.n, c.d, spec.lie_dim);
        bound_text = b.str();
        below = BigInt(f.characteristic()) <= b;
    } catch (const std::domain_error&) {
        bound_text = "undefined (d*dim g < 4)";
    } catch (const std::overflow_error&) {
        bound_text = "above 12^(2^" + std::to_string(kMaxTowerExponent) + ")";
    }
    if (c.d == 1)
        note = "d = 1: classical restriction theorem, checked degreewise";
    else if (below)
        note = "p is below the theorem's characteristic bound: an observation consistent with the conjecture, not an instance of the theorem";
    else
        note = "p exceeds the theorem's characteristic bound";
    j["theorem-bound"] = bound_text;
    j["p-below-theorem-bound"] = below;
    j["note"] = note;
    if (c.format == OutputFormat::Json) return {ok ? kExitOk : kExitFail, j.dump(2) + "\n", ""};
    std::string text = render_table(j["degrees"], {"degree", "dim-source", "dim-target", "dim-image", "injective", "surjective"}, c.format);
    if (c.format == OutputFormat::Text) {
        text += "all degrees bijective: " + yes_no(ok) + "\n";
        text += "theorem bound: " + bound_text + "\n" + note + "\n";
    }
    return {ok ? kExitOk : kExitFail, text, ""};
}

DispatchResult run_certificate(const RunConfig& c, const GroupSpec& spec, Field f) {
    require_no_csv(c);
    if (spec.kind == GroupKind::O)
        throw UsageError("the certificate is offered for connected groups only (GL, SO, Sp); O_" + std::to_string(spec.n) + " is disconnected");
    Json j = group_header(c, spec, f);
    std::vector<Json> rows;
    if (!c.character.empty()) {
        j["module"] = "synthetic";
        rows.push_back(to_json(certify_character(parse_character(c.character, spec.rank()), spec, 0)));
    } else {
        const std::string module = c.module.empty() ? "ibar" : c.module;
        CertifiedModule which;
        if (module == "ibar")
            which = CertifiedModule::Ideal;
        else if (module == "free")
            which = CertifiedModule::Free;
        else if (module == "quotient")
            which = CertifiedModule::Quotient;
        else
            throw UsageError("certificate module must be ibar, free or quotient");
        j["module"] = module;
        rows = per_degree(c, spec, f, module, [&](unsigned m) {
            CharacterVector ch;
            switch (which) {
                case CertifiedModule::Ideal:
                    ch = subspace_character(spec, c.d, ibar_component(lie_frame(spec, f), c.d, m), f);
                    break;
                case CertifiedModule::Free:
                    ch = slice_character(spec, c.d, m, f);
                    break;
                case CertifiedModule::Quotient:
                    ch = slice_character(spec, c.d, m, f, SliceKind::Quotient);
                    break;
            }
            return to_json(certify_character(ch, spec, m));
        });
    }
    bool ok = true;
    for (const auto& r : rows) ok = ok && r["status"] == certificate_status(true);
    j["degrees"] = rows;
    j["status"] = certificate_status(ok);
    std::ostringstream text;
    for (const auto& r : rows) {
        text << "m=" << r["degree"].get<std::string>() << ": " << r["status"].get<std::string>();
        if (r.contains("witness")) {
            text << " (weight";
            for (const auto& x : r["witness"]["weight"]) text << " " << x.get<std::string>();
            text << " has coefficient " << r["witness"]["coeff"].get<std::string>() << ")";
        }
        text << "\n";
    }
    text << certificate_status(ok) << " (necessary for a good filtration, not sufficient)\n";
    return {ok ? kExitOk : kExitFail, finish(j, c, text.str()), ""};
}

}  // namespace

OutputFormat parse_format(const std::string& s) {
    if (s == "text") return OutputFormat::Text;
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    throw UsageError("unknown format '" + s + "' (expected text, json or csv)");
}

FieldPolicy parse_field_policy(const std::string& s) {
    if (s == "auto") return FieldPolicy::Auto;
    if (s == "fp") return FieldPolicy::Prime;
    if (s == "fp2") return FieldPolicy::Quadratic;
    if (s == "q") return FieldPolicy::Rational;
    throw UsageError("unknown field policy '" + s + "' (expected auto, fp, fp2 or q)");
}

void validate(const RunConfig& c) {
    static const std::set<std::string> commands{"lemma-max", "betti", "hilbert", "invariants", "phi-check", "cauchy", "certificate", "bound"};
    if (!commands.count(c.command)) throw UsageError("unknown command '" + c.command + "'");
    if (uses_group(c)) {
        if (!c.group) throw UsageError(c.command + " needs --group");
        if (c.n < 2) throw UsageError("--n must be at least 2");
        if (*c.group == GroupKind::Sp && c.n % 2) throw UsageError("Sp needs even n, got " + std::to_string(c.n));
        if (c.d < 1) throw UsageError("--d must be at least 1");
    }
    if (uses_prime(c) && c.field != FieldPolicy::Rational) {
        if (c.p == 2 || !is_prime(c.p)) throw UsageError("--p must be an odd prime, got " + std::to_string(c.p));
        if (c.p <= c.n) throw UsageError("--p must exceed n (p = " + std::to_string(c.p) + ", n = " + std::to_string(c.n) + ")");
    }
    if (c.min_degree > c.max_degree) throw UsageError("--min-degree exceeds --max-degree");
    if (c.command == "bound" && c.bound_kind == "iso" && !c.group) throw UsageError("bound iso needs --group");
}

DispatchResult dispatch(const RunConfig& cfg) {
    try {
        validate(cfg);
        set_thread_count(cfg.threads);
        if (cfg.command == "lemma-max") return run_lemma_max(cfg);
        if (cfg.command == "bound") return run_bound(cfg);
        if (cfg.command == "cauchy") return run_cauchy(cfg);
        const GroupSpec spec = group_spec(*cfg.group, cfg.n);
        const Field f = choose_field(cfg, spec);
        if (cfg.command == "hilbert") return run_hilbert(cfg, spec, f);
        if (cfg.command == "betti") return run_betti(cfg, spec, f);
        if (cfg.command == "invariants") return run_invariants(cfg, spec, f);
        if (cfg.command == "phi-check") return run_phi_check(cfg, spec, f);
        if (cfg.command == "certificate") return run_certificate(cfg, spec, f);
        throw UsageError("unknown command '" + cfg.command + "'");
    } catch (const std::exception& e) {
        // usage errors, unsupported fields and precondition failures
        return {kExitUsage, "", std::string("error: ") + e.what()};
    }
}

}  // namespace chev
