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

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "chev/cache.hpp"
#include "chev/cli.hpp"

using namespace chev;

int main(int argc, char** argv) {
    CLI::App app{"chevtool: commuting schemes, invariants and the Chevalley restriction map"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string group, format = "text", field = "auto";
    std::optional<unsigned> degree;
    if (const char* env = std::getenv(kCacheDirEnv)) cfg.cache_dir = env;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--cache-dir", cfg.cache_dir, std::string("result cache directory (default $") + kCacheDirEnv + ")");
        sub->add_option("--threads", cfg.threads, "worker threads, 0 for all cores");
    };
    auto group_opts = [&](CLI::App* sub, bool with_p) {
        sub->add_option("--group", group, "gl, o, so or sp")->required()->check(CLI::IsMember({"gl", "o", "so", "sp"}, CLI::ignore_case));
        sub->add_option("--n", cfg.n, "matrix size");
        sub->add_option("--d", cfg.d, "number of copies");
        if (with_p) {
            sub->add_option("--p", cfg.p, "characteristic (odd prime > n)");
            sub->add_option("--field", field, "auto, fp, fp2 or q")->check(CLI::IsMember({"auto", "fp", "fp2", "q"}));
        }
    };
    auto degree_opts = [&](CLI::App* sub) {
        sub->add_option("--degree", degree, "a single degree");
        sub->add_option("--max-degree", cfg.max_degree, "largest degree");
        sub->add_option("--min-degree", cfg.min_degree, "smallest degree");
    };

    auto* lemma = app.add_subcommand("lemma-max", "maximum of the lattice quadratic form against (n^3 - n)/3");
    lemma->add_option("--n", cfg.n, "n")->required();
    common(lemma);

    auto* betti = app.add_subcommand("betti", "graded Betti table of the commuting ideal");
    group_opts(betti, true);
    betti->add_option("--max-degree", cfg.max_degree, "largest internal degree j");
    betti->add_option("--module", cfg.module, "ibar or quotient");
    common(betti);

    auto* hilbert = app.add_subcommand("hilbert", "dimensions of Rbar_m, Ibar_m and K[c]_m");
    group_opts(hilbert, true);
    degree_opts(hilbert);
    common(hilbert);

    auto* inv = app.add_subcommand("invariants", "group invariants per degree");
    group_opts(inv, true);
    degree_opts(inv);
    inv->add_option("--slice", cfg.module, "free, quotient or ambient");
    common(inv);

    auto* phi = app.add_subcommand("phi-check", "degreewise check of the restriction map to the Cartan");
    group_opts(phi, true);
    degree_opts(phi);
    phi->add_flag("--ambient", cfg.with_ambient, "also report invariants of the ambient matrix space");
    phi->add_flag("--split", cfg.with_split, "SO with even n: check the O/SO eigen-split");
    common(phi);

    auto* cauchy = app.add_subcommand("cauchy", "dimension check of the Cauchy filtration");
    cauchy->add_option("--k", cfg.k, "exterior degree")->required();
    cauchy->add_option("--dim-f", cfg.dim_f, "dim F")->required();
    cauchy->add_option("--dim-g", cfg.dim_g, "dim G")->required();
    common(cauchy);

    auto* cert = app.add_subcommand("certificate", "Weyl-character certificate for good filtrations");
    group_opts(cert, true);
    degree_opts(cert);
    cert->add_option("--module", cfg.module, "ibar, free or quotient");
    cert->add_option("--character", cfg.character, "synthetic character, e.g. \"2,0:1 0,2:1\"");
    common(cert);

    auto* bound = app.add_subcommand("bound", "evaluate a characteristic or regularity bound");
    bound->add_option("kind", cfg.bound_kind, "iso, goodfil, chardin or lemma31")->required()->check(CLI::IsMember({"iso", "goodfil", "chardin", "lemma31"}));
    bound->add_option("--group", group, "gl, o, so or sp (iso)")->check(CLI::IsMember({"gl", "o", "so", "sp"}, CLI::ignore_case));
    bound->add_option("--n", cfg.n, "matrix size");
    bound->add_option("--d", cfg.d, "number of copies");
    bound->add_option("--reg", cfg.reg, "regularity (goodfil)");
    bound->add_option("--kappa", cfg.kappa, "generator degree bound (chardin)");
    bound->add_option("--vars", cfg.vars, "number of variables (chardin)");
    bound->add_option("--m", cfg.m, "m (lemma31)");
    bound->add_option("--alpha", cfg.alpha, "alpha (lemma31)");
    bound->add_flag("--next-prime", cfg.next_prime, "also print the smallest prime above the value");
    common(bound);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return 1;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    try {
        cfg.format = parse_format(format);
        cfg.field = parse_field_policy(field);
        if (!group.empty()) cfg.group = parse_group(group);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    if (degree) cfg.min_degree = cfg.max_degree = *degree;

    DispatchResult r = dispatch(cfg);
    std::cout << r.output;
    if (!r.error.empty()) std::cerr << r.error << "\n";
    return r.exit_code;
}
