// Command-line front end: every engine of the toolkit behind one executable.
// Results are printed to stdout as deterministic JSON (insertion-ordered keys,
// exact rationals as [numerator, denominator] pairs, never floats).
//
// Exit codes: 0 success, 1 internal failure, 2 rejected input,
// 3 detected mathematical inconsistency.

#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "tropsing/acceptance.hpp"
#include "tropsing/json_io.hpp"

namespace {

using namespace tropsing;

// exponent set actually carried by nonzero coefficients
BSet support_of(const CoeffMap& f) {
    std::vector<Int> vals;
    for (const auto& [b, c] : f)
        if (c != 0) vals.push_back(b);
    return make_bset(std::move(vals));
}

std::vector<Int> parse_direction(const std::string& csv) {
    std::vector<Int> out;
    std::stringstream ss(csv);
    std::string cur;
    while (std::getline(ss, cur, ',')) {
        cur.erase(0, cur.find_first_not_of(" \t"));
        cur.erase(cur.find_last_not_of(" \t") + 1);
        try {
            out.push_back(Int(cur));
        } catch (...) {
            throw SchemaError("direction entry is not an integer: '" + cur + "'");
        }
    }
    if (out.size() != 2)
        throw SchemaError("--dir needs exactly two comma-separated integers");
    return out;
}

int run_delta(const std::string& b1_csv, const std::string& b2_csv,
              const std::string& coeffs_path, bool with_oracle) {
    BSet b1 = bset_from_csv(b1_csv);
    BSet b2 = bset_from_csv(b2_csv);
    OrderedJson out = delta_to_json(delta_sparse(b1, b2));

    CoeffMap f1, f2;
    bool have_coeffs = false;
    if (!coeffs_path.empty()) {
        std::pair<CoeffMap, CoeffMap> loaded = load_coeffs_file(coeffs_path);
        f1 = std::move(loaded.first);
        f2 = std::move(loaded.second);
        if (support_of(f1) != b1 || support_of(f2) != b2)
            throw InvalidSupport(
                "coefficient exponents do not match the --b1/--b2 exponent lists");
        have_coeffs = true;
    } else if (with_oracle) {
        std::mt19937_64 rng(acceptdetail::harness_seed());
        for (int tries = 0; tries < 100 && !have_coeffs; ++tries) {
            f1 = acceptdetail::random_coeffs(b1, rng);
            f2 = acceptdetail::random_coeffs(b2, rng);
            have_coeffs = is_zero_nondegenerate(f1, f2).nondegenerate;
        }
        if (!have_coeffs)
            throw InvalidSupport(
                "no nondegenerate coefficient sample found in 100 attempts");
    }
    if (have_coeffs) {
        if (with_oracle) out["oracle"] = json_int(delta_oracle(f1, f2));
        out["nondegenerate"] = is_zero_nondegenerate(f1, f2).nondegenerate;
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int run_strata(const std::string& b1_csv, const std::string& b2_csv, bool cross_check) {
    BSet b1 = bset_from_csv(b1_csv);
    BSet b2 = bset_from_csv(b2_csv);
    StrataReport rep = strata_report(b1, b2);
    if (cross_check) {
        std::string why;
        if (!acceptdetail::duality_holds(b1, b2, why, nullptr))
            throw InconsistencyDetected("stratum degrees disagree with the census: " + why);
    }
    std::cout << strata_to_json(rep).dump() << "\n";
    return 0;
}

int run_project(const std::string& a1_path, const std::string& a2_path) {
    SupportSet a1 = load_support_file(a1_path);
    SupportSet a2 = load_support_file(a2_path);
    std::cout << census_to_json(census(a1, a2)).dump() << "\n";
    return 0;
}

int run_newton(const std::string& a1_path, const std::string& a2_path) {
    SupportSet a1 = load_support_file(a1_path);
    SupportSet a2 = load_support_file(a2_path);
    std::cout << polygon_to_json(newton_polygon_of_projection(a1, a2)).dump() << "\n";
    return 0;
}

int run_utrop(const std::string& a1_path, const std::string& a2_path,
              const std::string& dir_csv) {
    SupportSet a1 = load_support_file(a1_path);
    SupportSet a2 = load_support_file(a2_path);
    std::vector<Int> dir;
    if (!dir_csv.empty()) dir = parse_direction(dir_csv);
    std::cout << utrop_to_json(thsum_report(a1, a2), dir).dump() << "\n";
    return 0;
}

int run_vdm_sweep(int k, int max_order, int max_exp, int jobs) {
    if (k < 1) throw SchemaError("--k must be at least 1");
    if (max_order < 1) throw SchemaError("--max-order must be at least 1");
    if (max_exp < 1) throw SchemaError("--max-exp must be at least 1");
    std::cout << sweep_to_json(conjecture_search(k, max_order, max_exp, jobs)).dump()
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of sparse curve singularities, resultant strata, "
                 "projection censuses, tangency budgets, and root-of-unity sweeps"};
    app.require_subcommand(1);

    std::string d_b1, d_b2, d_coeffs;
    bool d_oracle = false;
    CLI::App* cmd_delta =
        app.add_subcommand("delta", "invariants of a sparse parametrized curve germ");
    cmd_delta->add_option("--b1", d_b1, "first exponent list, comma separated")->required();
    cmd_delta->add_option("--b2", d_b2, "second exponent list, comma separated")->required();
    cmd_delta->add_option("--coeffs", d_coeffs, "JSON file with explicit coefficients");
    cmd_delta->add_flag("--oracle", d_oracle,
                        "also compute the independent intersection-number value");

    std::string s_b1, s_b2;
    bool s_cross = false;
    CLI::App* cmd_strata =
        app.add_subcommand("strata", "strata of the singular locus of the resultant");
    cmd_strata->add_option("--b1", s_b1, "first exponent list, comma separated")->required();
    cmd_strata->add_option("--b2", s_b2, "second exponent list, comma separated")->required();
    cmd_strata->add_flag("--cross-check", s_cross,
                         "verify every stratum degree against the census of the "
                         "triangle-prism shadow");

    std::string p_a1, p_a2;
    CLI::App* cmd_project =
        app.add_subcommand("project", "singularity census of a generic plane projection");
    cmd_project->add_option("--a1", p_a1, "JSON file with the first spatial support")
        ->required();
    cmd_project->add_option("--a2", p_a2, "JSON file with the second spatial support")
        ->required();

    std::string n_a1, n_a2;
    CLI::App* cmd_newton =
        app.add_subcommand("newton", "Newton polygon of a generic plane projection");
    cmd_newton->add_option("--a1", n_a1, "JSON file with the first spatial support")
        ->required();
    cmd_newton->add_option("--a2", n_a2, "JSON file with the second spatial support")
        ->required();

    std::string u_a1, u_a2, u_dir;
    CLI::App* cmd_utrop =
        app.add_subcommand("utrop", "tangency blocks and the total invariant budget");
    cmd_utrop->add_option("--a1", u_a1, "JSON file with the first spatial support")
        ->required();
    cmd_utrop->add_option("--a2", u_a2, "JSON file with the second spatial support")
        ->required();
    cmd_utrop->add_option("--dir", u_dir,
                          "restrict listed blocks to directions with this vertical part, "
                          "as dx,dy");

    int v_k = 2, v_max_order = 12, v_max_exp = 10, v_jobs = 0;
    CLI::App* cmd_vdm = app.add_subcommand(
        "vdm-sweep", "exhaustive degeneracy sweep over root-of-unity power matrices");
    cmd_vdm->add_option("--k", v_k, "number of nonzero root residues (default 2)");
    cmd_vdm->add_option("--max-order", v_max_order, "largest root-of-unity order");
    cmd_vdm->add_option("--max-exp", v_max_exp, "largest exponent value");
    cmd_vdm->add_option("--jobs", v_jobs, "worker threads (0 = hardware)");

    int st_jobs = 0;
    CLI::App* cmd_selftest =
        app.add_subcommand("selftest", "run the full acceptance checklist");
    cmd_selftest->add_option("--jobs", st_jobs, "worker threads for sweeps (0 = hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << error_to_json("UsageError", e.what()).dump() << "\n";
        return 2;
    }

    try {
        if (cmd_delta->parsed()) return run_delta(d_b1, d_b2, d_coeffs, d_oracle);
        if (cmd_strata->parsed()) return run_strata(s_b1, s_b2, s_cross);
        if (cmd_project->parsed()) return run_project(p_a1, p_a2);
        if (cmd_newton->parsed()) return run_newton(n_a1, n_a2);
        if (cmd_utrop->parsed()) return run_utrop(u_a1, u_a2, u_dir);
        if (cmd_vdm->parsed()) return run_vdm_sweep(v_k, v_max_order, v_max_exp, v_jobs);
        if (cmd_selftest->parsed())
            return tropsing::run_acceptance(std::cout, st_jobs) == 0 ? 0 : 1;
        std::cout << error_to_json("UsageError", "no subcommand selected").dump() << "\n";
        return 2;
    } catch (const InconsistencyError& e) {
        std::cout << error_to_json(e.kind(), e.what()).dump() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cout << error_to_json(e.kind(), e.what()).dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cout << error_to_json("Internal", e.what()).dump() << "\n";
        return 1;
    }
}
