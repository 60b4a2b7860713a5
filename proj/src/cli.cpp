#include "equicob/cli.hpp"

#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "equicob/cobordism.hpp"
#include "equicob/json_io.hpp"
#include "equicob/localization.hpp"
#include "equicob/search.hpp"

namespace equicob::cli {

namespace {

MultiIndex parse_omega(const std::string& text, int rank) {
    std::vector<int> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            entries.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ConfigInvalid("--omega: not an integer: \"" + item + "\"");
        }
        if (entries.back() < 0) throw ConfigInvalid("--omega entries must be >= 0");
    }
    if (static_cast<int>(entries.size()) != rank)
        throw ConfigInvalid("--omega has " + std::to_string(entries.size()) +
                            " entries but the dataset has rank " + std::to_string(rank));
    return MultiIndex(std::move(entries));
}

MultiIndex c1c2_omega(int rank, int c1, int c2) {
    if (rank < 2 && c2 > 0)
        throw ConfigInvalid("--c2 needs rank >= 2 (dataset has rank " + std::to_string(rank) + ")");
    std::vector<int> entries(static_cast<std::size_t>(rank), 0);
    entries[0] = c1;
    if (rank >= 2) entries[1] = c2;
    return MultiIndex(std::move(entries));
}

struct ChernArgs {
    std::string path;
    std::string omega_text;
    int c1 = -1;
    int c2 = -1;
};

int run_chern(const ChernArgs& args, bool as_json, std::ostream& out) {
    const Dataset d = load_dataset(args.path);
    MultiIndex omega;
    if (!args.omega_text.empty()) {
        if (args.c1 >= 0 || args.c2 >= 0) throw ConfigInvalid("use either --omega or --c1/--c2");
        omega = parse_omega(args.omega_text, d.rank);
    } else if (args.c1 >= 0 || args.c2 >= 0) {
        omega = c1c2_omega(d.rank, args.c1 < 0 ? 0 : args.c1, args.c2 < 0 ? 0 : args.c2);
    } else {
        throw ConfigInvalid("chern needs --omega or --c1/--c2");
    }

    const ChernNumberResult result = chern_number_rational(d, omega);
    if (as_json) {
        nlohmann::ordered_json j;
        j["omega"] = omega.entries;
        j["polynomial"] = result.is_polynomial();
        j["value"] = result.value_text();
        if (!result.is_polynomial()) j["detail"] = result.failure_detail;
        out << j.dump() << "\n";
    } else if (result.is_polynomial()) {
        out << result.value->to_string() << "\n";
    } else {
        out << "NONPOLY omega=" << omega.to_string() << " " << result.failure_detail << "\n";
    }
    return result.is_polynomial() ? 0 : 1;
}

int run_decide(const std::string& path, const std::string& route, int cap, bool as_json,
               std::ostream& out) {
    const Dataset d = load_dataset(path);
    Verdict verdict;
    if (route == "multiplicity") {
        verdict = bounds_via_multiplicities(d);
    } else if (route == "c1c2") {
        verdict = bounds_via_c1_c2(d);
    } else if (route == "exhaustive") {
        verdict = bounds_via_exhaustive(d, cap);
    } else {
        throw ConfigInvalid("--route must be multiplicity, c1c2, or exhaustive");
    }
    if (as_json) {
        out << verdict_to_json(verdict).dump() << "\n";
    } else {
        out << verdict.to_line() << "\n";
    }
    return 0;
}

int run_consistency(const std::string& path, int cap, bool as_json, std::ostream& out) {
    const Dataset d = load_dataset(path);
    if (cap < 0) cap = 2 * d.rank;
    const ConsistencyReport report = consistency_suite(d, cap);
    if (as_json) {
        out << consistency_report_to_json(report).dump() << "\n";
    } else {
        for (const ConsistencyEntry& e : report.entries) out << e.to_line() << "\n";
        if (report.all_pass()) {
            out << "CONSISTENT cap=" << cap << " checks=" << report.entries.size() << "\n";
        } else {
            out << "INCONSISTENT cap=" << cap << " violations=" << report.violation_count << "\n";
        }
    }
    return report.all_pass() ? 0 : 1;
}

int run_search(const SearchConfig& cfg, bool as_json, std::ostream& out) {
    const SearchOutcome outcome = hunt_nonbounding_minimal(cfg);
    if (as_json) {
        out << outcome_to_json(outcome).dump() << "\n";
    } else {
        out << "examined=" << outcome.candidates_examined
            << " pruned_canonical=" << outcome.pruned_by_canonical_form
            << " pruned_structure=" << outcome.pruned_by_structure
            << " consistent=" << outcome.consistent_count
            << " hits=" << outcome.nonbounding_hits.size() << "\n";
        for (const SearchHit& hit : outcome.nonbounding_hits) {
            out << "HIT index=" << hit.candidate_index << " dataset=" << dataset_to_string(hit.dataset)
                << " " << hit.verdict.to_line() << "\n";
        }
    }
    return 0;
}

int run_verify(int rank, int trials, std::uint64_t seed, bool as_json, std::ostream& out) {
    const LemmaReport report = verify_lemmas_randomized(rank, trials, seed);
    if (as_json) {
        out << lemma_report_to_json(report).dump() << "\n";
    } else {
        out << "trials=" << report.trials << " rank=" << report.rank << "\n";
        out << "sigma1-top hypothesis checked=" << report.sigma1_top_checked
            << " violations=" << report.sigma1_top_violations << "\n";
        out << "sigma1-sigma2 hypothesis checked=" << report.sigma12_checked
            << " violations=" << report.sigma12_violations << "\n";
        out << "orthogonality checked=" << report.orthogonality_checked
            << " violations=" << report.orthogonality_violations << "\n";
        out << (report.ok() ? "OK" : "VIOLATIONS") << "\n";
    }
    return report.ok() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Equivariant Chern numbers and null-cobordism decisions for "
                 "unitary torus manifold fixed-point data"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON reports");

    ChernArgs chern_args;
    CLI::App* chern = app.add_subcommand(
        "chern", "evaluate one equivariant Chern characteristic number");
    chern->add_option("dataset", chern_args.path, "dataset JSON file")->required();
    chern->add_option("--omega", chern_args.omega_text, "comma-separated exponents i1,...,in");
    chern->add_option("--c1", chern_args.c1, "exponent of the first class");
    chern->add_option("--c2", chern_args.c2, "exponent of the second class");

    std::string decide_path;
    std::string decide_route = "multiplicity";
    int decide_cap = -1;
    CLI::App* decide = app.add_subcommand("decide", "decide equivariant null-cobordism");
    decide->add_option("dataset", decide_path, "dataset JSON file")->required();
    decide->add_option("--route", decide_route, "multiplicity | c1c2 | exhaustive");
    decide->add_option("--cap", decide_cap, "degree cap for the exhaustive route");

    std::string cons_path;
    int cons_cap = -1;
    CLI::App* cons = app.add_subcommand("consistency", "run the data-consistency checks");
    cons->add_option("dataset", cons_path, "dataset JSON file")->required();
    cons->add_option("--cap", cons_cap, "degree cap (default 2n)");

    SearchConfig cfg;
    std::string mode_text = "exhaustive";
    CLI::App* search = app.add_subcommand("search", "hunt for non-bounding datasets");
    search->add_option("--rank", cfg.rank, "torus rank n")->required();
    search->add_option("--points", cfg.point_count, "fixed points per candidate")->required();
    search->add_option("--weight-bound", cfg.weight_bound, "max |weight entry|")->required();
    search->add_flag("--structural-filter", cfg.require_structural_filter,
                     "at the minimal count, keep only candidates with one sigma1 class and "
                     "all sigma2 distinct");
    search->add_option("--seed", cfg.seed, "random-mode seed (default 0)");
    search->add_option("--mode", mode_text, "exhaustive | random");
    search->add_option("--max-candidates", cfg.max_candidates, "random-mode candidate budget");
    search->add_option("--workers", cfg.workers, "worker threads (default 1)");
    search->add_option("--cap", cfg.consistency_cap, "consistency degree cap (default 2n)");
    search->add_option("--hits-file", cfg.hits_path, "append hits as JSON lines");
    search->add_option("--progress-file", cfg.progress_path, "checkpoint file");
    search->add_flag("--resume", cfg.resume, "resume from the checkpoint");

    int verify_rank = 0;
    int verify_trials = 0;
    std::uint64_t verify_seed = 0;
    CLI::App* verify = app.add_subcommand("verify", "randomized structure-lemma verifier");
    verify->add_option("--n", verify_rank, "torus rank")->required();
    verify->add_option("--trials", verify_trials, "number of trials")->required();
    verify->add_option("--seed", verify_seed, "seed (default 0)");

    int bound_rank = 0;
    CLI::App* bound = app.add_subcommand("bound", "minimal fixed-point count for non-bounding data");
    bound->add_option("--n", bound_rank, "torus rank")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(chern)) return run_chern(chern_args, as_json, out);
        if (app.got_subcommand(decide)) return run_decide(decide_path, decide_route, decide_cap, as_json, out);
        if (app.got_subcommand(cons)) return run_consistency(cons_path, cons_cap, as_json, out);
        if (app.got_subcommand(search)) {
            if (mode_text == "exhaustive") {
                cfg.mode = SearchMode::exhaustive;
            } else if (mode_text == "random") {
                cfg.mode = SearchMode::random;
            } else {
                throw ConfigInvalid("--mode must be exhaustive or random");
            }
            return run_search(cfg, as_json, out);
        }
        if (app.got_subcommand(verify)) return run_verify(verify_rank, verify_trials, verify_seed, as_json, out);
        if (app.got_subcommand(bound)) {
            out << min_fixed_points(bound_rank) << "\n";
            return 0;
        }
        err << "usage error: no command\n";
        return 2;
    } catch (const ConfigInvalid& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const SchemaError& e) {
        err << "schema error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        err << "io error: " << e.what() << "\n";
        return 1;
    } catch (const NonRealizableData& e) {
        err << "non-realizable data: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.push_back("equicob");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const std::string& a : full) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace equicob::cli
