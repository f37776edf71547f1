// Command-line front end: Hilbert functions of homogeneous ideals over
// GF(p), lex-plus-powers construction, EGH-style checks on ideal files, and
// the randomized search harness with JSONL logging.
//
// Exit codes: 0 all checks hold, 1 a mathematical check failed, 2 usage
// error, 3 input/parse error, 4 generation failure.

#include <iostream>

#include "CLI11.hpp"

#include "egh/checkpoints.hpp"
#include "egh/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitGeneration = 4;

egh::Json report_json(const egh::EghReport& report) {
    egh::Json j;
    j["degree"] = report.degree;
    j["dim_I_d"] = report.dim_i_d;
    j["dim_I_d1"] = report.dim_i_d1;
    j["dim_L_d"] = report.dim_l_d;
    j["dim_L_d1"] = report.dim_l_d1;
    j["holds"] = report.holds;
    if (report.lpp) {
        egh::Json gens = egh::Json::array();
        int n = report.lpp->nvars();
        egh::RingContext ctx(n, 2);  // names only; coefficients unused
        for (const auto& [d, monos] : report.lpp->lex_generators())
            for (const auto& m : monos)
                gens.push_back(egh::form_print(egh::Form::from_monomial(ctx, m)));
        j["lpp_lex_gens"] = std::move(gens);
    }
    return j;
}

int cmd_hilbert(const std::string& path, int max_degree, const std::string& format) {
    egh::RawIdealFile file = egh::load_raw_ideal_file(path);
    int cap = max_degree;
    if (cap < 0) {
        if (static_cast<int>(file.regular_sequence.size()) == file.ctx.nvars()) {
            int socle = -static_cast<int>(file.regular_sequence.size());
            for (const auto& f : file.regular_sequence) socle += f.degree();
            cap = socle + 1;
        } else {
            throw egh::input_error(
                "--max-degree is required when the file has no length-n regular sequence");
        }
    }
    std::vector<egh::Form> gens = file.all();
    egh::OSequence hf = egh::hilbert_function(file.ctx, gens, cap);
    if (format == "table") {
        std::cout << "degree  hf\n";
        for (int d = 0; d < hf.size(); ++d)
            std::cout << d << "  " << hf[d] << "\n";
    } else {
        std::cout << egh::Json(hf.values()).dump() << "\n";
    }
    return kExitOk;
}

int cmd_check(const std::string& path, int degree, bool full) {
    egh::IdealInstance inst = egh::load_ideal_file(path);
    if (degree >= 0) {
        egh::EghReport report = egh::egh_d_check(inst, degree);
        std::cout << report_json(report).dump(2) << "\n";
        return report.holds ? kExitOk : kExitCheckFailed;
    }
    (void)full;  // --full is the default behavior
    egh::EghFullResult result = egh::egh_full_check(inst);
    egh::Json j;
    j["target"] = result.target.values();
    j["holds"] = result.ok();
    if (result.ok()) {
        egh::Json gens = egh::Json::array();
        for (const auto& [d, monos] : result.lpp->lex_generators())
            for (const auto& m : monos)
                gens.push_back(egh::form_print(egh::Form::from_monomial(inst.context(), m)));
        j["lpp_lex_gens"] = std::move(gens);
        j["lpp_powers"] = inst.degrees().values();
    } else {
        egh::Json f;
        f["degree"] = result.failure->degree;
        f["have"] = result.failure->have;
        f["want"] = result.failure->want;
        j["failure"] = std::move(f);
    }
    std::cout << j.dump(2) << "\n";
    return result.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_lpp(int n, const std::vector<int>& a_values, int defect, int degree) {
    egh::RingContext ctx(n, 101);
    egh::DegreeVector a = a_values.empty() ? egh::DegreeVector::quadrics(n)
                                           : egh::DegreeVector(a_values);
    if (a.size() != n) throw egh::input_error("--a must list exactly n degrees");
    egh::LppIdeal lpp = egh::lpp_defect(ctx, a, degree, defect);
    egh::Json j;
    j["powers"] = a.values();
    egh::Json gens = egh::Json::array();
    for (const auto& [d, monos] : lpp.lex_generators())
        for (const auto& m : monos)
            gens.push_back(egh::form_print(egh::Form::from_monomial(ctx, m)));
    j["lex_gens"] = std::move(gens);
    egh::Json dims = egh::Json::object();
    const int top = a.socle_degree() + 1;
    for (int d = 0; d <= top; ++d) dims[std::to_string(d)] = lpp.piece_dim(d);
    j["piece_dims"] = std::move(dims);
    j["hilbert"] = lpp.hilbert_function(top).values();
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_search(const egh::SearchConfig& cfg) {
    const bool quadratic =
        cfg.a.empty() || egh::DegreeVector(cfg.a).all_quadrics();
    for (const std::string& name : cfg.checks) {
        if (!egh::check_applies(name, cfg.n, cfg.defect, quadratic)) {
            std::cerr << "usage error: check \"" << name << "\" does not apply to n="
                      << cfg.n << ", defect=" << cfg.defect << "\n";
            return kExitUsage;
        }
    }
    egh::SearchSummary summary = egh::run_search(cfg);
    egh::Json j;
    j["trials"] = summary.trials;
    j["failures"] = summary.failures;
    j["runtime_ms"] = summary.runtime_ms;
    egh::Json ranges = egh::Json::object();
    for (const auto& [key, range] : summary.dim_ranges) {
        ranges[key] = egh::Json{{"min", range.first}, {"max", range.second}};
    }
    j["dims"] = std::move(ranges);
    std::cout << j.dump(2) << "\n";
    if (summary.failures > 0) {
        std::cerr << "check failed on trial " << *summary.first_failure_trial
                  << "; instance:\n"
                  << *summary.first_failure_instance << "\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

int cmd_checkpoints(std::uint64_t seed, int scale) {
    egh::CheckpointSummary summary = egh::run_checkpoints(seed, scale);
    for (const auto& outcome : summary.outcomes)
        std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << outcome.name << ": "
                  << outcome.detail << "\n";
    if (!summary.all_pass()) {
        if (summary.failing_instance)
            std::cerr << "failing instance:\n" << *summary.failing_instance << "\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert functions, lex-plus-powers ideals and EGH checks over GF(p)"};
    app.require_subcommand(1);

    // hilbert
    auto* hilbert = app.add_subcommand("hilbert", "O-sequence of R/I for an ideal file");
    std::string hilbert_file;
    int hilbert_max_degree = -1;
    std::string hilbert_format = "json";
    hilbert->add_option("--ideal", hilbert_file, "ideal JSON file")->required();
    hilbert->add_option("--max-degree", hilbert_max_degree, "top degree (default: socle+1)");
    hilbert->add_option("--format", hilbert_format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));

    // check
    auto* check = app.add_subcommand("check", "EGH comparison for an ideal file");
    std::string check_file;
    int check_degree = -1;
    bool check_full = false;
    check->add_option("--ideal", check_file, "ideal JSON file")->required();
    auto* degree_opt = check->add_option("--degree", check_degree, "single-degree comparison");
    check->add_flag("--full", check_full, "full Hilbert-function match (default)")
        ->excludes(degree_opt);

    // lpp
    auto* lpp = app.add_subcommand("lpp", "lex-plus-powers ideal with a given defect");
    int lpp_n = 5;
    std::vector<int> lpp_a;
    int lpp_defect_count = 0;
    int lpp_degree = 2;
    lpp->add_option("--n", lpp_n, "number of variables")->required();
    lpp->add_option("--a", lpp_a, "power degrees a1,..,an (default: all 2)")->delimiter(',');
    lpp->add_option("--defect", lpp_defect_count, "number of lex generators")->required();
    lpp->add_option("--degree", lpp_degree, "degree of the lex generators");

    // search
    auto* search = app.add_subcommand("search", "randomized seeded trials with JSONL log");
    egh::SearchConfig cfg;
    std::string seed_text = "0";
    search->add_option("--n", cfg.n, "number of variables");
    search->add_option("--p", cfg.p, "prime modulus");
    search->add_option("--a", cfg.a, "degrees a1,..,an (default: all 2)")->delimiter(',');
    search->add_option("--defect", cfg.defect, "number of extra generators")->required();
    search->add_option("--trials", cfg.trials, "trial count")->required();
    search->add_option("--seed", seed_text, "64-bit master seed");
    search->add_option("--checks", cfg.checks, "comma-separated check names")->delimiter(',');
    search->add_option("--out", cfg.out_path, "JSONL output path");
    search->add_option("--jobs", cfg.jobs, "worker threads");

    // paper-checkpoints
    auto* checkpoints = app.add_subcommand("paper-checkpoints", "fixed checkpoint battery");
    std::uint64_t cp_seed = 0;
    int cp_scale = 1;
    std::string cp_seed_text = "0";
    checkpoints->add_option("--seed", cp_seed_text, "64-bit seed");
    checkpoints->add_option("--scale", cp_scale, "trial-count multiplier");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (hilbert->parsed())
            return cmd_hilbert(hilbert_file, hilbert_max_degree, hilbert_format);
        if (check->parsed()) return cmd_check(check_file, check_degree, check_full);
        if (lpp->parsed()) return cmd_lpp(lpp_n, lpp_a, lpp_defect_count, lpp_degree);
        if (search->parsed()) {
            cfg.seed = std::stoull(seed_text);
            return cmd_search(cfg);
        }
        if (checkpoints->parsed()) {
            cp_seed = std::stoull(cp_seed_text);
            return cmd_checkpoints(cp_seed, cp_scale);
        }
    } catch (const egh::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const egh::generation_error& e) {
        std::cerr << "generation failure: " << e.what() << "\n";
        return kExitGeneration;
    } catch (const egh::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitUsage;
}
