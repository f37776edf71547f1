#include "egh/search.hpp"

#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <mutex>
#include <thread>

#include "egh/binomial.hpp"

namespace egh {

std::string to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::hypothesis_not_met: return "hypothesis-not-met";
        case CheckStatus::no_rational_witness: return "no-rational-witness";
    }
    return "unknown";
}

namespace {

bool parse_egh_d(const std::string& name, int& d) {
    constexpr std::string_view prefix = "egh-d:";
    if (name.rfind(prefix, 0) != 0) return false;
    try {
        d = std::stoi(name.substr(prefix.size()));
    } catch (...) {
        return false;
    }
    return d >= 0;
}

}  // namespace

bool check_applies(const std::string& name, int n, int defect, bool quadratic) {
    int d = 0;
    if (name == "egh-full" || name == "duality") return true;
    if (name == "defect2-bound" || name == "defect2-identity" || name == "pencil")
        return quadratic && defect == 2;
    if (name == "aci-bound") return quadratic && defect == 1;
    if (name == "defect3-bound" || name == "colon-linear-bound")
        return quadratic && defect == 3 && n == 5;
    if (name == "conditional-intersection")
        return quadratic && defect >= 2 && defect <= n - 1;
    if (parse_egh_d(name, d)) return quadratic && d >= 2;
    return false;
}

std::vector<std::string> default_checks(int n, int defect, bool quadratic) {
    std::vector<std::string> names;
    for (const char* candidate :
         {"defect2-bound", "defect2-identity", "aci-bound", "defect3-bound",
          "colon-linear-bound", "conditional-intersection", "pencil", "egh-full", "duality"})
        if (check_applies(candidate, n, defect, quadratic)) names.emplace_back(candidate);
    return names;
}

CheckOutcome run_check(const std::string& name, const IdealInstance& inst) {
    const RingContext& ctx = inst.context();
    const int n = ctx.nvars();
    CheckOutcome outcome;
    outcome.name = name;

    int d = 0;
    if (name == "defect2-bound") {
        EghReport report = egh_d_check(inst, 2);
        outcome.status = report.holds ? CheckStatus::pass : CheckStatus::fail;
        outcome.measured["dim_I_2"] = report.dim_i_d;
        outcome.measured["dim_I_3"] = report.dim_i_d1;
        outcome.measured["dim_L_3"] = report.dim_l_d1;
    } else if (name == "defect2-identity") {
        Defect2IdentityReport report = defect2_identity_check(inst);
        outcome.status = report.holds ? CheckStatus::pass : CheckStatus::fail;
        outcome.measured["dim_I_3"] = report.dim_i3;
        outcome.measured["meet_c_g"] = report.meet_c_g;
        outcome.measured["meet_j_h"] = report.meet_j_h;
    } else if (name == "aci-bound") {
        if (inst.defect() != 1) throw input_error("aci-bound needs one extra generator");
        IntersectionBoundReport report = aci_intersection_bound_check(
            ctx, inst.regular_sequence(), inst.extras()[0], 2);
        const int dim_j3 = ideal_piece(ctx, inst.all_generators(), 3).dim();
        const int j3_bound = n * n + n - 2;
        outcome.status = (report.holds && dim_j3 >= j3_bound) ? CheckStatus::pass
                                                              : CheckStatus::fail;
        outcome.measured["meet_c_g"] = report.measured;
        outcome.measured["dim_J_3"] = dim_j3;
    } else if (name == "defect3-bound") {
        if (inst.defect() != 3) throw input_error("defect3-bound needs three extras");
        const int dim_i3 = ideal_piece(ctx, inst.all_generators(), 3).dim();
        const int hf3 = static_cast<int>(monomial_count(n, 3)) - dim_i3;
        outcome.status = hf3 <= 4 ? CheckStatus::pass : CheckStatus::fail;
        outcome.measured["dim_I_3"] = dim_i3;
        outcome.measured["hf_3"] = hf3;
    } else if (name == "colon-linear-bound") {
        ColonLinearBoundReport report = colon_linear_bound_check(inst);
        outcome.status = report.holds ? CheckStatus::pass : CheckStatus::fail;
        for (const auto& [idx, dim] : report.measured) {
            std::string key = "colon";
            for (int i : idx) key += "_" + std::to_string(i + 1);
            outcome.measured[key] = dim;
        }
    } else if (name == "conditional-intersection") {
        ConditionalIntersectionReport report = conditional_intersection_bound_check(inst);
        if (!report.hypothesis_met) {
            outcome.status = CheckStatus::hypothesis_not_met;
        } else {
            outcome.status = report.holds ? CheckStatus::pass : CheckStatus::fail;
            outcome.measured["meet_j_g"] = report.measured;
        }
    } else if (name == "pencil") {
        if (inst.defect() != 2) throw input_error("pencil needs exactly two extras");
        ArtinQuotient quotient = ArtinQuotient::trusted(ctx, inst.regular_sequence(), 3);
        PencilReport report = pencil_report(quotient, inst.extras()[0], inst.extras()[1]);
        int witnesses = 0;
        int max_ann = 0;
        for (const PencilRow& row : report.rows) {
            if (row.dim_annihilator > 0) ++witnesses;
            max_ann = std::max(max_ann, row.dim_annihilator);
        }
        outcome.status = report.has_linear_annihilator ? CheckStatus::pass
                                                       : CheckStatus::no_rational_witness;
        outcome.measured["members_with_annihilator"] = witnesses;
        outcome.measured["max_annihilator_dim"] = max_ann;
    } else if (name == "egh-full") {
        EghFullResult result = egh_full_check(inst);
        outcome.status = result.ok() ? CheckStatus::pass : CheckStatus::fail;
        for (int deg = 0; deg < result.target.size(); ++deg)
            outcome.measured["hf_" + std::to_string(deg)] = result.target[deg];
        if (result.ok())
            outcome.measured["lex_gens"] = result.lpp->lex_generator_count();
    } else if (name == "duality") {
        DualityRangeReport report = duality_check_range(inst);
        outcome.status = report.holds ? CheckStatus::pass : CheckStatus::fail;
    } else if (parse_egh_d(name, d)) {
        EghReport report = egh_d_check(inst, d);
        outcome.status = report.holds ? CheckStatus::pass : CheckStatus::fail;
        outcome.measured["dim_I_" + std::to_string(d)] = report.dim_i_d;
        outcome.measured["dim_I_" + std::to_string(d + 1)] = report.dim_i_d1;
        outcome.measured["dim_L_" + std::to_string(d + 1)] = report.dim_l_d1;
    } else {
        throw input_error("unknown check: " + name);
    }
    return outcome;
}

namespace {

DegreeVector config_degrees(const SearchConfig& cfg) {
    if (cfg.a.empty()) return DegreeVector::quadrics(cfg.n);
    return DegreeVector(cfg.a);
}

std::vector<std::string> config_checks(const SearchConfig& cfg, const DegreeVector& a) {
    const bool quadratic = a.all_quadrics();
    if (!cfg.checks.empty()) {
        for (const std::string& name : cfg.checks)
            if (!check_applies(name, cfg.n, cfg.defect, quadratic))
                throw input_error("check \"" + name + "\" does not apply to n=" +
                                  std::to_string(cfg.n) + ", defect=" +
                                  std::to_string(cfg.defect));
        return cfg.checks;
    }
    return default_checks(cfg.n, cfg.defect, quadratic);
}

void validate_config(const SearchConfig& cfg, const DegreeVector& a) {
    if (cfg.trials < 1) throw input_error("trials must be >= 1");
    if (cfg.defect < 0) throw input_error("negative defect");
    if (cfg.jobs < 1) throw input_error("jobs must be >= 1");
    const std::int64_t room = monomial_count(cfg.n, a[0]) - cfg.n;
    if (cfg.defect > room)
        throw input_error("defect exceeds dim R_{a1} - n = " + std::to_string(room));
    (void)config_checks(cfg, a);
}

Json config_json(const SearchConfig& cfg, const DegreeVector& a,
                 const std::vector<std::string>& checks) {
    Json j;
    j["n"] = cfg.n;
    j["p"] = cfg.p;
    j["a"] = a.values();
    j["defect"] = cfg.defect;
    j["trials"] = cfg.trials;
    j["seed"] = std::to_string(cfg.seed);
    j["checks"] = checks;
    // jobs is deliberately not echoed: parallelism never changes the log
    return j;
}

}  // namespace

Json trial_record(const SearchConfig& cfg, int trial_index) {
    const DegreeVector a = config_degrees(cfg);
    const std::vector<std::string> checks = config_checks(cfg, a);
    const RingContext ctx(cfg.n, cfg.p);
    const std::uint64_t trial_seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(trial_index));

    Rng rng(trial_seed);
    std::vector<int> degrees(static_cast<std::size_t>(cfg.defect), a[0]);
    InstanceSample sample = sample_mixed_instance(ctx, a, degrees, rng, cfg.attempt_cap);

    Json record;
    record["trial"] = trial_index;
    record["seed"] = std::to_string(trial_seed);
    record["rs_attempts"] = sample.sequence_attempts;
    record["instance"] = instance_to_json(sample.instance);
    Json checks_json = Json::array();
    Json dims = Json::object();
    for (const std::string& name : checks) {
        CheckOutcome outcome = run_check(name, sample.instance);
        Json cj;
        cj["name"] = outcome.name;
        cj["status"] = to_string(outcome.status);
        Json measured = Json::object();
        for (const auto& [key, value] : outcome.measured) {
            measured[key] = value;
            dims[key] = value;
        }
        cj["measured"] = std::move(measured);
        checks_json.push_back(std::move(cj));
    }
    record["checks"] = std::move(checks_json);
    record["dims"] = std::move(dims);
    return record;
}

Json replay_checks(const Json& record) {
    IdealInstance inst = instance_from_json(record.at("instance"), true);
    Json out = Json::array();
    for (const auto& cj : record.at("checks")) {
        CheckOutcome outcome = run_check(cj.at("name").get<std::string>(), inst);
        Json fresh;
        fresh["name"] = outcome.name;
        fresh["status"] = to_string(outcome.status);
        Json measured = Json::object();
        for (const auto& [key, value] : outcome.measured) measured[key] = value;
        fresh["measured"] = std::move(measured);
        out.push_back(std::move(fresh));
    }
    return out;
}

SearchSummary run_search(const SearchConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    const DegreeVector a = config_degrees(cfg);
    validate_config(cfg, a);
    const std::vector<std::string> checks = config_checks(cfg, a);

    std::ofstream out;
    if (!cfg.out_path.empty()) {
        out.open(cfg.out_path);
        if (!out) throw input_error("cannot open output file: " + cfg.out_path);
        Json header;
        header["header"] = true;
        header["rng"] = std::string(kRngVersion);
        header["config"] = config_json(cfg, a, checks);
        std::time_t now = std::time(nullptr);
        char buffer[32];
        std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        header["started_at"] = buffer;  // excluded from the determinism contract
        out << header.dump() << "\n";
    }

    SearchSummary summary;
    summary.trials = cfg.trials;

    std::mutex mutex;
    std::map<int, std::string> pending;
    int next_write = 0;
    std::atomic<int> next_trial{0};
    std::exception_ptr first_error;

    auto worker = [&]() {
        for (;;) {
            const int i = next_trial.fetch_add(1);
            if (i >= cfg.trials) return;
            try {
                const auto t0 = std::chrono::steady_clock::now();
                Json record = trial_record(cfg, i);
                const auto t1 = std::chrono::steady_clock::now();
                record["wall_ms"] =
                    std::chrono::duration<double, std::milli>(t1 - t0).count();

                bool failed = false;
                for (const auto& cj : record.at("checks"))
                    if (cj.at("status").get<std::string>() == "fail") failed = true;

                std::lock_guard<std::mutex> lock(mutex);
                if (failed) {
                    ++summary.failures;
                    if (!summary.first_failure_trial || i < *summary.first_failure_trial) {
                        summary.first_failure_trial = i;
                        summary.first_failure_instance = record.at("instance").dump();
                    }
                }
                for (const auto& [key, value] : record.at("dims").items()) {
                    const int v = value.get<int>();
                    auto [it, inserted] = summary.dim_ranges.try_emplace(key, v, v);
                    if (!inserted) {
                        it->second.first = std::min(it->second.first, v);
                        it->second.second = std::max(it->second.second, v);
                    }
                }
                if (out.is_open()) {
                    pending[i] = record.dump();
                    while (!pending.empty() && pending.begin()->first == next_write) {
                        out << pending.begin()->second << "\n";
                        pending.erase(pending.begin());
                        ++next_write;
                    }
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    const int jobs = std::min(cfg.jobs, cfg.trials);
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (auto& th : threads) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    if (out.is_open()) {
        out.flush();
        if (!out) throw input_error("write failure on output file: " + cfg.out_path);
    }
    const auto end = std::chrono::steady_clock::now();
    summary.runtime_ms = std::chrono::duration<double, std::milli>(end - start).count();
    return summary;
}

}  // namespace egh
