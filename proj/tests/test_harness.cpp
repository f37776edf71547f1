#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "egh/search.hpp"

using namespace egh;

namespace {

std::vector<Json> read_jsonl(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::vector<Json> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) lines.push_back(Json::parse(line));
    }
    return lines;
}

Json strip_volatile(Json j) {
    j.erase("wall_ms");
    j.erase("started_at");
    return j;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path(name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("random forms are reproducible and nonzero") {
    RingContext ctx(5, 101);
    Rng a(42), b(42);
    Form fa = random_form(ctx, 2, a);
    Form fb = random_form(ctx, 2, b);
    CHECK(fa == fb);
    CHECK_FALSE(fa.is_zero());

    Rng c(43);
    CHECK_FALSE(random_form(ctx, 2, c) == fa);

    for (int t = 0; t < 200; ++t) CHECK_FALSE(random_form(ctx, 2, a).is_zero());

    CHECK_THROWS_AS(random_form(ctx, 0, a), input_error);
}

TEST_CASE("regular sequence sampling") {
    RingContext ctx(5, 101);
    Rng rng(1);
    auto sample = random_regular_sequence(ctx, DegreeVector::quadrics(5), rng);
    CHECK(sample.attempts >= 1);
    CHECK(sample.forms.size() == 5);

    // a zero cap fails immediately
    Rng rng2(1);
    CHECK_THROWS_AS(random_regular_sequence(ctx, DegreeVector::quadrics(5), rng2, 0),
                    generation_error);

    // tiny fields reject more but still terminate
    RingContext binary(3, 2);
    Rng rng3(7);
    auto small = random_regular_sequence(binary, DegreeVector::quadrics(3), rng3, 5000);
    CHECK(small.attempts >= 1);
    CHECK(is_regular_sequence(binary, small.forms, DegreeVector::quadrics(3)));
}

TEST_CASE("defect instance sampling") {
    RingContext ctx(5, 101);
    Rng rng(2);
    const DegreeVector a = DegreeVector::quadrics(5);

    IdealInstance ci = random_defect_instance(ctx, a, 0, rng);
    CHECK(ci.defect() == 0);

    IdealInstance two = random_defect_instance(ctx, a, 2, rng);
    CHECK(two.defect() == 2);
    CHECK(quadratic_defect(two) == 2);

    // defect 10 fills all of R_2, so the quotient dies in degree 2
    IdealInstance full = random_defect_instance(ctx, a, 10, rng);
    OSequence hf = hilbert_function(ctx, full.all_generators(), 3);
    CHECK(hf == OSequence({1, 5, 0, 0}));

    // identical seeds give identical instances
    Rng r1(99), r2(99);
    IdealInstance i1 = random_defect_instance(ctx, a, 2, r1);
    IdealInstance i2 = random_defect_instance(ctx, a, 2, r2);
    CHECK(instance_to_json(i1) == instance_to_json(i2));
}

TEST_CASE("instance json round trip") {
    RingContext ctx(5, 101);
    Rng rng(3);
    IdealInstance inst = random_defect_instance(ctx, DegreeVector::quadrics(5), 3, rng);
    Json j = instance_to_json(inst);
    IdealInstance back = instance_from_json(j, true);
    CHECK(instance_to_json(back) == j);

    Json missing = j;
    missing.erase("extras");
    CHECK_THROWS_AS(instance_from_json(missing), input_error);
}

TEST_CASE("per-trial seeds are index-local") {
    CHECK(derive_seed(42, 0) != derive_seed(42, 1));
    CHECK(derive_seed(42, 0) != derive_seed(43, 0));
    CHECK(derive_seed(42, 7) == derive_seed(42, 7));
}

TEST_CASE("trial records are deterministic") {
    SearchConfig cfg;
    cfg.n = 5;
    cfg.defect = 2;
    cfg.trials = 4;
    cfg.seed = 12345;
    Json a = trial_record(cfg, 2);
    Json b = trial_record(cfg, 2);
    CHECK(a == b);
    CHECK(a.at("trial") == 2);
    CHECK(a.at("checks").size() == default_checks(5, 2, true).size());
}

TEST_CASE("search logs are byte-stable modulo wall time") {
    SearchConfig cfg;
    cfg.n = 5;
    cfg.defect = 2;
    cfg.trials = 6;
    cfg.seed = 777;
    cfg.checks = {"defect2-bound", "defect2-identity", "duality"};

    TempFile log1("harness_run1.jsonl");
    TempFile log2("harness_run2.jsonl");
    cfg.out_path = log1.path;
    SearchSummary s1 = run_search(cfg);
    cfg.out_path = log2.path;
    cfg.jobs = 2;  // parallel run must produce the same bytes
    SearchSummary s2 = run_search(cfg);

    CHECK(s1.failures == 0);
    CHECK(s2.failures == 0);

    auto lines1 = read_jsonl(log1.path);
    auto lines2 = read_jsonl(log2.path);
    REQUIRE(lines1.size() == lines2.size());
    REQUIRE(lines1.size() == 7);  // header + six trials
    for (std::size_t i = 0; i < lines1.size(); ++i)
        CHECK(strip_volatile(lines1[i]) == strip_volatile(lines2[i]));

    CHECK(lines1[0].contains("header"));
    CHECK(lines1[0].at("rng") == std::string(kRngVersion));

    // records land in trial order and re-running their checks reproduces
    // every status and measured dimension
    for (std::size_t i = 1; i < lines1.size(); ++i) {
        CHECK(lines1[i].at("trial") == static_cast<int>(i - 1));
        CHECK(replay_checks(lines1[i]) == lines1[i].at("checks"));
    }
}

TEST_CASE("summary aggregates dimensions") {
    SearchConfig cfg;
    cfg.n = 5;
    cfg.defect = 1;
    cfg.trials = 8;
    cfg.seed = 31;
    cfg.checks = {"aci-bound"};
    SearchSummary summary = run_search(cfg);
    CHECK(summary.trials == 8);
    CHECK(summary.failures == 0);
    CHECK_FALSE(summary.first_failure_trial.has_value());
    REQUIRE(summary.dim_ranges.count("meet_c_g"));
    auto [lo, hi] = summary.dim_ranges.at("meet_c_g");
    CHECK(lo >= 0);
    CHECK(hi <= 2);
}

TEST_CASE("config validation") {
    SearchConfig cfg;
    cfg.n = 5;
    cfg.defect = 11;  // dim R_2 - n = 10
    cfg.trials = 1;
    CHECK_THROWS_AS(run_search(cfg), input_error);

    cfg.defect = 2;
    cfg.trials = 0;
    CHECK_THROWS_AS(run_search(cfg), input_error);

    cfg.trials = 1;
    cfg.checks = {"colon-linear-bound"};  // needs defect 3
    CHECK_THROWS_AS(run_search(cfg), input_error);

    cfg.checks = {"no-such-check"};
    CHECK_THROWS_AS(run_search(cfg), input_error);

    cfg.checks.clear();
    cfg.out_path = "/nonexistent-dir/x.jsonl";
    CHECK_THROWS_AS(run_search(cfg), input_error);
}

TEST_CASE("check registry applicability") {
    CHECK(check_applies("defect2-bound", 5, 2, true));
    CHECK_FALSE(check_applies("defect2-bound", 5, 3, true));
    CHECK_FALSE(check_applies("defect2-bound", 5, 2, false));
    CHECK(check_applies("colon-linear-bound", 5, 3, true));
    CHECK_FALSE(check_applies("colon-linear-bound", 6, 3, true));
    CHECK(check_applies("egh-full", 7, 4, false));
    CHECK(check_applies("egh-d:2", 5, 4, true));
    CHECK_FALSE(check_applies("egh-d:x", 5, 4, true));
    CHECK_FALSE(check_applies("bogus", 5, 2, true));

    auto names = default_checks(5, 2, true);
    CHECK(std::find(names.begin(), names.end(), "defect2-bound") != names.end());
    CHECK(std::find(names.begin(), names.end(), "egh-full") != names.end());
}
