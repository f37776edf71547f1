#ifndef EGH_SEARCH_HPP
#define EGH_SEARCH_HPP

#include <map>
#include <optional>
#include <string>

#include "egh/instance_io.hpp"
#include "egh/random_gen.hpp"

namespace egh {

enum class CheckStatus { pass, fail, hypothesis_not_met, no_rational_witness };

std::string to_string(CheckStatus status);

struct CheckOutcome {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::map<std::string, int> measured;  // every dimension the check computed
};

// Runs one named check on an instance. Known names:
//   defect2-bound            dim I_3 >= n^2+2n-5 (defect-2 quadratic)
//   defect2-identity         the exact four-term dimension identity
//   aci-bound                dim(c_3 ∩ gR_1) <= 2 and dim J_3 >= n^2+n-2 (defect 1)
//   defect3-bound            Hf_{R/I}(3) <= 4, i.e. dim I_3 >= 31 (n=5, defect 3)
//   colon-linear-bound       dim(c:(g_i,g_j))_1 <= 1 for pairs and triple (n=5, defect 3)
//   conditional-intersection the annihilator-conditional bound (defect >= 2)
//   pencil                   annihilator scan over the pencil of the two extras (defect 2)
//   egh-d:<d>                degree-d comparison against the canonical LPP ideal
//   egh-full                 full Hilbert-function match
//   duality                  Gorenstein duality identity at every degree
CheckOutcome run_check(const std::string& name, const IdealInstance& inst);

// Whether the named check applies to instances of this shape.
bool check_applies(const std::string& name, int n, int defect, bool quadratic);

std::vector<std::string> default_checks(int n, int defect, bool quadratic);

struct SearchConfig {
    int n = 5;
    std::uint32_t p = 101;
    std::vector<int> a;  // empty means all twos
    int defect = 2;
    int trials = 100;
    std::uint64_t seed = 0;
    std::vector<std::string> checks;  // empty means every applicable check
    std::string out_path;             // empty means no log
    int jobs = 1;
    int attempt_cap = kDefaultAttemptCap;
};

struct SearchSummary {
    int trials = 0;
    int failures = 0;
    double runtime_ms = 0.0;
    std::map<std::string, std::pair<int, int>> dim_ranges;  // min/max per measured key
    std::optional<int> first_failure_trial;
    std::optional<std::string> first_failure_instance;  // serialized
};

// Executes seeded trials (possibly in parallel), appending one JSONL record
// per trial. Every record carries its trial index and per-trial seed; the
// file starts with a header line naming the RNG version and the config.
// Records are written in trial order, so two runs with one seed produce
// identical logs apart from the wall-time fields.
SearchSummary run_search(const SearchConfig& cfg);

// One trial's record, exactly as run_search writes it (minus wall time,
// which the caller adds); exposed for replay tests.
Json trial_record(const SearchConfig& cfg, int trial_index);

// Re-runs the checks named in a trial record on its serialized instance and
// returns the freshly computed "checks" array; replaying a record must
// reproduce every recorded status and measured dimension.
Json replay_checks(const Json& record);

}  // namespace egh

#endif
