#ifndef EGH_CHECKPOINTS_HPP
#define EGH_CHECKPOINTS_HPP

#include <optional>
#include <string>

#include "egh/random_gen.hpp"

namespace egh {

// The two explicit defect-3 families with a one-dimensional linear
// annihilator, after the normalizing change of variables. Both require
// n = 5.
//
// Family 1: c = (f1, f2, f3, f4 + coeff*x1^2, x1*x5) with f1..f4 a regular
// sequence of quadrics in x2..x5, extras (x1x2, x1x3, x1x4).
IdealInstance make_case1_instance(const RingContext& ctx, Rng& rng,
                                  int attempt_cap = kDefaultAttemptCap);

// Family 2: c = (f1, f2, f3, f4 + coeff*x4*x5, x5^2) with f1..f4 a regular
// sequence of quadrics in x1..x4, extras (x1x5, x2x5, x3x5). The coefficient
// defaults to 1; pass a value to pin or randomize it.
IdealInstance make_case2_instance(const RingContext& ctx, Rng& rng,
                                  std::optional<Scalar> coeff = std::nullopt,
                                  int attempt_cap = kDefaultAttemptCap);

struct CheckpointOutcome {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CheckpointSummary {
    std::vector<CheckpointOutcome> outcomes;
    std::optional<std::string> failing_instance;  // serialized, first failure
    bool all_pass() const {
        for (const auto& o : outcomes)
            if (!o.pass) return false;
        return true;
    }
};

// The fixed battery of paper checkpoints at n = 5, p = 101:
//   colon-quadric-dim   dim of the family-2 colon ideal in degree 2 is 9
//                       (coefficient 1 asserted; random coefficients are
//                       measured and any divergence is reported)
//   case1-hf3           family-1 instances have Hf_{R/I}(3) = 4
//   case2-hf3           family-2 instances have Hf_{R/I}(3) = 4
//   high-defect-bound   defect 5..10: Hf_{R/I}(3) <= Hf of the matching LPP
//                       quotient and (c : extras)_1 = 0
//   defect2-min-bound   defect-2 sweep: dim I_3 >= 30 with the explicit
//                       monomial instance attaining 30
// `scale` multiplies the per-checkpoint trial counts.
CheckpointSummary run_checkpoints(std::uint64_t seed, int scale = 1);

}  // namespace egh

#endif
