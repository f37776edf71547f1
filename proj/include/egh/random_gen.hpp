#ifndef EGH_RANDOM_GEN_HPP
#define EGH_RANDOM_GEN_HPP

#include "egh/rng.hpp"
#include "egh/verify.hpp"

namespace egh {

// Default attempt cap for every rejection sampler below.
inline constexpr int kDefaultAttemptCap = 1000;

// Uniformly random nonzero degree-d form: one coefficient draw per monomial
// in descending lex order, zero coefficients allowed; the all-zero draw is
// rejected and redrawn.
Form random_form(const RingContext& ctx, int d, Rng& rng);

struct RegularSequenceSample {
    std::vector<Form> forms;
    int attempts = 0;  // draws including the accepted one
};

// Rejection-samples n random forms of degrees a until they form a regular
// sequence. Throws generation_error after `attempt_cap` failed draws.
RegularSequenceSample random_regular_sequence(const RingContext& ctx, const DegreeVector& a,
                                              Rng& rng, int attempt_cap = kDefaultAttemptCap);

struct InstanceSample {
    IdealInstance instance;
    int sequence_attempts = 0;
    int extras_attempts = 0;
};

// Regular sequence plus `defect` extra forms of degree a_1, redrawn until
// the extras are linearly independent modulo the regular-sequence ideal in
// degree a_1.
IdealInstance random_defect_instance(const RingContext& ctx, const DegreeVector& a, int defect,
                                     Rng& rng, int attempt_cap = kDefaultAttemptCap);

// Like random_defect_instance with per-extra degrees: each extra of degree e
// is drawn independent of the ideal generated by everything sampled before
// it, in degree e. Also reports the rejection counts.
InstanceSample sample_mixed_instance(const RingContext& ctx, const DegreeVector& a,
                                     std::span<const int> extra_degrees, Rng& rng,
                                     int attempt_cap = kDefaultAttemptCap);

IdealInstance random_mixed_instance(const RingContext& ctx, const DegreeVector& a,
                                    std::span<const int> extra_degrees, Rng& rng,
                                    int attempt_cap = kDefaultAttemptCap);

}  // namespace egh

#endif
