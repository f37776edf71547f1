#ifndef EGH_VERIFY_HPP
#define EGH_VERIFY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "egh/artin_quotient.hpp"
#include "egh/lpp.hpp"

namespace egh {

// A homogeneous ideal presented as a designated regular sequence f_1..f_n
// (degrees a) plus extra generators g_1..g_delta. Construction validates the
// regular sequence and the per-degree linear independence of the generators;
// extras must have degree >= 2 (nondegenerate quotient).
class IdealInstance {
  public:
    IdealInstance(RingContext ctx, std::vector<Form> regular_sequence,
                  std::vector<Form> extras);

    // Skips the regular-sequence re-validation; for samplers that have just
    // validated the sequence themselves.
    static IdealInstance trusted(RingContext ctx, std::vector<Form> regular_sequence,
                                 std::vector<Form> extras);

    const RingContext& context() const { return ctx_; }
    const std::vector<Form>& regular_sequence() const { return ci_; }
    const std::vector<Form>& extras() const { return extras_; }
    std::vector<Form> all_generators() const;
    const DegreeVector& degrees() const { return a_; }
    int defect() const { return static_cast<int>(extras_.size()); }
    int socle_degree() const { return a_.socle_degree(); }
    bool all_quadrics() const;

  private:
    struct trusted_t {};
    IdealInstance(trusted_t, RingContext ctx, std::vector<Form> regular_sequence,
                  std::vector<Form> extras);
    void check_independence() const;

    RingContext ctx_;
    std::vector<Form> ci_;
    std::vector<Form> extras_;
    DegreeVector a_;
};

// Defect of a quadratic ideal: dim of the span of all degree-2 generators
// minus n. Errors when some generator is not a quadric or when the extras
// are dependent modulo the regular sequence (non-minimal generation).
int quadratic_defect(const IdealInstance& inst);

// Report of the degree-d comparison against the canonical LPP ideal with
// matching dimension in degree d.
struct EghReport {
    int degree = 0;
    int dim_i_d = 0;
    int dim_i_d1 = 0;
    int dim_l_d = 0;
    int dim_l_d1 = 0;
    bool holds = false;
    std::optional<LppIdeal> lpp;
    std::optional<std::string> counterexample;  // serialized instance, set by harnesses
};

// Degree-d comparison: builds L = (x^a) + (greatest degree-d monomials)
// with dim L_d = dim I_d and tests dim I_{d+1} >= dim L_{d+1}. Extras of
// degree > d are an unsupported shape.
EghReport egh_d_check(const IdealInstance& inst, int d);

struct EghFullResult {
    OSequence target;
    std::optional<LppIdeal> lpp;
    std::optional<LppMatchFailure> failure;
    bool ok() const { return lpp.has_value(); }
};

// Full Hilbert-function match: finds the LPP ideal with the same quotient
// Hilbert function as the instance, or reports the first failing degree
// (a counterexample candidate when the instance is valid).
EghFullResult egh_full_check(const IdealInstance& inst);

// Gorenstein duality identity Hf_{R/I}(d) = Hf_{R/c}(d) - Hf_{R/(c:I)}(s-d)
// where c is the regular-sequence ideal and s the socle degree.
bool duality_check(const IdealInstance& inst, int d);

struct DualityRangeReport {
    bool holds = true;
    std::vector<std::pair<int, int>> sides;  // (lhs, rhs) by degree 0..s
};

// The identity at every degree 0 <= d <= s, sharing the heavy structures
// across degrees.
DualityRangeReport duality_check_range(const IdealInstance& inst);

struct IntersectionBoundReport {
    int measured = 0;
    int bound = 0;
    bool holds = false;
};

// Almost-complete-intersection bound dim(c_{d+1} ∩ gR_1) <= d for a quadric
// regular sequence c and a degree-d form g not in c.
IntersectionBoundReport aci_intersection_bound_check(const RingContext& ctx,
                                                     std::span<const Form> ci,
                                                     const Form& g, int d);

struct ConditionalIntersectionReport {
    bool hypothesis_met = false;
    int measured = -1;
    bool holds = true;  // vacuously true when the hypothesis is not met
};

// For delta >= 2 quadratic instances: when some linear form annihilates
// g_1..g_{delta-1} in A but not g_delta, the intersection
// (c + (g_1..g_{delta-1}))_3 ∩ g_delta R_1 has dimension at most 3.
ConditionalIntersectionReport conditional_intersection_bound_check(const IdealInstance& inst);

struct Defect2IdentityReport {
    int dim_i3 = 0;
    int meet_c_g = 0;   // dim(c_3 ∩ gR_1)
    int meet_j_h = 0;   // dim((c+(g))_3 ∩ hR_1)
    int expected = 0;   // n^2 + 2n - meet_c_g - meet_j_h
    bool holds = false;
};

// Exact four-term dimension identity for defect-2 quadratic ideals.
Defect2IdentityReport defect2_identity_check(const IdealInstance& inst);

struct PencilRow {
    bool at_infinity = false;  // the member h itself
    Scalar c = 0;              // member g + c*h otherwise
    int dim_image = 0;         // dim g'A_1
    int dim_annihilator = 0;   // dim Ann_{A_1}(g')
};

struct PencilReport {
    std::vector<PencilRow> rows;
    bool has_linear_annihilator = false;
};

// Scans the whole pencil {g + c*h} ∪ {h} over P^1(GF(p)) and reports the
// annihilator dimensions; exhaustive enumeration sidesteps eigenvalue
// computations that may have no GF(p)-rational solution.
PencilReport pencil_report(const ArtinQuotient& A, const Form& g, const Form& h);

struct ColonLinearBoundReport {
    // (indices of the targeted extras, measured dim of (c : targets)_1)
    std::vector<std::pair<std::vector<int>, int>> measured;
    bool holds = false;
};

// For n = 5 defect-3 quadratic instances: dim(c : (g_i, g_j))_1 <= 1 for
// every pair and for the full triple.
ColonLinearBoundReport colon_linear_bound_check(const IdealInstance& inst);

}  // namespace egh

#endif
