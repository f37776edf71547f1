#ifndef EGH_ARTIN_QUOTIENT_HPP
#define EGH_ARTIN_QUOTIENT_HPP

#include <vector>

#include "egh/degree_vector.hpp"
#include "egh/graded_linalg.hpp"

namespace egh {

// The graded Artinian Gorenstein algebra A = R/(f_1..f_n) for a regular
// sequence of forms with degrees a. Construction validates the regular
// sequence through the Hilbert-function criterion and caches the RREF bases
// of the ideal pieces up to `cap`; instances are immutable afterwards and
// safe to share across threads.
class ArtinQuotient {
  public:
    // cap < 0 means cap = socle degree + 1. Throws input_error when the
    // generators are not a regular sequence.
    ArtinQuotient(RingContext ctx, std::vector<Form> regular_sequence, int cap = -1);

    // Skips the Hilbert-function validation; the caller guarantees the forms
    // are a regular sequence (typically via a validated IdealInstance).
    static ArtinQuotient trusted(RingContext ctx, std::vector<Form> regular_sequence,
                                 int cap = -1);

    const RingContext& context() const { return ctx_; }
    const std::vector<Form>& generators() const { return gens_; }
    const DegreeVector& degrees() const { return a_; }
    int socle_degree() const { return a_.socle_degree(); }
    int cap() const { return cap_; }

    // Hilbert function of A; zero above the socle degree.
    int hf(int d) const;

    // dim of the ideal piece c_d for any d >= 0.
    int piece_dim(int d) const;

    // Cached basis of c_d; requires d <= cap.
    const GradedBasis& piece(int d) const;

    // Pointers usable with colon_piece_with: index e holds &piece(e) for
    // e <= cap, nullptr above.
    std::vector<const GradedBasis*> piece_pointers() const;

  private:
    struct trusted_t {};
    ArtinQuotient(trusted_t, RingContext ctx, std::vector<Form> regular_sequence, int cap,
                  bool validate);

    RingContext ctx_;
    std::vector<Form> gens_;
    DegreeVector a_;
    int cap_;
    std::vector<GradedBasis> pieces_;  // degrees 0..cap
};

// Checks whether the forms are a regular sequence with the given degrees:
// R/(forms) must have the complete-intersection Hilbert function through
// degree s+1. Throws input_error when the count or the degrees disagree
// with `a`.
bool is_regular_sequence(const RingContext& ctx, std::span<const Form> forms,
                         const DegreeVector& a);

// dim of the kernel of multiplication by g from A_i to A_{i+deg g}.
// Requires i >= 0 and i + deg g <= cap of A.
int annihilator_dim(const ArtinQuotient& A, const Form& g, int i);

}  // namespace egh

#endif
