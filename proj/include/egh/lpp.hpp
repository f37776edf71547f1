#ifndef EGH_LPP_HPP
#define EGH_LPP_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "egh/degree_vector.hpp"
#include "egh/monomial.hpp"
#include "egh/osequence.hpp"
#include "egh/ring.hpp"

namespace egh {

// A lex-plus-powers ideal (x_1^{a_1}, ..., x_n^{a_n}) + lex generators. The
// lex generators are grouped by degree; within each degree they are the
// greatest monomials (descending lex) outside the ideal generated so far,
// and none of them is redundant.
class LppIdeal {
  public:
    LppIdeal(int nvars, DegreeVector a);

    int nvars() const { return n_; }
    const DegreeVector& degrees() const { return a_; }
    const std::map<int, std::vector<Monomial>>& lex_generators() const { return lex_gens_; }

    // Total number of lex generators across all degrees.
    int lex_generator_count() const;

    // Membership of a monomial in the ideal.
    bool contains(const Monomial& m) const;

    // Number of degree-d monomials inside the ideal, by enumeration and
    // divisibility tests (no linear algebra).
    int piece_dim(int d) const;

    // dim R_d - piece_dim(d).
    int hf(int d) const;

    OSequence hilbert_function(int cap) const;

    // All generators (powers plus lex monomials) as monomials.
    std::vector<Monomial> generator_monomials() const;

    // Appends monomials as lex generators of their common degree. Callers
    // must pass a descending segment produced by lex_segment; this is
    // enforced on a best-effort basis (monomials already in the ideal are
    // rejected).
    void add_lex_generators(const std::vector<Monomial>& monos);

    // Checks the defining segment property by enumeration: in every degree
    // with generators, the ideal's monomials form an initial lex segment of
    // the standard monomials of (x^a) that are still outside the lower part
    // of the ideal.
    bool is_lex_segment_ideal() const;

  private:
    int n_;
    DegreeVector a_;
    std::map<int, std::vector<Monomial>> lex_gens_;
};

// The k greatest degree-d monomials (descending lex) outside the excluded
// ideal. Throws input_error when fewer than k remain.
std::vector<Monomial> lex_segment(const RingContext& ctx, int d, int k,
                                  const LppIdeal* exclude = nullptr);

// The LPP ideal (x^a) plus the `defect` greatest degree-d monomials outside
// (x^a). Throws input_error when not enough monomials remain.
LppIdeal lpp_defect(const RingContext& ctx, const DegreeVector& a, int d, int defect);

// Macaulay growth bound: writes h = C(b_d,d) + C(b_{d-1},d-1) + ... +
// C(b_j,j) greedily with b_d > b_{d-1} > ... > b_j >= j >= 1 and returns
// C(b_d+1,d+1) + ... + C(b_j+1,j+1); 0 for h = 0. This bounds the value a
// quotient Hilbert function can take at degree d+1 given value h at d.
std::int64_t macaulay_bound(std::int64_t h, int d);

struct LppMatchFailure {
    int degree = -1;
    int have = 0;  // Hilbert function of R/L before additions at `degree`
    int want = 0;  // target value at `degree`
};

struct LppMatchResult {
    std::optional<LppIdeal> ideal;
    std::optional<LppMatchFailure> failure;
    bool ok() const { return ideal.has_value(); }
};

// Greedy construction of an LPP ideal whose quotient Hilbert function equals
// `target`: degree by degree, adds the fewest greatest lex monomials needed.
// Fails at the first degree where the pre-addition Hilbert function already
// lies below the target; the failure report carries both values.
LppMatchResult lpp_match_full(const OSequence& target, const RingContext& ctx,
                              const DegreeVector& a);

}  // namespace egh

#endif
