#ifndef EGH_GRADED_LINALG_HPP
#define EGH_GRADED_LINALG_HPP

#include <span>
#include <vector>

#include "egh/graded_basis.hpp"
#include "egh/osequence.hpp"

namespace egh {

// RREF basis of the K-span of degree-d forms. Mixed degrees are rejected;
// forms of other degrees do not belong in one graded piece.
GradedBasis span(const RingContext& ctx, std::span<const Form> forms, int d);

// Builds the graded pieces of the ideal generated by `gens` one degree at a
// time: piece(d+1) = R_1 * piece(d) + (generators of degree d+1). Once a
// piece fills all of R_d every higher piece is full and is not recomputed.
class IdealPieceBuilder {
  public:
    IdealPieceBuilder(RingContext ctx, std::vector<Form> gens);

    const RingContext& context() const { return ctx_; }

    // Dimension of the degree-d piece of the ideal.
    int dim(int d);

    // Finalized RREF basis of the degree-d piece.
    GradedBasis basis(int d);

  private:
    void advance_to(int d);

    RingContext ctx_;
    std::vector<Form> gens_;
    std::vector<RowEchelon> echelons_;  // per degree 0..built_
    std::vector<int> dims_;
    int built_ = -1;
    int full_from_ = -1;  // -1 until some piece fills R_d
};

// Degree-d piece of the ideal generated by `gens`: the span of all m*g with
// deg m = d - deg g >= 0. Generators of degree > d contribute nothing.
GradedBasis ideal_piece(const RingContext& ctx, std::span<const Form> gens, int d);

struct SubspaceDims {
    int dim_u = 0;
    int dim_v = 0;
    int dim_sum = 0;
    int dim_meet = 0;  // dim_u + dim_v - dim_sum
};

// All four of dim U, dim V, dim(U+V), dim(U ∩ V) for subspaces of one R_d.
SubspaceDims subspace_dims(const GradedBasis& u, const GradedBasis& v);

// Sum of two subspaces of the same graded piece.
GradedBasis subspace_sum(const GradedBasis& u, const GradedBasis& v);

// Hilbert function of R/(gens) through degree cap: values[d] = dim R_d -
// dim (gens)_d for 0 <= d <= cap.
OSequence hilbert_function(const RingContext& ctx, std::span<const Form> gens, int cap);

// Hilbert function of the Artinian complete intersection with generator
// degrees a: coefficients of prod_i (1 + t + ... + t^(a_i - 1)), padded with
// zeros through cap.
OSequence complete_intersection_hf(std::span<const int> degrees, int cap);

// Degree-d piece of the colon ideal (modulus : targets), i.e. the space of
// u in R_d with u*t in (modulus) for every target t. Computed as the joint
// kernel of the maps u -> (u*t mod ideal_piece(modulus, d + deg t)).
GradedBasis colon_piece(const RingContext& ctx, std::span<const Form> modulus_gens,
                        std::span<const Form> targets, int d);

// Variant reusing precomputed modulus pieces: pieces[e] must be the
// degree-e basis for every needed degree e = d + deg t with e <= skip_above;
// degrees above skip_above are treated as the full space (used when the
// modulus is known to be Artinian with top socle degree skip_above - 1).
GradedBasis colon_piece_with(const RingContext& ctx,
                             const std::vector<const GradedBasis*>& pieces,
                             int full_above, std::span<const Form> targets, int d);

}  // namespace egh

#endif
