#ifndef EGH_GRADED_BASIS_HPP
#define EGH_GRADED_BASIS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "egh/form.hpp"
#include "egh/monomial.hpp"
#include "egh/prime_field.hpp"
#include "egh/ring.hpp"

namespace egh {

// Row-echelon accumulator over GF(p): rows are kept normalized (leading
// coefficient 1) and sorted by pivot column. Reduction works on uint64
// scratch rows with lazy modular reduction, so the inner loops are plain
// multiply-adds.
class RowEchelon {
  public:
    RowEchelon(const PrimeField& field, int ncols);

    int rank() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }
    bool full() const { return rank() == ncols_; }
    const PrimeField& field() const { return field_; }

    const std::vector<Scalar>& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
    int pivot(int i) const { return pivots_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Inserts the span of `row` into the subspace; true when the rank grew.
    bool insert(std::span<const Scalar> row);

    // Same, consuming a uint64 scratch row (entries already < p or produced
    // by reduce()); clobbers the argument.
    bool insert(std::vector<std::uint64_t>& scratch);

    // Reduces `scratch` against every pivot row; afterwards every entry is
    // fully reduced mod p and pivot columns are zero.
    void reduce(std::vector<std::uint64_t>& scratch) const;

    // Back-substitutes so that every pivot is the only nonzero entry in its
    // column (reduced row echelon form).
    void make_reduced();

  private:
    void reduce_mod(std::vector<std::uint64_t>& scratch) const;

    PrimeField field_;
    int ncols_;
    // Full reductions of a scratch row are only needed every `slack_`
    // accumulations; for small p this is effectively never.
    std::uint64_t slack_;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<int> pivots_;
};

// The RREF basis of a subspace of R_d, with columns indexed by the degree-d
// monomials in descending lex order. Immutable after construction and safe
// to share across threads.
class GradedBasis {
  public:
    // Takes ownership of the accumulated echelon and back-substitutes it.
    GradedBasis(RingContext ctx, int degree, RowEchelon echelon);

    // The full space R_d.
    static GradedBasis full_space(const RingContext& ctx, int degree);

    const RingContext& context() const { return ctx_; }
    int degree() const { return degree_; }
    int dim() const { return echelon_.rank(); }
    int ambient_dim() const { return echelon_.ncols(); }
    bool is_full() const { return echelon_.full(); }

    const std::vector<Scalar>& row(int i) const { return echelon_.row(i); }
    const std::vector<int>& pivots() const { return echelon_.pivots(); }
    Form row_as_form(int i) const;

    // Normal form of a dense coefficient vector against this basis.
    std::vector<Scalar> reduce(std::span<const Scalar> row) const;

    bool contains(const Form& f) const;
    bool contains(std::span<const Scalar> row) const;
    bool contains(const GradedBasis& other) const;

    const RowEchelon& echelon() const { return echelon_; }

  private:
    RingContext ctx_;
    int degree_;
    RowEchelon echelon_;
};

}  // namespace egh

#endif
