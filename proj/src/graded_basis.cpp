#include "egh/graded_basis.hpp"

#include <algorithm>

#include "egh/binomial.hpp"

namespace egh {

RowEchelon::RowEchelon(const PrimeField& field, int ncols)
    : field_(field), ncols_(ncols) {
    if (ncols < 0) throw input_error("negative column count");
    const std::uint64_t pm1 = field_.modulus() - 1;
    slack_ = pm1 ? (UINT64_MAX - pm1) / (pm1 * pm1) : UINT64_MAX;
    if (slack_ == 0) slack_ = 1;
}

void RowEchelon::reduce_mod(std::vector<std::uint64_t>& scratch) const {
    const std::uint64_t p = field_.modulus();
    for (auto& v : scratch) v %= p;
}

void RowEchelon::reduce(std::vector<std::uint64_t>& scratch) const {
    const std::uint64_t p = field_.modulus();
    std::uint64_t steps = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const int col = pivots_[i];
        const std::uint64_t c = scratch[static_cast<std::size_t>(col)] % p;
        if (c == 0) {
            scratch[static_cast<std::size_t>(col)] = 0;
            continue;
        }
        if (++steps >= slack_) {
            reduce_mod(scratch);
            steps = 1;
        }
        const std::uint64_t mult = p - c;  // add mult*row == subtract c*row
        const Scalar* r = rows_[i].data() + col;
        std::uint64_t* s = scratch.data() + col;
        const std::size_t len = static_cast<std::size_t>(ncols_ - col);
        for (std::size_t k = 0; k < len; ++k) s[k] += mult * r[k];
        scratch[static_cast<std::size_t>(col)] = 0;
    }
    reduce_mod(scratch);
}

bool RowEchelon::insert(std::span<const Scalar> row) {
    if (static_cast<int>(row.size()) != ncols_)
        throw input_error("row length does not match column count");
    std::vector<std::uint64_t> scratch(row.begin(), row.end());
    return insert(scratch);
}

bool RowEchelon::insert(std::vector<std::uint64_t>& scratch) {
    if (full()) return false;
    reduce(scratch);
    int col = -1;
    for (int k = 0; k < ncols_; ++k) {
        if (scratch[static_cast<std::size_t>(k)] != 0) {
            col = k;
            break;
        }
    }
    if (col < 0) return false;

    std::vector<Scalar> row(static_cast<std::size_t>(ncols_), 0);
    const Scalar inv = field_.inv(static_cast<Scalar>(scratch[static_cast<std::size_t>(col)]));
    for (int k = col; k < ncols_; ++k)
        row[static_cast<std::size_t>(k)] =
            field_.mul(static_cast<Scalar>(scratch[static_cast<std::size_t>(k)]), inv);

    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), col);
    auto idx = static_cast<std::size_t>(it - pivots_.begin());
    pivots_.insert(it, col);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(row));
    return true;
}

void RowEchelon::make_reduced() {
    // Bottom-up: once row j > i is reduced, a single pass over the pivots
    // below i fully reduces row i.
    const std::uint64_t p = field_.modulus();
    for (int i = rank() - 2; i >= 0; --i) {
        std::vector<std::uint64_t> scratch(rows_[static_cast<std::size_t>(i)].begin(),
                                           rows_[static_cast<std::size_t>(i)].end());
        std::uint64_t steps = 0;
        for (int j = i + 1; j < rank(); ++j) {
            const int col = pivots_[static_cast<std::size_t>(j)];
            const std::uint64_t c = scratch[static_cast<std::size_t>(col)] % p;
            if (c == 0) {
                scratch[static_cast<std::size_t>(col)] = 0;
                continue;
            }
            if (++steps >= slack_) {
                reduce_mod(scratch);
                steps = 1;
            }
            const std::uint64_t mult = p - c;
            const Scalar* r = rows_[static_cast<std::size_t>(j)].data() + col;
            std::uint64_t* s = scratch.data() + col;
            const std::size_t len = static_cast<std::size_t>(ncols_ - col);
            for (std::size_t k = 0; k < len; ++k) s[k] += mult * r[k];
            scratch[static_cast<std::size_t>(col)] = 0;
        }
        reduce_mod(scratch);
        auto& row = rows_[static_cast<std::size_t>(i)];
        for (int k = 0; k < ncols_; ++k)
            row[static_cast<std::size_t>(k)] = static_cast<Scalar>(scratch[static_cast<std::size_t>(k)]);
    }
}

GradedBasis::GradedBasis(RingContext ctx, int degree, RowEchelon echelon)
    : ctx_(std::move(ctx)), degree_(degree), echelon_(std::move(echelon)) {
    if (echelon_.ncols() != static_cast<int>(monomial_count(ctx_.nvars(), degree)))
        throw input_error("echelon width does not match the monomial count");
    echelon_.make_reduced();
}

GradedBasis GradedBasis::full_space(const RingContext& ctx, int degree) {
    const int ncols = static_cast<int>(monomial_count(ctx.nvars(), degree));
    RowEchelon ech(ctx.field(), ncols);
    std::vector<Scalar> unit(static_cast<std::size_t>(ncols), 0);
    for (int j = 0; j < ncols; ++j) {
        unit[static_cast<std::size_t>(j)] = 1;
        ech.insert(unit);
        unit[static_cast<std::size_t>(j)] = 0;
    }
    return GradedBasis(ctx, degree, std::move(ech));
}

Form GradedBasis::row_as_form(int i) const {
    return Form::from_dense_row(ctx_, degree_, row(i));
}

std::vector<Scalar> GradedBasis::reduce(std::span<const Scalar> row) const {
    if (static_cast<int>(row.size()) != echelon_.ncols())
        throw input_error("row length does not match column count");
    std::vector<std::uint64_t> scratch(row.begin(), row.end());
    echelon_.reduce(scratch);
    std::vector<Scalar> out(scratch.size());
    for (std::size_t k = 0; k < scratch.size(); ++k) out[k] = static_cast<Scalar>(scratch[k]);
    return out;
}

bool GradedBasis::contains(std::span<const Scalar> row) const {
    auto nf = reduce(row);
    return std::all_of(nf.begin(), nf.end(), [](Scalar v) { return v == 0; });
}

bool GradedBasis::contains(const Form& f) const {
    if (!f.context().compatible(ctx_)) throw input_error("containment across different rings");
    if (f.degree() != degree_) throw input_error("containment across different degrees");
    return contains(f.dense_row());
}

bool GradedBasis::contains(const GradedBasis& other) const {
    if (!other.context().compatible(ctx_) || other.degree() != degree_)
        throw input_error("containment across different graded pieces");
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.row(i))) return false;
    return true;
}

}  // namespace egh
