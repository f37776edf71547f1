#include "egh/graded_linalg.hpp"

#include <algorithm>
#include <functional>

#include "egh/binomial.hpp"

namespace egh {

GradedBasis span(const RingContext& ctx, std::span<const Form> forms, int d) {
    if (d < 0) throw input_error("negative degree");
    RowEchelon ech(ctx.field(), static_cast<int>(monomial_count(ctx.nvars(), d)));
    for (const Form& f : forms) {
        if (!f.context().compatible(ctx)) throw input_error("span across different rings");
        if (f.degree() != d) throw input_error("span of forms of mixed degree");
        if (f.is_zero()) continue;
        ech.insert(f.dense_row());
    }
    return GradedBasis(ctx, d, std::move(ech));
}

IdealPieceBuilder::IdealPieceBuilder(RingContext ctx, std::vector<Form> gens)
    : ctx_(std::move(ctx)), gens_(std::move(gens)) {
    for (const Form& g : gens_)
        if (!g.context().compatible(ctx_))
            throw input_error("generators from a different ring");
}

void IdealPieceBuilder::advance_to(int d) {
    const int n = ctx_.nvars();
    for (int deg = built_ + 1; deg <= d; ++deg) {
        const int ncols = static_cast<int>(monomial_count(n, deg));
        if (full_from_ >= 0) {
            dims_.push_back(ncols);
            echelons_.emplace_back(ctx_.field(), 0);  // placeholder, never used
            continue;
        }
        RowEchelon ech(ctx_.field(), ncols);
        if (deg > 0 && dims_[static_cast<std::size_t>(deg - 1)] > 0) {
            const RowEchelon& prev = echelons_[static_cast<std::size_t>(deg - 1)];
            const auto table = variable_shift_table(n, deg - 1);
            const std::size_t prev_cols = static_cast<std::size_t>(prev.ncols());
            std::vector<std::uint64_t> scratch;
            for (int i = 0; i < prev.rank() && !ech.full(); ++i) {
                const auto& row = prev.row(i);
                for (int v = 0; v < n && !ech.full(); ++v) {
                    scratch.assign(static_cast<std::size_t>(ncols), 0);
                    const std::int32_t* shift = table->data() + static_cast<std::size_t>(v) * prev_cols;
                    for (std::size_t k = static_cast<std::size_t>(prev.pivot(i)); k < prev_cols; ++k)
                        if (row[k]) scratch[static_cast<std::size_t>(shift[k])] = row[k];
                    ech.insert(scratch);
                }
            }
        }
        for (const Form& g : gens_)
            if (g.degree() == deg && !g.is_zero() && !ech.full()) ech.insert(g.dense_row());
        dims_.push_back(ech.rank());
        if (ech.full()) full_from_ = deg;
        echelons_.push_back(std::move(ech));
    }
    built_ = std::max(built_, d);
}

int IdealPieceBuilder::dim(int d) {
    if (d < 0) throw input_error("negative degree");
    if (full_from_ >= 0 && d >= full_from_)
        return static_cast<int>(monomial_count(ctx_.nvars(), d));
    advance_to(d);
    return dims_[static_cast<std::size_t>(d)];
}

GradedBasis IdealPieceBuilder::basis(int d) {
    if (d < 0) throw input_error("negative degree");
    if (full_from_ >= 0 && d >= full_from_) return GradedBasis::full_space(ctx_, d);
    advance_to(d);
    if (full_from_ >= 0 && d >= full_from_) return GradedBasis::full_space(ctx_, d);
    return GradedBasis(ctx_, d, echelons_[static_cast<std::size_t>(d)]);
}

GradedBasis ideal_piece(const RingContext& ctx, std::span<const Form> gens, int d) {
    IdealPieceBuilder builder(ctx, std::vector<Form>(gens.begin(), gens.end()));
    return builder.basis(d);
}

SubspaceDims subspace_dims(const GradedBasis& u, const GradedBasis& v) {
    if (!u.context().compatible(v.context()))
        throw input_error("subspaces from different rings");
    if (u.degree() != v.degree()) throw input_error("subspaces of different degrees");
    RowEchelon ech = u.echelon();
    for (int i = 0; i < v.dim(); ++i) ech.insert(v.row(i));
    SubspaceDims dims;
    dims.dim_u = u.dim();
    dims.dim_v = v.dim();
    dims.dim_sum = ech.rank();
    dims.dim_meet = dims.dim_u + dims.dim_v - dims.dim_sum;
    return dims;
}

GradedBasis subspace_sum(const GradedBasis& u, const GradedBasis& v) {
    if (!u.context().compatible(v.context()))
        throw input_error("subspaces from different rings");
    if (u.degree() != v.degree()) throw input_error("subspaces of different degrees");
    RowEchelon ech = u.echelon();
    for (int i = 0; i < v.dim(); ++i) ech.insert(v.row(i));
    return GradedBasis(u.context(), u.degree(), std::move(ech));
}

OSequence hilbert_function(const RingContext& ctx, std::span<const Form> gens, int cap) {
    if (cap < 0) throw input_error("negative degree cap");
    IdealPieceBuilder builder(ctx, std::vector<Form>(gens.begin(), gens.end()));
    std::vector<int> values(static_cast<std::size_t>(cap) + 1);
    for (int d = 0; d <= cap; ++d)
        values[static_cast<std::size_t>(d)] =
            static_cast<int>(monomial_count(ctx.nvars(), d)) - builder.dim(d);
    return OSequence(std::move(values));
}

OSequence complete_intersection_hf(std::span<const int> degrees, int cap) {
    std::vector<int> coeffs{1};
    for (int a : degrees) {
        if (a < 1) throw input_error("complete intersection degrees must be >= 1");
        std::vector<int> next(coeffs.size() + static_cast<std::size_t>(a) - 1, 0);
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            for (int j = 0; j < a; ++j) next[i + static_cast<std::size_t>(j)] += coeffs[i];
        coeffs = std::move(next);
    }
    coeffs.resize(static_cast<std::size_t>(cap) + 1, 0);
    return OSequence(std::move(coeffs));
}

namespace {

// Joint kernel of the maps u -> (u * t mod modulus piece). piece_for(e)
// returns nullptr when the degree-e piece is all of R_e (no constraint).
GradedBasis colon_piece_core(const RingContext& ctx, std::span<const Form> targets, int d,
                             const std::function<const GradedBasis*(int)>& piece_for) {
    if (targets.empty()) throw input_error("colon with an empty target list");
    const int n = ctx.nvars();
    const int m = static_cast<int>(monomial_count(n, d));
    const auto monos = monomials_of_degree(n, d);

    // Dense constraint matrix: one block of rows per effective target.
    std::vector<std::vector<Scalar>> constraint_rows;
    for (const Form& t : targets) {
        if (!t.context().compatible(ctx)) throw input_error("targets from a different ring");
        if (t.is_zero()) continue;
        const int e = d + t.degree();
        const GradedBasis* piece = piece_for(e);
        if (piece == nullptr) continue;  // everything lands in the ideal
        const std::size_t out_cols = static_cast<std::size_t>(piece->ambient_dim());
        std::vector<std::vector<std::uint64_t>> block(
            out_cols, std::vector<std::uint64_t>(static_cast<std::size_t>(m), 0));
        std::vector<std::uint64_t> scratch(out_cols);
        for (int j = 0; j < m; ++j) {
            std::fill(scratch.begin(), scratch.end(), 0);
            for (const auto& [u, c] : t.terms())
                scratch[static_cast<std::size_t>(monomial_index((*monos)[static_cast<std::size_t>(j)] * u))] = c;
            piece->echelon().reduce(scratch);
            for (std::size_t r = 0; r < out_cols; ++r)
                if (scratch[r]) block[r][static_cast<std::size_t>(j)] = scratch[r];
        }
        for (auto& row : block) {
            bool nonzero = std::any_of(row.begin(), row.end(), [](std::uint64_t v) { return v != 0; });
            if (nonzero)
                constraint_rows.emplace_back(row.begin(), row.end());
        }
    }

    if (constraint_rows.empty()) return GradedBasis::full_space(ctx, d);

    RowEchelon constraints(ctx.field(), m);
    for (auto& row : constraint_rows) {
        constraints.insert(row);
        if (constraints.full()) break;
    }
    constraints.make_reduced();

    // Null space from the reduced constraints: one basis vector per free
    // column, with u[f] = 1 and u[pivot_i] = -constraints[i][f].
    const auto& pivots = constraints.pivots();
    std::vector<bool> is_pivot(static_cast<std::size_t>(m), false);
    for (int piv : pivots) is_pivot[static_cast<std::size_t>(piv)] = true;

    RowEchelon kernel(ctx.field(), m);
    std::vector<Scalar> vec(static_cast<std::size_t>(m));
    for (int f = 0; f < m; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::fill(vec.begin(), vec.end(), 0);
        vec[static_cast<std::size_t>(f)] = 1;
        for (int i = 0; i < constraints.rank(); ++i) {
            Scalar c = constraints.row(i)[static_cast<std::size_t>(f)];
            if (c != 0) vec[static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] = ctx.field().neg(c);
        }
        kernel.insert(vec);
    }
    return GradedBasis(ctx, d, std::move(kernel));
}

}  // namespace

GradedBasis colon_piece(const RingContext& ctx, std::span<const Form> modulus_gens,
                        std::span<const Form> targets, int d) {
    if (d < 0) throw input_error("negative degree");
    IdealPieceBuilder builder(ctx, std::vector<Form>(modulus_gens.begin(), modulus_gens.end()));
    std::vector<std::unique_ptr<GradedBasis>> cache;
    auto piece_for = [&](int e) -> const GradedBasis* {
        if (static_cast<int>(cache.size()) <= e) cache.resize(static_cast<std::size_t>(e) + 1);
        auto& slot = cache[static_cast<std::size_t>(e)];
        if (!slot) slot = std::make_unique<GradedBasis>(builder.basis(e));
        return slot->is_full() ? nullptr : slot.get();
    };
    return colon_piece_core(ctx, targets, d, piece_for);
}

GradedBasis colon_piece_with(const RingContext& ctx,
                             const std::vector<const GradedBasis*>& pieces,
                             int full_above, std::span<const Form> targets, int d) {
    if (d < 0) throw input_error("negative degree");
    auto piece_for = [&](int e) -> const GradedBasis* {
        if (e >= full_above) return nullptr;
        if (e >= static_cast<int>(pieces.size()) || pieces[static_cast<std::size_t>(e)] == nullptr)
            throw input_error("missing modulus piece at degree " + std::to_string(e));
        const GradedBasis* piece = pieces[static_cast<std::size_t>(e)];
        return piece->is_full() ? nullptr : piece;
    };
    return colon_piece_core(ctx, targets, d, piece_for);
}

bool OSequence::operator==(const OSequence& o) const {
    int top = std::max(size(), o.size());
    for (int d = 0; d < top; ++d)
        if ((*this)[d] != o[d]) return false;
    return true;
}

std::string OSequence::to_string() const {
    std::string out = "(";
    for (int d = 0; d < size(); ++d) {
        if (d) out += ", ";
        out += std::to_string((*this)[d]);
    }
    out += ")";
    return out;
}

}  // namespace egh
