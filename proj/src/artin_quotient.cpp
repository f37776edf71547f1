#include "egh/artin_quotient.hpp"

#include <algorithm>

#include "egh/binomial.hpp"

namespace egh {

namespace {

DegreeVector degrees_of(const RingContext& ctx, const std::vector<Form>& gens) {
    if (static_cast<int>(gens.size()) != ctx.nvars())
        throw input_error("a regular sequence here has exactly n forms");
    std::vector<int> degs;
    degs.reserve(gens.size());
    for (const Form& f : gens) {
        if (!f.context().compatible(ctx)) throw input_error("generators from a different ring");
        if (f.is_zero()) throw input_error("zero form in a regular sequence");
        degs.push_back(f.degree());
    }
    return DegreeVector(std::move(degs));
}

}  // namespace

bool is_regular_sequence(const RingContext& ctx, std::span<const Form> forms,
                         const DegreeVector& a) {
    if (static_cast<int>(forms.size()) != a.size() || a.size() != ctx.nvars())
        throw input_error("regular-sequence check needs n forms with degrees a");
    for (int i = 0; i < a.size(); ++i) {
        const Form& f = forms[static_cast<std::size_t>(i)];
        if (!f.context().compatible(ctx)) throw input_error("forms from a different ring");
        if (f.degree() != a[i]) throw input_error("form degree does not match a");
        if (f.is_zero()) return false;
    }
    const int top = a.socle_degree() + 1;
    OSequence expect = complete_intersection_hf(a.values(), top);
    IdealPieceBuilder builder(ctx, std::vector<Form>(forms.begin(), forms.end()));
    // Work downward from the most discriminating degree? The cheap degrees
    // come first anyway; mismatches at low degrees exit early.
    for (int d = 0; d <= top; ++d) {
        int hf = static_cast<int>(monomial_count(ctx.nvars(), d)) - builder.dim(d);
        if (hf != expect[d]) return false;
    }
    return true;
}

ArtinQuotient::ArtinQuotient(trusted_t, RingContext ctx, std::vector<Form> regular_sequence,
                             int cap, bool validate)
    : ctx_(std::move(ctx)),
      gens_(std::move(regular_sequence)),
      a_(degrees_of(ctx_, gens_)),
      cap_(cap < 0 ? a_.socle_degree() + 1 : cap) {
    if (cap_ > a_.socle_degree() + 1)
        throw input_error("cache cap beyond socle degree + 1 is never needed");
    IdealPieceBuilder builder(ctx_, gens_);
    if (validate) {
        const int top = a_.socle_degree() + 1;
        OSequence expect = complete_intersection_hf(a_.values(), top);
        for (int d = 0; d <= top; ++d) {
            int hf = static_cast<int>(monomial_count(ctx_.nvars(), d)) - builder.dim(d);
            if (hf != expect[d])
                throw input_error("generators are not a regular sequence (Hilbert "
                                  "function mismatch at degree " + std::to_string(d) + ")");
        }
    }
    pieces_.reserve(static_cast<std::size_t>(cap_) + 1);
    for (int d = 0; d <= cap_; ++d) pieces_.push_back(builder.basis(d));
}

ArtinQuotient::ArtinQuotient(RingContext ctx, std::vector<Form> regular_sequence, int cap)
    : ArtinQuotient(trusted_t{}, std::move(ctx), std::move(regular_sequence), cap, true) {}

ArtinQuotient ArtinQuotient::trusted(RingContext ctx, std::vector<Form> regular_sequence,
                                     int cap) {
    return ArtinQuotient(trusted_t{}, std::move(ctx), std::move(regular_sequence), cap, false);
}

int ArtinQuotient::hf(int d) const {
    if (d < 0) return 0;
    if (d > a_.socle_degree()) return 0;
    return static_cast<int>(monomial_count(ctx_.nvars(), d)) - piece_dim(d);
}

int ArtinQuotient::piece_dim(int d) const {
    if (d < 0) throw input_error("negative degree");
    const int dim_rd = static_cast<int>(monomial_count(ctx_.nvars(), d));
    if (d > a_.socle_degree()) return dim_rd;
    if (d <= cap_) return pieces_[static_cast<std::size_t>(d)].dim();
    return dim_rd - static_cast<int>(
        complete_intersection_hf(a_.values(), d)[d]);
}

const GradedBasis& ArtinQuotient::piece(int d) const {
    if (d < 0 || d > cap_)
        throw input_error("ideal piece outside the cached degree range");
    return pieces_[static_cast<std::size_t>(d)];
}

std::vector<const GradedBasis*> ArtinQuotient::piece_pointers() const {
    std::vector<const GradedBasis*> ptrs(static_cast<std::size_t>(cap_) + 1, nullptr);
    for (int d = 0; d <= cap_; ++d) ptrs[static_cast<std::size_t>(d)] = &pieces_[static_cast<std::size_t>(d)];
    return ptrs;
}

int annihilator_dim(const ArtinQuotient& A, const Form& g, int i) {
    const RingContext& ctx = A.context();
    if (!g.context().compatible(ctx)) throw input_error("form from a different ring");
    if (i < 0) throw input_error("negative degree");
    const int e = g.degree();
    if (i + e > A.cap())
        throw input_error("annihilator degree exceeds the cached range");

    const GradedBasis& src = A.piece(i);
    const GradedBasis& dst = A.piece(i + e);
    const int dim_src = static_cast<int>(monomial_count(ctx.nvars(), i)) - src.dim();
    if (dim_src == 0) return 0;
    if (g.is_zero()) return dim_src;

    // Quotient coordinates: the non-pivot monomials of a piece are a basis
    // of the quotient in that degree.
    const auto monos = monomials_of_degree(ctx, i);
    std::vector<bool> pivot_col(monos->size(), false);
    for (int piv : src.pivots()) pivot_col[static_cast<std::size_t>(piv)] = true;

    RowEchelon image(ctx.field(), dst.ambient_dim());
    int rank = 0;
    std::vector<std::uint64_t> scratch(static_cast<std::size_t>(dst.ambient_dim()));
    for (std::size_t j = 0; j < monos->size(); ++j) {
        if (pivot_col[j]) continue;
        std::fill(scratch.begin(), scratch.end(), 0);
        for (const auto& [u, c] : g.terms())
            scratch[static_cast<std::size_t>(monomial_index((*monos)[j] * u))] = c;
        dst.echelon().reduce(scratch);
        if (image.insert(scratch)) ++rank;
    }
    return dim_src - rank;
}

}  // namespace egh
