#include "egh/verify.hpp"

#include <algorithm>
#include <map>

#include "egh/binomial.hpp"

namespace egh {

namespace {

DegreeVector sequence_degrees(const RingContext& ctx, const std::vector<Form>& ci) {
    if (static_cast<int>(ci.size()) != ctx.nvars())
        throw input_error("the designated regular sequence must have n forms");
    std::vector<int> degs;
    degs.reserve(ci.size());
    for (const Form& f : ci) {
        if (!f.context().compatible(ctx)) throw input_error("forms from a different ring");
        if (f.is_zero()) throw input_error("zero form in the regular sequence");
        degs.push_back(f.degree());
    }
    return DegreeVector(std::move(degs));
}

}  // namespace

IdealInstance::IdealInstance(trusted_t, RingContext ctx, std::vector<Form> regular_sequence,
                             std::vector<Form> extras)
    : ctx_(std::move(ctx)),
      ci_(std::move(regular_sequence)),
      extras_(std::move(extras)),
      a_(sequence_degrees(ctx_, ci_)) {
    for (const Form& g : extras_) {
        if (!g.context().compatible(ctx_)) throw input_error("extras from a different ring");
        if (g.is_zero()) throw input_error("zero form among the extra generators");
        if (g.degree() < 2) throw input_error("extra generators must have degree >= 2");
    }
    check_independence();
}

IdealInstance::IdealInstance(RingContext ctx, std::vector<Form> regular_sequence,
                             std::vector<Form> extras)
    : IdealInstance(trusted_t{}, std::move(ctx), std::move(regular_sequence), std::move(extras)) {
    if (!is_regular_sequence(ctx_, ci_, a_))
        throw input_error("the designated regular sequence is not regular");
}

IdealInstance IdealInstance::trusted(RingContext ctx, std::vector<Form> regular_sequence,
                                     std::vector<Form> extras) {
    return IdealInstance(trusted_t{}, std::move(ctx), std::move(regular_sequence),
                         std::move(extras));
}

void IdealInstance::check_independence() const {
    std::map<int, std::vector<Form>> by_degree;
    for (const Form& f : ci_) by_degree[f.degree()].push_back(f);
    for (const Form& g : extras_) by_degree[g.degree()].push_back(g);
    for (const auto& [d, forms] : by_degree) {
        GradedBasis basis = span(ctx_, forms, d);
        if (basis.dim() != static_cast<int>(forms.size()))
            throw input_error("generators are linearly dependent in degree " +
                              std::to_string(d));
    }
}

std::vector<Form> IdealInstance::all_generators() const {
    std::vector<Form> gens = ci_;
    gens.insert(gens.end(), extras_.begin(), extras_.end());
    return gens;
}

bool IdealInstance::all_quadrics() const {
    if (!a_.all_quadrics()) return false;
    for (const Form& g : extras_)
        if (g.degree() != 2) return false;
    return true;
}

int quadratic_defect(const IdealInstance& inst) {
    if (!inst.all_quadrics())
        throw input_error("defect is defined here for quadratic ideals only");
    GradedBasis basis = span(inst.context(), inst.all_generators(), 2);
    const int defect = basis.dim() - inst.context().nvars();
    if (defect < inst.defect())
        throw input_error("extra generators are dependent modulo the regular sequence "
                          "(not a minimal generating set)");
    return defect;
}

EghReport egh_d_check(const IdealInstance& inst, int d) {
    if (d < 0) throw input_error("negative degree");
    for (const Form& g : inst.extras())
        if (g.degree() > d)
            throw input_error("unsupported shape: extra generator of degree above " +
                              std::to_string(d));

    const RingContext& ctx = inst.context();
    IdealPieceBuilder builder(ctx, inst.all_generators());
    EghReport report;
    report.degree = d;
    report.dim_i_d = builder.dim(d);
    report.dim_i_d1 = builder.dim(d + 1);

    LppIdeal lpp(ctx.nvars(), inst.degrees());
    const int k = report.dim_i_d - lpp.piece_dim(d);
    if (k < 0) throw input_error("ideal piece smaller than the pure-powers piece");
    if (k > 0) lpp.add_lex_generators(lex_segment(ctx, d, k, &lpp));
    report.dim_l_d = lpp.piece_dim(d);
    report.dim_l_d1 = lpp.piece_dim(d + 1);
    report.holds = report.dim_i_d1 >= report.dim_l_d1;
    report.lpp = std::move(lpp);
    return report;
}

EghFullResult egh_full_check(const IdealInstance& inst) {
    const RingContext& ctx = inst.context();
    const int top = inst.socle_degree() + 1;
    EghFullResult result;
    std::vector<Form> gens = inst.all_generators();
    result.target = hilbert_function(ctx, gens, top);
    LppMatchResult match = lpp_match_full(result.target, ctx, inst.degrees());
    if (!match.ok()) {
        result.failure = match.failure;
        return result;
    }
    // Independent re-check of the match, degree by degree.
    for (int d = 0; d <= top; ++d) {
        if (match.ideal->hf(d) != result.target[d]) {
            result.failure = LppMatchFailure{d, match.ideal->hf(d), result.target[d]};
            return result;
        }
    }
    result.lpp = std::move(match.ideal);
    return result;
}

namespace {

struct DualityContext {
    ArtinQuotient quotient;
    IdealPieceBuilder ideal;
    std::vector<const GradedBasis*> pieces;
};

DualityContext make_duality_context(const IdealInstance& inst) {
    const int s = inst.socle_degree();
    // Pieces above the socle degree are full and never materialized; cap s
    // keeps the cached bases small.
    ArtinQuotient quotient = ArtinQuotient::trusted(inst.context(), inst.regular_sequence(), s);
    IdealPieceBuilder ideal(inst.context(), inst.all_generators());
    std::vector<const GradedBasis*> pieces = quotient.piece_pointers();
    return {std::move(quotient), std::move(ideal), std::move(pieces)};
}

std::pair<int, int> duality_sides(DualityContext& dc, const IdealInstance& inst, int d) {
    const RingContext& ctx = inst.context();
    const int s = inst.socle_degree();
    const int lhs = static_cast<int>(monomial_count(ctx.nvars(), d)) - dc.ideal.dim(d);
    int colon_hf = 0;
    if (!inst.extras().empty()) {
        GradedBasis colon =
            colon_piece_with(ctx, dc.pieces, s + 1, inst.extras(), s - d);
        colon_hf = static_cast<int>(monomial_count(ctx.nvars(), s - d)) - colon.dim();
    }
    const int rhs = dc.quotient.hf(d) - colon_hf;
    return {lhs, rhs};
}

}  // namespace

bool duality_check(const IdealInstance& inst, int d) {
    if (d < 0 || d > inst.socle_degree())
        throw input_error("duality degree outside [0, socle degree]");
    DualityContext dc = make_duality_context(inst);
    auto [lhs, rhs] = duality_sides(dc, inst, d);
    return lhs == rhs;
}

DualityRangeReport duality_check_range(const IdealInstance& inst) {
    DualityRangeReport report;
    DualityContext dc = make_duality_context(inst);
    for (int d = 0; d <= inst.socle_degree(); ++d) {
        auto sides = duality_sides(dc, inst, d);
        report.holds = report.holds && sides.first == sides.second;
        report.sides.push_back(sides);
    }
    return report;
}

IntersectionBoundReport aci_intersection_bound_check(const RingContext& ctx,
                                                     std::span<const Form> ci,
                                                     const Form& g, int d) {
    if (static_cast<int>(ci.size()) != ctx.nvars())
        throw input_error("expected a length-n regular sequence");
    for (const Form& f : ci)
        if (f.degree() != 2) throw input_error("this bound is for quadric sequences");
    if (g.degree() != d) throw input_error("the extra form must have degree d");

    IdealPieceBuilder builder(ctx, std::vector<Form>(ci.begin(), ci.end()));
    if (builder.basis(d).contains(g))
        throw input_error("degenerate input: the extra form already lies in the ideal");

    std::vector<Form> g_only{g};
    GradedBasis g_r1 = ideal_piece(ctx, g_only, d + 1);
    IntersectionBoundReport report;
    report.bound = d;
    report.measured = subspace_dims(builder.basis(d + 1), g_r1).dim_meet;
    report.holds = report.measured <= report.bound;
    return report;
}

ConditionalIntersectionReport conditional_intersection_bound_check(const IdealInstance& inst) {
    const int n = inst.context().nvars();
    const int delta = inst.defect();
    if (!inst.all_quadrics() || delta < 2 || delta > n - 1)
        throw input_error("conditional intersection bound needs a quadratic ideal with "
                          "2 <= defect <= n-1");

    const RingContext& ctx = inst.context();
    std::vector<Form> head(inst.extras().begin(), inst.extras().end() - 1);
    const Form& last = inst.extras().back();

    GradedBasis ann = colon_piece(ctx, inst.regular_sequence(), head, 1);
    IdealPieceBuilder ci_builder(ctx, inst.regular_sequence());
    const GradedBasis c3 = ci_builder.basis(3);

    ConditionalIntersectionReport report;
    for (int i = 0; i < ann.dim(); ++i) {
        Form linear = ann.row_as_form(i);
        if (!c3.contains(linear * last)) {
            report.hypothesis_met = true;
            break;
        }
    }
    if (!report.hypothesis_met) return report;

    std::vector<Form> head_ideal = inst.regular_sequence();
    head_ideal.insert(head_ideal.end(), head.begin(), head.end());
    GradedBasis j3 = ideal_piece(ctx, head_ideal, 3);
    std::vector<Form> last_only{last};
    GradedBasis last_r1 = ideal_piece(ctx, last_only, 3);
    report.measured = subspace_dims(j3, last_r1).dim_meet;
    report.holds = report.measured <= 3;
    return report;
}

Defect2IdentityReport defect2_identity_check(const IdealInstance& inst) {
    if (!inst.all_quadrics() || inst.defect() != 2)
        throw input_error("the four-term identity needs a defect-2 quadratic ideal");
    const RingContext& ctx = inst.context();
    const int n = ctx.nvars();
    const Form& g = inst.extras()[0];
    const Form& h = inst.extras()[1];

    IdealPieceBuilder ci_builder(ctx, inst.regular_sequence());
    const GradedBasis c3 = ci_builder.basis(3);
    std::vector<Form> g_only{g};
    std::vector<Form> h_only{h};
    GradedBasis g_r1 = ideal_piece(ctx, g_only, 3);
    GradedBasis h_r1 = ideal_piece(ctx, h_only, 3);

    Defect2IdentityReport report;
    report.meet_c_g = subspace_dims(c3, g_r1).dim_meet;
    GradedBasis j3 = subspace_sum(c3, g_r1);
    report.meet_j_h = subspace_dims(j3, h_r1).dim_meet;
    report.dim_i3 = ideal_piece(ctx, inst.all_generators(), 3).dim();
    report.expected = n * n + 2 * n - report.meet_c_g - report.meet_j_h;
    report.holds = report.dim_i3 == report.expected;
    return report;
}

PencilReport pencil_report(const ArtinQuotient& A, const Form& g, const Form& h) {
    const RingContext& ctx = A.context();
    if (!A.degrees().all_quadrics())
        throw input_error("pencil scan expects a quadric regular sequence");
    if (g.degree() != 2 || h.degree() != 2)
        throw input_error("pencil members must be quadrics");
    if (A.cap() < 3) throw input_error("quotient cached below degree 3");

    // g and h must stay independent modulo c_2.
    {
        RowEchelon ech = A.piece(2).echelon();
        if (!ech.insert(g.dense_row()) || !ech.insert(h.dense_row()))
            throw input_error("degenerate pencil: members dependent modulo the ideal");
    }

    const int n = ctx.nvars();
    const GradedBasis& c3 = A.piece(3);
    const auto ones = monomials_of_degree(ctx, 1);

    auto scan = [&](const Form& member) {
        RowEchelon image(ctx.field(), c3.ambient_dim());
        std::vector<std::uint64_t> scratch;
        for (int v = 0; v < n; ++v) {
            Form mult = member.times_monomial((*ones)[static_cast<std::size_t>(v)]);
            auto row = mult.dense_row();
            scratch.assign(row.begin(), row.end());
            c3.echelon().reduce(scratch);
            image.insert(scratch);
        }
        return image.rank();
    };

    PencilReport report;
    const std::uint32_t p = ctx.modulus();
    for (std::uint32_t c = 0; c < p; ++c) {
        Form member = g + h.scaled(c);
        int dim_image = scan(member);
        report.rows.push_back(PencilRow{false, c, dim_image, n - dim_image});
    }
    int dim_image_h = scan(h);
    report.rows.push_back(PencilRow{true, 0, dim_image_h, n - dim_image_h});
    for (const PencilRow& row : report.rows)
        if (row.dim_annihilator > 0) report.has_linear_annihilator = true;
    return report;
}

ColonLinearBoundReport colon_linear_bound_check(const IdealInstance& inst) {
    if (inst.context().nvars() != 5 || inst.defect() != 3 || !inst.all_quadrics())
        throw input_error("colon linear bound needs n=5 defect-3 quadratic ideals");
    const RingContext& ctx = inst.context();
    ColonLinearBoundReport report;
    report.holds = true;
    auto measure = [&](std::vector<int> idx) {
        std::vector<Form> targets;
        for (int i : idx) targets.push_back(inst.extras()[static_cast<std::size_t>(i)]);
        int dim = colon_piece(ctx, inst.regular_sequence(), targets, 1).dim();
        report.holds = report.holds && dim <= 1;
        report.measured.emplace_back(std::move(idx), dim);
    };
    measure({0, 1});
    measure({0, 2});
    measure({1, 2});
    measure({0, 1, 2});
    return report;
}

}  // namespace egh
