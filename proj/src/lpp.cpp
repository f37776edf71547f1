#include "egh/lpp.hpp"

#include <algorithm>

#include "egh/binomial.hpp"

namespace egh {

LppIdeal::LppIdeal(int nvars, DegreeVector a) : n_(nvars), a_(std::move(a)) {
    if (a_.size() != n_) throw input_error("degree vector length does not match n");
}

int LppIdeal::lex_generator_count() const {
    int count = 0;
    for (const auto& [d, monos] : lex_gens_) count += static_cast<int>(monos.size());
    return count;
}

bool LppIdeal::contains(const Monomial& m) const {
    for (int i = 0; i < n_; ++i)
        if (m.exponent(i) >= a_[i]) return true;
    for (const auto& [d, monos] : lex_gens_) {
        if (d > m.degree()) break;
        for (const Monomial& g : monos)
            if (g.divides(m)) return true;
    }
    return false;
}

int LppIdeal::piece_dim(int d) const {
    auto monos = monomials_of_degree(n_, d);
    int count = 0;
    for (const Monomial& m : *monos)
        if (contains(m)) ++count;
    return count;
}

int LppIdeal::hf(int d) const {
    return static_cast<int>(monomial_count(n_, d)) - piece_dim(d);
}

OSequence LppIdeal::hilbert_function(int cap) const {
    std::vector<int> values(static_cast<std::size_t>(cap) + 1);
    for (int d = 0; d <= cap; ++d) values[static_cast<std::size_t>(d)] = hf(d);
    return OSequence(std::move(values));
}

std::vector<Monomial> LppIdeal::generator_monomials() const {
    std::vector<Monomial> gens;
    std::vector<int> exps(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
        exps[static_cast<std::size_t>(i)] = a_[i];
        gens.emplace_back(n_, exps);
        exps[static_cast<std::size_t>(i)] = 0;
    }
    for (const auto& [d, monos] : lex_gens_)
        gens.insert(gens.end(), monos.begin(), monos.end());
    return gens;
}

void LppIdeal::add_lex_generators(const std::vector<Monomial>& monos) {
    if (monos.empty()) return;
    const int d = monos.front().degree();
    for (const Monomial& m : monos) {
        if (m.degree() != d) throw input_error("lex generators must share one degree");
        if (m.nvars() != n_) throw input_error("generator from a different ring");
        if (contains(m)) throw input_error("redundant lex generator");
    }
    auto& group = lex_gens_[d];
    group.insert(group.end(), monos.begin(), monos.end());
    std::sort(group.begin(), group.end(), lex_greater);
}

bool LppIdeal::is_lex_segment_ideal() const {
    for (const auto& [d, gens] : lex_gens_) {
        // Standard monomials of (x^a) at degree d that are not swallowed by
        // lower-degree lex generators, in descending lex order.
        LppIdeal lower(n_, a_);
        for (const auto& [e, monos] : lex_gens_) {
            if (e >= d) break;
            lower.lex_gens_[e] = monos;
        }
        auto monos = monomials_of_degree(n_, d);
        bool boundary_passed = false;
        for (const Monomial& m : *monos) {
            if (lower.contains(m)) continue;
            bool in_ideal = contains(m);
            if (!in_ideal) boundary_passed = true;
            if (in_ideal && boundary_passed) return false;  // not a prefix
        }
    }
    return true;
}

std::vector<Monomial> lex_segment(const RingContext& ctx, int d, int k,
                                  const LppIdeal* exclude) {
    if (d < 0 || k < 0) throw input_error("negative degree or count");
    std::vector<Monomial> out;
    out.reserve(static_cast<std::size_t>(k));
    auto monos = monomials_of_degree(ctx, d);
    for (const Monomial& m : *monos) {
        if (static_cast<int>(out.size()) == k) break;
        if (exclude != nullptr && exclude->contains(m)) continue;
        out.push_back(m);
    }
    if (static_cast<int>(out.size()) < k)
        throw input_error("not enough degree-" + std::to_string(d) +
                          " monomials outside the ideal");
    return out;
}

LppIdeal lpp_defect(const RingContext& ctx, const DegreeVector& a, int d, int defect) {
    LppIdeal ideal(ctx.nvars(), a);
    if (defect > 0) ideal.add_lex_generators(lex_segment(ctx, d, defect, &ideal));
    return ideal;
}

std::int64_t macaulay_bound(std::int64_t h, int d) {
    if (h < 0) throw input_error("negative Hilbert-function value");
    if (d < 1) throw input_error("macaulay bound needs d >= 1");
    if (h == 0) return 0;
    std::int64_t remaining = h;
    std::int64_t bound = 0;
    int deg = d;
    while (remaining > 0) {
        // Largest b with C(b, deg) <= remaining; the greedy choice keeps the
        // b's strictly decreasing, which makes the representation unique.
        std::int64_t b = deg;
        while (binomial(b + 1, deg) <= remaining) ++b;
        remaining -= binomial(b, deg);
        bound += binomial(b + 1, deg + 1);
        --deg;
    }
    return bound;
}

LppMatchResult lpp_match_full(const OSequence& target, const RingContext& ctx,
                              const DegreeVector& a) {
    if (a.size() != ctx.nvars()) throw input_error("degree vector length does not match n");
    if (target[0] != 1)
        throw input_error("target must start with 1 (nondegenerate quotient)");

    LppIdeal ideal(ctx.nvars(), a);
    const int top = std::max(target.size() - 1, a.socle_degree() + 1);
    for (int d = 1; d <= top; ++d) {
        const int have = ideal.hf(d);
        const int want = target[d];
        if (have < want) return {std::nullopt, LppMatchFailure{d, have, want}};
        if (have > want)
            ideal.add_lex_generators(lex_segment(ctx, d, have - want, &ideal));
    }
    return {std::move(ideal), std::nullopt};
}

}  // namespace egh
