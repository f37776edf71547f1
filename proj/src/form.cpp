#include "egh/form.hpp"

#include <algorithm>

#include "egh/binomial.hpp"

namespace egh {

Form::Form(RingContext ctx, int degree) : ctx_(std::move(ctx)), degree_(degree) {
    if (degree < 0) throw input_error("negative form degree");
}

Form Form::from_monomial(const RingContext& ctx, const Monomial& m, Scalar c) {
    if (m.nvars() != ctx.nvars())
        throw input_error("monomial does not belong to this ring");
    Form f(ctx, m.degree());
    f.add_term(m, c);
    return f;
}

Form& Form::add_term(const Monomial& m, Scalar c) {
    if (m.nvars() != ctx_.nvars())
        throw input_error("monomial does not belong to this ring");
    if (m.degree() != degree_)
        throw input_error("term degree does not match form degree");
    c = ctx_.field().reduce(c);
    if (c == 0) return *this;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second = ctx_.field().add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

Form Form::operator+(const Form& o) const {
    if (!ctx_.compatible(o.ctx_)) throw input_error("form sum across different rings");
    if (degree_ != o.degree_) throw input_error("form sum across different degrees");
    Form r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Form Form::operator*(const Form& o) const {
    if (!ctx_.compatible(o.ctx_)) throw input_error("form product across different rings");
    Form r(ctx_, degree_ + o.degree_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_)
            r.add_term(m1 * m2, ctx_.field().mul(c1, c2));
    return r;
}

Form Form::scaled(Scalar c) const {
    Form r(ctx_, degree_);
    c = ctx_.field().reduce(c);
    for (const auto& [m, a] : terms_) r.add_term(m, ctx_.field().mul(a, c));
    return r;
}

Form Form::times_monomial(const Monomial& m) const {
    Form r(ctx_, degree_ + m.degree());
    for (const auto& [u, c] : terms_) r.add_term(u * m, c);
    return r;
}

bool Form::operator==(const Form& o) const {
    if (!ctx_.compatible(o.ctx_) || degree_ != o.degree_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (!(it->first == jt->first) || it->second != jt->second) return false;
    return true;
}

std::vector<Scalar> Form::dense_row() const {
    auto count = static_cast<std::size_t>(monomial_count(ctx_.nvars(), degree_));
    std::vector<Scalar> row(count, 0);
    for (const auto& [m, c] : terms_) row[static_cast<std::size_t>(monomial_index(m))] = c;
    return row;
}

Form Form::from_dense_row(const RingContext& ctx, int degree, std::span<const Scalar> row) {
    auto monos = monomials_of_degree(ctx, degree);
    if (row.size() != monos->size()) throw input_error("dense row has wrong length");
    Form f(ctx, degree);
    for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) f.add_term((*monos)[j], row[j]);
    return f;
}

Form embed(const Form& f, const RingContext& target, std::span<const int> var_map) {
    const RingContext& src = f.context();
    if (target.modulus() != src.modulus())
        throw input_error("embedding across different moduli");
    if (static_cast<int>(var_map.size()) != src.nvars())
        throw input_error("variable map length does not match source ring");
    Form r(target, f.degree());
    std::vector<int> exps(static_cast<std::size_t>(target.nvars()));
    for (const auto& [m, c] : f.terms()) {
        std::fill(exps.begin(), exps.end(), 0);
        for (int i = 0; i < src.nvars(); ++i) {
            int j = var_map[static_cast<std::size_t>(i)];
            if (j < 0 || j >= target.nvars()) throw input_error("variable map out of range");
            exps[static_cast<std::size_t>(j)] += m.exponent(i);
        }
        r.add_term(Monomial(target.nvars(), exps), c);
    }
    return r;
}

}  // namespace egh
