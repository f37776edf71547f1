#include "egh/monomial.hpp"

#include <map>
#include <mutex>

#include "egh/binomial.hpp"

namespace egh {

Monomial::Monomial(int n) : n_(static_cast<std::uint8_t>(n)) {
    if (n < 1 || n > RingContext::kMaxVars)
        throw input_error("variable count out of range");
}

Monomial::Monomial(int n, std::span<const int> exponents) : Monomial(n) {
    if (static_cast<int>(exponents.size()) != n)
        throw input_error("exponent list length does not match variable count");
    int deg = 0;
    for (int i = 0; i < n; ++i) {
        int e = exponents[static_cast<std::size_t>(i)];
        if (e < 0 || e > 255) throw input_error("exponent out of range [0, 255]");
        e_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
        deg += e;
    }
    if (deg > 0xffff) throw input_error("total degree out of range");
    degree_ = static_cast<std::uint16_t>(deg);
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (n_ != o.n_) throw input_error("monomial product across different rings");
    Monomial r(n_);
    int deg = 0;
    for (int i = 0; i < n_; ++i) {
        int e = e_[static_cast<std::size_t>(i)] + o.e_[static_cast<std::size_t>(i)];
        if (e > 255) throw input_error("exponent overflow in monomial product");
        r.e_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
        deg += e;
    }
    r.degree_ = static_cast<std::uint16_t>(deg);
    return r;
}

bool Monomial::divides(const Monomial& m) const {
    if (n_ != m.n_) throw input_error("divisibility across different rings");
    for (int i = 0; i < n_; ++i)
        if (e_[static_cast<std::size_t>(i)] > m.e_[static_cast<std::size_t>(i)]) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& m) const {
    if (!m.divides(*this)) throw input_error("monomial quotient is not exact");
    Monomial r(n_);
    for (int i = 0; i < n_; ++i)
        r.e_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(
            e_[static_cast<std::size_t>(i)] - m.e_[static_cast<std::size_t>(i)]);
    r.degree_ = static_cast<std::uint16_t>(degree_ - m.degree_);
    return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    return lex_cmp(*this, o);
}

std::strong_ordering lex_cmp(const Monomial& u, const Monomial& v) {
    if (u.nvars() != v.nvars())
        throw input_error("lex comparison across different variable counts");
    if (u.degree() != v.degree()) return u.degree() <=> v.degree();
    for (int i = 0; i < u.nvars(); ++i) {
        if (u.exponent(i) != v.exponent(i)) return u.exponent(i) <=> v.exponent(i);
    }
    return std::strong_ordering::equal;
}

namespace {

std::mutex cache_mutex;

void enumerate(int n, int d, std::vector<int>& exps, int pos, int rem,
               std::vector<Monomial>& out) {
    if (pos == n - 1) {
        exps[static_cast<std::size_t>(pos)] = rem;
        out.emplace_back(n, std::span<const int>(exps));
        return;
    }
    for (int v = rem; v >= 0; --v) {
        exps[static_cast<std::size_t>(pos)] = v;
        enumerate(n, d, exps, pos + 1, rem - v, out);
    }
    exps[static_cast<std::size_t>(pos)] = 0;
}

}  // namespace

std::shared_ptr<const std::vector<Monomial>> monomials_of_degree(int n, int d) {
    if (n < 1 || n > RingContext::kMaxVars)
        throw input_error("variable count out of range");
    if (d < 0) throw input_error("negative degree");
    if (monomial_count(n, d) > 2'000'000)
        throw input_error("degree too large for dense enumeration");

    static std::map<std::pair<int, int>, std::shared_ptr<const std::vector<Monomial>>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto& slot = cache[{n, d}];
    if (!slot) {
        auto list = std::make_shared<std::vector<Monomial>>();
        list->reserve(static_cast<std::size_t>(monomial_count(n, d)));
        std::vector<int> exps(static_cast<std::size_t>(n), 0);
        enumerate(n, d, exps, 0, d, *list);
        slot = std::move(list);
    }
    return slot;
}

int monomial_index(const Monomial& m) {
    // Count monomials that precede m in descending lex: for each position,
    // those with a strictly larger exponent there and matching prefix.
    std::int64_t idx = 0;
    int n = m.nvars();
    int rem = m.degree();
    for (int i = 0; i < n - 1; ++i) {
        int tail_vars = n - i - 1;
        for (int v = rem; v > m.exponent(i); --v)
            idx += monomial_count(tail_vars, rem - v);
        rem -= m.exponent(i);
    }
    return static_cast<int>(idx);
}

std::shared_ptr<const std::vector<std::int32_t>> variable_shift_table(int n, int d) {
    static std::map<std::pair<int, int>, std::shared_ptr<const std::vector<std::int32_t>>> cache;
    auto monos = monomials_of_degree(n, d);
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto& slot = cache[{n, d}];
    if (!slot) {
        const std::size_t count = monos->size();
        auto table = std::make_shared<std::vector<std::int32_t>>(count * static_cast<std::size_t>(n));
        std::vector<int> exps(static_cast<std::size_t>(n));
        for (std::size_t j = 0; j < count; ++j) {
            const Monomial& m = (*monos)[j];
            for (int i = 0; i < n; ++i) exps[static_cast<std::size_t>(i)] = m.exponent(i);
            for (int v = 0; v < n; ++v) {
                exps[static_cast<std::size_t>(v)] += 1;
                Monomial shifted(n, std::span<const int>(exps));
                (*table)[static_cast<std::size_t>(v) * count + j] = monomial_index(shifted);
                exps[static_cast<std::size_t>(v)] -= 1;
            }
        }
        slot = std::move(table);
    }
    return slot;
}

}  // namespace egh
