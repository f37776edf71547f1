#ifndef EGH_MONOMIAL_HPP
#define EGH_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "egh/errors.hpp"
#include "egh/ring.hpp"

namespace egh {

// A monomial x_1^{e_1} ... x_n^{e_n} with its total degree cached. Exponents
// are capped at 255, which covers every computation in this library (total
// degrees stay near the socle degree).
class Monomial {
  public:
    // The constant monomial 1 in n variables.
    explicit Monomial(int n);

    Monomial(int n, std::span<const int> exponents);

    int nvars() const { return n_; }
    int degree() const { return degree_; }
    int exponent(int i) const { return e_[static_cast<std::size_t>(i)]; }

    bool is_one() const { return degree_ == 0; }

    Monomial operator*(const Monomial& o) const;

    // Whether this monomial divides m.
    bool divides(const Monomial& m) const;

    // this / m; requires m | this.
    Monomial quotient(const Monomial& m) const;

    bool operator==(const Monomial& o) const {
        return n_ == o.n_ && degree_ == o.degree_ && e_ == o.e_;
    }

    // Total order used for containers: degree first (lower degree is less),
    // then lexicographic within a degree. Same-degree comparisons agree with
    // lex_cmp below.
    std::strong_ordering operator<=>(const Monomial& o) const;

  private:
    std::array<std::uint8_t, RingContext::kMaxVars> e_{};
    std::uint8_t n_ = 0;
    std::uint16_t degree_ = 0;
};

// Lexicographic comparison with x_1 > x_2 > ... > x_n: u > v when the first
// differing exponent is larger in u. Monomials of unequal degree are ordered
// by degree first (a container-friendly extension; the lex order proper is a
// same-degree notion). Throws input_error when the variable counts differ.
std::strong_ordering lex_cmp(const Monomial& u, const Monomial& v);

inline bool lex_greater(const Monomial& u, const Monomial& v) {
    return lex_cmp(u, v) == std::strong_ordering::greater;
}

// All C(n+d-1, d) monomials of degree d in n variables, strictly descending
// in the lex order. The result is cached and shared; do not mutate.
std::shared_ptr<const std::vector<Monomial>> monomials_of_degree(int n, int d);

inline std::shared_ptr<const std::vector<Monomial>> monomials_of_degree(
    const RingContext& ctx, int d) {
    return monomials_of_degree(ctx.nvars(), d);
}

// Rank of a degree-d monomial within monomials_of_degree(n, d), i.e. the
// column index used throughout the linear algebra layer.
int monomial_index(const Monomial& m);

// Index map for multiplication by one variable: entry [v * C(n+d-1,d) + j]
// is the degree-(d+1) index of x_{v+1} * m_j, where m_j is the j-th
// degree-d monomial. Cached and shared.
std::shared_ptr<const std::vector<std::int32_t>> variable_shift_table(int n, int d);

}  // namespace egh

#endif
