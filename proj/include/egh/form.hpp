#ifndef EGH_FORM_HPP
#define EGH_FORM_HPP

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "egh/monomial.hpp"
#include "egh/ring.hpp"

namespace egh {

// A homogeneous polynomial of one fixed degree: a sparse map from monomials
// to nonzero GF(p) coefficients. The zero form keeps its declared degree so
// graded containers stay well-typed. Immutable in spirit: the mutating
// helpers are only used while assembling a form.
class Form {
  public:
    struct MonomialDesc {
        bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
    };
    using TermMap = std::map<Monomial, Scalar, MonomialDesc>;

    // The zero form of the given degree.
    Form(RingContext ctx, int degree);

    static Form from_monomial(const RingContext& ctx, const Monomial& m, Scalar c = 1);

    const RingContext& context() const { return ctx_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Accumulates c * m into the form; drops the term if the sum vanishes.
    // The monomial degree must match the form degree.
    Form& add_term(const Monomial& m, Scalar c);

    Form operator+(const Form& o) const;
    Form operator*(const Form& o) const;
    Form scaled(Scalar c) const;
    Form times_monomial(const Monomial& m) const;

    bool operator==(const Form& o) const;

    // Dense coefficient vector over monomials_of_degree(ctx, degree) in
    // descending lex column order.
    std::vector<Scalar> dense_row() const;

    static Form from_dense_row(const RingContext& ctx, int degree,
                               std::span<const Scalar> row);

  private:
    RingContext ctx_;
    int degree_;
    TermMap terms_;
};

// Parses the polynomial grammar
//   form   := term ('+' term)*
//   term   := coeff | coeff '*' mono | mono
//   mono   := factor ('*' factor)*
//   factor := var | var '^' uint
//   coeff  := uint
// Whitespace is ignored, coefficients reduce mod p silently, subtraction is
// not accepted (use additive inverses mod p). Unknown variables raise
// parse_error; terms of mixed degree raise input_error.
Form form_parse(const RingContext& ctx, std::string_view text);

// Inverse of form_parse on every form: form_parse(form_print(f)) == f,
// including the declared degree of zero forms.
std::string form_print(const Form& f);

// Re-embeds a form into a larger context, mapping variable i of the source
// to variable var_map[i] of the target. Coefficients are kept verbatim; the
// moduli must agree.
Form embed(const Form& f, const RingContext& target, std::span<const int> var_map);

}  // namespace egh

#endif
