#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "egh/binomial.hpp"
#include "egh/form.hpp"
#include "egh/rng.hpp"

#include "oracle.hpp"

using namespace egh;

namespace {

Monomial mono(int n, std::initializer_list<int> exps) {
    return Monomial(n, std::vector<int>(exps));
}

Form random_form_for_test(const RingContext& ctx, int d, Rng& rng) {
    auto monos = monomials_of_degree(ctx, d);
    Form f(ctx, d);
    for (const auto& m : *monos) {
        Scalar c = static_cast<Scalar>(rng.below(ctx.modulus()));
        if (c) f.add_term(m, c);
    }
    return f;
}

oracle::Poly to_oracle(const Form& f) {
    oracle::Poly poly;
    for (const auto& [m, c] : f.terms()) {
        oracle::Expo e(static_cast<std::size_t>(m.nvars()));
        for (int i = 0; i < m.nvars(); ++i) e[static_cast<std::size_t>(i)] = m.exponent(i);
        poly[e] = c;
    }
    return poly;
}

}  // namespace

TEST_CASE("ring context validation") {
    RingContext ctx(3, 101);
    CHECK(ctx.var_name(0) == "x1");
    CHECK(ctx.var_name(2) == "x3");
    CHECK_THROWS_AS(RingContext(3, 100), input_error);   // 100 not prime
    CHECK_THROWS_AS(RingContext(0, 101), input_error);
    CHECK_THROWS_AS(RingContext(17, 101), input_error);  // above the variable cap
    CHECK_THROWS_AS(RingContext(2, 101, {"a", "a"}), input_error);
    CHECK_THROWS_AS(RingContext(2, 101, {"a"}), input_error);
}

TEST_CASE("prime field inverses") {
    for (std::uint32_t p : {2u, 3u, 101u, 65537u}) {
        PrimeField field(p);
        for (Scalar a = 1; a < std::min(p, 200u); ++a) {
            CHECK(field.mul(a, field.inv(a)) == 1);
        }
    }
    CHECK_THROWS_AS(PrimeField(101).inv(0), input_error);
}

TEST_CASE("lex comparison on the worked triples") {
    // x1*x3 > x2^2, x1*x2 == x1*x2, x2*x3 < x2^2 (n = 3)
    CHECK(lex_cmp(mono(3, {1, 0, 1}), mono(3, {0, 2, 0})) == std::strong_ordering::greater);
    CHECK(lex_cmp(mono(3, {1, 1, 0}), mono(3, {1, 1, 0})) == std::strong_ordering::equal);
    CHECK(lex_cmp(mono(3, {0, 1, 1}), mono(3, {0, 2, 0})) == std::strong_ordering::less);
    CHECK_THROWS_AS(lex_cmp(mono(3, {1, 0, 1}), mono(2, {1, 1})), input_error);
}

TEST_CASE("lex order is a strict total order") {
    Rng rng(11);
    auto monos = monomials_of_degree(4, 3);
    for (int t = 0; t < 300; ++t) {
        const Monomial& a = (*monos)[rng.below(monos->size())];
        const Monomial& b = (*monos)[rng.below(monos->size())];
        const Monomial& c = (*monos)[rng.below(monos->size())];
        // trichotomy
        int verdicts = (lex_cmp(a, b) == std::strong_ordering::greater) +
                       (lex_cmp(a, b) == std::strong_ordering::equal) +
                       (lex_cmp(a, b) == std::strong_ordering::less);
        CHECK(verdicts == 1);
        // antisymmetry
        CHECK((lex_cmp(a, b) == std::strong_ordering::greater) ==
              (lex_cmp(b, a) == std::strong_ordering::less));
        // transitivity
        if (lex_cmp(a, b) != std::strong_ordering::less &&
            lex_cmp(b, c) != std::strong_ordering::less)
            CHECK(lex_cmp(a, c) != std::strong_ordering::less);
        // agreement with the oracle comparator
        oracle::Expo ea(4), eb(4);
        for (int i = 0; i < 4; ++i) {
            ea[static_cast<std::size_t>(i)] = a.exponent(i);
            eb[static_cast<std::size_t>(i)] = b.exponent(i);
        }
        CHECK((lex_cmp(a, b) == std::strong_ordering::greater) == oracle::lex_greater(ea, eb));
    }
}

TEST_CASE("monomial enumeration") {
    auto small = monomials_of_degree(2, 2);
    REQUIRE(small->size() == 3);
    CHECK((*small)[0] == mono(2, {2, 0}));
    CHECK((*small)[1] == mono(2, {1, 1}));
    CHECK((*small)[2] == mono(2, {0, 2}));

    CHECK(monomials_of_degree(5, 3)->size() == 35);
    auto unit = monomials_of_degree(5, 0);
    REQUIRE(unit->size() == 1);
    CHECK((*unit)[0].is_one());

    for (int n = 1; n <= 8; ++n) {
        for (int d = 0; d <= 6; ++d) {
            auto monos = monomials_of_degree(n, d);
            CHECK(static_cast<std::int64_t>(monos->size()) == monomial_count(n, d));
            for (std::size_t j = 0; j + 1 < monos->size(); ++j)
                CHECK(lex_cmp((*monos)[j], (*monos)[j + 1]) == std::strong_ordering::greater);
            for (std::size_t j = 0; j < monos->size(); ++j)
                CHECK(monomial_index((*monos)[j]) == static_cast<int>(j));
        }
    }
}

TEST_CASE("variable shift tables agree with monomial products") {
    for (int n : {2, 5}) {
        for (int d : {0, 1, 3}) {
            auto monos = monomials_of_degree(n, d);
            auto next = monomials_of_degree(n, d + 1);
            auto table = variable_shift_table(n, d);
            for (std::size_t j = 0; j < monos->size(); ++j) {
                for (int v = 0; v < n; ++v) {
                    std::vector<int> e(static_cast<std::size_t>(n), 0);
                    e[static_cast<std::size_t>(v)] = 1;
                    Monomial prod = (*monos)[j] * Monomial(n, e);
                    CHECK((*next)[static_cast<std::size_t>(
                              (*table)[static_cast<std::size_t>(v) * monos->size() + j])] == prod);
                }
            }
        }
    }
}

TEST_CASE("form product basics") {
    RingContext ctx(2, 101);
    Form x1 = form_parse(ctx, "x1");
    CHECK(form_print(x1 * x1) == "x1^2");

    Form sum = form_parse(ctx, "x1 + x2");
    Form diff = form_parse(ctx, "x1 + 100*x2");  // x1 - x2 mod 101
    CHECK(form_print(sum * diff) == "x1^2 + 100*x2^2");

    Form zero(ctx, 3);
    Form prod = zero * sum;
    CHECK(prod.is_zero());
    CHECK(prod.degree() == 4);
}

TEST_CASE("form arithmetic distributes") {
    RingContext ctx(3, 101);
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        Form f = random_form_for_test(ctx, 2, rng);
        Form g = random_form_for_test(ctx, 2, rng);
        Form h = random_form_for_test(ctx, 1, rng);
        CHECK((f + g) * h == f * h + g * h);
        CHECK(f * h == h * f);
        // against the oracle multiply
        oracle::Poly expected = oracle::mul(to_oracle(f), to_oracle(h), 101);
        CHECK(to_oracle(f * h) == expected);
    }
}

TEST_CASE("form degree mismatches are rejected") {
    RingContext ctx(3, 101);
    Form f = form_parse(ctx, "x1");
    Form g = form_parse(ctx, "x1*x2");
    CHECK_THROWS_AS(f + g, input_error);
    RingContext other(4, 101);
    CHECK_THROWS_AS(f + form_parse(other, "x1"), input_error);
}

TEST_CASE("parse examples") {
    RingContext ctx(3, 101);
    Form f = form_parse(ctx, "x1^2 + 3*x2*x3");
    CHECK(f.degree() == 2);
    CHECK(f.term_count() == 2);

    CHECK_THROWS_AS(form_parse(ctx, "x1*x2 + x3"), input_error);      // mixed degrees
    CHECK_THROWS_AS(form_parse(ctx, "x9"), parse_error);              // unknown variable
    CHECK_THROWS_AS(form_parse(ctx, ""), parse_error);
    CHECK_THROWS_AS(form_parse(ctx, "x1 -"), parse_error);            // no subtraction
    CHECK_THROWS_AS(form_parse(ctx, "x1 + "), parse_error);
    CHECK_THROWS_AS(form_parse(ctx, "2 3"), parse_error);

    // coefficients reduce mod p silently
    CHECK(form_parse(ctx, "102*x1^2") == form_parse(ctx, "x1^2"));
    CHECK(form_parse(ctx, "101*x1^2").is_zero());
    CHECK(form_parse(ctx, "101*x1^2").degree() == 2);

    // whitespace is ignored
    CHECK(form_parse(ctx, "  x1 ^ 2+ 3 * x2 * x3 ") == f);

    // a lone coefficient is a degree-0 form
    Form constant = form_parse(ctx, "7");
    CHECK(constant.degree() == 0);
    CHECK(constant.term_count() == 1);
}

TEST_CASE("print then parse is the identity") {
    RingContext ctx(4, 101);
    Rng rng(17);
    for (int d = 0; d <= 4; ++d) {
        for (int t = 0; t < 30; ++t) {
            Form f = random_form_for_test(ctx, d, rng);
            CHECK(form_parse(ctx, form_print(f)) == f);
        }
    }
    // zero forms keep their declared degree
    Form zero2(ctx, 2);
    CHECK(form_parse(ctx, form_print(zero2)) == zero2);
    CHECK(form_parse(ctx, form_print(zero2)).degree() == 2);
    Form zero0(ctx, 0);
    CHECK(form_parse(ctx, form_print(zero0)) == zero0);

    // custom variable names survive the round trip
    RingContext named(2, 7, {"alpha", "beta_2"});
    Form g = form_parse(named, "3*alpha^2 + beta_2*alpha");
    CHECK(form_parse(named, form_print(g)) == g);
}

TEST_CASE("binomial utility") {
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(10, 0) == 1);
    CHECK(monomial_count(5, 3) == 35);
    CHECK(monomial_count(5, 0) == 1);
}
