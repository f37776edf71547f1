#include <cctype>
#include <optional>
#include <sstream>

#include "egh/form.hpp"

namespace egh {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw parse_error(what + " at position " + std::to_string(pos));
    }

    std::uint64_t read_uint() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected an unsigned integer");
        std::uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
            if (v > (std::uint64_t(1) << 62)) fail("integer literal too large");
            ++pos;
        }
        return v;
    }

    std::string read_ident() {
        skip_ws();
        if (pos >= text.size()) fail("expected a variable name");
        char c = text[pos];
        if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_')
            fail("expected a variable name");
        std::string name;
        while (pos < text.size()) {
            c = text[pos];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                name.push_back(c);
                ++pos;
            } else {
                break;
            }
        }
        return name;
    }
};

struct Term {
    Scalar coeff;
    Monomial mono;
};

// factor := var | var '^' uint ; returns (variable index, exponent)
std::pair<int, int> parse_factor(Cursor& cur, const RingContext& ctx) {
    std::string name = cur.read_ident();
    int var = ctx.var_index(name);
    if (var < 0) cur.fail("unknown variable '" + name + "'");
    int exp = 1;
    if (cur.accept('^')) {
        std::uint64_t e = cur.read_uint();
        if (e > 255) cur.fail("exponent too large");
        exp = static_cast<int>(e);
    }
    return {var, exp};
}

Term parse_term(Cursor& cur, const RingContext& ctx) {
    std::optional<Scalar> coeff;
    bool want_mono = false;
    char c = cur.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff = ctx.field().reduce(cur.read_uint());
        if (cur.accept('*')) want_mono = true;
    } else {
        want_mono = true;
    }

    std::vector<int> exps(static_cast<std::size_t>(ctx.nvars()), 0);
    if (want_mono) {
        do {
            auto [var, exp] = parse_factor(cur, ctx);
            exps[static_cast<std::size_t>(var)] += exp;
            if (exps[static_cast<std::size_t>(var)] > 255) cur.fail("exponent too large");
        } while (cur.accept('*'));
    }
    return {coeff.value_or(1), Monomial(ctx.nvars(), exps)};
}

}  // namespace

Form form_parse(const RingContext& ctx, std::string_view text) {
    Cursor cur{text};
    if (cur.done()) throw parse_error("empty polynomial");

    std::vector<Term> terms;
    terms.push_back(parse_term(cur, ctx));
    while (cur.accept('+')) terms.push_back(parse_term(cur, ctx));
    if (!cur.done()) cur.fail("unexpected trailing input");

    int degree = terms.front().mono.degree();
    for (const auto& t : terms)
        if (t.mono.degree() != degree)
            throw input_error("non-homogeneous polynomial: terms of degree " +
                              std::to_string(degree) + " and " +
                              std::to_string(t.mono.degree()));

    Form f(ctx, degree);
    for (const auto& t : terms) f.add_term(t.mono, t.coeff);
    return f;
}

std::string form_print(const Form& f) {
    const RingContext& ctx = f.context();
    if (f.is_zero()) {
        // Keeps the declared degree through a round-trip.
        if (f.degree() == 0) return "0";
        return "0*" + ctx.var_name(0) + "^" + std::to_string(f.degree());
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        if (!first) out << " + ";
        first = false;
        bool printed = false;
        if (c != 1 || m.is_one()) {
            out << c;
            printed = true;
        }
        for (int i = 0; i < ctx.nvars(); ++i) {
            int e = m.exponent(i);
            if (e == 0) continue;
            if (printed) out << "*";
            out << ctx.var_name(i);
            if (e > 1) out << "^" << e;
            printed = true;
        }
    }
    return out.str();
}

}  // namespace egh
