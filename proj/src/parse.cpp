#include "hadamard/parse.hpp"

#include <cctype>
#include <map>

namespace hadamard {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& expected) {
        throw ParseError("parse error at position " + std::to_string(pos) + ": expected " +
                             expected,
                         pos, expected);
    }

    long integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) fail("integer");
        return std::stol(std::string(text.substr(start, pos - start)));
    }
    unsigned long unsigned_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("unsigned integer");
        return std::stoul(std::string(text.substr(start, pos - start)));
    }
};

// One '*'-separated factor: rational, z{N}[^k], or x{i}[^e].
struct Factor {
    enum class Kind { Rational, Root, Variable } kind;
    Rational rational;
    unsigned root_conductor = 0;
    long root_power = 0;
    unsigned var_index = 0;
    unsigned var_power = 0;
};

Factor parse_factor(Cursor& cur) {
    Factor f{};
    char c = cur.peek();
    if (c == 'z') {
        ++cur.pos;
        f.kind = Factor::Kind::Root;
        f.root_conductor = static_cast<unsigned>(cur.unsigned_integer());
        if (f.root_conductor == 0) cur.fail("positive root order after 'z'");
        f.root_power = cur.accept('^') ? cur.integer() : 1;
        return f;
    }
    if (c == 'x') {
        ++cur.pos;
        f.kind = Factor::Kind::Variable;
        f.var_index = static_cast<unsigned>(cur.unsigned_integer());
        f.var_power = cur.accept('^') ? static_cast<unsigned>(cur.unsigned_integer()) : 1;
        return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
        f.kind = Factor::Kind::Rational;
        long num = cur.integer();
        if (cur.accept('/')) {
            long den = cur.integer();
            if (den == 0) cur.fail("nonzero denominator");
            f.rational = make_rational(num, den);
        } else {
            f.rational = Rational(num);
        }
        return f;
    }
    cur.fail("coefficient literal, 'z{N}', or 'x{i}'");
}

struct Term {
    Cyclotomic coeff{Rational(1)};
    std::map<unsigned, unsigned> exponents;
    unsigned max_var = 0;
    bool has_var = false;
};

Term parse_term(Cursor& cur, bool allow_variables) {
    Term t;
    while (true) {
        Factor f = parse_factor(cur);
        switch (f.kind) {
            case Factor::Kind::Rational:
                t.coeff = t.coeff * Cyclotomic(f.rational);
                break;
            case Factor::Kind::Root:
                t.coeff = t.coeff * Cyclotomic::root_of_unity(f.root_conductor, f.root_power);
                break;
            case Factor::Kind::Variable:
                if (!allow_variables) cur.fail("coefficient literal (no variables here)");
                t.exponents[f.var_index] += f.var_power;
                t.max_var = std::max(t.max_var, f.var_index);
                t.has_var = true;
                break;
        }
        if (!cur.accept('*')) break;
    }
    return t;
}

std::vector<std::pair<int, Term>> parse_signed_terms(Cursor& cur, bool allow_variables) {
    std::vector<std::pair<int, Term>> terms;
    int sign = 1;
    if (cur.accept('-')) sign = -1;
    else cur.accept('+');
    terms.emplace_back(sign, parse_term(cur, allow_variables));
    while (!cur.eof()) {
        char c = cur.peek();
        if (c == '+') sign = 1;
        else if (c == '-') sign = -1;
        else break;
        ++cur.pos;
        terms.emplace_back(sign, parse_term(cur, allow_variables));
    }
    return terms;
}

Cyclotomic coefficient_from(const std::vector<std::pair<int, Term>>& terms) {
    Cyclotomic acc;
    for (const auto& [sign, t] : terms) acc = acc + (sign < 0 ? -t.coeff : t.coeff);
    return acc;
}

}  // namespace

MultiPoly parse_poly(std::string_view text, std::optional<unsigned> arity) {
    Cursor cur{text};
    auto terms = parse_signed_terms(cur, true);
    if (!cur.eof()) cur.fail("'+', '-', or end of input");

    unsigned needed = 0;
    for (const auto& [sign, t] : terms)
        if (t.has_var) needed = std::max(needed, t.max_var + 1);
    unsigned n = arity.value_or(needed);
    if (n < needed)
        throw ParseError("variable index exceeds declared arity " + std::to_string(n),
                         text.size(), "variable index < " + std::to_string(n));
    if (n == 0) n = 1;

    MultiPoly p(n);
    for (const auto& [sign, t] : terms) {
        ExponentVector e(n, 0);
        for (const auto& [v, exp] : t.exponents) e[v] = exp;
        p.add_term(e, sign < 0 ? -t.coeff : t.coeff);
    }
    return p;
}

Cyclotomic parse_coefficient(std::string_view text) {
    Cursor cur{text};
    auto terms = parse_signed_terms(cur, false);
    if (!cur.eof()) cur.fail("'+', '-', or end of input");
    return coefficient_from(terms);
}

ProjectivePoint parse_point(std::string_view text) {
    Cursor cur{text};
    if (!cur.accept('[')) cur.fail("'['");
    std::vector<Cyclotomic> coords;
    while (true) {
        if (cur.peek() == ':' || cur.peek() == ']') {
            cur.fail("coordinate entry");
        }
        std::vector<std::pair<int, Term>> terms;
        int sign = 1;
        if (cur.accept('-')) sign = -1;
        else cur.accept('+');
        terms.emplace_back(sign, parse_term(cur, false));
        while (cur.peek() == '+' || cur.peek() == '-') {
            sign = cur.peek() == '+' ? 1 : -1;
            ++cur.pos;
            terms.emplace_back(sign, parse_term(cur, false));
        }
        coords.push_back(coefficient_from(terms));
        if (cur.accept(':')) continue;
        if (cur.accept(']')) break;
        cur.fail("':' or ']'");
    }
    if (!cur.eof()) cur.fail("end of input");
    return ProjectivePoint(std::move(coords));
}

}  // namespace hadamard
