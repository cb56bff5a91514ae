#include "hadamard/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hadamard {

unsigned total_degree(const ExponentVector& e) {
    return std::accumulate(e.begin(), e.end(), 0u);
}

bool coprime_supports(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("coprime_supports: exponent length mismatch");
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] > 0 && b[j] > 0) return false;
    return true;
}

namespace {

// Lex comparison after applying the priority permutation.
int lex_cmp(const ExponentVector& a, const ExponentVector& b,
            const std::vector<unsigned>& priority) {
    if (priority.empty()) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }
    for (unsigned v : priority) {
        if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
    }
    return 0;
}

// Standard grevlex on a masked subset of variables.
int grevlex_cmp(const ExponentVector& a, const ExponentVector& b,
                const std::vector<char>* mask, bool in_mask) {
    unsigned da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (mask && (((*mask)[i] != 0) != in_mask)) continue;
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (mask && (((*mask)[i] != 0) != in_mask)) continue;
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace

bool MonomialOrder::less(const ExponentVector& a, const ExponentVector& b) const {
    switch (kind) {
        case Kind::Lex:
            return lex_cmp(a, b, priority) < 0;
        case Kind::GradedLex: {
            unsigned da = total_degree(a), db = total_degree(b);
            if (da != db) return da < db;
            return lex_cmp(a, b, priority) < 0;
        }
        case Kind::GRevLex:
            return grevlex_cmp(a, b, nullptr, true) < 0;
        case Kind::Block: {
            int c = grevlex_cmp(a, b, &eliminated, true);
            if (c != 0) return c < 0;
            return grevlex_cmp(a, b, &eliminated, false) < 0;
        }
    }
    return false;
}

bool MonomialOrder::is_elimination_for(const std::vector<char>& eliminated_mask) const {
    return kind == Kind::Block && eliminated == eliminated_mask;
}

MultiPoly MultiPoly::constant(unsigned arity, const Cyclotomic& c) {
    MultiPoly p(arity);
    p.add_term(ExponentVector(arity, 0), c);
    return p;
}

MultiPoly MultiPoly::monomial(ExponentVector exps, const Cyclotomic& c) {
    MultiPoly p(static_cast<unsigned>(exps.size()));
    p.add_term(exps, c);
    return p;
}

MultiPoly MultiPoly::variable(unsigned arity, unsigned index) {
    if (index >= arity) throw std::invalid_argument("variable: index out of range");
    ExponentVector e(arity, 0);
    e[index] = 1;
    return monomial(std::move(e), Cyclotomic(Rational(1)));
}

void MultiPoly::add_term(const ExponentVector& exps, const Cyclotomic& c) {
    if (exps.size() != arity_) throw std::invalid_argument("add_term: exponent length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::check_arity(const MultiPoly& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("polynomial ring arity mismatch");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(arity_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_arity(o);
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_arity(o);
    MultiPoly out(arity_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            ExponentVector e(arity_);
            for (unsigned j = 0; j < arity_; ++j) e[j] = ea[j] + eb[j];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::operator*(const Cyclotomic& c) const {
    MultiPoly out(arity_);
    if (c.is_zero()) return out;
    for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
    return out;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return arity_ == o.arity_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::divide_by_term(const ExponentVector& exps, const Cyclotomic& c) const {
    if (c.is_zero()) throw std::domain_error("divide_by_term: zero divisor");
    Cyclotomic inv = c.inverse();
    MultiPoly out(arity_);
    for (const auto& [e, coeff] : terms_) {
        ExponentVector q(arity_);
        for (unsigned j = 0; j < arity_; ++j) {
            if (e[j] < exps[j]) throw std::domain_error("divide_by_term: not divisible");
            q[j] = e[j] - exps[j];
        }
        out.terms_.emplace(std::move(q), coeff * inv);
    }
    return out;
}

Cyclotomic MultiPoly::evaluate(std::span<const Cyclotomic> coords) const {
    if (coords.size() != arity_) throw std::invalid_argument("evaluate: coordinate count mismatch");
    Cyclotomic acc;
    for (const auto& [e, c] : terms_) {
        Cyclotomic term = c;
        for (unsigned j = 0; j < arity_; ++j) {
            if (e[j] > 0) term = term * coords[j].pow(e[j]);
        }
        acc = acc + term;
    }
    return acc;
}

std::pair<ExponentVector, Cyclotomic> MultiPoly::leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw std::domain_error("leading_term: zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
        if (ord.less(best->first, it->first)) best = it;
    }
    return {best->first, best->second};
}

std::optional<unsigned> MultiPoly::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    unsigned d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d) return std::nullopt;
    return d;
}

MultiPoly MultiPoly::monic(const MonomialOrder& ord) const {
    if (terms_.empty()) return *this;
    return *this * leading_term(ord).second.inverse();
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        // Expand the cyclotomic coefficient over its power basis so each
        // printed term has a single product-form coefficient literal.
        const unsigned n = c.conductor();
        for (std::size_t j = 0; j < c.coeffs().size(); ++j) {
            const Rational& q = c.coeffs()[j];
            if (q == 0) continue;
            Rational abs = q < 0 ? Rational(-q) : q;
            if (first) {
                if (q < 0) out << "-";
                first = false;
            } else {
                out << (q < 0 ? " - " : " + ");
            }
            std::vector<std::string> factors;
            bool constant_monomial = total_degree(e) == 0;
            if (abs != 1 || (j == 0 && constant_monomial)) factors.push_back(rational_str(abs));
            if (j >= 1) {
                std::string z = "z" + std::to_string(n);
                if (j > 1) z += "^" + std::to_string(j);
                factors.push_back(z);
            }
            for (unsigned v = 0; v < e.size(); ++v) {
                if (e[v] == 0) continue;
                std::string m = "x" + std::to_string(v);
                if (e[v] > 1) m += "^" + std::to_string(e[v]);
                factors.push_back(m);
            }
            if (factors.empty()) factors.push_back("1");
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i) out << "*";
                out << factors[i];
            }
        }
    }
    return out.str();
}

}  // namespace hadamard
