#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hadamard/cyclotomic.hpp"

namespace hadamard {

// Exponent vector over x0..xn; fixed length within a working ring.
using ExponentVector = std::vector<unsigned>;

unsigned total_degree(const ExponentVector& e);

// True iff the supports are disjoint: min(a[j], b[j]) = 0 for every j.
bool coprime_supports(const ExponentVector& a, const ExponentVector& b);

struct MonomialOrder {
    enum class Kind { Lex, GradedLex, GRevLex, Block };

    Kind kind = Kind::GRevLex;
    // Variable priority: priority[i] is the i-th most significant variable.
    // Empty means the identity permutation x0 > x1 > ... > xn.
    std::vector<unsigned> priority;
    // For Block: mask of eliminated variables (ordered before the kept block,
    // grevlex within each block).
    std::vector<char> eliminated;

    static MonomialOrder lex() { return {Kind::Lex, {}, {}}; }
    static MonomialOrder graded_lex() { return {Kind::GradedLex, {}, {}}; }
    static MonomialOrder grevlex() { return {Kind::GRevLex, {}, {}}; }
    static MonomialOrder elimination(std::vector<char> eliminated_mask) {
        return {Kind::Block, {}, std::move(eliminated_mask)};
    }

    bool less(const ExponentVector& a, const ExponentVector& b) const;
    bool is_elimination_for(const std::vector<char>& eliminated_mask) const;
    bool operator==(const MonomialOrder& o) const = default;
};

// Sparse multivariate polynomial over Q(zeta) with a fixed arity.
// Terms are keyed in descending lex order, so iteration (and hence printing
// and reduced Groebner bases) is deterministic.
class MultiPoly {
public:
    using TermMap = std::map<ExponentVector, Cyclotomic, std::greater<ExponentVector>>;

    explicit MultiPoly(unsigned arity) : arity_(arity) {}

    static MultiPoly zero(unsigned arity) { return MultiPoly(arity); }
    static MultiPoly constant(unsigned arity, const Cyclotomic& c);
    static MultiPoly monomial(ExponentVector exps, const Cyclotomic& c);
    static MultiPoly variable(unsigned arity, unsigned index);

    unsigned arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const ExponentVector& exps, const Cyclotomic& c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Cyclotomic& c) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Exact division by a single term; every exponent must be divisible.
    MultiPoly divide_by_term(const ExponentVector& exps, const Cyclotomic& c) const;

    Cyclotomic evaluate(std::span<const Cyclotomic> coords) const;

    std::pair<ExponentVector, Cyclotomic> leading_term(const MonomialOrder& ord) const;
    std::optional<unsigned> homogeneous_degree() const;

    // Rescaled so the leading coefficient under ord is 1.
    MultiPoly monic(const MonomialOrder& ord) const;

    std::string str() const;

private:
    void check_arity(const MultiPoly& o) const;

    unsigned arity_;
    TermMap terms_;
};

}  // namespace hadamard
