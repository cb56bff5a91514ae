#pragma once

#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "hadamard/groebner.hpp"
#include "hadamard/multipoly.hpp"
#include "hadamard/projective.hpp"

namespace hadamard {

// Normalized binomial alpha1*X^I1 - alpha2*X^I2 with coprime exponent
// supports; canonical orientation puts I1 first under descending lex and
// scales alpha1 to 1.
struct BinomialForm {
    ExponentVector i1;
    ExponentVector i2;
    Cyclotomic alpha1;
    Cyclotomic alpha2;

    unsigned arity() const { return static_cast<unsigned>(i1.size()); }
    Cyclotomic ratio() const { return alpha2 / alpha1; }
    MultiPoly poly() const;
    IdealPresentation ideal() const;
    bool same_exponents(const BinomialForm& o) const { return i1 == o.i1 && i2 == o.i2; }
    bool operator==(const BinomialForm& o) const;
};

// A binomial hypersurface of type (t, epsilon): coefficient ratio equal to
// xi^epsilon for xi a primitive (t-1)-th root of unity, gcd(t-1,epsilon)=1.
struct BinomialType {
    unsigned t;
    unsigned epsilon;
    bool operator==(const BinomialType&) const = default;
};

struct CoordinateHyperplane {
    unsigned index;
    bool operator==(const CoordinateHyperplane&) const = default;
};

struct UnionComponent {
    std::variant<BinomialForm, CoordinateHyperplane> value;
    unsigned multiplicity = 1;
};

struct HypersurfaceUnion {
    std::vector<UnionComponent> components;
};

struct BinomialVariety {
    std::vector<BinomialForm> generators;
};

// Recognize a binomial hypersurface equation: exactly two terms with coprime
// exponent vectors, homogeneous of degree >= 1.  Returns absent otherwise;
// two-term input with shared support is reducible, not a binomial
// hypersurface.
std::optional<BinomialForm> classify_binomial(const MultiPoly& f);

// Closed-form Hadamard product: defined exactly when the exponent pairs
// coincide, in which case C*D = Z(a1*b1*X^I1 - a2*b2*X^I2).  Absent means
// the product is not a hypersurface.
std::optional<BinomialForm> binomial_product(const BinomialForm& c, const BinomialForm& d);

// Closed-form Hadamard power: coefficients raised to the r-th power.
BinomialForm binomial_power(const BinomialForm& c, unsigned r);

// Canonical (t, epsilon) classification of the coefficient ratio, when it is
// a root of unity.
std::optional<BinomialType> detect_type(const BinomialForm& c);

// Least t >= 2 with C^(*t) = C: one plus the multiplicative order of the
// coefficient ratio; absent when the ratio is not a root of unity.
std::optional<unsigned> min_idempotent_exponent(const BinomialForm& c);

bool is_idempotent(const BinomialForm& c, unsigned t);
bool is_idempotent(const BinomialVariety& v, unsigned t);
bool is_idempotent(const HypersurfaceUnion& u, unsigned t);

// Index set of H_{i1} * ... * H_{it} = Z(x_{i1}, ..., x_{it}), sorted and
// deduplicated, with its ideal presentation.
std::vector<unsigned> coordinate_product(const std::vector<CoordinateHyperplane>& hs);
IdealPresentation coordinate_subspace_ideal(const std::vector<unsigned>& indices, unsigned arity);

struct UnionPowerResult {
    HypersurfaceUnion power;
    // Products of distinct coordinate hyperplanes: lower-dimensional pieces
    // Z(x_i; i in S), reported rather than dropped.
    std::vector<std::vector<unsigned>> subspace_pieces;
    bool components_share_exponents = false;  // condition 1 (over the binomial part)
    bool products_close_up = false;           // condition 2
};

// Expands all compositions d_1 + ... + d_s = r (zero parts included) over
// the components, multiplying binomial coefficients and intersecting
// coordinate hyperplanes.  Deduplicates the resulting components.
UnionPowerResult union_power(const HypersurfaceUnion& u, unsigned r);

// T[j][k] = m with zeta^j * zeta^k = zeta^m, 1-based indices in 1..m where
// index t_minus_1 is the identity component.
std::vector<std::vector<unsigned>> multiplication_table(unsigned t_minus_1);

// True iff every generator is a pure monomial difference X^I1 - X^I2.
bool is_pure_difference_ideal(const BinomialVariety& v);

struct MinExponentReport {
    // 1 + lcm of the multiplicative orders of the generator ratios.
    std::optional<unsigned> order_based;
    // Value of the lcm(t_i / gcd(t_i, epsilon_i)) + 1 formula over the
    // canonical types; reported side by side for comparison.
    std::optional<unsigned> printed_formula;
    bool brute_force_confirmed = false;
};

// Minimal t with C^(*t) = C for a binomial variety; brute-force verified
// generator-wise when the orders are within desk scale.
MinExponentReport variety_min_exponent(const BinomialVariety& v);

// Exact point on the hypersurface with all sampled coordinates nonzero.
// Solves for a support variable of exponent 1 rationally when one exists,
// otherwise requires the coefficient ratio to be a root of unity and places
// the root in a cyclotomic coordinate.
ProjectivePoint exact_sample(const BinomialForm& c, std::mt19937_64& rng);

}  // namespace hadamard
