#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hadamard/rational.hpp"

namespace hadamard {

unsigned euler_phi(unsigned n);

// Coefficients of the N-th cyclotomic polynomial, ascending degree.
// Computed by exact division of x^N - 1 by the product of Phi_d over
// proper divisors d of N; results are memoized.
std::vector<Integer> cyclotomic_polynomial(unsigned n);

// An element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1)
// modulo Phi_N.  Values are immutable; arithmetic embeds both operands into
// the lcm conductor and shrinks the result back to the smallest conductor
// that still contains it, so equal values always compare equal fieldwise.
class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}
    Cyclotomic(const Rational& r) : conductor_(1), coeffs_(1, r) {}
    Cyclotomic(long n) : conductor_(1), coeffs_(1, Rational(n)) {}

    // zeta_d^k, reduced.
    static Cyclotomic root_of_unity(unsigned d, long k);

    unsigned conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const { return conductor_ == 1; }
    const Rational& rational_value() const;

    // Re-express in Q(zeta_m); requires conductor() | m.
    Cyclotomic embedded(unsigned m) const;

    Cyclotomic operator-() const;
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator/(const Cyclotomic& o) const;
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    Cyclotomic inverse() const;
    Cyclotomic pow(long e) const;

    // Least k >= 1 with c^k = 1, if c is a root of unity.  Torsion units of
    // Q(zeta_N) are +/- zeta_N^j, so divisors of 2N bound the search.
    std::optional<unsigned> multiplicative_order() const;

    std::complex<double> to_complex() const;

    // Canonical literal form: sums of signed "q*z{N}^k" pieces.
    std::string str() const;

    // Total order used only for deterministic container layouts.
    bool lexicographic_less(const Cyclotomic& o) const;

private:
    Cyclotomic(unsigned conductor, std::vector<Rational> coeffs)
        : conductor_(conductor), coeffs_(std::move(coeffs)) {}

    // Reduce a raw power-of-zeta expansion mod Phi_N and shrink conductor.
    static Cyclotomic normalized(unsigned conductor, std::vector<Rational> raw);

    unsigned conductor_;
    std::vector<Rational> coeffs_;  // length euler_phi(conductor_)
};

inline Cyclotomic operator+(long a, const Cyclotomic& b) { return Cyclotomic(a) + b; }
inline Cyclotomic operator*(long a, const Cyclotomic& b) { return Cyclotomic(a) * b; }
inline Cyclotomic operator+(const Rational& a, const Cyclotomic& b) { return Cyclotomic(a) + b; }
inline Cyclotomic operator*(const Rational& a, const Cyclotomic& b) { return Cyclotomic(a) * b; }

}  // namespace hadamard
