#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "hadamard/binomial.hpp"
#include "hadamard/multipoly.hpp"

namespace hadamard {

// Floating-point shadow of a projective point, max-norm normalized.
struct NumericPoint {
    std::vector<std::complex<double>> coords;
};

struct ResidualReport {
    std::size_t sample_count = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool vacuous = false;  // zero samples requested
};

// Random points on the binomial hypersurface, all coordinates nonzero.
// Free coordinates are drawn uniformly from the annulus 0.5 <= |z| <= 2;
// the solved coordinate takes the principal e-th root times a uniformly
// chosen branch, so all sheets are sampled.  Deterministic per seed.
std::vector<NumericPoint> sample_on_binomial(const BinomialForm& c, std::size_t count,
                                             std::uint64_t seed);

// |E(p)| divided by the largest term magnitude at p.
double relative_residual(const MultiPoly& e, const NumericPoint& p);

// Samples P on C and Q on D, evaluates E at P*Q.
ResidualReport verify_product_claim(const BinomialForm& c, const BinomialForm& d,
                                    const MultiPoly& e, std::size_t samples, std::uint64_t seed,
                                    double tol);

// Samples r-1 points on C, stars them with a fresh point of C, evaluates E.
ResidualReport verify_power_claim(const BinomialForm& c, unsigned r, const MultiPoly& e,
                                  std::size_t samples, std::uint64_t seed, double tol);

}  // namespace hadamard
