#include "hadamard/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace hadamard {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::complex<double> draw_annulus(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> radius(0.5, 2.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    return std::polar(radius(rng), angle(rng));
}

void max_normalize(NumericPoint& p) {
    double m = 0.0;
    for (const auto& z : p.coords) m = std::max(m, std::abs(z));
    if (m > 0.0)
        for (auto& z : p.coords) z /= m;
}

std::complex<double> eval_monomial(const ExponentVector& e, const NumericPoint& p) {
    std::complex<double> acc(1.0, 0.0);
    for (std::size_t j = 0; j < e.size(); ++j)
        for (unsigned k = 0; k < e[j]; ++k) acc *= p.coords[j];
    return acc;
}

NumericPoint star_numeric(const NumericPoint& a, const NumericPoint& b) {
    NumericPoint out;
    out.coords.resize(a.coords.size());
    for (std::size_t i = 0; i < a.coords.size(); ++i) out.coords[i] = a.coords[i] * b.coords[i];
    max_normalize(out);
    return out;
}

}  // namespace

std::vector<NumericPoint> sample_on_binomial(const BinomialForm& c, std::size_t count,
                                             std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const unsigned n = c.arity();
    unsigned k = 0;
    while (k < n && c.i1[k] == 0) ++k;
    if (k == n) throw std::domain_error("sample_on_binomial: empty support");
    const unsigned e = c.i1[k];
    const std::complex<double> ratio = c.ratio().to_complex();
    std::uniform_int_distribution<unsigned> branch(0, e - 1);

    std::vector<NumericPoint> out;
    out.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        NumericPoint p;
        p.coords.assign(n, std::complex<double>(1.0, 0.0));
        for (unsigned j = 0; j < n; ++j)
            if (j != k) p.coords[j] = draw_annulus(rng);
        p.coords[k] = std::complex<double>(1.0, 0.0);
        // alpha1 * X^I1 = alpha2 * X^I2  =>  x_k^e = ratio * X^I2 / X^(I1 - e*e_k)
        std::complex<double> rest1 = eval_monomial(c.i1, p);  // with x_k = 1
        std::complex<double> rhs = ratio * eval_monomial(c.i2, p) / rest1;
        unsigned b = branch(rng);
        p.coords[k] = std::polar(std::pow(std::abs(rhs), 1.0 / e),
                                 (std::arg(rhs) + 2.0 * kPi * b) / e);
        max_normalize(p);
        out.push_back(std::move(p));
    }
    return out;
}

double relative_residual(const MultiPoly& e, const NumericPoint& p) {
    std::complex<double> acc(0.0, 0.0);
    double max_term = 0.0;
    for (const auto& [exps, coeff] : e.terms()) {
        std::complex<double> term = coeff.to_complex() * eval_monomial(exps, p);
        acc += term;
        max_term = std::max(max_term, std::abs(term));
    }
    if (max_term == 0.0) return 0.0;
    return std::abs(acc) / max_term;
}

ResidualReport verify_product_claim(const BinomialForm& c, const BinomialForm& d,
                                    const MultiPoly& e, std::size_t samples, std::uint64_t seed,
                                    double tol) {
    if (tol <= 0.0) throw std::domain_error("verify_product_claim: tolerance must be positive");
    ResidualReport report;
    report.tolerance = tol;
    if (samples == 0) {
        report.pass = true;
        report.vacuous = true;
        return report;
    }
    std::vector<NumericPoint> ps = sample_on_binomial(c, samples, seed);
    std::vector<NumericPoint> qs = sample_on_binomial(d, samples, seed ^ 0x9e3779b97f4a7c15ull);
    for (std::size_t i = 0; i < samples; ++i) {
        NumericPoint pq = star_numeric(ps[i], qs[i]);
        report.max_residual = std::max(report.max_residual, relative_residual(e, pq));
        ++report.sample_count;
    }
    report.pass = report.max_residual <= tol;
    return report;
}

ResidualReport verify_power_claim(const BinomialForm& c, unsigned r, const MultiPoly& e,
                                  std::size_t samples, std::uint64_t seed, double tol) {
    if (r < 2) throw std::domain_error("verify_power_claim: power must be >= 2");
    if (tol <= 0.0) throw std::domain_error("verify_power_claim: tolerance must be positive");
    ResidualReport report;
    report.tolerance = tol;
    if (samples == 0) {
        report.pass = true;
        report.vacuous = true;
        return report;
    }
    for (std::size_t i = 0; i < samples; ++i) {
        NumericPoint acc;
        for (unsigned j = 0; j < r; ++j) {
            std::uint64_t s = seed + 0x100000001b3ull * (i * r + j + 1);
            NumericPoint p = sample_on_binomial(c, 1, s).front();
            acc = (j == 0) ? p : star_numeric(acc, p);
        }
        report.max_residual = std::max(report.max_residual, relative_residual(e, acc));
        ++report.sample_count;
    }
    report.pass = report.max_residual <= tol;
    return report;
}

}  // namespace hadamard
