#include "hadamard/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hadamard {

namespace {

// Dense univariate polynomials over Q, ascending degree, no trailing zeros.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

// Remainder of a modulo monic-leading b.
QPoly qp_rem(QPoly a, const QPoly& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const Rational& lead = b.back();
    while (a.size() > db) {
        Rational q = a.back() / lead;
        std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

QPoly qp_divexact(QPoly a, const QPoly& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const Rational& lead = b.back();
    QPoly quot(a.size() > db ? a.size() - db : 0, Rational(0));
    while (a.size() > db) {
        Rational q = a.back() / lead;
        std::size_t shift = a.size() - 1 - db;
        quot[shift] = q;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        trim(a);
    }
    if (!a.empty()) throw std::logic_error("qp_divexact: division not exact");
    return quot;
}

std::vector<unsigned> divisors_of(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<unsigned> prime_factors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

const QPoly& cyclotomic_qpoly(unsigned n) {
    static std::map<unsigned, QPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::function<const QPoly&(unsigned)> get = [&](unsigned m) -> const QPoly& {
        auto found = cache.find(m);
        if (found != cache.end()) return found->second;
        QPoly xm1(m + 1, Rational(0));
        xm1[0] = -1;
        xm1[m] = 1;
        QPoly prod{Rational(1)};
        for (unsigned d : divisors_of(m))
            if (d != m) prod = qp_mul(prod, get(d));
        return cache.emplace(m, qp_divexact(xm1, prod)).first->second;
    };
    return get(n);
}

// Solve sum_j c_j * basis_j = target by Gaussian elimination over Q.
std::optional<std::vector<Rational>> solve_linear(
    const std::vector<std::vector<Rational>>& basis, std::vector<Rational> target) {
    const std::size_t rows = target.size();
    const std::size_t cols = basis.size();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols, Rational(0)));
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows && i < basis[j].size(); ++i) a[i][j] = basis[j][i];

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[row]);
        std::swap(target[piv], target[row]);
        Rational inv = 1 / a[row][col];
        for (std::size_t j = col; j < cols; ++j) a[row][j] *= inv;
        target[row] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
            target[i] -= f * target[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < rows; ++i)
        if (target[i] != 0) return std::nullopt;
    std::vector<Rational> sol(cols, Rational(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) sol[pivot_col[i]] = target[i];
    return sol;
}

}  // namespace

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p : prime_factors(n)) result -= result / p;
    return result;
}

std::vector<Integer> cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw std::domain_error("cyclotomic_polynomial: n must be positive");
    const QPoly& p = cyclotomic_qpoly(n);
    std::vector<Integer> out;
    out.reserve(p.size());
    for (const Rational& c : p) out.push_back(c.get_num());
    return out;
}

Cyclotomic Cyclotomic::normalized(unsigned conductor, std::vector<Rational> raw) {
    QPoly rep = qp_rem(std::move(raw), cyclotomic_qpoly(conductor));
    rep.resize(euler_phi(conductor), Rational(0));

    // Shrink to the smallest divisor conductor whose power basis spans the value.
    bool shrunk = true;
    while (shrunk && conductor > 1) {
        shrunk = false;
        for (unsigned p : prime_factors(conductor)) {
            unsigned m = conductor / p;
            unsigned phi_m = euler_phi(m);
            std::vector<std::vector<Rational>> basis(phi_m);
            for (unsigned j = 0; j < phi_m; ++j) {
                QPoly power(static_cast<std::size_t>(j) * (conductor / m) + 1, Rational(0));
                power.back() = 1;
                basis[j] = qp_rem(std::move(power), cyclotomic_qpoly(conductor));
                basis[j].resize(euler_phi(conductor), Rational(0));
            }
            if (auto sol = solve_linear(basis, rep)) {
                conductor = m;
                rep = std::move(*sol);
                shrunk = true;
                break;
            }
        }
    }
    return Cyclotomic(conductor, std::move(rep));
}

Cyclotomic Cyclotomic::root_of_unity(unsigned d, long k) {
    if (d == 0) throw std::domain_error("root_of_unity: order must be positive");
    long r = k % static_cast<long>(d);
    if (r < 0) r += d;
    std::vector<Rational> raw(static_cast<std::size_t>(r) + 1, Rational(0));
    raw.back() = 1;
    return normalized(d, std::move(raw));
}

bool Cyclotomic::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

const Rational& Cyclotomic::rational_value() const {
    if (conductor_ != 1) throw std::domain_error("rational_value: element is not rational");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::embedded(unsigned m) const {
    if (m % conductor_ != 0) throw std::domain_error("embedded: conductor must divide target");
    unsigned step = m / conductor_;
    std::vector<Rational> raw((coeffs_.size() - 1) * step + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) raw[i * step] = coeffs_[i];
    QPoly rep = qp_rem(std::move(raw), cyclotomic_qpoly(m));
    rep.resize(euler_phi(m), Rational(0));
    return Cyclotomic(m, std::move(rep));
}

Cyclotomic Cyclotomic::operator-() const {
    std::vector<Rational> c = coeffs_;
    for (Rational& x : c) x = -x;
    return Cyclotomic(conductor_, std::move(c));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    unsigned m = std::lcm(conductor_, o.conductor_);
    Cyclotomic a = embedded(m), b = o.embedded(m);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return normalized(m, std::move(a.coeffs_));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    unsigned m = std::lcm(conductor_, o.conductor_);
    Cyclotomic a = embedded(m), b = o.embedded(m);
    QPoly pa = a.coeffs_, pb = b.coeffs_;
    trim(pa);
    trim(pb);
    return normalized(m, qp_mul(pa, pb));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("inverse: division by zero");
    // Extended Euclid: u*rep + v*Phi_N = 1 over Q[x].
    QPoly r0 = cyclotomic_qpoly(conductor_);
    QPoly r1 = coeffs_;
    trim(r1);
    QPoly u0{}, u1{Rational(1)};
    while (!r1.empty()) {
        // r0 = q*r1 + r
        QPoly r = r0;
        QPoly q(r.size() > r1.size() - 1 ? r.size() - r1.size() + 1 : 0, Rational(0));
        const std::size_t d1 = r1.size() - 1;
        const Rational& lead = r1.back();
        while (r.size() > d1) {
            Rational c = r.back() / lead;
            std::size_t shift = r.size() - 1 - d1;
            q[shift] = c;
            for (std::size_t i = 0; i < r1.size(); ++i) r[shift + i] -= c * r1[i];
            trim(r);
        }
        QPoly qu1 = qp_mul(q, u1);
        QPoly u = u0;
        u.resize(std::max(u.size(), qu1.size()), Rational(0));
        for (std::size_t i = 0; i < qu1.size(); ++i) u[i] -= qu1[i];
        trim(u);
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u);
    }
    // r0 is the (constant) gcd; rep is invertible mod the irreducible Phi_N.
    if (r0.size() != 1) throw std::logic_error("inverse: gcd with Phi_N not constant");
    Rational scale = 1 / r0[0];
    for (Rational& c : u0) c *= scale;
    return normalized(conductor_, std::move(u0));
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    // Both sides carry their minimal conductor, so equal values match directly.
    return conductor_ == o.conductor_ && coeffs_ == o.coeffs_;
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic base = *this;
    Cyclotomic acc(Rational(1));
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

std::optional<unsigned> Cyclotomic::multiplicative_order() const {
    if (is_zero()) throw std::domain_error("multiplicative_order: zero has no order");
    const Cyclotomic one(Rational(1));
    if (is_rational()) {
        if (coeffs_[0] == 1) return 1;
        if (coeffs_[0] == -1) return 2;
        return std::nullopt;
    }
    for (unsigned k : divisors_of(2 * conductor_)) {
        if (pow(static_cast<long>(k)) == one) return k;
    }
    return std::nullopt;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    const double theta = 2.0 * std::acos(-1.0) / static_cast<double>(conductor_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        double c = coeffs_[j].get_d();
        if (c == 0.0) continue;
        acc += c * std::polar(1.0, theta * static_cast<double>(j));
    }
    return acc;
}

std::string Cyclotomic::str() const {
    if (is_rational()) return rational_str(coeffs_[0]);
    std::ostringstream out;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        const Rational& c = coeffs_[j];
        if (c == 0) continue;
        Rational abs = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? "-" : "+");
        }
        if (j == 0) {
            out << rational_str(abs);
        } else {
            if (abs != 1) out << rational_str(abs) << "*";
            out << "z" << conductor_;
            if (j > 1) out << "^" << j;
        }
    }
    if (first) out << "0";
    return out.str();
}

bool Cyclotomic::lexicographic_less(const Cyclotomic& o) const {
    if (conductor_ != o.conductor_) return conductor_ < o.conductor_;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        int c = cmp(coeffs_[i], o.coeffs_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

}  // namespace hadamard
