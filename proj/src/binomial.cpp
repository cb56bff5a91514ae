#include "hadamard/binomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hadamard {

namespace {

const Cyclotomic kOne{Rational(1)};

BinomialForm normalized(ExponentVector i1, ExponentVector i2, Cyclotomic a1, Cyclotomic a2) {
    if (i2 > i1) {
        // Reorient: a1*X^I1 - a2*X^I2 = -(a2*X^I2 - a1*X^I1).
        std::swap(i1, i2);
        std::swap(a1, a2);
    }
    Cyclotomic ratio = a2 / a1;
    return BinomialForm{std::move(i1), std::move(i2), kOne, std::move(ratio)};
}

unsigned lcm_u(unsigned a, unsigned b) { return std::lcm(a, b); }

}  // namespace

MultiPoly BinomialForm::poly() const {
    MultiPoly p(arity());
    p.add_term(i1, alpha1);
    p.add_term(i2, -alpha2);
    return p;
}

IdealPresentation BinomialForm::ideal() const {
    return IdealPresentation({poly()}, MonomialOrder::grevlex());
}

bool BinomialForm::operator==(const BinomialForm& o) const {
    return i1 == o.i1 && i2 == o.i2 && alpha2 * o.alpha1 == o.alpha2 * alpha1;
}

std::optional<BinomialForm> classify_binomial(const MultiPoly& f) {
    auto deg = f.homogeneous_degree();
    if (!deg || *deg == 0) return std::nullopt;
    if (f.term_count() != 2) return std::nullopt;
    auto it = f.terms().begin();
    const auto& [e1, c1] = *it;
    const auto& [e2, c2] = *std::next(it);
    if (!coprime_supports(e1, e2)) return std::nullopt;  // reducible
    // Terms are stored in descending lex order, so e1 > e2 already.
    return normalized(e1, e2, c1, -c2);
}

std::optional<BinomialForm> binomial_product(const BinomialForm& c, const BinomialForm& d) {
    if (!c.same_exponents(d)) return std::nullopt;  // product is not a hypersurface
    return normalized(c.i1, c.i2, c.alpha1 * d.alpha1, c.alpha2 * d.alpha2);
}

BinomialForm binomial_power(const BinomialForm& c, unsigned r) {
    if (r == 0) throw std::domain_error("binomial_power: exponent must be >= 1");
    return normalized(c.i1, c.i2, c.alpha1.pow(r), c.alpha2.pow(r));
}

std::optional<BinomialType> detect_type(const BinomialForm& c) {
    Cyclotomic ratio = c.ratio();
    auto order = ratio.multiplicative_order();
    if (!order) return std::nullopt;
    unsigned d = *order;
    if (d == 1) return BinomialType{2, 1};
    for (unsigned k = 1; k < d; ++k) {
        if (std::gcd(k, d) != 1) continue;
        if (Cyclotomic::root_of_unity(d, k) == ratio) return BinomialType{d + 1, k};
    }
    throw std::logic_error("detect_type: order-d element matched no primitive d-th root");
}

std::optional<unsigned> min_idempotent_exponent(const BinomialForm& c) {
    auto order = c.ratio().multiplicative_order();
    if (!order) return std::nullopt;
    return *order + 1;
}

bool is_idempotent(const BinomialForm& c, unsigned t) {
    if (t < 2) throw std::domain_error("is_idempotent: exponent must be >= 2");
    return ideal_equal(binomial_power(c, t).ideal(), c.ideal());
}

bool is_idempotent(const BinomialVariety& v, unsigned t) {
    if (t < 2) throw std::domain_error("is_idempotent: exponent must be >= 2");
    return std::all_of(v.generators.begin(), v.generators.end(),
                       [&](const BinomialForm& g) { return is_idempotent(g, t); });
}

std::vector<unsigned> coordinate_product(const std::vector<CoordinateHyperplane>& hs) {
    if (hs.empty()) throw std::invalid_argument("coordinate_product: empty sequence");
    std::set<unsigned> idx;
    for (const CoordinateHyperplane& h : hs) idx.insert(h.index);
    return {idx.begin(), idx.end()};
}

IdealPresentation coordinate_subspace_ideal(const std::vector<unsigned>& indices, unsigned arity) {
    std::vector<MultiPoly> gens;
    for (unsigned i : indices) gens.push_back(MultiPoly::variable(arity, i));
    return IdealPresentation(std::move(gens), MonomialOrder::grevlex());
}

namespace {

struct UnionParts {
    std::vector<BinomialForm> binomials;
    std::vector<unsigned> hyperplanes;
};

UnionParts split(const HypersurfaceUnion& u) {
    UnionParts parts;
    for (const UnionComponent& c : u.components) {
        if (const auto* b = std::get_if<BinomialForm>(&c.value))
            parts.binomials.push_back(*b);
        else
            parts.hyperplanes.push_back(std::get<CoordinateHyperplane>(c.value).index);
    }
    return parts;
}

void push_unique(std::vector<BinomialForm>& v, const BinomialForm& b) {
    if (std::find(v.begin(), v.end(), b) == v.end()) v.push_back(b);
}

// Enumerate compositions d_0 + ... + d_{s-1} = r with d_i >= 0.
void for_each_composition(unsigned s, unsigned r,
                          const std::function<void(const std::vector<unsigned>&)>& fn) {
    std::vector<unsigned> d(s, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned left) {
        if (pos + 1 == s) {
            d[pos] = left;
            fn(d);
            return;
        }
        for (unsigned v = 0; v <= left; ++v) {
            d[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    if (s > 0) rec(0, r);
}

}  // namespace

UnionPowerResult union_power(const HypersurfaceUnion& u, unsigned r) {
    if (r == 0) throw std::domain_error("union_power: exponent must be >= 1");
    UnionParts parts = split(u);
    if (parts.binomials.empty() && parts.hyperplanes.empty())
        throw std::invalid_argument("union_power: empty union");

    for (std::size_t i = 1; i < parts.binomials.size(); ++i) {
        if (!parts.binomials[i].same_exponents(parts.binomials[0]))
            throw std::domain_error(
                "union_power: components have mixed exponent pairs; the power is not a "
                "hypersurface union");
    }

    UnionPowerResult out;
    const unsigned s = static_cast<unsigned>(parts.binomials.size() + parts.hyperplanes.size());
    std::set<std::vector<unsigned>> pieces;
    std::set<unsigned> plane_components;

    std::vector<BinomialForm> bin_out;
    for_each_composition(s, r, [&](const std::vector<unsigned>& d) {
        std::set<unsigned> planes;
        bool has_binomial = false;
        Cyclotomic coeff = kOne;
        for (std::size_t i = 0; i < parts.binomials.size(); ++i) {
            if (d[i] == 0) continue;
            has_binomial = true;
            coeff = coeff * parts.binomials[i].ratio().pow(d[i]);
        }
        for (std::size_t i = 0; i < parts.hyperplanes.size(); ++i) {
            if (d[parts.binomials.size() + i] > 0) planes.insert(parts.hyperplanes[i]);
        }
        if (planes.size() >= 2) {
            // Product of distinct coordinate hyperplanes: a proper subspace.
            pieces.insert(std::vector<unsigned>(planes.begin(), planes.end()));
        } else if (planes.size() == 1) {
            // H_i absorbs every other factor.
            plane_components.insert(*planes.begin());
        } else if (has_binomial) {
            push_unique(bin_out, BinomialForm{parts.binomials[0].i1, parts.binomials[0].i2, kOne,
                                              coeff});
        }
    });
    for (const BinomialForm& b : bin_out)
        out.power.components.push_back(UnionComponent{b, 1});
    for (unsigned i : plane_components)
        out.power.components.push_back(UnionComponent{CoordinateHyperplane{i}, 1});
    out.subspace_pieces.assign(pieces.begin(), pieces.end());

    // Conditions of the reducible-power criterion, over the binomial part.
    out.components_share_exponents = true;
    bool all_roots = true;
    for (const BinomialForm& b : parts.binomials)
        all_roots &= b.ratio().multiplicative_order().has_value();
    out.components_share_exponents = all_roots && !parts.binomials.empty();
    out.products_close_up =
        all_roots && std::all_of(bin_out.begin(), bin_out.end(), [&](const BinomialForm& b) {
            return std::any_of(parts.binomials.begin(), parts.binomials.end(),
                               [&](const BinomialForm& c) { return c == b; });
        });
    return out;
}

bool is_idempotent(const HypersurfaceUnion& u, unsigned t) {
    if (t < 2) throw std::domain_error("is_idempotent: exponent must be >= 2");
    UnionParts in = split(u);
    UnionPowerResult pw = union_power(u, t);
    UnionParts outp = split(pw.power);

    auto set_equal = [](std::vector<BinomialForm> a, std::vector<BinomialForm> b) {
        if (a.size() != b.size()) return false;
        for (const BinomialForm& x : a) {
            if (std::find(b.begin(), b.end(), x) == b.end()) return false;
        }
        return true;
    };
    std::set<unsigned> in_planes(in.hyperplanes.begin(), in.hyperplanes.end());
    std::set<unsigned> out_planes(outp.hyperplanes.begin(), outp.hyperplanes.end());
    if (in_planes != out_planes) return false;

    std::vector<BinomialForm> in_b = in.binomials;
    std::sort(in_b.begin(), in_b.end(),
              [](const BinomialForm& a, const BinomialForm& b) {
                  return a.alpha2.lexicographic_less(b.alpha2);
              });
    in_b.erase(std::unique(in_b.begin(), in_b.end()), in_b.end());
    if (!set_equal(in_b, outp.binomials)) return false;

    // Subspace pieces must be absorbed by some component of the input:
    // Z(x_i; i in S) lies in H_i for i in S, and in a binomial hypersurface
    // when S meets the supports of both exponent vectors.
    for (const std::vector<unsigned>& piece : pw.subspace_pieces) {
        bool absorbed = std::any_of(piece.begin(), piece.end(),
                                    [&](unsigned i) { return in_planes.count(i) > 0; });
        for (const BinomialForm& b : in.binomials) {
            if (absorbed) break;
            bool hits1 = false, hits2 = false;
            for (unsigned i : piece) {
                hits1 |= b.i1[i] > 0;
                hits2 |= b.i2[i] > 0;
            }
            absorbed = hits1 && hits2;
        }
        if (!absorbed) return false;
    }
    return true;
}

std::vector<std::vector<unsigned>> multiplication_table(unsigned t_minus_1) {
    if (t_minus_1 == 0) throw std::domain_error("multiplication_table: order must be >= 1");
    std::vector<std::vector<unsigned>> table(t_minus_1, std::vector<unsigned>(t_minus_1));
    for (unsigned j = 1; j <= t_minus_1; ++j)
        for (unsigned k = 1; k <= t_minus_1; ++k)
            table[j - 1][k - 1] = (j + k - 1) % t_minus_1 + 1;
    return table;
}

bool is_pure_difference_ideal(const BinomialVariety& v) {
    return std::all_of(v.generators.begin(), v.generators.end(),
                       [](const BinomialForm& g) { return g.ratio() == kOne; });
}

MinExponentReport variety_min_exponent(const BinomialVariety& v) {
    MinExponentReport report;
    if (v.generators.empty()) throw std::invalid_argument("variety_min_exponent: no generators");
    unsigned order_lcm = 1;
    unsigned printed_lcm = 1;
    for (const BinomialForm& g : v.generators) {
        auto order = g.ratio().multiplicative_order();
        if (!order) return report;  // no idempotent power exists
        order_lcm = lcm_u(order_lcm, *order);
        BinomialType type = *detect_type(g);
        printed_lcm = lcm_u(printed_lcm, type.t / std::gcd(type.t, type.epsilon));
    }
    report.order_based = order_lcm + 1;
    report.printed_formula = printed_lcm + 1;

    if (order_lcm <= 64) {
        bool ok = is_idempotent(v, order_lcm + 1);
        for (unsigned r = 2; ok && r <= order_lcm; ++r)
            if (is_idempotent(v, r)) ok = false;
        report.brute_force_confirmed = ok;
    }
    return report;
}

ProjectivePoint exact_sample(const BinomialForm& c, std::mt19937_64& rng) {
    const unsigned n = c.arity();
    auto nonzero_rational = [&rng]() {
        std::uniform_int_distribution<int> num(-5, 5);
        std::uniform_int_distribution<int> den(1, 3);
        int p = 0;
        while (p == 0) p = num(rng);
        return make_rational(p, den(rng));
    };

    // Prefer a support variable with exponent 1: solvable rationally.
    int solve_var = -1;
    bool in_i1 = true;
    for (unsigned j = 0; j < n && solve_var < 0; ++j) {
        if (c.i1[j] == 1) solve_var = static_cast<int>(j);
    }
    if (solve_var < 0) {
        for (unsigned j = 0; j < n && solve_var < 0; ++j) {
            if (c.i2[j] == 1) {
                solve_var = static_cast<int>(j);
                in_i1 = false;
            }
        }
    }

    if (solve_var >= 0) {
        std::vector<Cyclotomic> coords(n, Cyclotomic(Rational(1)));
        for (unsigned j = 0; j < n; ++j)
            if (static_cast<int>(j) != solve_var) coords[j] = Cyclotomic(nonzero_rational());
        coords[static_cast<unsigned>(solve_var)] = Cyclotomic(Rational(1));
        ProjectivePoint partial(coords);
        Cyclotomic lhs = point_power(partial, c.i1) * c.alpha1;
        Cyclotomic rhs = point_power(partial, c.i2) * c.alpha2;
        // alpha1 * X^I1 = alpha2 * X^I2 with x_k linear on one side.
        coords[static_cast<unsigned>(solve_var)] = in_i1 ? rhs / lhs : lhs / rhs;
        return ProjectivePoint(std::move(coords));
    }

    // Every support exponent is >= 2: set the other coordinates to 1 and
    // solve x_k^e = ratio with a cyclotomic root, when the ratio is a root
    // of unity.
    unsigned k = 0;
    while (k < n && c.i1[k] == 0) ++k;
    if (k == n) throw std::domain_error("exact_sample: empty support");
    unsigned e = c.i1[k];
    Cyclotomic ratio = c.ratio();
    auto order = ratio.multiplicative_order();
    if (!order)
        throw std::domain_error(
            "exact_sample: no exponent-1 variable and the coefficient ratio is not a root of "
            "unity");
    BinomialType type = *detect_type(c);
    unsigned d = type.t - 1;
    std::vector<Cyclotomic> coords(n, Cyclotomic(Rational(1)));
    coords[k] = Cyclotomic::root_of_unity(e * d, static_cast<long>(type.epsilon));
    return ProjectivePoint(std::move(coords));
}

}  // namespace hadamard
