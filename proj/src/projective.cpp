#include "hadamard/projective.hpp"

#include <sstream>

namespace hadamard {

ProjectivePoint::ProjectivePoint(std::vector<Cyclotomic> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("ProjectivePoint: empty coordinate vector");
    bool any = false;
    for (const Cyclotomic& c : coords_) any |= !c.is_zero();
    if (!any) throw std::invalid_argument("ProjectivePoint: all coordinates zero");
}

std::string ProjectivePoint::str() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out << ":";
        out << coords_[i].str();
    }
    out << "]";
    return out.str();
}

bool projectively_equal(const ProjectivePoint& p, const ProjectivePoint& q) {
    if (p.dimension_plus_one() != q.dimension_plus_one())
        throw std::invalid_argument("projectively_equal: ambient spaces differ");
    const auto& a = p.coords();
    const auto& b = q.coords();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
    return true;
}

std::optional<ProjectivePoint> star_point(const ProjectivePoint& p, const ProjectivePoint& q) {
    if (p.dimension_plus_one() != q.dimension_plus_one())
        throw std::invalid_argument("star_point: ambient spaces differ");
    std::vector<Cyclotomic> prod;
    prod.reserve(p.dimension_plus_one());
    bool any = false;
    for (std::size_t i = 0; i < p.coords().size(); ++i) {
        prod.push_back(p[i] * q[i]);
        any |= !prod.back().is_zero();
    }
    if (!any) return std::nullopt;
    return ProjectivePoint(std::move(prod));
}

unsigned delta_level(const ProjectivePoint& p) {
    unsigned nonzero = 0;
    for (const Cyclotomic& c : p.coords())
        if (!c.is_zero()) ++nonzero;
    return nonzero - 1;
}

ProjectivePoint invert_point(const ProjectivePoint& p) {
    std::vector<Cyclotomic> inv;
    inv.reserve(p.dimension_plus_one());
    for (std::size_t i = 0; i < p.coords().size(); ++i) {
        if (p[i].is_zero())
            throw std::domain_error("invert_point: coordinate x" + std::to_string(i) +
                                    " is zero (point lies in Delta_{n-1})");
        inv.push_back(p[i].inverse());
    }
    return ProjectivePoint(std::move(inv));
}

Cyclotomic point_power(const ProjectivePoint& p, const ExponentVector& exps) {
    if (exps.size() != p.dimension_plus_one())
        throw std::invalid_argument("point_power: exponent length mismatch");
    Cyclotomic acc{Rational(1)};
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > 0) acc = acc * p[i].pow(exps[i]);
    return acc;
}

MultiPoly hadamard_transform(const MultiPoly& f, const ProjectivePoint& p) {
    if (f.arity() != p.dimension_plus_one())
        throw std::invalid_argument("hadamard_transform: arity mismatch");
    if (!f.homogeneous_degree())
        throw std::domain_error("hadamard_transform: polynomial is not homogeneous");
    MultiPoly out(f.arity());
    for (const auto& [e, c] : f.terms()) {
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] > 0 && p[j].is_zero())
                throw std::domain_error("hadamard_transform: point vanishes at x" +
                                        std::to_string(j) + " which appears in the support");
        }
        out.add_term(e, c / point_power(p, e));
    }
    return out;
}

IdealPresentation transform_ideal(const IdealPresentation& ideal, const ProjectivePoint& p) {
    std::vector<MultiPoly> gens;
    gens.reserve(ideal.generators().size());
    for (const MultiPoly& g : ideal.generators())
        gens.push_back(hadamard_transform(g, p).monic(ideal.order()));
    IdealPresentation out(std::move(gens), ideal.order());
    if (ideal.has_cached_basis()) {
        std::vector<MultiPoly> basis;
        for (const MultiPoly& g : ideal.reduced_basis())
            basis.push_back(hadamard_transform(g, p).monic(ideal.order()));
        out.set_reduced_basis(std::move(basis));
    }
    return out;
}

}  // namespace hadamard
