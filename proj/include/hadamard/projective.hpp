#pragma once

#include <optional>
#include <vector>

#include "hadamard/groebner.hpp"
#include "hadamard/multipoly.hpp"

namespace hadamard {

// Point of P^n with exact coordinates, defined up to a nonzero scalar.
class ProjectivePoint {
public:
    explicit ProjectivePoint(std::vector<Cyclotomic> coords);

    unsigned dimension_plus_one() const { return static_cast<unsigned>(coords_.size()); }
    const std::vector<Cyclotomic>& coords() const { return coords_; }
    const Cyclotomic& operator[](std::size_t i) const { return coords_[i]; }

    std::string str() const;

private:
    std::vector<Cyclotomic> coords_;
};

// Equality up to a nonzero scalar, tested via 2x2 cross products.
bool projectively_equal(const ProjectivePoint& p, const ProjectivePoint& q);

// Coordinatewise product; absent when every product vanishes.
std::optional<ProjectivePoint> star_point(const ProjectivePoint& p, const ProjectivePoint& q);

// Smallest i with p in Delta_i, i.e. (#nonzero coordinates) - 1.
unsigned delta_level(const ProjectivePoint& p);

// Coordinatewise inverse 1/P; requires every coordinate nonzero.
ProjectivePoint invert_point(const ProjectivePoint& p);

// Monomial evaluation P^I.
Cyclotomic point_power(const ProjectivePoint& p, const ExponentVector& exps);

// f^(*P): divides each coefficient a_I by P^I.  f must be homogeneous and
// P^I nonzero on every support monomial (zero coordinates of P are allowed
// off the support).
MultiPoly hadamard_transform(const MultiPoly& f, const ProjectivePoint& p);

// Generator-wise transform of I(V) into I(P*V), monic-normalized.  When the
// input carries a cached reduced basis its transform is installed as the
// output's basis: the transform preserves Groebner bases.
IdealPresentation transform_ideal(const IdealPresentation& ideal, const ProjectivePoint& p);

}  // namespace hadamard
