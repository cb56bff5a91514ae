#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hadamard/multipoly.hpp"

namespace hadamard {

// Generators plus the monomial order they are read under.  The reduced
// Groebner basis is computed lazily and cached; it is the canonical form
// used for all ideal comparisons.
class IdealPresentation {
public:
    IdealPresentation(std::vector<MultiPoly> generators, MonomialOrder order);

    unsigned arity() const { return arity_; }
    const std::vector<MultiPoly>& generators() const { return generators_; }
    const MonomialOrder& order() const { return order_; }

    // Unique reduced basis: monic, auto-reduced, interreduced.
    const std::vector<MultiPoly>& reduced_basis() const;
    bool has_cached_basis() const { return reduced_basis_.has_value(); }

    // Marks the generators as already being the reduced basis (used by the
    // Hadamard ideal transform, which preserves Groebner bases).
    void set_reduced_basis(std::vector<MultiPoly> basis) const;

private:
    unsigned arity_;
    std::vector<MultiPoly> generators_;
    MonomialOrder order_;
    mutable std::optional<std::vector<MultiPoly>> reduced_basis_;
};

// Remainder of multivariate division of f by G: no term of the result is
// divisible by any leading term of G, and f - result lies in <G>.
MultiPoly normal_form(const MultiPoly& f, std::span<const MultiPoly> basis,
                      const MonomialOrder& ord);

// Buchberger with the normal selection strategy and the coprime-lcm and
// chain pruning criteria, followed by interreduction to the unique reduced
// monic basis.
std::vector<MultiPoly> buchberger(std::span<const MultiPoly> generators,
                                  const MonomialOrder& ord);

// True iff every S-polynomial of G reduces to zero against G.
bool is_groebner_basis(std::span<const MultiPoly> basis, const MonomialOrder& ord);

bool ideal_equal(const IdealPresentation& a, const IdealPresentation& b);

// Intersection of the ideal with the subring in the kept variables.  The
// presentation's order must be an elimination order for the discarded block.
IdealPresentation eliminate(const IdealPresentation& ideal, const std::vector<char>& keep);

// Elimination-based Hadamard product of varieties: the desk-scale oracle.
// Builds I(V) in y, I(W) in z, adds x_i - y_i*z_i, eliminates y and z.
// Guarded to arity <= 4 and generator degrees <= 4.
IdealPresentation star_varieties_elim(const IdealPresentation& v, const IdealPresentation& w);

}  // namespace hadamard
