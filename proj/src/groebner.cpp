#include "hadamard/groebner.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace hadamard {

namespace {

bool divides(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] > b[j]) return false;
    return true;
}

ExponentVector exp_lcm(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector out(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) out[j] = std::max(a[j], b[j]);
    return out;
}

ExponentVector exp_sub(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector out(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[j] - b[j];
    return out;
}

MultiPoly term_times(const MultiPoly& f, const ExponentVector& shift, const Cyclotomic& c) {
    MultiPoly out(f.arity());
    for (const auto& [e, coeff] : f.terms()) {
        ExponentVector m(e.size());
        for (std::size_t j = 0; j < e.size(); ++j) m[j] = e[j] + shift[j];
        out.add_term(m, coeff * c);
    }
    return out;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& ord) {
    auto [ef, cf] = f.leading_term(ord);
    auto [eg, cg] = g.leading_term(ord);
    ExponentVector l = exp_lcm(ef, eg);
    return term_times(f, exp_sub(l, ef), cf.inverse()) -
           term_times(g, exp_sub(l, eg), cg.inverse());
}

}  // namespace

MultiPoly normal_form(const MultiPoly& f, std::span<const MultiPoly> basis,
                      const MonomialOrder& ord) {
    std::vector<const MultiPoly*> divisors;
    std::vector<std::pair<ExponentVector, Cyclotomic>> leads;
    for (const MultiPoly& g : basis) {
        if (g.is_zero()) continue;
        divisors.push_back(&g);
        leads.push_back(g.leading_term(ord));
    }
    MultiPoly p = f;
    MultiPoly r(f.arity());
    while (!p.is_zero()) {
        auto [e, c] = p.leading_term(ord);
        bool reduced = false;
        for (std::size_t i = 0; i < leads.size(); ++i) {
            if (!divides(leads[i].first, e)) continue;
            p = p - term_times(*divisors[i], exp_sub(e, leads[i].first), c / leads[i].second);
            reduced = true;
            break;
        }
        if (!reduced) {
            r.add_term(e, c);
            MultiPoly lead = MultiPoly::monomial(e, c);
            p = p - lead;
        }
    }
    return r;
}

namespace {

struct Pair {
    std::size_t i, j;
    ExponentVector lcm;
    unsigned degree;
};

// Interreduce a Groebner basis into the unique reduced monic basis.
std::vector<MultiPoly> interreduce(std::vector<MultiPoly> g, const MonomialOrder& ord) {
    // Minimize: drop elements whose leading monomial is divisible by another's.
    for (std::size_t i = 0; i < g.size();) {
        bool drop = false;
        ExponentVector ei = g[i].leading_term(ord).first;
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (i == j) continue;
            ExponentVector ej = g[j].leading_term(ord).first;
            if (divides(ej, ei) && !(ei == ej && j > i)) {
                drop = true;
                break;
            }
        }
        if (drop)
            g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    // Reduce each element against the others until stable.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::vector<MultiPoly> others;
            others.reserve(g.size() - 1);
            for (std::size_t j = 0; j < g.size(); ++j)
                if (j != i) others.push_back(g[j]);
            MultiPoly h = normal_form(g[i], others, ord);
            if (h != g[i]) {
                g[i] = h;
                changed = true;
            }
        }
    }
    for (MultiPoly& p : g) p = p.monic(ord);
    std::sort(g.begin(), g.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return ord.less(b.leading_term(ord).first, a.leading_term(ord).first);
    });
    return g;
}

}  // namespace

std::vector<MultiPoly> buchberger(std::span<const MultiPoly> generators,
                                  const MonomialOrder& ord) {
    std::vector<MultiPoly> g;
    for (const MultiPoly& f : generators) {
        if (f.is_zero()) continue;
        MultiPoly m = f.monic(ord);
        if (std::find(g.begin(), g.end(), m) == g.end()) g.push_back(m);
    }
    if (g.empty()) return g;  // zero ideal

    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> handled;
    auto push_pairs_with = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            ExponentVector l = exp_lcm(g[i].leading_term(ord).first, g[k].leading_term(ord).first);
            pending.push_back({i, k, l, total_degree(l)});
        }
    };
    for (std::size_t k = 0; k < g.size(); ++k) push_pairs_with(k);

    while (!pending.empty()) {
        // Normal strategy: smallest lcm degree first.
        auto it = std::min_element(pending.begin(), pending.end(),
                                   [](const Pair& a, const Pair& b) { return a.degree < b.degree; });
        Pair pr = *it;
        pending.erase(it);
        handled.insert({pr.i, pr.j});

        const ExponentVector& ei = g[pr.i].leading_term(ord).first;
        const ExponentVector& ej = g[pr.j].leading_term(ord).first;
        // First criterion: coprime leading monomials.
        if (coprime_supports(ei, ej)) continue;
        // Chain criterion: some g[k] with LT dividing the lcm, both pairs done.
        bool chained = false;
        for (std::size_t k = 0; k < g.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!divides(g[k].leading_term(ord).first, pr.lcm)) continue;
            auto key = [&](std::size_t a, std::size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (handled.count(key(pr.i, k)) && handled.count(key(pr.j, k))) chained = true;
        }
        if (chained) continue;

        MultiPoly s = normal_form(s_polynomial(g[pr.i], g[pr.j], ord), g, ord);
        if (s.is_zero()) continue;
        g.push_back(s.monic(ord));
        push_pairs_with(g.size() - 1);
    }
    return interreduce(std::move(g), ord);
}

bool is_groebner_basis(std::span<const MultiPoly> basis, const MonomialOrder& ord) {
    std::vector<MultiPoly> g(basis.begin(), basis.end());
    std::erase_if(g, [](const MultiPoly& p) { return p.is_zero(); });
    if (g.empty()) return true;
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            if (coprime_supports(g[i].leading_term(ord).first, g[j].leading_term(ord).first))
                continue;
            if (!normal_form(s_polynomial(g[i], g[j], ord), g, ord).is_zero()) return false;
        }
    }
    return true;
}

IdealPresentation::IdealPresentation(std::vector<MultiPoly> generators, MonomialOrder order)
    : order_(std::move(order)) {
    if (generators.empty()) throw std::invalid_argument("IdealPresentation: empty generator list");
    arity_ = generators.front().arity();
    for (const MultiPoly& g : generators)
        if (g.arity() != arity_)
            throw std::invalid_argument("IdealPresentation: mixed generator arities");
    generators_ = std::move(generators);
}

const std::vector<MultiPoly>& IdealPresentation::reduced_basis() const {
    if (!reduced_basis_) reduced_basis_ = buchberger(generators_, order_);
    return *reduced_basis_;
}

void IdealPresentation::set_reduced_basis(std::vector<MultiPoly> basis) const {
    reduced_basis_ = std::move(basis);
}

bool ideal_equal(const IdealPresentation& a, const IdealPresentation& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("ideal_equal: arity mismatch");
    if (!(a.order() == b.order()))
        throw std::invalid_argument("ideal_equal: presentations use different orders");
    return a.reduced_basis() == b.reduced_basis();
}

IdealPresentation eliminate(const IdealPresentation& ideal, const std::vector<char>& keep) {
    if (keep.size() != ideal.arity()) throw std::invalid_argument("eliminate: mask length mismatch");
    std::vector<char> discard(keep.size());
    bool any_discarded = false;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        discard[i] = keep[i] ? 0 : 1;
        any_discarded |= discard[i] != 0;
    }
    if (!any_discarded) return ideal;
    if (!ideal.order().is_elimination_for(discard))
        throw std::invalid_argument("eliminate: order is not an elimination order for the block");

    std::vector<MultiPoly> kept;
    for (const MultiPoly& p : ideal.reduced_basis()) {
        bool pure = true;
        for (const auto& [e, c] : p.terms()) {
            for (std::size_t j = 0; j < e.size(); ++j) {
                if (e[j] > 0 && discard[j]) {
                    pure = false;
                    break;
                }
            }
            if (!pure) break;
        }
        if (pure) kept.push_back(p);
    }
    if (kept.empty()) kept.push_back(MultiPoly::zero(ideal.arity()));
    IdealPresentation out(std::move(kept), MonomialOrder::grevlex());
    return out;
}

IdealPresentation star_varieties_elim(const IdealPresentation& v, const IdealPresentation& w) {
    if (v.arity() != w.arity())
        throw std::invalid_argument("star_varieties_elim: ambient spaces differ");
    const unsigned m = v.arity();
    if (m > 4) throw std::domain_error("star_varieties_elim: oracle limited to arity <= 4");
    auto check_degrees = [](const IdealPresentation& ideal) {
        for (const MultiPoly& g : ideal.generators()) {
            for (const auto& [e, c] : g.terms()) {
                if (total_degree(e) > 4)
                    throw std::domain_error("star_varieties_elim: oracle limited to degree <= 4");
            }
        }
    };
    check_degrees(v);
    check_degrees(w);

    // Variables: x_i at i, y_i at m+i, z_i at 2m+i.
    const unsigned big = 3 * m;
    auto remap = [&](const MultiPoly& p, unsigned offset) {
        MultiPoly out(big);
        for (const auto& [e, c] : p.terms()) {
            ExponentVector b(big, 0);
            for (unsigned j = 0; j < m; ++j) b[offset + j] = e[j];
            out.add_term(b, c);
        }
        return out;
    };
    std::vector<MultiPoly> gens;
    for (const MultiPoly& g : v.generators()) gens.push_back(remap(g, m));
    for (const MultiPoly& g : w.generators()) gens.push_back(remap(g, 2 * m));
    for (unsigned i = 0; i < m; ++i) {
        ExponentVector ex(big, 0), eyz(big, 0);
        ex[i] = 1;
        eyz[m + i] = 1;
        eyz[2 * m + i] = 1;
        MultiPoly rel(big);
        rel.add_term(ex, Cyclotomic(Rational(1)));
        rel.add_term(eyz, Cyclotomic(Rational(-1)));
        gens.push_back(std::move(rel));
    }

    std::vector<char> discard(big, 0);
    for (unsigned j = m; j < big; ++j) discard[j] = 1;
    IdealPresentation extended(std::move(gens), MonomialOrder::elimination(discard));

    std::vector<char> keep(big, 0);
    for (unsigned j = 0; j < m; ++j) keep[j] = 1;
    IdealPresentation elim = eliminate(extended, keep);

    std::vector<MultiPoly> projected;
    for (const MultiPoly& p : elim.generators()) {
        if (p.is_zero()) continue;
        MultiPoly q(m);
        for (const auto& [e, c] : p.terms())
            q.add_term(ExponentVector(e.begin(), e.begin() + m), c);
        projected.push_back(std::move(q));
    }
    if (projected.empty()) projected.push_back(MultiPoly::zero(m));
    return IdealPresentation(std::move(projected), MonomialOrder::grevlex());
}

}  // namespace hadamard
