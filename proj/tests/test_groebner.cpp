#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hadamard/binomial.hpp"
#include "hadamard/groebner.hpp"
#include "hadamard/parse.hpp"

using namespace hadamard;

namespace {

MultiPoly P(const char* text, unsigned arity) { return parse_poly(text, arity); }

IdealPresentation ideal(std::vector<const char*> gens, unsigned arity,
                        MonomialOrder ord = MonomialOrder::lex()) {
    std::vector<MultiPoly> g;
    for (const char* t : gens) g.push_back(P(t, arity));
    return IdealPresentation(std::move(g), std::move(ord));
}

MultiPoly random_poly(std::mt19937_64& rng, unsigned arity, unsigned deg, unsigned terms) {
    std::uniform_int_distribution<unsigned> expo(0, deg);
    std::uniform_int_distribution<int> coeff(-3, 3);
    MultiPoly p(arity);
    for (unsigned i = 0; i < terms; ++i) {
        ExponentVector e(arity);
        for (unsigned j = 0; j < arity; ++j) e[j] = expo(rng);
        int c = coeff(rng);
        if (c != 0) p.add_term(e, Cyclotomic(Rational(c)));
    }
    return p;
}

}  // namespace

TEST_CASE("normal form examples") {
    auto lex = MonomialOrder::lex();
    std::vector<MultiPoly> g1{P("x0", 2)};
    CHECK(normal_form(P("x0^2", 2), g1, lex).is_zero());

    std::vector<MultiPoly> g2{P("x0 - 1", 2)};
    CHECK(normal_form(P("x0*x1 + x1", 2), g2, lex) == P("2*x1", 2));

    std::vector<MultiPoly> g3{P("x0", 3), P("x1", 3)};
    CHECK(normal_form(P("x2", 3), g3, lex) == P("x2", 3));
}

TEST_CASE("buchberger on small ideals") {
    auto lex = MonomialOrder::lex();

    auto single = buchberger(std::vector<MultiPoly>{P("x0 - x1", 2)}, lex);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == P("x0 - x1", 2));

    auto dup = buchberger(std::vector<MultiPoly>{P("x0", 2), P("x0", 2)}, lex);
    REQUIRE(dup.size() == 1);
    CHECK(dup[0] == P("x0", 2));

    // Twisted cubic style pair: verify the Groebner property and membership
    // of the original generators rather than a hand-frozen basis.
    std::vector<MultiPoly> gens{P("x0^2 - x1*x2", 3), P("x0*x1 - x2^2", 3)};
    auto g = buchberger(gens, lex);
    CHECK(is_groebner_basis(g, lex));
    for (const MultiPoly& f : gens) CHECK(normal_form(f, g, lex).is_zero());
    CHECK(g.size() >= 3);  // an S-polynomial survives reduction
}

TEST_CASE("is_groebner_basis examples") {
    auto lex = MonomialOrder::lex();
    CHECK(is_groebner_basis(std::vector<MultiPoly>{P("x0 - x1", 3), P("x1 - x2", 3)}, lex));
    CHECK_FALSE(is_groebner_basis(
        std::vector<MultiPoly>{P("x0*x1 - x2^2", 3), P("x0^2 - x2^2", 3)}, lex));
    CHECK(is_groebner_basis(std::vector<MultiPoly>{P("x0", 1)}, lex));
}

TEST_CASE("ideal equality") {
    CHECK(ideal_equal(ideal({"x0 - x1"}, 2), ideal({"2*x0 - 2*x1"}, 2)));
    CHECK_FALSE(ideal_equal(ideal({"x0"}, 2), ideal({"x0^2"}, 2)));
    CHECK(ideal_equal(ideal({"x0 - x1", "x1 - x2"}, 3), ideal({"x0 - x2", "x1 - x2"}, 3)));
}

TEST_CASE("reduced basis invariance under permutation and scaling") {
    std::mt19937_64 rng(2718);
    auto ord = MonomialOrder::grevlex();
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<MultiPoly> gens;
        for (int i = 0; i < 3; ++i) {
            MultiPoly p = random_poly(rng, 3, 2, 3);
            if (!p.is_zero()) gens.push_back(p);
        }
        if (gens.empty()) continue;
        auto base = buchberger(gens, ord);

        std::vector<MultiPoly> shuffled(gens.rbegin(), gens.rend());
        CHECK(buchberger(shuffled, ord) == base);

        std::vector<MultiPoly> scaled;
        for (const MultiPoly& g : gens) scaled.push_back(g * Cyclotomic(Rational(-7, 3)));
        CHECK(buchberger(scaled, ord) == base);
    }
}

TEST_CASE("buchberger output is a Groebner basis containing the input") {
    std::mt19937_64 rng(515);
    auto ord = MonomialOrder::grevlex();
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<MultiPoly> gens;
        for (int i = 0; i < 2; ++i) {
            MultiPoly p = random_poly(rng, 3, 3, 3);
            if (!p.is_zero()) gens.push_back(p);
        }
        if (gens.empty()) continue;
        auto g = buchberger(gens, ord);
        CHECK(is_groebner_basis(g, ord));
        for (const MultiPoly& f : gens) CHECK(normal_form(f, g, ord).is_zero());
    }
}

TEST_CASE("elimination") {
    std::vector<char> discard{0, 0, 1};  // y0 lives at index 2
    auto ord = MonomialOrder::elimination(discard);
    // <x0 - y0, y0 - x1> eliminate {y0} -> <x0 - x1>
    IdealPresentation big({P("x0 - x2", 3), P("x2 - x1", 3)}, ord);
    IdealPresentation out = eliminate(big, {1, 1, 0});
    CHECK(ideal_equal(out, ideal({"x0 - x1"}, 3, MonomialOrder::grevlex())));

    // Eliminating nothing returns the same ideal.
    IdealPresentation same = eliminate(big, {1, 1, 1});
    CHECK(&same.generators() != nullptr);
    CHECK(same.generators().size() == big.generators().size());

    // Wrong order kind is a contract violation.
    IdealPresentation wrong({P("x0 - x2", 3)}, MonomialOrder::lex());
    CHECK_THROWS_AS(eliminate(wrong, {1, 1, 0}), std::invalid_argument);
}

TEST_CASE("star_varieties_elim on hyperplanes and conics") {
    auto grev = MonomialOrder::grevlex();

    IdealPresentation v1({P("x0 - x1", 2)}, grev);
    IdealPresentation got1 = star_varieties_elim(v1, v1);
    CHECK(ideal_equal(got1, ideal({"x0 - x1"}, 2, grev)));

    IdealPresentation conic({P("x0*x2 - x1^2", 3)}, grev);
    IdealPresentation got2 = star_varieties_elim(conic, conic);
    CHECK(ideal_equal(got2, ideal({"x0*x2 - x1^2"}, 3, grev)));

    IdealPresentation a({P("x0 - 2*x1", 2)}, grev);
    IdealPresentation b({P("x0 - 3*x1", 2)}, grev);
    CHECK(ideal_equal(star_varieties_elim(a, b), ideal({"x0 - 6*x1"}, 2, grev)));

    IdealPresentation toobig({P("x0 - x1", 5)}, grev);
    CHECK_THROWS_AS(star_varieties_elim(toobig, toobig), std::domain_error);
}

TEST_CASE("oracle agreement: elimination vs closed-form binomial product") {
    std::mt19937_64 rng(40509);
    auto grev = MonomialOrder::grevlex();
    std::uniform_int_distribution<int> coeff(1, 4);
    std::uniform_int_distribution<int> sign(0, 1);
    int done = 0;
    // Random coprime same-exponent binomial pairs, arity 3, degree <= 3.
    std::vector<std::pair<ExponentVector, ExponentVector>> shapes{
        {{1, 0, 1}, {0, 2, 0}}, {{2, 0, 1}, {0, 3, 0}}, {{1, 0, 0}, {0, 1, 0}},
        {{0, 2, 1}, {3, 0, 0}}, {{1, 1, 0}, {0, 0, 2}}};
    while (done < 25) {
        auto [i1, i2] = shapes[static_cast<std::size_t>(done) % shapes.size()];
        auto mk = [&](int a1, int a2) {
            MultiPoly f(3);
            f.add_term(i1, Cyclotomic(Rational(a1)));
            f.add_term(i2, Cyclotomic(Rational(-a2)));
            return *classify_binomial(f);
        };
        BinomialForm c = mk(coeff(rng), sign(rng) ? coeff(rng) : -coeff(rng));
        BinomialForm d = mk(coeff(rng), sign(rng) ? coeff(rng) : -coeff(rng));
        auto closed = binomial_product(c, d);
        REQUIRE(closed.has_value());
        IdealPresentation elim = star_varieties_elim(
            IdealPresentation({c.poly()}, grev), IdealPresentation({d.poly()}, grev));
        CHECK(ideal_equal(elim, closed->ideal()));
        ++done;
    }
}
