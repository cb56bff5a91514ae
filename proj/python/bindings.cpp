#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <variant>

#include "hadamard/binomial.hpp"
#include "hadamard/groebner.hpp"
#include "hadamard/numeric.hpp"
#include "hadamard/parse.hpp"
#include "hadamard/projective.hpp"

namespace py = pybind11;
using namespace hadamard;

namespace {

unsigned common_arity(const std::vector<std::string>& texts, std::optional<unsigned> vars) {
    if (vars) return *vars;
    unsigned arity = 0;
    for (const auto& t : texts) arity = std::max(arity, parse_poly(t).arity());
    return arity;
}

BinomialForm binomial_arg(const std::string& text, unsigned arity) {
    auto b = classify_binomial(parse_poly(text, arity));
    if (!b) throw std::domain_error("not a binomial hypersurface equation: " + text);
    return *b;
}

py::dict report_dict(const ResidualReport& r) {
    py::dict d;
    d["sample_count"] = r.sample_count;
    d["max_residual"] = r.max_residual;
    d["tolerance"] = r.tolerance;
    d["pass"] = r.pass;
    d["vacuous"] = r.vacuous;
    return d;
}

}  // namespace

PYBIND11_MODULE(_hadamard, m) {
    m.doc() = "exact Hadamard products, powers and transforms of hypersurfaces";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            PyErr_SetString(PyExc_ValueError,
                            (std::string(e.what()) + " (position " +
                             std::to_string(e.position) + ", expected " + e.expected + ")")
                                .c_str());
        }
    });

    m.def(
        "transform",
        [](const std::string& poly, const std::string& point, std::optional<unsigned> vars) {
            MultiPoly f = parse_poly(poly, vars);
            return hadamard_transform(f, parse_point(point)).monic(MonomialOrder::lex()).str();
        },
        py::arg("poly"), py::arg("point"), py::arg("vars") = std::nullopt,
        "Hadamard transform f^(*P), monic-normalized.");

    m.def(
        "star_points",
        [](const std::string& a, const std::string& b) {
            auto s = star_point(parse_point(a), parse_point(b));
            if (!s) throw std::domain_error("Hadamard product of the points is undefined");
            return s->str();
        },
        py::arg("a"), py::arg("b"), "Coordinatewise product of two projective points.");

    m.def(
        "star",
        [](const std::string& f, const std::string& g, std::optional<unsigned> vars) {
            unsigned arity = common_arity({f, g}, vars);
            auto ord = MonomialOrder::grevlex();
            IdealPresentation out = star_varieties_elim(
                IdealPresentation({parse_poly(f, arity)}, ord),
                IdealPresentation({parse_poly(g, arity)}, ord));
            std::vector<std::string> gens;
            for (const MultiPoly& h : out.reduced_basis()) gens.push_back(h.str());
            return gens;
        },
        py::arg("f"), py::arg("g"), py::arg("vars") = std::nullopt,
        "Hadamard product of two hypersurfaces via elimination; reduced basis.");

    m.def(
        "product",
        [](const std::string& f, const std::string& g, std::optional<unsigned> vars) {
            unsigned arity = common_arity({f, g}, vars);
            auto e = binomial_product(binomial_arg(f, arity), binomial_arg(g, arity));
            if (!e) throw std::domain_error("exponent pairs differ: the product is not a hypersurface");
            return e->poly().str();
        },
        py::arg("f"), py::arg("g"), py::arg("vars") = std::nullopt,
        "Closed-form Hadamard product of two binomial hypersurfaces.");

    m.def(
        "power",
        [](const std::string& f, unsigned r, std::optional<unsigned> vars) {
            return binomial_power(binomial_arg(f, common_arity({f}, vars)), r).poly().str();
        },
        py::arg("f"), py::arg("r"), py::arg("vars") = std::nullopt,
        "Closed-form Hadamard power of a binomial hypersurface.");

    m.def(
        "classify",
        [](const std::string& f, std::optional<unsigned> vars) {
            BinomialForm c = binomial_arg(f, common_arity({f}, vars));
            py::dict d;
            d["I1"] = c.i1;
            d["I2"] = c.i2;
            d["alpha1"] = c.alpha1.str();
            d["alpha2"] = c.alpha2.str();
            return d;
        },
        py::arg("f"), py::arg("vars") = std::nullopt, "Binomial normal form.");

    m.def(
        "binomial_type",
        [](const std::string& f, std::optional<unsigned> vars) -> py::object {
            auto t = detect_type(binomial_arg(f, common_arity({f}, vars)));
            if (!t) return py::none();
            return py::make_tuple(t->t, t->epsilon);
        },
        py::arg("f"), py::arg("vars") = std::nullopt,
        "(t, epsilon) type, or None when the coefficient ratio is not a root of unity.");

    m.def(
        "is_idempotent",
        [](const std::vector<std::string>& polys, unsigned t, std::optional<unsigned> vars) {
            unsigned arity = common_arity(polys, vars);
            if (polys.size() == 1) return is_idempotent(binomial_arg(polys[0], arity), t);
            BinomialVariety v;
            for (const auto& f : polys) v.generators.push_back(binomial_arg(f, arity));
            return is_idempotent(v, t);
        },
        py::arg("polys"), py::arg("t"), py::arg("vars") = std::nullopt,
        "Whether the t-th Hadamard power returns the input.");

    m.def(
        "min_exponent",
        [](const std::vector<std::string>& polys, std::optional<unsigned> vars) -> py::object {
            unsigned arity = common_arity(polys, vars);
            if (polys.size() == 1) {
                auto t = min_idempotent_exponent(binomial_arg(polys[0], arity));
                return t ? py::cast(*t) : py::none();
            }
            BinomialVariety v;
            for (const auto& f : polys) v.generators.push_back(binomial_arg(f, arity));
            MinExponentReport rep = variety_min_exponent(v);
            py::dict d;
            d["order_based"] = rep.order_based ? py::cast(*rep.order_based) : py::none();
            d["printed_formula"] =
                rep.printed_formula ? py::cast(*rep.printed_formula) : py::none();
            d["brute_force_confirmed"] = rep.brute_force_confirmed;
            return d;
        },
        py::arg("polys"), py::arg("vars") = std::nullopt,
        "Least t >= 2 with the t-th Hadamard power equal to the input.");

    m.def(
        "union_power",
        [](const std::vector<std::string>& polys, unsigned r, std::optional<unsigned> vars) {
            unsigned arity = common_arity(polys, vars);
            HypersurfaceUnion u;
            for (const auto& text : polys) {
                MultiPoly f = parse_poly(text, arity);
                bool hyperplane = false;
                if (f.term_count() == 1) {
                    const auto& e = f.terms().begin()->first;
                    if (total_degree(e) == 1)
                        for (unsigned j = 0; j < e.size(); ++j)
                            if (e[j] == 1) {
                                u.components.push_back({CoordinateHyperplane{j}, 1});
                                hyperplane = true;
                            }
                }
                if (!hyperplane) u.components.push_back({binomial_arg(text, arity), 1});
            }
            UnionPowerResult res = union_power(u, r);
            py::dict d;
            std::vector<std::string> comps;
            for (const auto& comp : res.power.components)
                comps.push_back(
                    std::holds_alternative<CoordinateHyperplane>(comp.value)
                        ? "x" + std::to_string(std::get<CoordinateHyperplane>(comp.value).index)
                        : std::get<BinomialForm>(comp.value).poly().str());
            d["components"] = comps;
            d["subspace_pieces"] = res.subspace_pieces;
            d["components_share_exponents"] = res.components_share_exponents;
            d["products_close_up"] = res.products_close_up;
            return d;
        },
        py::arg("polys"), py::arg("r"), py::arg("vars") = std::nullopt,
        "Hadamard power of a union of binomials and coordinate hyperplanes.");

    m.def("multiplication_table", &multiplication_table, py::arg("order"),
          "T[j][k] = m with zeta^(j+1) * zeta^(k+1) = zeta^m (1-based values).");

    m.def(
        "verify_product",
        [](const std::string& f, const std::string& g, const std::string& claim,
           std::size_t samples, std::uint64_t seed, double tol, std::optional<unsigned> vars) {
            unsigned arity = common_arity({f, g, claim}, vars);
            return report_dict(verify_product_claim(binomial_arg(f, arity),
                                                    binomial_arg(g, arity),
                                                    parse_poly(claim, arity), samples, seed, tol));
        },
        py::arg("f"), py::arg("g"), py::arg("claim"), py::arg("samples") = 200,
        py::arg("seed") = 0, py::arg("tol") = 1e-8, py::arg("vars") = std::nullopt,
        "Numeric residual check of a claimed Hadamard product equation.");

    m.def(
        "verify_power",
        [](const std::string& f, unsigned r, const std::string& claim, std::size_t samples,
           std::uint64_t seed, double tol, std::optional<unsigned> vars) {
            unsigned arity = common_arity({f, claim}, vars);
            return report_dict(verify_power_claim(binomial_arg(f, arity), r,
                                                  parse_poly(claim, arity), samples, seed, tol));
        },
        py::arg("f"), py::arg("r"), py::arg("claim"), py::arg("samples") = 200,
        py::arg("seed") = 0, py::arg("tol") = 1e-8, py::arg("vars") = std::nullopt,
        "Numeric residual check of a claimed Hadamard power equation.");

    m.def(
        "parse_check",
        [](const std::string& poly, std::optional<unsigned> vars) {
            return parse_poly(poly, vars).str();
        },
        py::arg("poly"), py::arg("vars") = std::nullopt,
        "Parse a polynomial and return its canonical form.");
}
