#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hadamard/binomial.hpp"
#include "hadamard/groebner.hpp"
#include "hadamard/multipoly.hpp"
#include "hadamard/numeric.hpp"
#include "hadamard/parse.hpp"
#include "hadamard/projective.hpp"

using json = nlohmann::ordered_json;
using namespace hadamard;

namespace {

struct Options {
    std::string format = "text";
    std::optional<unsigned> vars;
    std::string order = "grevlex";
    std::vector<std::string> polys;
    std::string point_a, point_b;
    std::string claim;
    unsigned exponent = 2;
    unsigned table_order = 1;
    std::size_t samples = 200;
    std::uint64_t seed = 0;
    double tol = 1e-8;
};

MonomialOrder monomial_order(const std::string& name) {
    if (name == "lex") return MonomialOrder::lex();
    return MonomialOrder::grevlex();
}

MultiPoly parse_arg_poly(const std::string& text, const Options& opt) {
    return parse_poly(text, opt.vars);
}

// Pads every parsed polynomial to a common arity when --vars is absent.
std::vector<MultiPoly> parse_arg_polys(const Options& opt) {
    unsigned arity = opt.vars.value_or(0);
    if (!opt.vars)
        for (const auto& text : opt.polys) arity = std::max(arity, parse_poly(text).arity());
    std::vector<MultiPoly> out;
    for (const auto& text : opt.polys) out.push_back(parse_poly(text, arity));
    return out;
}

BinomialForm require_binomial(const MultiPoly& f) {
    auto b = classify_binomial(f);
    if (!b) throw std::domain_error("not a binomial hypersurface equation: " + f.str());
    return *b;
}

std::optional<unsigned> hyperplane_index(const MultiPoly& f) {
    if (f.term_count() != 1) return std::nullopt;
    const auto& [e, c] = *f.terms().begin();
    (void)c;
    if (total_degree(e) != 1) return std::nullopt;
    for (unsigned j = 0; j < e.size(); ++j)
        if (e[j] == 1) return j;
    return std::nullopt;
}

std::string subspace_str(const std::vector<unsigned>& indices) {
    std::string s = "Z(";
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i) s += ", ";
        s += "x" + std::to_string(indices[i]);
    }
    return s + ")";
}

json exponent_json(const ExponentVector& e) {
    json a = json::array();
    for (unsigned v : e) a.push_back(v);
    return a;
}

json residual_json(const ResidualReport& r) {
    return json{{"sample_count", r.sample_count},
                {"max_residual", r.max_residual},
                {"tolerance", r.tolerance},
                {"pass", r.pass},
                {"vacuous", r.vacuous}};
}

struct Emitter {
    std::string command;
    std::string format;
    json inputs = json::object();
    std::vector<std::string> text_lines;
    json result;
    json diagnostics = json::object();

    void line(std::string s) { text_lines.push_back(std::move(s)); }

    void flush() const {
        if (format == "records") {
            json record{{"command", command},
                        {"inputs", inputs},
                        {"result", result},
                        {"diagnostics", diagnostics}};
            std::cout << record.dump() << "\n";
        } else {
            for (const auto& s : text_lines) std::cout << s << "\n";
        }
    }

    int fail(int code, const std::string& message, json extra = json::object()) const {
        if (format == "records") {
            json diag{{"error", message}};
            for (auto& [k, v] : extra.items()) diag[k] = v;
            json record{{"command", command},
                        {"inputs", inputs},
                        {"result", nullptr},
                        {"diagnostics", diag}};
            std::cout << record.dump() << "\n";
        } else {
            std::cerr << "error: " << message << "\n";
        }
        return code;
    }
};

void run_transform(const Options& opt, Emitter& em) {
    MultiPoly f = parse_arg_poly(opt.polys.at(0), opt);
    ProjectivePoint p = parse_point(opt.point_a);
    MultiPoly g = hadamard_transform(f, p).monic(MonomialOrder::lex());
    em.line(g.str());
    em.result = json{{"polynomial", g.str()}};
}

void run_star_points(const Options& opt, Emitter& em) {
    ProjectivePoint a = parse_point(opt.point_a);
    ProjectivePoint b = parse_point(opt.point_b);
    auto s = star_point(a, b);
    if (!s) throw std::domain_error("Hadamard product of the points is undefined: "
                                    "every coordinate product vanishes");
    em.line(s->str());
    em.result = json{{"point", s->str()}};
}

void run_star(const Options& opt, Emitter& em) {
    auto polys = parse_arg_polys(opt);
    MonomialOrder ord = monomial_order(opt.order);
    IdealPresentation v({polys.at(0)}, ord);
    IdealPresentation w({polys.at(1)}, ord);
    IdealPresentation out = star_varieties_elim(v, w);
    json gens = json::array();
    for (const MultiPoly& g : out.reduced_basis()) {
        em.line(g.str());
        gens.push_back(g.str());
    }
    em.result = json{{"generators", gens}};
}

void run_product(const Options& opt, Emitter& em) {
    auto polys = parse_arg_polys(opt);
    BinomialForm c = require_binomial(polys.at(0));
    BinomialForm d = require_binomial(polys.at(1));
    auto e = binomial_product(c, d);
    if (!e) throw std::domain_error("exponent pairs differ: the Hadamard product "
                                    "is not a hypersurface");
    em.line(e->poly().str());
    em.result = json{{"polynomial", e->poly().str()}};
}

void run_power(const Options& opt, Emitter& em) {
    BinomialForm c = require_binomial(parse_arg_poly(opt.polys.at(0), opt));
    BinomialForm e = binomial_power(c, opt.exponent);
    em.line(e.poly().str());
    em.result = json{{"polynomial", e.poly().str()}};
}

void run_classify(const Options& opt, Emitter& em) {
    BinomialForm c = require_binomial(parse_arg_poly(opt.polys.at(0), opt));
    std::ostringstream i1, i2;
    for (unsigned v : c.i1) i1 << (i1.tellp() > 0 ? "," : "") << v;
    for (unsigned v : c.i2) i2 << (i2.tellp() > 0 ? "," : "") << v;
    em.line("I1 = [" + i1.str() + "]");
    em.line("I2 = [" + i2.str() + "]");
    em.line("alpha1 = " + c.alpha1.str());
    em.line("alpha2 = " + c.alpha2.str());
    em.result = json{{"I1", exponent_json(c.i1)},
                     {"I2", exponent_json(c.i2)},
                     {"alpha1", c.alpha1.str()},
                     {"alpha2", c.alpha2.str()}};
}

void run_type(const Options& opt, Emitter& em) {
    BinomialForm c = require_binomial(parse_arg_poly(opt.polys.at(0), opt));
    auto t = detect_type(c);
    if (t) {
        em.line("(" + std::to_string(t->t) + ", " + std::to_string(t->epsilon) + ")");
        em.result = json{{"t", t->t}, {"epsilon", t->epsilon}};
    } else {
        em.line("none");
        em.result = nullptr;
        em.diagnostics["note"] = "coefficient ratio is not a root of unity";
    }
}

void run_idempotent(const Options& opt, Emitter& em) {
    if (opt.exponent < 2) throw std::invalid_argument("idempotency exponent must be >= 2");
    auto polys = parse_arg_polys(opt);
    bool verdict;
    std::optional<unsigned> witness;
    if (polys.size() == 1) {
        BinomialForm c = require_binomial(polys[0]);
        verdict = is_idempotent(c, opt.exponent);
        witness = min_idempotent_exponent(c);
    } else {
        BinomialVariety v;
        for (const MultiPoly& f : polys) v.generators.push_back(require_binomial(f));
        verdict = is_idempotent(v, opt.exponent);
        witness = variety_min_exponent(v).order_based;
    }
    em.line(verdict ? "true" : "false");
    em.result = json{{"verdict", verdict},
                     {"witness_exponent", witness ? json(*witness) : json(nullptr)}};
}

void run_min_exponent(const Options& opt, Emitter& em) {
    auto polys = parse_arg_polys(opt);
    if (polys.size() == 1) {
        auto t = min_idempotent_exponent(require_binomial(polys[0]));
        em.line(t ? std::to_string(*t) : "none");
        em.result = t ? json(*t) : json(nullptr);
        if (!t) em.diagnostics["note"] = "coefficient ratio is not a root of unity";
        return;
    }
    BinomialVariety v;
    for (const MultiPoly& f : polys) v.generators.push_back(require_binomial(f));
    MinExponentReport rep = variety_min_exponent(v);
    em.line(rep.order_based ? std::to_string(*rep.order_based) : "none");
    em.result = rep.order_based ? json(*rep.order_based) : json(nullptr);
    em.diagnostics["printed_formula"] =
        rep.printed_formula ? json(*rep.printed_formula) : json(nullptr);
    em.diagnostics["brute_force_confirmed"] = rep.brute_force_confirmed;
}

void run_union_power(const Options& opt, Emitter& em) {
    auto polys = parse_arg_polys(opt);
    HypersurfaceUnion u;
    for (const MultiPoly& f : polys) {
        if (auto i = hyperplane_index(f))
            u.components.push_back({CoordinateHyperplane{*i}, 1});
        else
            u.components.push_back({require_binomial(f), 1});
    }
    UnionPowerResult r = union_power(u, opt.exponent);
    json comps = json::array();
    for (const UnionComponent& comp : r.power.components) {
        std::string s = std::holds_alternative<CoordinateHyperplane>(comp.value)
                            ? "x" + std::to_string(std::get<CoordinateHyperplane>(comp.value).index)
                            : std::get<BinomialForm>(comp.value).poly().str();
        em.line(s);
        comps.push_back(s);
    }
    json pieces = json::array();
    for (const auto& piece : r.subspace_pieces) {
        em.line(subspace_str(piece));
        pieces.push_back(subspace_str(piece));
    }
    em.result = json{{"components", comps}, {"subspace_pieces", pieces}};
    em.diagnostics["components_share_exponents"] = r.components_share_exponents;
    em.diagnostics["products_close_up"] = r.products_close_up;
}

void run_table(const Options& opt, Emitter& em) {
    if (opt.table_order < 1) throw std::invalid_argument("table order must be >= 1");
    auto table = multiplication_table(opt.table_order);
    const unsigned m = opt.table_order;
    auto label = [](unsigned i) { return "C" + std::to_string(i); };
    std::size_t w = label(m).size();
    auto cell = [&](const std::string& s) {
        return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
    };
    std::string header = cell("*") + " |";
    for (unsigned k = 1; k <= m; ++k) header += " " + cell(label(k));
    em.line(header);
    em.line(std::string(w, '-') + "-+" + std::string((w + 1) * m, '-'));
    json rows = json::array();
    for (unsigned j = 1; j <= m; ++j) {
        std::string row = cell(label(j)) + " |";
        json jrow = json::array();
        for (unsigned k = 1; k <= m; ++k) {
            row += " " + cell(label(table[j - 1][k - 1]));
            jrow.push_back(table[j - 1][k - 1]);
        }
        em.line(row);
        rows.push_back(jrow);
    }
    em.result = json{{"table", rows}};
}

void run_verify(const Options& opt, Emitter& em) {
    std::vector<std::string> texts = opt.polys;
    texts.push_back(opt.claim);
    unsigned arity = opt.vars.value_or(0);
    if (!opt.vars)
        for (const auto& t : texts) arity = std::max(arity, parse_poly(t).arity());
    MultiPoly claim = parse_poly(opt.claim, arity);
    ResidualReport rep;
    if (opt.polys.size() == 2) {
        BinomialForm c = require_binomial(parse_poly(opt.polys[0], arity));
        BinomialForm d = require_binomial(parse_poly(opt.polys[1], arity));
        rep = verify_product_claim(c, d, claim, opt.samples, opt.seed, opt.tol);
    } else {
        BinomialForm c = require_binomial(parse_poly(opt.polys.at(0), arity));
        rep = verify_power_claim(c, opt.exponent, claim, opt.samples, opt.seed, opt.tol);
    }
    std::ostringstream line;
    line << (rep.pass ? "pass" : "fail") << " max_residual=" << rep.max_residual
         << " samples=" << rep.sample_count;
    em.line(line.str());
    em.result = residual_json(rep);
}

void run_parse_check(const Options& opt, Emitter& em) {
    MultiPoly f = parse_arg_poly(opt.polys.at(0), opt);
    em.line(f.str());
    em.result = json{{"polynomial", f.str()}, {"vars", f.arity()}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hadamard products, powers and transforms of hypersurfaces"};
    app.require_subcommand(1);

    Options opt;
    unsigned vars_value = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "records"}));
        return sub;
    };
    auto add_vars = [&](CLI::App* sub) {
        sub->add_option("--vars", vars_value, "number of variables x0..x{n-1}")
            ->check(CLI::PositiveNumber)
            ->each([&](const std::string& s) { opt.vars = static_cast<unsigned>(std::stoul(s)); });
        return sub;
    };
    auto add_order = [&](CLI::App* sub) {
        sub->add_option("--order", opt.order, "monomial order")
            ->check(CLI::IsMember({"lex", "grevlex"}));
        return sub;
    };

    CLI::App* transform = add_vars(add_common(
        app.add_subcommand("transform", "Hadamard transform of a polynomial at a point")));
    transform->add_option("--poly", opt.polys)->required()->expected(1);
    transform->add_option("--point", opt.point_a)->required();

    CLI::App* star_points = add_common(
        app.add_subcommand("star-points", "coordinatewise product of two points"));
    star_points->add_option("--point", opt.point_a)->required();
    star_points->add_option("--with", opt.point_b)->required();

    CLI::App* star = add_order(add_vars(add_common(app.add_subcommand(
        "star", "Hadamard product of two hypersurfaces by elimination"))));
    star->add_option("--poly", opt.polys)->required()->expected(2);

    CLI::App* product = add_vars(add_common(app.add_subcommand(
        "product", "closed-form Hadamard product of two binomial hypersurfaces")));
    product->add_option("--poly", opt.polys)->required()->expected(2);

    CLI::App* power = add_vars(add_common(
        app.add_subcommand("power", "closed-form Hadamard power of a binomial hypersurface")));
    power->add_option("--poly", opt.polys)->required()->expected(1);
    power->add_option("--exp", opt.exponent, "power exponent")->required();

    CLI::App* classify = add_vars(add_common(
        app.add_subcommand("classify", "binomial normal form: exponents and coefficients")));
    classify->add_option("--poly", opt.polys)->required()->expected(1);

    CLI::App* type = add_vars(add_common(
        app.add_subcommand("type", "(t, epsilon) type of a binomial hypersurface")));
    type->add_option("--poly", opt.polys)->required()->expected(1);

    CLI::App* idem = add_vars(add_common(
        app.add_subcommand("idempotent", "does the t-th Hadamard power return the input?")));
    idem->add_option("--poly", opt.polys)->required();
    idem->add_option("--exp", opt.exponent, "power exponent")->required();

    CLI::App* minexp = add_vars(add_common(app.add_subcommand(
        "min-exponent", "least t >= 2 with the t-th Hadamard power equal to the input")));
    minexp->add_option("--poly", opt.polys)->required();

    CLI::App* upower = add_vars(add_common(app.add_subcommand(
        "union-power", "Hadamard power of a union of binomials and coordinate hyperplanes")));
    upower->add_option("--poly", opt.polys)->required();
    upower->add_option("--exp", opt.exponent, "power exponent")->required();

    CLI::App* table = add_common(app.add_subcommand(
        "table", "Hadamard multiplication table of the type components over a root of unity"));
    table->add_option("--order", opt.table_order, "root-of-unity order (table size)")->required();

    CLI::App* verify = add_vars(add_common(app.add_subcommand(
        "verify", "numeric residual check of a product or power claim")));
    verify->add_option("--poly", opt.polys, "factor equations (one with --exp, else two)")
        ->required();
    verify->add_option("--claim", opt.claim, "claimed product/power equation")->required();
    verify->add_option("--exp", opt.exponent, "power exponent (power claims)");
    verify->add_option("--samples", opt.samples);
    verify->add_option("--seed", opt.seed);
    verify->add_option("--tol", opt.tol);

    CLI::App* parse_check = add_vars(add_common(
        app.add_subcommand("parse-check", "parse a polynomial and echo its canonical form")));
    parse_check->add_option("--poly", opt.polys)->required()->expected(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Emitter em;
    em.format = opt.format;
    CLI::App* chosen = app.get_subcommands().front();
    em.command = chosen->get_name();

    em.inputs = json::object();
    if (!opt.polys.empty()) em.inputs["poly"] = opt.polys;
    if (opt.vars) em.inputs["vars"] = *opt.vars;
    if (chosen == transform || chosen == star_points) em.inputs["point"] = opt.point_a;
    if (chosen == star_points) em.inputs["with"] = opt.point_b;
    if (chosen == star) em.inputs["monomial_order"] = opt.order;
    if (chosen == power || chosen == idem || chosen == upower ||
        (chosen == verify && opt.polys.size() == 1))
        em.inputs["exp"] = opt.exponent;
    if (chosen == table) em.inputs["order"] = opt.table_order;
    if (chosen == verify) {
        em.inputs["claim"] = opt.claim;
        em.inputs["samples"] = opt.samples;
        em.inputs["seed"] = opt.seed;
        em.inputs["tol"] = opt.tol;
    }

    try {
        if (chosen == transform) run_transform(opt, em);
        else if (chosen == star_points) run_star_points(opt, em);
        else if (chosen == star) run_star(opt, em);
        else if (chosen == product) run_product(opt, em);
        else if (chosen == power) run_power(opt, em);
        else if (chosen == classify) run_classify(opt, em);
        else if (chosen == type) run_type(opt, em);
        else if (chosen == idem) run_idempotent(opt, em);
        else if (chosen == minexp) run_min_exponent(opt, em);
        else if (chosen == upower) run_union_power(opt, em);
        else if (chosen == table) run_table(opt, em);
        else if (chosen == verify) run_verify(opt, em);
        else if (chosen == parse_check) run_parse_check(opt, em);
        em.flush();
        return 0;
    } catch (const ParseError& e) {
        return em.fail(2, e.what(),
                       json{{"position", e.position}, {"expected", e.expected}});
    } catch (const std::domain_error& e) {
        return em.fail(1, e.what());
    } catch (const std::invalid_argument& e) {
        return em.fail(1, e.what());
    }
}
