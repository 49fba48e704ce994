// gkmtool: command line front end for graph files.
//
// Exit codes: 0 success, 2 axiom or check violations, 1 usage and parse
// errors (including a xi or level that fails its preconditions).

#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gkm/graph_io.hpp"
#include "gkm/reduction.hpp"
#include "gkm/residue.hpp"
#include "gkm/selftest.hpp"

using nlohmann::ordered_json;
using namespace gkm;

namespace {

struct Config
{
    std::string input;
    std::string xi;
    std::string c;
    std::string alpha;
    std::string cls;
    std::string method = "expand";
    std::uint64_t seed = 42;
    std::string output = "text";
    bool inject_corrupt = false;
};

/// Names the axiom or theorem behind a violation code.
std::string rule_of(const std::string& code, bool for_class)
{
    if (for_class && code == "E_COMPAT")
        return "K-class congruence along edges";
    if (code == "E_INVOLUTION")
        return "edge reversal is a fixed-point-free involution";
    if (code == "E_DIM")
        return "weights live in the weight lattice of the torus";
    if (code == "E_VALENCE")
        return "the graph is regular";
    if (code == "E_ORIENT")
        return "reversed edges carry opposite weights";
    if (code == "E_GKM")
        return "GKM independence of the weights at a vertex";
    if (code == "E_COMPAT")
        return "compatibility of vertex representations along edges";
    if (code == "E_NOT_MULTIPLE" || code == "E_NONPOSITIVE" || code == "E_NOT_MONOMIAL")
        return "symplectic class condition";
    return "";
}

/// The precondition or theorem an exception reports on.
std::string rule_of(const std::exception& e)
{
    if (dynamic_cast<const NotGeneric*>(&e))
        return "genericity: xi pairs nontrivially with every edge weight";
    if (dynamic_cast<const NotPrimitive*>(&e))
        return "xi generates a circle subgroup (primitive)";
    if (dynamic_cast<const NotRegular*>(&e))
        return "regular value of the moment map";
    if (dynamic_cast<const ZeroNotRegular*>(&e))
        return "quantization commutes with reduction: zero is a regular value";
    if (dynamic_cast<const CycleError*>(&e))
        return "moment maps exist exactly when the orientation is acyclic";
    if (dynamic_cast<const InternalDivisionFailure*>(&e))
        return "polynomiality of the character";
    if (dynamic_cast<const InvalidClass*>(&e))
        return "K-class congruence along edges";
    return "";
}

class Output
{
  public:
    explicit Output(bool json) : json_(json) {}

    bool json() const { return json_; }
    ordered_json& doc() { return doc_; }
    std::ostringstream& text() { return text_; }

    void flush(std::ostream& os) const
    {
        if (json_)
            os << doc_.dump(2) << "\n";
        else
            os << text_.str();
    }

  private:
    bool json_;
    ordered_json doc_ = ordered_json::object();
    std::ostringstream text_;
};

ordered_json poly_json(const LaurentPoly& p)
{
    ordered_json a = ordered_json::array();
    for (const auto& [mu, c] : p.terms())
        a.push_back(ordered_json{{"coeff", c.str()}, {"exp", mu.coords()}});
    return a;
}

LatticeVector xi_flag(const Config& cfg, const GkmAction& a)
{
    if (cfg.xi.empty())
        throw ParseError("--xi is required for this command");
    LatticeVector xi(parse_int_list(cfg.xi));
    require_generic(a, xi);
    return xi;
}

struct Loaded
{
    ActionPtr action;
    GraphFile file;
};

Loaded load(const Config& cfg)
{
    if (cfg.input.empty())
        throw ParseError("--input is required for this command");
    Loaded l{nullptr, load_graph(cfg.input)};
    l.action = make_action(l.file.raw);
    return l;
}

/// The class named by --class, the only class in the file, or the constant 1.
std::pair<std::string, std::vector<LaurentPoly>> pick_class(const Config& cfg, const Loaded& l)
{
    const auto& cs = l.file.classes;
    if (!cfg.cls.empty()) {
        auto it = cs.find(cfg.cls);
        if (it == cs.end())
            throw ParseError("no class named '" + cfg.cls + "' in " + cfg.input);
        return *it;
    }
    if (cs.size() == 1)
        return *cs.begin();
    if (cs.empty())
        return {"1", std::vector<LaurentPoly>(l.action->num_vertices(),
                                              LaurentPoly::constant(l.action->torus_dim(), 1))};
    throw ParseError("several classes in " + cfg.input + "; choose one with --class");
}

KClass as_class(const Loaded& l, const std::vector<LaurentPoly>& values)
{
    return validate_class(l.action, values).get<InvalidClass>();
}

SymplecticClass as_symplectic_or_throw(const Loaded& l, const std::vector<LaurentPoly>& values)
{
    return as_symplectic(l.action, values).get<InvalidClass>();
}

ordered_json report_violations(Output& out, const std::vector<Violation>& vs, bool for_class)
{
    ordered_json arr = ordered_json::array();
    for (const auto& v : vs) {
        out.text() << v.code << "  " << v.where << "  " << v.message << "  [" << rule_of(v.code, for_class) << "]\n";
        arr.push_back(ordered_json{{"code", v.code}, {"where", v.where}, {"message", v.message},
                                   {"rule", rule_of(v.code, for_class)}});
    }
    return arr;
}

int cmd_validate(const Config& cfg, Output& out)
{
    if (cfg.input.empty())
        throw ParseError("--input is required for this command");
    const GraphFile file = load_graph(cfg.input);
    const auto va        = validate_action(file.raw);
    out.doc()["command"] = "validate";
    if (!va.ok()) {
        out.text() << "FAIL  action\n";
        out.doc()["action_ok"] = false;
        out.doc()["violations"] = report_violations(out, va.violations, false);
        return 2;
    }
    const auto action = std::make_shared<const GkmAction>(*va.value);
    out.text() << "OK    action: n=" << action->torus_dim() << ", vertices=" << action->num_vertices()
               << ", valence=" << action->valence() << "\n";
    out.doc()["action_ok"] = true;
    out.doc()["n"]         = action->torus_dim();
    out.doc()["vertices"]  = action->num_vertices();
    out.doc()["valence"]   = action->valence();
    int code               = 0;
    ordered_json classes   = ordered_json::object();
    for (const auto& [name, values] : file.classes) {
        const auto vc = validate_class(action, values);
        ordered_json cj;
        cj["ok"] = vc.ok();
        if (!vc.ok()) {
            code = 2;
            out.text() << "FAIL  class " << name << "\n";
            cj["violations"] = report_violations(out, vc.violations, true);
        } else {
            const auto vs = as_symplectic(action, values);
            out.text() << "OK    class " << name << (vs.ok() ? " (symplectic)" : "") << "\n";
            cj["symplectic"] = vs.ok();
        }
        classes[name] = cj;
    }
    out.doc()["classes"] = classes;
    return code;
}

int cmd_character(const Config& cfg, Output& out)
{
    const Loaded l           = load(cfg);
    const auto [name, vals]  = pick_class(cfg, l);
    const KClass f           = as_class(l, vals);
    out.doc()["command"]     = "character";
    out.doc()["class"]       = name;
    LaurentPoly chi;
    if (cfg.method == "oracle") {
        chi = character_oracle(f);
    } else {
        const LatticeVector xi = xi_flag(cfg, *l.action);
        out.doc()["xi"]        = xi.coords();
        chi                    = character_expand(f, polarize(l.action, xi)).poly;
    }
    out.text() << to_string(chi) << "\n";
    out.doc()["character"] = poly_json(chi);
    return 0;
}

int cmd_multiplicity(const Config& cfg, Output& out)
{
    const Loaded l          = load(cfg);
    const auto [name, vals] = pick_class(cfg, l);
    const SymplecticClass f = as_symplectic_or_throw(l, vals);
    const LatticeVector xi  = xi_flag(cfg, *l.action);
    if (cfg.alpha.empty())
        throw ParseError("--alpha is required for multiplicity");
    const Weight alpha(parse_int_list(cfg.alpha));
    if (alpha.size() != l.action->torus_dim())
        throw ParseError("--alpha must have " + std::to_string(l.action->torus_dim()) + " entries");
    const BigInt m = multiplicity(f, polarize(l.action, xi), alpha);
    out.text() << "mult" << to_string(alpha) << " = " << m << "\n";
    out.doc()["command"]      = "multiplicity";
    out.doc()["class"]        = name;
    out.doc()["xi"]           = xi.coords();
    out.doc()["alpha"]        = alpha.coords();
    out.doc()["multiplicity"] = m.str();
    return 0;
}

/// alpha_p(xi) for symplectic classes, the combinatorial moment map otherwise.
MomentMap moment_for(const Loaded& l, const std::vector<LaurentPoly>& vals, const LatticeVector& xi)
{
    const auto s = as_symplectic(l.action, vals);
    return s.ok() ? symplectic_moment_map(*s.value, xi) : moment_map(l.action, xi);
}

int cmd_reduce(const Config& cfg, Output& out)
{
    const Loaded l          = load(cfg);
    const auto [name, vals] = pick_class(cfg, l);
    const KClass f          = as_class(l, vals);
    const LatticeVector xi  = xi_flag(cfg, *l.action);
    const Rational c        = cfg.c.empty() ? Rational(0) : parse_rational(cfg.c);
    const MomentMap m       = moment_for(l, vals, xi);
    const CrossingSet cs    = crossing_set(m, c);
    const LaurentPoly red   = chi_reduced(f, m, c);

    out.doc()["command"] = "reduce";
    out.doc()["class"]   = name;
    out.doc()["xi"]      = xi.coords();
    out.doc()["c"]       = c.str();
    ordered_json phi     = ordered_json::object();
    for (std::size_t p = 0; p < m.phi.size(); ++p) {
        phi[l.action->vertex_name(p)] = m.phi[p].str();
        out.text() << "phi(" << l.action->vertex_name(p) << ") = " << m.phi[p] << "\n";
    }
    out.doc()["phi"] = phi;
    ordered_json edges = ordered_json::array();
    out.text() << "crossing edges:";
    for (std::size_t e : cs.edges) {
        out.text() << " " << l.action->edge_label(e);
        edges.push_back(l.action->edge_label(e));
    }
    out.text() << "\nchi_red = " << to_string(red) << "\n";
    out.doc()["crossing_edges"] = edges;
    out.doc()["chi_red"]        = poly_json(red);
    return 0;
}

int cmd_residue(const Config& cfg, Output& out)
{
    const Loaded l          = load(cfg);
    const auto [name, vals] = pick_class(cfg, l);
    const KClass f          = as_class(l, vals);
    const LatticeVector xi  = xi_flag(cfg, *l.action);
    LaurentPoly sum(l.action->torus_dim());
    ordered_json per = ordered_json::object();
    for (std::size_t p = 0; p < l.action->num_vertices(); ++p) {
        const LaurentPoly r = vertex_residue(f, p, xi);
        sum += r;
        out.text() << "res(" << l.action->vertex_name(p) << ") = " << to_string(r) << "\n";
        per[l.action->vertex_name(p)] = poly_json(r);
    }
    out.text() << "sum = " << to_string(sum) << "\n";
    out.doc()["command"]  = "residue";
    out.doc()["class"]    = name;
    out.doc()["xi"]       = xi.coords();
    out.doc()["residues"] = per;
    out.doc()["sum"]      = poly_json(sum);
    return 0;
}

int cmd_qr(const Config& cfg, Output& out)
{
    const Loaded l          = load(cfg);
    const auto [name, vals] = pick_class(cfg, l);
    const SymplecticClass f = as_symplectic_or_throw(l, vals);
    const LatticeVector xi  = xi_flag(cfg, *l.action);
    const QrResult r        = qr_check(f, xi);
    if (r.pass)
        out.text() << "PASS  chi_red = " << to_string(r.reduced) << "\n";
    else
        out.text() << "FAIL  invariant part = " << to_string(r.invariant) << ", chi_red = " << to_string(r.reduced)
                   << "  [quantization commutes with reduction]\n";
    out.doc()["command"]   = "qr-check";
    out.doc()["class"]     = name;
    out.doc()["xi"]        = xi.coords();
    out.doc()["pass"]      = r.pass;
    out.doc()["invariant"] = poly_json(r.invariant);
    out.doc()["chi_red"]   = poly_json(r.reduced);
    return r.pass ? 0 : 2;
}

int cmd_selftest(const Config& cfg, Output& out)
{
    SelftestOptions o;
    o.seed           = cfg.seed;
    o.inject_corrupt = cfg.inject_corrupt;
    const auto entries = run_selftest(o);
    bool ok            = true;
    ordered_json arr   = ordered_json::array();
    for (const auto& e : entries) {
        ok = ok && e.pass();
        arr.push_back(ordered_json{{"battery", e.battery},
                                   {"property", e.property},
                                   {"cases", e.cases},
                                   {"pass", e.pass()},
                                   {"failures", e.failures}});
    }
    out.text() << "seed " << cfg.seed << "\n" << render_selftest(entries);
    out.doc()["command"] = "selftest";
    out.doc()["seed"]    = std::to_string(cfg.seed);
    out.doc()["pass"]    = ok;
    out.doc()["entries"] = arr;
    return ok ? 0 : 2;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations on GKM graphs: characters, multiplicities, residues and reduction"};
    app.require_subcommand(1);
    Config cfg;

    auto common = [&](CLI::App* sub, bool needs_input) {
        auto* in = sub->add_option("-i,--input", cfg.input, "graph file (JSON)");
        if (needs_input)
            in->required();
        sub->add_option("--class", cfg.cls, "class name in the graph file");
        sub->add_option("-o,--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}));
    };
    auto with_xi = [&](CLI::App* sub) { sub->add_option("--xi", cfg.xi, "circle direction, e.g. 1,0")->required(); };

    auto* validate = app.add_subcommand("validate", "check the action axioms and every class in the file");
    common(validate, true);
    auto* character = app.add_subcommand("character", "character of a class");
    common(character, true);
    character->add_option("--xi", cfg.xi, "polarizing direction, e.g. 1,0");
    character->add_option("--method", cfg.method, "expand (needs --xi) or oracle")
        ->check(CLI::IsMember({"expand", "oracle"}));
    auto* mult = app.add_subcommand("multiplicity", "weight multiplicity of a symplectic class");
    common(mult, true);
    with_xi(mult);
    mult->add_option("--alpha", cfg.alpha, "weight, e.g. 1,0")->required();
    auto* reduce = app.add_subcommand("reduce", "reduced character at a regular level");
    common(reduce, true);
    with_xi(reduce);
    reduce->add_option("--c", cfg.c, "regular value, p or p/q (default 0)");
    auto* residue = app.add_subcommand("residue", "circle residues of the fixed-point summands");
    common(residue, true);
    with_xi(residue);
    auto* qr = app.add_subcommand("qr-check", "compare the invariant part of the character with the reduced one");
    common(qr, true);
    with_xi(qr);
    auto* self = app.add_subcommand("selftest", "randomized invariant batteries");
    common(self, false);
    self->add_option("--seed", cfg.seed, "random seed");
    self->add_flag("--inject-corrupt", cfg.inject_corrupt, "add a deliberately broken class");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    Output out(cfg.output == "json");
    int rc = 0;
    try {
        if (*validate)
            rc = cmd_validate(cfg, out);
        else if (*character)
            rc = cmd_character(cfg, out);
        else if (*mult)
            rc = cmd_multiplicity(cfg, out);
        else if (*reduce)
            rc = cmd_reduce(cfg, out);
        else if (*residue)
            rc = cmd_residue(cfg, out);
        else if (*qr)
            rc = cmd_qr(cfg, out);
        else if (*self)
            rc = cmd_selftest(cfg, out);
    } catch (const InvalidAction& e) {
        std::cerr << "error: invalid action: " << e.what() << "\n";
        return 2;
    } catch (const InvalidClass& e) {
        std::cerr << "error: invalid class: " << e.what() << "  [" << rule_of(e) << "]\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        const std::string rule = rule_of(e);
        std::cerr << "error: " << e.what() << (rule.empty() ? "" : "  [" + rule + "]") << "\n";
        return 1;
    }
    out.flush(std::cout);
    return rc;
}
