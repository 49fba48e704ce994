#include "gkm/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gkm {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what)
{
    throw ParseError(field + ": " + what);
}

BigInt to_bigint(const json& j, const std::string& field)
{
    if (j.is_number_integer())
        return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size())
            fail(field, "empty integer string");
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9')
                fail(field, "'" + s + "' is not a decimal integer");
        return BigInt(s[0] == '+' ? s.substr(1) : s);
    }
    fail(field, "expected an integer, got " + std::string(j.type_name()));
}

Coord to_coord(const json& j, const std::string& field)
{
    const BigInt v = to_bigint(j, field);
    if (v > std::numeric_limits<Coord>::max() || v < std::numeric_limits<Coord>::min())
        fail(field, "exponent out of the 64-bit range");
    return static_cast<Coord>(v);
}

Weight to_weight(const json& j, std::size_t n, const std::string& field)
{
    if (!j.is_array())
        fail(field, "expected an array of integers");
    if (j.size() != n)
        fail(field, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
    Weight w(n);
    for (std::size_t i = 0; i < n; ++i)
        w[i] = to_coord(j[i], field + "[" + std::to_string(i) + "]");
    return w;
}

const json& member(const json& obj, const char* key, const std::string& field)
{
    auto it = obj.find(key);
    if (it == obj.end())
        fail(field, std::string("missing '") + key + "'");
    return *it;
}

std::size_t vertex_ref(const RawAction& raw, const json& j, const std::string& field)
{
    if (!j.is_string())
        fail(field, "expected a vertex id string");
    const std::string name = j.get<std::string>();
    for (std::size_t p = 0; p < raw.vertices.size(); ++p)
        if (raw.vertices[p] == name)
            return p;
    fail(field, "unknown vertex '" + name + "'");
}

LaurentPoly to_poly(const json& j, std::size_t n, const std::string& field)
{
    if (!j.is_array())
        fail(field, "expected an array of {coeff, exp} terms");
    LaurentPoly p(n);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string f = field + "[" + std::to_string(i) + "]";
        if (!j[i].is_object())
            fail(f, "expected an object");
        p.add_term(to_weight(member(j[i], "exp", f), n, f + ".exp"), to_bigint(member(j[i], "coeff", f), f + ".coeff"));
    }
    return p;
}

std::size_t line_of(const std::string& text, std::size_t byte)
{
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n')
            ++line;
    return line;
}

json weight_json(const Weight& w)
{
    json a = json::array();
    for (Coord c : w.coords())
        a.push_back(c);
    return a;
}

json poly_json(const LaurentPoly& p)
{
    json a = json::array();
    for (const auto& [mu, c] : p.terms())
        a.push_back(json{{"coeff", c.str()}, {"exp", weight_json(mu)}});
    return a;
}

} // namespace

GraphFile parse_graph(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("line " + std::to_string(line_of(text, e.byte)) + ": malformed JSON");
    }
    if (!doc.is_object())
        fail("document", "expected a JSON object");

    GraphFile g;
    const json& jn = member(doc, "n", "document");
    const Coord n  = to_coord(jn, "n");
    if (n < 1)
        fail("n", "torus dimension must be positive");
    g.raw.n = static_cast<std::size_t>(n);

    const json& jv = member(doc, "vertices", "document");
    if (!jv.is_array() || jv.empty())
        fail("vertices", "expected a nonempty array of ids");
    for (std::size_t i = 0; i < jv.size(); ++i) {
        if (!jv[i].is_string())
            fail("vertices[" + std::to_string(i) + "]", "expected a string id");
        const std::string name = jv[i].get<std::string>();
        for (const auto& v : g.raw.vertices)
            if (v == name)
                fail("vertices[" + std::to_string(i) + "]", "duplicate id '" + name + "'");
        g.raw.vertices.push_back(name);
    }

    const json& je = member(doc, "edges", "document");
    if (!je.is_array())
        fail("edges", "expected an array");
    for (std::size_t i = 0; i < je.size(); ++i) {
        const std::string f = "edges[" + std::to_string(i) + "]";
        if (!je[i].is_object())
            fail(f, "expected an object");
        const std::size_t from = vertex_ref(g.raw, member(je[i], "from", f), f + ".from");
        const std::size_t to   = vertex_ref(g.raw, member(je[i], "to", f), f + ".to");
        const Weight alpha     = to_weight(member(je[i], "alpha", f), g.raw.n, f + ".alpha");
        auto bar_it            = je[i].find("alpha_bar");
        const Weight alpha_bar = bar_it == je[i].end() ? -alpha : to_weight(*bar_it, g.raw.n, f + ".alpha_bar");
        const std::size_t id   = g.raw.edges.size();
        g.raw.edges.push_back(RawEdge{from, to, alpha, id + 1});
        g.raw.edges.push_back(RawEdge{to, from, alpha_bar, id});
    }

    if (auto jc = doc.find("classes"); jc != doc.end()) {
        if (!jc->is_object())
            fail("classes", "expected an object of named classes");
        for (const auto& [name, val] : jc->items()) {
            const std::string f = "classes." + name;
            if (!val.is_object())
                fail(f, "expected an object mapping vertex ids to polynomials");
            std::vector<LaurentPoly> values(g.raw.vertices.size(), LaurentPoly(g.raw.n));
            std::vector<bool> seen(values.size(), false);
            for (const auto& [vname, poly] : val.items()) {
                const std::size_t p = vertex_ref(g.raw, json(vname), f + "." + vname);
                values[p]           = to_poly(poly, g.raw.n, f + "." + vname);
                seen[p]             = true;
            }
            for (std::size_t p = 0; p < seen.size(); ++p)
                if (!seen[p])
                    fail(f, "no value for vertex '" + g.raw.vertices[p] + "'");
            g.classes.emplace(name, std::move(values));
        }
    }
    return g;
}

GraphFile load_graph(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_graph(ss.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string dump_graph(const GkmAction& action, const std::map<std::string, std::vector<LaurentPoly>>& classes)
{
    json doc;
    doc["n"]        = action.torus_dim();
    doc["vertices"] = action.vertex_names();
    json edges      = json::array();
    for (std::size_t e = 0; e < action.num_edges(); ++e) {
        const Edge& ed = action.edge(e);
        if (e < ed.bar)
            edges.push_back(json{{"from", action.vertex_name(ed.from)},
                                 {"to", action.vertex_name(ed.to)},
                                 {"alpha", weight_json(ed.alpha)}});
    }
    doc["edges"] = edges;
    if (!classes.empty()) {
        json cls = json::object();
        for (const auto& [name, values] : classes) {
            json c = json::object();
            for (std::size_t p = 0; p < values.size(); ++p)
                c[action.vertex_name(p)] = poly_json(values[p]);
            cls[name] = c;
        }
        doc["classes"] = cls;
    }
    return doc.dump(2) + "\n";
}

Validated<SymplecticClass> as_symplectic(ActionPtr action, const std::vector<LaurentPoly>& values)
{
    std::vector<Weight> alphas;
    for (std::size_t p = 0; p < values.size(); ++p) {
        const auto& t = values[p].terms();
        if (t.size() != 1 || t.begin()->second != 1) {
            Validated<SymplecticClass> v;
            v.violations.push_back({"E_NOT_MONOMIAL", action->vertex_name(p),
                                    "value " + to_string(values[p]) + " is not a single character x^alpha"});
            return v;
        }
        alphas.push_back(t.begin()->first);
    }
    return symplectic_class(std::move(action), std::move(alphas));
}

std::vector<Coord> parse_int_list(const std::string& s)
{
    std::vector<Coord> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        Coord v         = 0;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw ParseError("'" + s + "' is not a comma-separated integer list");
        }
        if (pos != tok.size())
            throw ParseError("'" + s + "' is not a comma-separated integer list");
        out.push_back(v);
    }
    if (out.empty() || (!s.empty() && s.back() == ','))
        throw ParseError("'" + s + "' is not a comma-separated integer list");
    return out;
}

Rational parse_rational(const std::string& s)
{
    const auto slash = s.find('/');
    try {
        const std::string a = s.substr(0, slash);
        const std::string b = slash == std::string::npos ? "1" : s.substr(slash + 1);
        std::size_t pa = 0, pb = 0;
        const Coord num = std::stoll(a, &pa);
        const Coord den = std::stoll(b, &pb);
        if (pa != a.size() || pb != b.size() || den == 0)
            throw ParseError("");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw ParseError("'" + s + "' is not a rational number p or p/q");
    }
}

} // namespace gkm
