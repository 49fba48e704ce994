#include <doctest.h>

#include "gkm/generators.hpp"
#include "gkm/graph_io.hpp"

using namespace gkm;

namespace {

const char* cp1_text = R"({
  "n": 2,
  "vertices": ["p", "q"],
  "edges": [ {"from": "p", "to": "q", "alpha": [1, 0]} ],
  "classes": { "f": { "p": [ {"coeff": 1, "exp": [-1, 0]} ],
                      "q": [ {"coeff": "1", "exp": [1, "0"]} ] } }
})";

std::string parse_message(const std::string& text)
{
    try {
        parse_graph(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("parse_graph reads vertices, edges and classes")
{
    const GraphFile g = parse_graph(cp1_text);
    CHECK(g.raw.n == 2);
    CHECK(g.raw.vertices == std::vector<std::string>{"p", "q"});
    REQUIRE(g.raw.edges.size() == 2);
    CHECK(g.raw.edges[1].alpha == Weight{-1, 0});
    const auto& f = g.classes.at("f");
    CHECK(f[0] == LaurentPoly::monomial(Weight{-1, 0}));
    CHECK(f[1] == LaurentPoly::monomial(Weight{1, 0}));
    const ActionPtr a = make_action(g.raw);
    CHECK(as_symplectic(a, f).ok());
}

TEST_CASE("parse errors name the offending field")
{
    CHECK(parse_message("{ \"n\": 2, ").find("line") != std::string::npos);
    CHECK(parse_message(R"({"n": 2, "vertices": ["p"], "edges": [{"from": "p", "to": "z", "alpha": [1, 0]}]})")
              .find("edges") != std::string::npos);
    CHECK(parse_message(R"({"n": 2.5, "vertices": [], "edges": []})").find("n") != std::string::npos);
    CHECK_FALSE(parse_message(R"({"vertices": [], "edges": []})").empty());
}

TEST_CASE("dump and parse round trip")
{
    for (const auto& ex : standard_fixtures()) {
        CAPTURE(ex.name);
        const GkmAction& a  = *ex.action();
        const std::string s = dump_graph(a, {{"f", ex.cls.base().values()}});
        const GraphFile g   = parse_graph(s);
        const ActionPtr b   = make_action(g.raw);
        CHECK(b->vertex_names() == a.vertex_names());
        REQUIRE(b->num_edges() == a.num_edges());
        for (std::size_t e = 0; e < a.num_edges(); ++e) {
            CHECK(b->edge(e).from == a.edge(e).from);
            CHECK(b->edge(e).to == a.edge(e).to);
            CHECK(b->alpha(e) == a.alpha(e));
        }
        CHECK(g.classes.at("f") == ex.cls.base().values());
    }
}

TEST_CASE("as_symplectic rejects values that are not monomials")
{
    const GraphFile g = parse_graph(cp1_text);
    const ActionPtr a = make_action(g.raw);
    std::vector<LaurentPoly> vs = g.classes.at("f");
    vs[0] = LaurentPoly::monomial(Weight{-1, 0}, 2);
    const auto r = as_symplectic(a, vs);
    CHECK_FALSE(r.ok());
    REQUIRE_FALSE(r.violations.empty());
    CHECK(r.violations[0].code == "E_NOT_MONOMIAL");
}

TEST_CASE("command-line scalars")
{
    CHECK(parse_int_list("1,-2") == std::vector<Coord>{1, -2});
    CHECK_THROWS_AS(parse_int_list("1,,2"), ParseError);
    CHECK_THROWS_AS(parse_int_list("a"), ParseError);
    CHECK(parse_rational("3/2") == Rational(3, 2));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
}
