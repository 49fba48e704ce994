#include <doctest.h>

#include <algorithm>
#include <random>

#include "gkm/generators.hpp"

using namespace gkm;

namespace {

RawAction cp1_raw()
{
    RawAction raw;
    raw.n        = 2;
    raw.vertices = {"p", "q"};
    raw.add_edge_pair(0, 1, Weight{1, 0});
    return raw;
}

bool has_code(const std::vector<Violation>& vs, const std::string& code)
{
    return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.code == code; });
}

LaurentPoly mono(const Weight& w)
{
    return LaurentPoly::monomial(w);
}

} // namespace

TEST_CASE("validate_action accepts generated examples")
{
    for (const auto& ex : standard_fixtures()) {
        CAPTURE(ex.name);
        const GkmAction& a = *ex.action();
        CHECK(a.num_vertices() <= 6);
        CHECK(a.torus_dim() <= 3);
        CHECK(ex.cls.is_symplectic());
    }
    const Example cp2 = gen_projective(2);
    CHECK(cp2.action()->valence() == 2);
    const Example cp3 = gen_projective(3);
    CHECK(cp3.action()->valence() == 3);
}

TEST_CASE("gen_projective(1) has a single geometric edge with weight (1)")
{
    const Example ex = gen_projective(1);
    const GkmAction& a = *ex.action();
    CHECK(a.num_vertices() == 2);
    CHECK(a.num_edges() == 2);
    CHECK(a.torus_dim() == 1);
    CHECK(a.alpha(0) == Weight{1});
}

TEST_CASE("gen_projective(2) weights")
{
    const Example ex   = gen_projective(2);
    const GkmAction& a = *ex.action();
    std::vector<Weight> up;
    for (const Edge& e : a.edges())
        if (e.from < e.to)
            up.push_back(e.alpha);
    const std::vector<Weight> want{Weight{1, 0}, Weight{0, 1}, Weight{-1, 1}};
    CHECK(std::is_permutation(up.begin(), up.end(), want.begin(), want.end()));
}

TEST_CASE("validate_action reports each axiom")
{
    SUBCASE("reversal with the same weight")
    {
        RawAction raw = cp1_raw();
        raw.edges[1].alpha = Weight{1, 0};
        const auto v       = validate_action(raw);
        CHECK_FALSE(v.ok());
        CHECK(has_code(v.violations, "E_ORIENT"));
    }
    SUBCASE("proportional weights at a vertex")
    {
        RawAction raw;
        raw.n        = 2;
        raw.vertices = {"a", "b", "c"};
        raw.add_edge_pair(0, 1, Weight{1, 0});
        raw.add_edge_pair(0, 2, Weight{2, 0});
        raw.add_edge_pair(1, 2, Weight{0, 1});
        CHECK(has_code(validate_action(raw).violations, "E_GKM"));
    }
    SUBCASE("broken involution")
    {
        RawAction raw  = cp1_raw();
        raw.edges[1].bar = 1;
        CHECK(has_code(validate_action(raw).violations, "E_INVOLUTION"));
    }
    SUBCASE("irregular graph")
    {
        RawAction raw;
        raw.n        = 2;
        raw.vertices = {"a", "b", "c"};
        raw.add_edge_pair(0, 1, Weight{1, 0});
        raw.add_edge_pair(0, 2, Weight{0, 1});
        CHECK(has_code(validate_action(raw).violations, "E_VALENCE"));
    }
    SUBCASE("incompatible vertex representations")
    {
        // Square with weights that do not match modulo the edge weight.
        RawAction raw;
        raw.n        = 2;
        raw.vertices = {"a", "b", "c", "d"};
        raw.add_edge_pair(0, 1, Weight{1, 0});
        raw.add_edge_pair(1, 2, Weight{0, 1});
        raw.add_edge_pair(2, 3, Weight{-1, 0});
        raw.add_edge_pair(3, 0, Weight{1, 3});
        CHECK(has_code(validate_action(raw).violations, "E_COMPAT"));
    }
    SUBCASE("wrong dimension")
    {
        RawAction raw      = cp1_raw();
        raw.edges[0].alpha = Weight{1, 0, 0};
        CHECK(has_code(validate_action(raw).violations, "E_DIM"));
    }
    CHECK_THROWS_AS(make_action([] {
                        RawAction r = cp1_raw();
                        r.edges[1].alpha = Weight{1, 0};
                        return r;
                    }()),
                    InvalidAction);
}

TEST_CASE("validate_class examples")
{
    const ActionPtr a = make_action(cp1_raw());
    CHECK(validate_class(a, {LaurentPoly::constant(2, 5), LaurentPoly::constant(2, 5)}).ok());
    const auto bad = validate_class(a, {LaurentPoly::constant(2, 1), mono(Weight{0, 1})});
    CHECK_FALSE(bad.ok());
    CHECK(has_code(bad.violations, "E_COMPAT"));
    CHECK(validate_class(a, {mono(Weight{-1, 0}), mono(Weight{1, 0})}).ok());
}

TEST_CASE("symplectic_class examples")
{
    const ActionPtr a = make_action(cp1_raw());
    const auto ok     = symplectic_class(a, {Weight{-1, 0}, Weight{1, 0}});
    REQUIRE(ok.ok());
    CHECK(ok.value->multiplier(0) == 2);
    CHECK(ok.value->multiplier(1) == 2);

    const auto neg = symplectic_class(a, {Weight{1, 0}, Weight{-1, 0}});
    CHECK(has_code(neg.violations, "E_NONPOSITIVE"));
    const auto off = symplectic_class(a, {Weight{0, 0}, Weight{1, 1}});
    CHECK(has_code(off.violations, "E_NOT_MULTIPLE"));

    const Example cp2 = gen_projective(2);
    const auto c      = symplectic_class(cp2.action(), {Weight{0, 0}, Weight{1, 0}, Weight{0, 1}});
    REQUIRE(c.ok());
    for (std::size_t e = 0; e < cp2.action()->num_edges(); ++e)
        CHECK(c.value->multiplier(e) == 1);
}

TEST_CASE("monomial classes and their transforms")
{
    const Example cp2       = gen_projective(2);
    const SymplecticClass t = translated(cp2.cls, Weight{1, 1});
    CHECK(t.alpha_at(0) == Weight{1, 1});
    CHECK(t.is_symplectic());
    const SymplecticClass d = dilated(cp2.cls, -2);
    CHECK_FALSE(d.is_symplectic());
    CHECK(d.alpha_at(1) == Weight{-2, 0});
}

TEST_CASE("classes form a ring containing the constants")
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 40; ++i) {
        const Example ex = random_fixture(rng);
        const KClass f   = random_class(ex, rng);
        const KClass g   = random_class(ex, rng);
        // The operators re-validate; an invalid result would throw.
        const KClass s = f + g;
        const KClass p = f * g;
        const KClass d = f - g;
        for (std::size_t v = 0; v < ex.action()->num_vertices(); ++v) {
            CHECK(s.at(v) == f.at(v) + g.at(v));
            CHECK(p.at(v) == f.at(v) * g.at(v));
            CHECK(d.at(v) == f.at(v) - g.at(v));
        }
        CHECK(validate_class(ex.action(), f.values()).ok());
    }
}

TEST_CASE("symplectic values are moment maps for every generic direction")
{
    std::mt19937_64 rng(19);
    for (int i = 0; i < 30; ++i) {
        const Example ex        = random_fixture(rng);
        const SymplecticClass f = random_symplectic(ex, rng);
        const LatticeVector xi  = random_generic_xi(*ex.action(), rng);
        for (const Edge& e : ex.action()->edges()) {
            const Coord rise = pairing(f.alpha_at(e.to), xi) - pairing(f.alpha_at(e.from), xi);
            const Coord dir  = pairing(e.alpha, xi);
            CHECK(rise * dir > 0);
        }
    }
}

TEST_CASE("linear images and products stay valid")
{
    const Example img = gen_linear_image(gen_projective(2), {{2, 1}, {0, 1}});
    CHECK(img.action()->alpha(0) == Weight{2, 0});
    const Example prod = gen_product(gen_projective(1), gen_projective(2));
    CHECK(prod.action()->num_vertices() == 6);
    CHECK(prod.action()->valence() == 3);
    CHECK(prod.action()->vertex_name(0) == "P0.P0");
}
