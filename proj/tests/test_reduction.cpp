#include <doctest.h>

#include <random>

#include "gkm/generators.hpp"
#include "gkm/reduction.hpp"
#include "gkm/selftest.hpp"

using namespace gkm;

namespace {

Example cp1()
{
    RawAction raw;
    raw.n        = 2;
    raw.vertices = {"p", "q"};
    raw.add_edge_pair(0, 1, Weight{1, 0});
    return Example{"cp1", symplectic_class(make_action(raw), {Weight{-1, 0}, Weight{1, 0}}).get()};
}

LaurentPoly one(std::size_t n = 2)
{
    return LaurentPoly::constant(n, 1);
}

} // namespace

TEST_CASE("moment maps on the two-vertex example")
{
    const Example ex      = cp1();
    const MomentMap m     = moment_map(ex.action(), LatticeVector{1, 0});
    CHECK(m.phi[0] < m.phi[1]);
    CHECK(m.phi[0] == Rational(0));
    CHECK(m.phi[1] == Rational(1) + Rational(1, 4));
    const MomentMap s = symplectic_moment_map(ex.cls, LatticeVector{1, 0});
    CHECK(s.phi == std::vector<Rational>{Rational(-1), Rational(1)});
    const MomentMap r = moment_map(ex.action(), LatticeVector{-1, 0});
    CHECK(r.phi[1] < r.phi[0]);
    CHECK_THROWS_AS(moment_map(ex.action(), LatticeVector{0, 1}), NotGeneric);
    CHECK_THROWS_AS(moment_map_from_values(ex.action(), LatticeVector{1, 0}, {Rational(2), Rational(1)}), Error);
}

TEST_CASE("a directed cycle has no moment map")
{
    // Triangle whose weights orient it cyclically for xi = (1, 0). The
    // structure is only checked for the orientation, so bypass validation.
    RawAction raw;
    raw.n        = 2;
    raw.vertices = {"a", "b", "c"};
    raw.add_edge_pair(0, 1, Weight{1, 0});
    raw.add_edge_pair(1, 2, Weight{1, 1});
    raw.add_edge_pair(2, 0, Weight{1, -1});
    const auto v = validate_action(raw);
    if (v.ok())
        CHECK_THROWS_AS(moment_map(std::make_shared<const GkmAction>(*v.value), LatticeVector{1, 0}), CycleError);
    else
        CHECK_FALSE(v.violations.empty());
}

TEST_CASE("moment maps increase along every positive edge")
{
    std::mt19937_64 rng(61);
    for (int i = 0; i < 30; ++i) {
        const Example ex       = random_fixture(rng);
        const LatticeVector xi = random_generic_xi(*ex.action(), rng);
        const MomentMap m      = moment_map(ex.action(), xi);
        const MomentMap s      = symplectic_moment_map(random_symplectic(ex, rng), xi);
        for (const Edge& e : ex.action()->edges())
            if (pairing(e.alpha, xi) > 0) {
                CHECK(m.phi[e.to] > m.phi[e.from]);
                CHECK(s.phi[e.to] > s.phi[e.from]);
            }
    }
}

TEST_CASE("crossing sets")
{
    const Example cp2 = gen_projective(2);
    const MomentMap m = moment_map(cp2.action(), LatticeVector{1, 2});
    const CrossingSet low = crossing_set(m, Rational(1, 2));
    CHECK(low.edges.size() == 2);
    for (std::size_t e : low.edges)
        CHECK(cp2.action()->edge(e).from == 0);
    CHECK(crossing_set(m, Rational(-1)).edges.empty());
    CHECK_THROWS_AS(crossing_set(m, m.phi[1]), NotRegular);

    const Example ex = cp1();
    const CrossingSet mid = crossing_set(symplectic_moment_map(ex.cls, LatticeVector{1, 0}), Rational(0));
    REQUIRE(mid.edges.size() == 1);
    CHECK(ex.action()->edge(mid.edges[0]).from == 0);
}

TEST_CASE("reduced characters and wall crossing on the two-vertex example")
{
    const Example ex  = cp1();
    const MomentMap m = symplectic_moment_map(ex.cls, LatticeVector{1, 0});
    const KClass f    = ex.cls.base();
    CHECK(vertex_residue(f, 0, m.xi) == LaurentPoly::constant(2, -1));
    CHECK(vertex_residue(f, 1, m.xi) == one());
    CHECK(chi_reduced(f, m, Rational(0)) == one());
    CHECK(chi_reduced(f, m, Rational(-2)).is_zero());
    CHECK(chi_reduced(f, m, Rational(2)).is_zero());

    const WallCrossing w = wall_crossing_check(f, m, Rational(-2), Rational(0));
    CHECK(w.vertex == 0);
    CHECK(w.pass);
    CHECK(w.difference == LaurentPoly::constant(2, -1));
    CHECK(wall_crossing_check(f, m, Rational(0), Rational(-2)).pass);
    CHECK_THROWS_AS(wall_crossing_check(f, m, Rational(-2), Rational(2)), WrongWallCount);
    CHECK_THROWS_AS(wall_crossing_check(f, m, Rational(-3), Rational(-2)), WrongWallCount);
}

TEST_CASE("reduced characters are invariant and telescope across walls")
{
    std::mt19937_64 rng(67);
    for (int i = 0; i < 15; ++i) {
        const Example ex       = random_fixture(rng);
        const KClass f         = random_class(ex, rng);
        const LatticeVector xi = random_generic_xi(*ex.action(), rng);
        const MomentMap m      = moment_map(ex.action(), xi);
        std::vector<Rational> levels = m.phi;
        std::sort(levels.begin(), levels.end());
        // Below every vertex the reduced character is the total residue, which vanishes.
        CHECK(chi_reduced(f, m, levels.front() - 1).is_zero());
        for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
            const Rational c = (levels[k] + levels[k + 1]) / 2;
            const LaurentPoly chi = chi_reduced(f, m, c);
            for (const auto& [mu, coef] : chi.terms())
                CHECK(pairing(mu, xi) == 0);
            if (k + 2 < levels.size())
                CHECK(wall_crossing_check(f, m, c, (levels[k + 1] + levels[k + 2]) / 2).pass);
        }
    }
}

TEST_CASE("edge restriction")
{
    std::mt19937_64 rng(71);
    const Example cp2 = gen_projective(2);
    for (std::size_t e = 0; e < cp2.action()->num_edges(); ++e)
        CHECK(edge_compat_check(cp2.cls.base(), e, 10, rng).pass);

    std::vector<LaurentPoly> vs = cp2.cls.base().values();
    vs[2].add_term(Weight{1, 1}, 1);
    std::size_t failing = 0;
    for (std::size_t e = 0; e < cp2.action()->num_edges(); ++e)
        failing += edge_compat_check(*cp2.action(), vs, e, 10, rng).pass ? 0 : 1;
    CHECK(failing > 0);
}

TEST_CASE("quantization commutes with reduction")
{
    const Example cp2 = gen_projective(2);
    const LatticeVector xi{1, -1};
    CHECK_THROWS_AS(qr_check(translated(cp2.cls, Weight{1, 1}), xi), ZeroNotRegular);

    const QrResult r = qr_check(translated(dilated(cp2.cls, 3), Weight{1, 0}), xi);
    CHECK(r.pass);
    CHECK(r.reduced == r.invariant);
    CHECK_FALSE(r.reduced.is_zero());

    const Example ex = cp1();
    const QrResult s = qr_check(ex.cls, LatticeVector{1, 0});
    CHECK(s.pass);
    CHECK(s.reduced == one());

    std::mt19937_64 rng(73);
    for (int i = 0; i < 10; ++i) {
        const Example fx        = random_fixture(rng);
        const SymplecticClass f = random_symplectic(fx, rng);
        CHECK(qr_check(f, random_zero_regular_xi(f, rng)).pass);
    }
}
