#include <doctest.h>

#include <random>

#include "gkm/lattice.hpp"

using namespace gkm;

namespace {

LatticeVector random_primitive(std::mt19937_64& rng, std::size_t n, Coord range)
{
    std::uniform_int_distribution<Coord> d(-range, range);
    for (;;) {
        LatticeVector v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = d(rng);
        if (is_primitive(v))
            return v;
    }
}

// Integer matrix-vector products written out directly.
Coord dot_column(const IntMatrix& m, std::size_t col, const Weight& a)
{
    Coord s = 0;
    for (std::size_t r = 0; r < m.dim(); ++r)
        s += m(r, col) * a[r];
    return s;
}

} // namespace

TEST_CASE("primitive_part")
{
    CHECK(primitive_part(Weight{2, 3}) == std::pair{Weight{2, 3}, Coord{1}});
    CHECK(primitive_part(Weight{4, 6}) == std::pair{Weight{2, 3}, Coord{2}});
    CHECK(primitive_part(Weight{0, -5}) == std::pair{Weight{0, -1}, Coord{5}});
    CHECK_THROWS_AS(primitive_part(Weight{0, 0}), ZeroVector);
}

TEST_CASE("primitive_part scales with positive multiples")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Coord> d(-20, 20), k(1, 9);
    for (int i = 0; i < 200; ++i) {
        Weight v{d(rng), d(rng), d(rng)};
        if (v.is_zero())
            continue;
        const Coord m   = k(rng);
        const auto base = primitive_part(v);
        const auto big  = primitive_part(m * v);
        CHECK(big.first == base.first);
        CHECK(big.second == m * base.second);
        CHECK(is_primitive(base.first));
    }
}

TEST_CASE("complete_to_basis examples")
{
    const BasisChange b = complete_to_basis(LatticeVector{0, 1});
    CHECK(b.column(0) == LatticeVector{1, 0});
    CHECK(b.column(1) == LatticeVector{0, 1});

    const BasisChange c = complete_to_basis(LatticeVector{2, 3});
    CHECK(c.xi() == LatticeVector{2, 3});
    CHECK(abs(c.matrix.determinant()) == 1);
    CHECK(c.matrix * c.inverse == IntMatrix::identity(2));

    CHECK_THROWS_AS(complete_to_basis(LatticeVector{2, 4}), NotPrimitive);
}

TEST_CASE("weight_in_basis examples")
{
    const BasisChange id = complete_to_basis(LatticeVector{0, 1});
    const SplitWeight s  = weight_in_basis(Weight{5, 7}, id);
    CHECK(s.beta == std::vector<Coord>{5});
    CHECK(s.k == 7);

    CHECK(weight_in_basis(Weight{3, -2}, complete_to_basis(LatticeVector{2, 3})).k == 0);

    const BasisChange c = complete_to_basis(LatticeVector{2, 3});
    const SplitWeight t = weight_in_basis(Weight{1, 0}, c);
    CHECK(t.k == 2);
    // beta_j = alpha(u_j) for the non-xi columns.
    CHECK(t.beta[0] == dot_column(c.matrix, 0, Weight{1, 0}));
    CHECK(weight_from_basis(t.beta, t.k, c) == Weight{1, 0});
}

TEST_CASE("basis completion is unimodular and round-trips")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Coord> d(-50, 50);
    for (std::size_t n = 1; n <= 4; ++n) {
        for (int rep = 0; rep < 25; ++rep) {
            const LatticeVector xi = random_primitive(rng, n, 9);
            const BasisChange b    = complete_to_basis(xi);
            REQUIRE(b.xi() == xi);
            CHECK(abs(b.matrix.determinant()) == 1);
            CHECK(b.matrix * b.inverse == IntMatrix::identity(n));
            for (int i = 0; i < 40; ++i) {
                Weight a(n);
                for (std::size_t j = 0; j < n; ++j)
                    a[j] = d(rng);
                const SplitWeight s = weight_in_basis(a, b);
                CHECK(s.k == pairing(a, xi));
                CHECK(weight_from_basis(s.beta, s.k, b) == a);
            }
        }
    }
}

TEST_CASE("a primitive vector pairs to one with a row of the inverse basis")
{
    std::mt19937_64 rng(5);
    for (std::size_t n = 2; n <= 4; ++n)
        for (int rep = 0; rep < 30; ++rep) {
            const LatticeVector v = random_primitive(rng, n, 12);
            const BasisChange b   = complete_to_basis(v);
            bool found            = false;
            for (std::size_t r = 0; r < n; ++r) {
                Coord s = 0;
                for (std::size_t c = 0; c < n; ++c)
                    s += b.inverse(r, c) * v[c];
                found = found || s == 1;
            }
            CHECK(found);
        }
}

TEST_CASE("cyclic_fiber_order")
{
    CHECK(cyclic_fiber_order(Weight{1, 0}, LatticeVector{0, 1}) == 0);
    CHECK(cyclic_fiber_order(Weight{3, 1}, LatticeVector{1, 0}) == 3);
    CHECK(cyclic_fiber_order(Weight{-2, 5}, LatticeVector{1, 1}) == 3);
}

TEST_CASE("checked arithmetic detects overflow")
{
    const Coord big = std::numeric_limits<Coord>::max();
    CHECK_THROWS_AS(checked_add(big, 1), ArithmeticOverflow);
    CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), ArithmeticOverflow);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_mod(-7, 2) == 1);
}

TEST_CASE("proportional")
{
    CHECK(proportional(Weight{1, 0}, Weight{2, 0}));
    CHECK(proportional(Weight{1, -2, 3}, Weight{-2, 4, -6}));
    CHECK_FALSE(proportional(Weight{1, 0}, Weight{1, 1}));
}
