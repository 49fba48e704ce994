#pragma once

// Standard example actions, each paired with a symplectic class.

#include <random>
#include <string>
#include <vector>

#include "gkm/action.hpp"

namespace gkm {

struct Example
{
    std::string name;
    SymplecticClass cls;

    const ActionPtr& action() const { return cls.action(); }
};

/// Complete graph on P_0..P_n, weight e_j - e_i on P_i -> P_j (e_0 = 0),
/// class alpha_{P_k} = e_k.
Example gen_projective(std::size_t n);

/// The two-vertex graph with weight alpha on p -> q and class
/// alpha_p = -alpha, alpha_q = alpha (so m_e = 2).
Example gen_sphere(const Weight& alpha);

/// Cartesian product of two actions on the product torus.
Example gen_product(const Example& a, const Example& b);

/// Moment graph of a smooth lattice polygon given counter-clockwise; edge
/// weights are the primitive edge directions, alpha_p the polygon vertices.
Example gen_polygon(const std::string& name, const std::vector<Weight>& corners);

/// Orbit of a regular weight lambda in Z^3 under coordinate permutations
/// (the full flag manifold of C^3): six vertices, valence three.
Example gen_flag3(const Weight& lambda);

/// Pushes every weight through an injective integer matrix (rows of `rows`).
Example gen_linear_image(const Example& ex, const std::vector<std::vector<Coord>>& rows);

/// The fixed desk-scale battery: CP^1, CP^2, CP^3, products, Hirzebruch,
/// hexagon, flag, and a non-primitive linear image. All have n <= 3 and at
/// most six vertices.
std::vector<Example> standard_fixtures();

/// A fixture from the standard battery pushed through a random small
/// unimodular-or-not integer matrix.
Example random_fixture(std::mt19937_64& rng);

/// Random class built from constants and monomial classes by sums, products
/// and multiplication by small elements of R(G). Valid by construction.
KClass random_class(const Example& ex, std::mt19937_64& rng);

/// Random symplectic class: positive dilation plus a random translation of
/// the example's class.
SymplecticClass random_symplectic(const Example& ex, std::mt19937_64& rng);

/// Random primitive xi with alpha_e(xi) != 0 on every edge.
LatticeVector random_generic_xi(const GkmAction& action, std::mt19937_64& rng, Coord range = 7);

} // namespace gkm
