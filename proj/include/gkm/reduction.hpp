#pragma once

// Reduction along a circle subgroup on the graph side: moment maps, crossing
// sets, reduced characters as sums of vertex residues, and the checks that
// tie them to the full character.

#include <random>
#include <vector>

#include "gkm/quantization.hpp"

namespace gkm {

/// Vertex function increasing along every edge oriented by alpha_e(xi) > 0.
struct MomentMap
{
    ActionPtr action;
    LatticeVector xi;
    std::vector<Rational> phi;
};

/// Longest-path rank in the orientation digraph plus index / (2|V|).
/// Throws NotGeneric, or CycleError naming a directed cycle.
MomentMap moment_map(ActionPtr action, const LatticeVector& xi);

/// Accepts user-supplied values after checking that they are distinct and
/// increase along positively oriented edges; throws Error otherwise.
MomentMap moment_map_from_values(ActionPtr action, const LatticeVector& xi, std::vector<Rational> phi);

/// phi(p) = alpha_p(xi). Ties between vertices are broken by a perturbation
/// small enough to keep every sign and every strict inequality.
MomentMap symplectic_moment_map(const SymplecticClass& f, const LatticeVector& xi);

struct CrossingSet
{
    Rational c;
    std::vector<std::size_t> edges;  ///< oriented edges with phi(t) > c > phi(i)
};

/// Throws NotRegular when c is a critical value.
CrossingSet crossing_set(const MomentMap& m, const Rational& c);

/// Sum of Res_T of the fixed-point summands over the vertices above c.
/// The result is supported on the annihilator of xi.
LaurentPoly chi_reduced(const KClass& f, const MomentMap& m, const Rational& c);

/// Res_T of the fixed-point summand at p.
LaurentPoly vertex_residue(const KClass& f, std::size_t p, const LatticeVector& xi);

struct WallCrossing
{
    std::size_t vertex = 0;    ///< the unique critical vertex between the levels
    LaurentPoly difference;    ///< chi_lo - chi_hi
    LaurentPoly residue;       ///< Res_T at the critical vertex
    bool pass = false;
};

/// Throws WrongWallCount unless exactly one phi(p) lies strictly between c
/// and c2 (in either order).
WallCrossing wall_crossing_check(const KClass& f, const MomentMap& m, const Rational& c, const Rational& c2);

struct EdgeCompat
{
    std::size_t samples = 0;
    double max_error    = 0;
    bool pass           = false;
};

/// Compares f_p / prod_{e' != e} (1 - x^{alpha_e'}) at p = i(e) with the
/// same expression at t(e) on random points where x^{alpha_e} = 1. The
/// values need not form a valid class. Throws PoleAtPoint when the retry
/// budget runs out.
EdgeCompat edge_compat_check(const GkmAction& action, const std::vector<LaurentPoly>& values, std::size_t e,
                             std::size_t samples, std::mt19937_64& rng, double tol = 1e-6);
EdgeCompat edge_compat_check(const KClass& f, std::size_t e, std::size_t samples, std::mt19937_64& rng,
                             double tol = 1e-6);

struct QrResult
{
    LaurentPoly invariant;  ///< circle-invariant part of chi(f)
    LaurentPoly reduced;    ///< chi_reduced at c = 0 with phi(p) = alpha_p(xi)
    bool pass = false;
};

/// Throws ZeroNotRegular if some alpha_p(xi) = 0.
QrResult qr_check(const SymplecticClass& f, const LatticeVector& xi, const ExpandOptions& opts = {});

} // namespace gkm
