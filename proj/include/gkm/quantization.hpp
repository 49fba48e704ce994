#pragma once

// The character map chi: K_G(Gamma) -> R(G). Two independent routes are
// provided: the polarized geometric-series expansion (character_expand) and
// exact division over a common binomial denominator (character_oracle).

#include <map>
#include <span>
#include <vector>

#include "gkm/action.hpp"

namespace gkm {

/// Per-vertex data of a polarization by a generic xi. Each geometric edge at
/// p contributes the orientation e with alpha_e(xi) > 0.
struct VertexPolarization
{
    std::vector<std::size_t> edges;  ///< oriented edge ids in E_p
    std::vector<Weight> weights;     ///< alpha_e for e in E_p
    std::size_t sigma = 0;           ///< number of e in E_p ending at p
    Weight two_delta;                ///< sum of alpha_e over E_p
    Weight two_delta_sharp;          ///< signed sum, + when p = i(e), - when p = t(e)

    int sign() const { return sigma % 2 == 0 ? 1 : -1; }
    /// delta#_p - delta_p, always integral.
    Weight shift() const;
};

struct Polarization
{
    ActionPtr action;
    LatticeVector xi;
    std::vector<VertexPolarization> at;
};

/// Throws NotPrimitive, or NotGeneric naming the first edge with alpha_e(xi) = 0.
Polarization polarize(ActionPtr action, const LatticeVector& xi);

/// Validates that xi is primitive and pairs nontrivially with every edge.
void require_generic(const GkmAction& action, const LatticeVector& xi);

/// Memoized vector partition function for a fixed multiset of weights that
/// all pair positively with xi.
class KostantCounter
{
  public:
    KostantCounter(std::vector<Weight> weights, LatticeVector xi);

    /// Number of ways to write target as sum n_j w_j with n_j >= 0.
    BigInt operator()(const Weight& target);

  private:
    BigInt count(std::size_t j, const Weight& v);

    std::vector<Weight> weights_;
    std::vector<Coord> pair_;
    LatticeVector xi_;
    std::map<std::pair<std::size_t, Weight>, BigInt> memo_;
};

BigInt kostant_count(std::span<const Weight> weights, const Weight& target, const LatticeVector& xi);

/// Kostant-type multiplicity: sum_p (-1)^p N_p(alpha - alpha_p + delta#_p - delta_p).
class MultiplicityFormula
{
  public:
    MultiplicityFormula(const SymplecticClass& f, const Polarization& pol);
    BigInt operator()(const Weight& alpha);

  private:
    std::vector<Weight> base_;  ///< alpha_p - shift_p
    std::vector<int> sign_;
    std::vector<KostantCounter> counters_;
};

BigInt multiplicity(const SymplecticClass& f, const Polarization& pol, const Weight& alpha);

/// f_p / prod_{i(e)=p} (1 - x^{alpha_e}) for every vertex.
std::vector<RationalChar> fixed_point_summands(const KClass& f);

struct ExpandOptions
{
    /// Upper limit on enumerated series terms before TruncationOverflow.
    std::size_t term_budget = 50'000'000;
    /// Drop monomials outside the box cut out by n further generic directions.
    bool box_filter = true;
};

struct CharacterResult
{
    LaurentPoly poly;
    std::vector<Weight> hull_vertices;  ///< filled for symplectic input
};

/// chi(f) via the polarized expansion, truncated where the opposite
/// polarization proves every further coefficient vanishes.
CharacterResult character_expand(const KClass& f, const Polarization& pol, const ExpandOptions& opts = {});
CharacterResult character_expand(const SymplecticClass& f, const Polarization& pol, const ExpandOptions& opts = {});

/// chi(f) by exact division of the numerator over prod_j (1 - x^{M_j a_j}),
/// a_j the primitive edge directions and M_j the lcm of the multiples that
/// occur. Throws InternalDivisionFailure if a factor does not divide.
LaurentPoly character_oracle(const KClass& f);

/// Exact convex-hull membership over Q.
bool in_convex_hull(const Weight& x, std::span<const Weight> points);
/// Points of the set that are vertices of its convex hull (deduplicated,
/// in input order).
std::vector<Weight> hull_vertices(std::span<const Weight> points);

struct HullReport
{
    std::vector<Weight> hull_vertices;
    std::vector<Weight> outside;                              ///< support weights not in the hull
    std::vector<std::pair<Weight, BigInt>> extremal_coefficients;
    bool support_in_hull = true;
    bool extremal_multiplicity_one = true;

    bool ok() const { return support_in_hull && extremal_multiplicity_one; }
};

HullReport hull_report(const SymplecticClass& f, const CharacterResult& chr);

} // namespace gkm
