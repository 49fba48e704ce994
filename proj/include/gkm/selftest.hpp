#pragma once

// Randomized invariant batteries, deterministic in the seed.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gkm/generators.hpp"
#include "gkm/reduction.hpp"

namespace gkm {

struct SelftestEntry
{
    std::string battery;
    std::string property;  ///< the axiom or theorem being exercised
    std::size_t cases = 0;
    std::vector<std::string> failures;

    bool pass() const { return failures.empty(); }
};

struct SelftestOptions
{
    std::uint64_t seed = 42;
    std::size_t classes        = 100;  ///< random classes for the character batteries
    std::size_t points         = 20;   ///< numeric sample points per case
    std::size_t directions     = 5;    ///< generic xi per case
    std::size_t symplectic     = 50;
    std::size_t rational_chars = 200;
    std::size_t stars          = 25;
    std::size_t qr_cases       = 25;
    std::size_t edge_samples   = 10;
    /// Adds a deliberately broken class to the run.
    bool inject_corrupt = false;
};

std::vector<SelftestEntry> run_selftest(const SelftestOptions& opts);
std::string render_selftest(const std::vector<SelftestEntry>& entries);

/// Random torus point avoiding the poles of every given fraction by at
/// least min_dist.
TorusPoint pole_free_point(std::mt19937_64& rng, const std::vector<RationalChar>& fs, double min_dist = 1e-3);

/// d pairwise independent weights in Z^n, all nontrivial on xi.
std::vector<Weight> random_star(std::mt19937_64& rng, std::size_t n, std::size_t d, const LatticeVector& xi,
                                Coord range = 3);

/// Random fraction with up to `max_den` denominator weights, each nontrivial
/// on xi.
RationalChar random_rational_char(std::mt19937_64& rng, std::size_t n, const LatticeVector& xi,
                                  std::size_t max_den = 3);

/// Primitive xi generic for the action with alpha_p(xi) != 0 for all p.
LatticeVector random_zero_regular_xi(const SymplecticClass& f, std::mt19937_64& rng, Coord range = 7);

/// Sum over vertices of the numerically evaluated fixed-point summands.
std::complex<double> localization_sum(const KClass& f, const TorusPoint& g);

} // namespace gkm
