#pragma once

// Regularized integration over a circle subgroup T = exp(R xi): the
// difference of the z^0 coefficients of the expansions of a fixed-point
// summand outside and inside the unit circle, landing in R(G/T).

#include <complex>
#include <vector>

#include "gkm/charring.hpp"

namespace gkm {

/// One denominator factor (1 - a z^k) with a = y^beta.
struct ZFactor
{
    std::vector<Coord> beta;
    Coord k = 0;
};

/// A RationalChar rewritten in coordinates (y_1..y_{n-1}, x) dual to a basis
/// whose last vector is xi; the numerator exponent (beta, k) stands for
/// y^beta z^k.
struct ZForm
{
    BasisChange basis;
    LaurentPoly numerator;          ///< exponents (beta..., k)
    std::vector<ZFactor> factors;

    /// Number of factors with k_i < 0.
    std::size_t negative_count() const;
};

/// Throws NotPrimitive, or NotGeneric when a factor has k_i = 0.
ZForm to_z_form(const RationalChar& f, const LatticeVector& xi);
RationalChar from_z_form(const ZForm& z);

enum class Side { plus, minus };

/// Contour integral (1/2 pi i) int f dz/z over |z| > 1 (plus) or |z| < 1
/// (minus), as a Laurent polynomial in the y-variables (dimension n - 1).
LaurentPoly res_half(const ZForm& z, Side side);

/// y-polynomial re-embedded into Z^n as weights annihilating xi.
LaurentPoly embed_annihilator(const LaurentPoly& y_poly, const BasisChange& basis);

struct ResidueValue
{
    LaurentPoly plus;
    LaurentPoly minus;
    LaurentPoly total;  ///< plus - minus
};

/// Res_T of f along the circle generated by xi; all exponents pair to zero
/// with xi.
ResidueValue res_T(const RationalChar& f, const LatticeVector& xi);

/// Average of f over the |alpha(xi)| points of the fiber of ker(x^alpha) ->
/// G/T above the image of g. Throws NotGeneric if alpha(xi) = 0 and
/// PoleAtPoint if f is singular at some fiber point.
std::complex<double> fiber_average_numeric(const RationalChar& f, const Weight& alpha, const LatticeVector& xi,
                                           const TorusPoint& g, double pole_tol = 1e-9);

/// Sum over denominator factors i of -sign(k_i) times the fiber average of
/// f with factor i removed: the residue sum at the poles on the unit circle.
std::complex<double> residue_by_fiber_averages(const RationalChar& f, const LatticeVector& xi, const TorusPoint& g,
                                               double pole_tol = 1e-9);

/// Smallest |1 - x^beta| over the factors of each f-hat_i on the fibers used
/// by residue_by_fiber_averages (used to reject near-singular samples).
double fiber_pole_distance(const RationalChar& f, const LatticeVector& xi, const TorusPoint& g);

} // namespace gkm
