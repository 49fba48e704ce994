#pragma once

// The character ring R(G) of an n-torus: Laurent polynomials with integer
// coefficients in n variables, plus the binomial-denominator fractions that
// appear as fixed-point summands.

#include <complex>
#include <iosfwd>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gkm/lattice.hpp"

namespace gkm {

/// Finite sum of characters, sum c_mu x^mu. Terms are kept in lexicographic
/// exponent order with no zero coefficients.
class LaurentPoly
{
  public:
    using Terms = std::map<Weight, BigInt>;

    explicit LaurentPoly(std::size_t dim = 0) : dim_(dim) {}

    static LaurentPoly constant(std::size_t dim, const BigInt& c);
    static LaurentPoly monomial(const Weight& mu, const BigInt& c = 1);

    std::size_t dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    BigInt coefficient(const Weight& mu) const;

    /// Adds c x^mu, dropping the term if it cancels.
    void add_term(const Weight& mu, const BigInt& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const BigInt& c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const BigInt& c) { return a *= c; }

    /// x^mu * (*this)
    LaurentPoly shifted(const Weight& mu) const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  private:
    void check_dim(std::size_t d) const;

    std::size_t dim_;
    Terms terms_;
};

enum class RingOp { add, sub, mul };
LaurentPoly ring_arith(const LaurentPoly& a, const LaurentPoly& b, RingOp op);

/// Canonical rendering, e.g. `-1*x^(0,1) + 2*x^(1,-2)`; the zero exponent
/// renders as a bare coefficient and the zero polynomial as `0`.
std::string to_string(const LaurentPoly& p);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Q with Q * (1 - x^gamma) == P, or nullopt when P is not in the ideal.
/// Throws ZeroWeight for gamma == 0.
std::optional<LaurentPoly> try_divide_exact(const LaurentPoly& p, const Weight& gamma);

/// As try_divide_exact but throws NotDivisible.
LaurentPoly divide_exact(const LaurentPoly& p, const Weight& gamma);

/// Canonical representative of mu modulo Z*gamma together with the
/// multiple: mu == rep + steps * gamma.
struct LineResidue
{
    Weight rep;
    Coord steps = 0;
};
LineResidue reduce_mod_line(const Weight& mu, const Weight& gamma);

/// P == Q modulo the ideal (1 - x^gamma), i.e. agreement after restriction to
/// the kernel of x^gamma.
bool congruent_mod_edge(const LaurentPoly& p, const LaurentPoly& q, const Weight& gamma);

/// Push-forward along G -> G/W, W the cyclic group of order m generated by
/// exp(xi/m): keeps the monomials with mu(xi) == 0 mod m.
LaurentPoly pushforward_quotient(const LaurentPoly& p, const LatticeVector& xi, Coord m);

/// Monomials with mu(xi) == 0 exactly: the part invariant under the circle
/// generated by xi.
LaurentPoly invariant_part(const LaurentPoly& p, const LatticeVector& xi);

/// numerator / prod_i (1 - x^{denominator[i]})
struct RationalChar
{
    LaurentPoly numerator;
    std::vector<Weight> denominator;

    RationalChar() = default;
    RationalChar(LaurentPoly num, std::vector<Weight> den);

    std::size_t dim() const { return numerator.dim(); }
};

/// A point of G = R^n / Z^n with exact rational coordinates, stored over a
/// common denominator and reduced into [0,1).
class TorusPoint
{
  public:
    TorusPoint() = default;
    explicit TorusPoint(const std::vector<Rational>& angles);

    std::size_t dim() const { return num_.size(); }
    std::vector<Rational> angles() const;

    /// alpha evaluated on the Lie algebra lift, reduced mod 1.
    Rational phase(const Weight& alpha) const;
    /// e^{2 pi i alpha(x)}
    std::complex<double> character(const Weight& alpha) const;

    /// this + t * xi
    TorusPoint translated(const LatticeVector& xi, const Rational& t) const;

  private:
    BigInt den_ = 1;
    std::vector<BigInt> num_;
};

std::ostream& operator<<(std::ostream& os, const TorusPoint& g);

/// Uniform angles with denominators drawn from [2, max_den].
TorusPoint random_torus_point(std::mt19937_64& rng, std::size_t dim, std::int64_t max_den = 1000000);

/// Smallest |1 - x^gamma(g)| over the denominator factors (infinity if none).
double pole_distance(const RationalChar& f, const TorusPoint& g);

std::complex<double> eval_numeric(const LaurentPoly& p, const TorusPoint& g);

/// Throws PoleAtPoint when some factor satisfies |1 - x^gamma(g)| <= pole_tol.
std::complex<double> eval_numeric(const RationalChar& f, const TorusPoint& g, double pole_tol = 1e-9);

} // namespace gkm
