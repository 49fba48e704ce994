#pragma once

// Integer lattice utilities: weights, lattice vectors, primitivity and
// unimodular basis completion around a distinguished circle generator.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gkm/errors.hpp"

namespace gkm {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Coord    = std::int64_t;

Coord checked_add(Coord a, Coord b);
Coord checked_sub(Coord a, Coord b);
Coord checked_mul(Coord a, Coord b);

/// Floor division and the matching non-negative remainder (b != 0).
Coord floor_div(Coord a, Coord b);
Coord floor_mod(Coord a, Coord b);

namespace detail {

/// Integer vector with checked arithmetic. `Tag` keeps weights (elements of
/// the dual lattice) and lattice vectors (elements of the group lattice)
/// apart at compile time.
template <class Tag>
class IntVector
{
  public:
    IntVector() = default;
    explicit IntVector(std::size_t n) : c_(n, 0) {}
    explicit IntVector(std::vector<Coord> c) : c_(std::move(c)) {}
    IntVector(std::initializer_list<Coord> c) : c_(c) {}

    std::size_t size() const { return c_.size(); }
    Coord  operator[](std::size_t i) const { return c_[i]; }
    Coord& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Coord>& coords() const { return c_; }
    std::span<const Coord> span() const { return c_; }

    bool is_zero() const
    {
        for (Coord x : c_)
            if (x != 0)
                return false;
        return true;
    }

    IntVector operator-() const
    {
        IntVector r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i)
            r.c_[i] = checked_sub(0, c_[i]);
        return r;
    }
    IntVector& operator+=(const IntVector& o)
    {
        check_dim(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] = checked_add(c_[i], o.c_[i]);
        return *this;
    }
    IntVector& operator-=(const IntVector& o)
    {
        check_dim(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] = checked_sub(c_[i], o.c_[i]);
        return *this;
    }
    friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
    friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
    friend IntVector operator*(Coord k, const IntVector& v)
    {
        IntVector r(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            r.c_[i] = checked_mul(k, v.c_[i]);
        return r;
    }

    friend bool operator==(const IntVector&, const IntVector&) = default;
    friend auto operator<=>(const IntVector& a, const IntVector& b) { return a.c_ <=> b.c_; }

  private:
    void check_dim(const IntVector& o) const
    {
        if (o.size() != size())
            throw DimMismatch("vector dimension mismatch");
    }
    std::vector<Coord> c_;
};

struct WeightTag;
struct LatticeTag;

} // namespace detail

/// Element of the weight lattice Z^n (exponent of a character).
using Weight = detail::IntVector<detail::WeightTag>;
/// Element of the group lattice Z^n (kernel of the exponential map).
using LatticeVector = detail::IntVector<detail::LatticeTag>;

/// alpha(xi).
Coord pairing(const Weight& alpha, const LatticeVector& xi);

std::string to_string(const Weight& w);
std::string to_string(const LatticeVector& v);
std::ostream& operator<<(std::ostream& os, const Weight& w);
std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

/// gcd of the absolute values of the coordinates; throws ZeroVector on 0.
Coord content(std::span<const Coord> v);

template <class V>
std::pair<V, Coord> primitive_part(const V& v)
{
    const Coord g = content(v.span());
    std::vector<Coord> p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        p[i] = v[i] / g;
    return {V(std::move(p)), g};
}

template <class V>
bool is_primitive(const V& v)
{
    return !v.is_zero() && content(v.span()) == 1;
}

/// True when a and b are linearly dependent over Q (zero counts as dependent).
bool proportional(const Weight& a, const Weight& b);

/// Dense square integer matrix, row-major.
class IntMatrix
{
  public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
    static IntMatrix identity(std::size_t n);

    std::size_t dim() const { return n_; }
    Coord  operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
    Coord& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    BigInt determinant() const;

  private:
    std::size_t n_ = 0;
    std::vector<Coord> a_;
};

/// Unimodular change of basis of the group lattice whose last column is the
/// circle generator xi. Columns of `matrix` are the new basis vectors
/// u_1..u_{n-1}, xi; `inverse` is its integer inverse.
struct BasisChange
{
    IntMatrix matrix;
    IntMatrix inverse;

    std::size_t dim() const { return matrix.dim(); }
    LatticeVector column(std::size_t j) const;
    LatticeVector xi() const { return column(dim() - 1); }
};

/// Completes a primitive xi to a basis of Z^n with xi as the last vector.
/// Throws NotPrimitive (or ZeroVector).
BasisChange complete_to_basis(const LatticeVector& xi);

/// A weight written in the coordinates dual to a BasisChange:
/// alpha = beta(y) + k x, with k = alpha(xi).
struct SplitWeight
{
    std::vector<Coord> beta;
    Coord k = 0;
};

SplitWeight weight_in_basis(const Weight& alpha, const BasisChange& basis);

/// Inverse of weight_in_basis.
Weight weight_from_basis(std::span<const Coord> beta, Coord k, const BasisChange& basis);

/// Order of the finite cyclic group G_xi cap G_alpha, i.e. |alpha(xi)|.
/// Zero means the circle lies inside the kernel of alpha.
Coord cyclic_fiber_order(const Weight& alpha, const LatticeVector& xi);

} // namespace gkm
