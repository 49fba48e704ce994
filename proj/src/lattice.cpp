#include "gkm/lattice.hpp"

#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>

namespace gkm {

Coord checked_add(Coord a, Coord b)
{
    Coord r;
    if (__builtin_add_overflow(a, b, &r))
        throw ArithmeticOverflow("integer overflow in lattice coordinate");
    return r;
}

Coord checked_sub(Coord a, Coord b)
{
    Coord r;
    if (__builtin_sub_overflow(a, b, &r))
        throw ArithmeticOverflow("integer overflow in lattice coordinate");
    return r;
}

Coord checked_mul(Coord a, Coord b)
{
    Coord r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArithmeticOverflow("integer overflow in lattice coordinate");
    return r;
}

Coord floor_div(Coord a, Coord b)
{
    Coord q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

Coord floor_mod(Coord a, Coord b)
{
    return checked_sub(a, checked_mul(floor_div(a, b), b));
}

Coord pairing(const Weight& alpha, const LatticeVector& xi)
{
    if (alpha.size() != xi.size())
        throw DimMismatch("pairing: weight has dimension " + std::to_string(alpha.size()) +
                          ", lattice vector has " + std::to_string(xi.size()));
    Coord s = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        s = checked_add(s, checked_mul(alpha[i], xi[i]));
    return s;
}

namespace {

std::string render(std::span<const Coord> v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

} // namespace

std::string to_string(const Weight& w) { return render(w.span()); }
std::string to_string(const LatticeVector& v) { return render(v.span()); }
std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << to_string(w); }
std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << to_string(v); }

Coord content(std::span<const Coord> v)
{
    Coord g = 0;
    for (Coord x : v)
        g = std::gcd(g, x);
    if (g == 0)
        throw ZeroVector("the zero vector has no primitive part");
    return g;
}

bool proportional(const Weight& a, const Weight& b)
{
    if (a.size() != b.size())
        throw DimMismatch("proportional: dimension mismatch");
    // All 2x2 minors vanish.
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            BigInt m = BigInt(a[i]) * b[j] - BigInt(a[j]) * b[i];
            if (m != 0)
                return false;
        }
    return true;
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y)
{
    if (x.dim() != y.dim())
        throw DimMismatch("matrix product dimension mismatch");
    const std::size_t n = x.dim();
    IntMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Coord s = 0;
            for (std::size_t k = 0; k < n; ++k)
                s = checked_add(s, checked_mul(x(i, k), y(k, j)));
            r(i, j) = s;
        }
    return r;
}

BigInt IntMatrix::determinant() const
{
    // Bareiss fraction-free elimination.
    const std::size_t n = n_;
    if (n == 0)
        return 1;
    std::vector<BigInt> m(a_.begin(), a_.end());
    auto at = [&](std::size_t r, std::size_t c) -> BigInt& { return m[r * n + c]; };
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && at(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t c = 0; c < n; ++c)
                std::swap(at(k, c), at(p, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

LatticeVector BasisChange::column(std::size_t j) const
{
    LatticeVector v(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        v[i] = matrix(i, j);
    return v;
}

BasisChange complete_to_basis(const LatticeVector& xi)
{
    if (!is_primitive(xi)) {
        if (xi.is_zero())
            throw ZeroVector("cannot complete the zero vector to a basis");
        throw NotPrimitive("xi = " + to_string(xi) + " is not primitive");
    }
    const std::size_t n = xi.size();

    // Reduce v = xi to e_n by unimodular row operations A; track A^{-1} with
    // the matching column operations. Then A^{-1} e_n = xi.
    std::vector<Coord> v = xi.coords();
    IntMatrix a    = IntMatrix::identity(n);
    IntMatrix ainv = IntMatrix::identity(n);

    auto nonzero_count = [&] {
        std::size_t c = 0;
        for (Coord x : v)
            c += (x != 0);
        return c;
    };

    while (nonzero_count() > 1) {
        std::size_t piv = n;
        for (std::size_t i = 0; i < n; ++i)
            if (v[i] != 0 && (piv == n || std::llabs(v[i]) < std::llabs(v[piv])))
                piv = i;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == piv || v[j] == 0)
                continue;
            const Coord q = v[j] / v[piv];
            if (q == 0)
                continue;
            // row_j -= q * row_piv  <=>  col_piv += q * col_j in the inverse
            v[j] -= q * v[piv];
            for (std::size_t c = 0; c < n; ++c)
                a(j, c) = checked_sub(a(j, c), checked_mul(q, a(piv, c)));
            for (std::size_t r = 0; r < n; ++r)
                ainv(r, piv) = checked_add(ainv(r, piv), checked_mul(q, ainv(r, j)));
        }
    }

    std::size_t piv = 0;
    while (v[piv] == 0)
        ++piv;
    if (piv != n - 1) {
        std::swap(v[piv], v[n - 1]);
        for (std::size_t c = 0; c < n; ++c)
            std::swap(a(piv, c), a(n - 1, c));
        for (std::size_t r = 0; r < n; ++r)
            std::swap(ainv(r, piv), ainv(r, n - 1));
    }
    if (v[n - 1] == -1) {
        v[n - 1] = 1;
        for (std::size_t c = 0; c < n; ++c)
            a(n - 1, c) = -a(n - 1, c);
        for (std::size_t r = 0; r < n; ++r)
            ainv(r, n - 1) = -ainv(r, n - 1);
    }
    return BasisChange{ainv, a};
}

SplitWeight weight_in_basis(const Weight& alpha, const BasisChange& basis)
{
    const std::size_t n = basis.dim();
    if (alpha.size() != n)
        throw DimMismatch("weight_in_basis: dimension mismatch");
    SplitWeight s;
    s.beta.resize(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
        Coord acc = 0;
        for (std::size_t i = 0; i < n; ++i)
            acc = checked_add(acc, checked_mul(alpha[i], basis.matrix(i, j)));
        if (j + 1 < n)
            s.beta[j] = acc;
        else
            s.k = acc;
    }
    return s;
}

Weight weight_from_basis(std::span<const Coord> beta, Coord k, const BasisChange& basis)
{
    const std::size_t n = basis.dim();
    if (beta.size() + 1 != n)
        throw DimMismatch("weight_from_basis: dimension mismatch");
    Weight alpha(n);
    for (std::size_t i = 0; i < n; ++i) {
        Coord acc = checked_mul(basis.inverse(n - 1, i), k);
        for (std::size_t j = 0; j + 1 < n; ++j)
            acc = checked_add(acc, checked_mul(basis.inverse(j, i), beta[j]));
        alpha[i] = acc;
    }
    return alpha;
}

Coord cyclic_fiber_order(const Weight& alpha, const LatticeVector& xi)
{
    return std::llabs(pairing(alpha, xi));
}

} // namespace gkm
