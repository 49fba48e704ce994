#include "gkm/charring.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

namespace gkm {

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::constant(std::size_t dim, const BigInt& c)
{
    LaurentPoly p(dim);
    p.add_term(Weight(dim), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const Weight& mu, const BigInt& c)
{
    LaurentPoly p(mu.size());
    p.add_term(mu, c);
    return p;
}

void LaurentPoly::check_dim(std::size_t d) const
{
    if (d != dim_)
        throw DimMismatch("Laurent polynomial of dimension " + std::to_string(dim_) +
                          " combined with dimension " + std::to_string(d));
}

BigInt LaurentPoly::coefficient(const Weight& mu) const
{
    auto it = terms_.find(mu);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(const Weight& mu, const BigInt& c)
{
    check_dim(mu.size());
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& [mu, c] : r.terms_)
        c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    check_dim(o.dim_);
    for (const auto& [mu, c] : o.terms_)
        add_term(mu, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    check_dim(o.dim_);
    for (const auto& [mu, c] : o.terms_)
        add_term(mu, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    a.check_dim(b.dim_);
    LaurentPoly r(a.dim_);
    for (const auto& [mu, c] : a.terms_)
        for (const auto& [nu, d] : b.terms_)
            r.add_term(mu + nu, c * d);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const BigInt& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mu, coef] : terms_)
        coef *= c;
    return *this;
}

LaurentPoly LaurentPoly::shifted(const Weight& mu) const
{
    check_dim(mu.size());
    LaurentPoly r(dim_);
    for (const auto& [nu, c] : terms_)
        r.terms_.emplace_hint(r.terms_.end(), nu + mu, c);
    return r;
}

LaurentPoly ring_arith(const LaurentPoly& a, const LaurentPoly& b, RingOp op)
{
    switch (op) {
    case RingOp::add: return a + b;
    case RingOp::sub: return a - b;
    case RingOp::mul: return a * b;
    }
    return a;
}

std::string to_string(const LaurentPoly& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mu, c] : p.terms()) {
        BigInt mag = c;
        if (first) {
            if (c < 0) {
                os << '-';
                mag = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0)
                mag = -c;
        }
        os << mag;
        if (!mu.is_zero())
            os << "*x^" << to_string(mu);
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

// ---------------------------------------------------------------------------
// Division and congruences along a line Z*gamma

LineResidue reduce_mod_line(const Weight& mu, const Weight& gamma)
{
    if (mu.size() != gamma.size())
        throw DimMismatch("reduce_mod_line: dimension mismatch");
    std::size_t piv = 0;
    while (piv < gamma.size() && gamma[piv] == 0)
        ++piv;
    if (piv == gamma.size())
        throw ZeroWeight("cannot reduce modulo the zero weight");
    const Coord g    = gamma[piv];
    const Coord absg = g < 0 ? -g : g;
    Coord steps      = floor_div(mu[piv], absg);
    if (g < 0)
        steps = -steps;
    return {mu - steps * gamma, steps};
}

namespace {

/// Terms of P grouped by their line mu + Z*gamma, keyed by the canonical
/// representative; each line holds (steps, coefficient) pairs.
std::map<Weight, std::map<Coord, BigInt>> split_into_lines(const LaurentPoly& p, const Weight& gamma)
{
    std::map<Weight, std::map<Coord, BigInt>> lines;
    for (const auto& [mu, c] : p.terms()) {
        auto [rep, steps] = reduce_mod_line(mu, gamma);
        lines[rep][steps] += c;
    }
    return lines;
}

} // namespace

std::optional<LaurentPoly> try_divide_exact(const LaurentPoly& p, const Weight& gamma)
{
    if (gamma.size() != p.dim())
        throw DimMismatch("divide_exact: dimension mismatch");
    if (gamma.is_zero())
        throw ZeroWeight("divide_exact: zero weight");

    // On each line the polynomial is univariate in t = x^gamma, and division
    // by (1 - t) is a running prefix sum that must end at zero.
    LaurentPoly q(p.dim());
    for (const auto& [rep, line] : split_into_lines(p, gamma)) {
        const Coord lo = line.begin()->first;
        const Coord hi = line.rbegin()->first;
        BigInt prefix  = 0;
        auto it        = line.begin();
        for (Coord j = lo; j < hi; ++j) {
            if (it != line.end() && it->first == j) {
                prefix += it->second;
                ++it;
            }
            if (prefix != 0)
                q.add_term(rep + j * gamma, prefix);
        }
        prefix += line.rbegin()->second;
        if (prefix != 0)
            return std::nullopt;
    }
    return q;
}

LaurentPoly divide_exact(const LaurentPoly& p, const Weight& gamma)
{
    auto q = try_divide_exact(p, gamma);
    if (!q)
        throw NotDivisible(to_string(p) + " is not divisible by 1 - x^" + to_string(gamma));
    return std::move(*q);
}

bool congruent_mod_edge(const LaurentPoly& p, const LaurentPoly& q, const Weight& gamma)
{
    if (gamma.is_zero())
        throw ZeroWeight("congruent_mod_edge: zero weight");
    std::map<Weight, BigInt> residues;
    for (const auto& [mu, c] : p.terms())
        residues[reduce_mod_line(mu, gamma).rep] += c;
    for (const auto& [mu, c] : q.terms())
        residues[reduce_mod_line(mu, gamma).rep] -= c;
    return std::all_of(residues.begin(), residues.end(), [](const auto& kv) { return kv.second == 0; });
}

LaurentPoly pushforward_quotient(const LaurentPoly& p, const LatticeVector& xi, Coord m)
{
    if (m < 1)
        throw Error("pushforward_quotient: order must be positive");
    LaurentPoly r(p.dim());
    for (const auto& [mu, c] : p.terms())
        if (floor_mod(pairing(mu, xi), m) == 0)
            r.add_term(mu, c);
    return r;
}

LaurentPoly invariant_part(const LaurentPoly& p, const LatticeVector& xi)
{
    LaurentPoly r(p.dim());
    for (const auto& [mu, c] : p.terms())
        if (pairing(mu, xi) == 0)
            r.add_term(mu, c);
    return r;
}

RationalChar::RationalChar(LaurentPoly num, std::vector<Weight> den)
    : numerator(std::move(num)), denominator(std::move(den))
{
    for (const auto& g : denominator) {
        if (g.size() != numerator.dim())
            throw DimMismatch("denominator weight dimension mismatch");
        if (g.is_zero())
            throw ZeroWeight("denominator factor 1 - x^0 vanishes identically");
    }
}

// ---------------------------------------------------------------------------
// Numeric evaluation

TorusPoint::TorusPoint(const std::vector<Rational>& angles)
{
    BigInt den = 1;
    for (const auto& a : angles)
        den = boost::multiprecision::lcm(den, BigInt(denominator(a)));
    den_ = den;
    num_.reserve(angles.size());
    for (const auto& a : angles) {
        BigInt v = numerator(a) * (den / denominator(a));
        v %= den;
        if (v < 0)
            v += den;
        num_.push_back(v);
    }
}

std::vector<Rational> TorusPoint::angles() const
{
    std::vector<Rational> r;
    r.reserve(num_.size());
    for (const auto& v : num_)
        r.emplace_back(v, den_);
    return r;
}

Rational TorusPoint::phase(const Weight& alpha) const
{
    if (alpha.size() != num_.size())
        throw DimMismatch("torus point dimension mismatch");
    BigInt s = 0;
    for (std::size_t i = 0; i < num_.size(); ++i)
        s += num_[i] * alpha[i];
    s %= den_;
    if (s < 0)
        s += den_;
    return Rational(s, den_);
}

std::complex<double> TorusPoint::character(const Weight& alpha) const
{
    const double t = phase(alpha).convert_to<double>();
    return std::polar(1.0, 2.0 * std::numbers::pi * t);
}

TorusPoint TorusPoint::translated(const LatticeVector& xi, const Rational& t) const
{
    auto a = angles();
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += t * xi[i];
    return TorusPoint(a);
}

std::ostream& operator<<(std::ostream& os, const TorusPoint& g)
{
    os << '(';
    auto a = g.angles();
    for (std::size_t i = 0; i < a.size(); ++i)
        os << (i ? "," : "") << a[i];
    return os << ')';
}

TorusPoint random_torus_point(std::mt19937_64& rng, std::size_t dim, std::int64_t max_den)
{
    std::vector<Rational> a;
    a.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const std::int64_t den = std::uniform_int_distribution<std::int64_t>(2, max_den)(rng);
        const std::int64_t num = std::uniform_int_distribution<std::int64_t>(0, den - 1)(rng);
        a.emplace_back(num, den);
    }
    return TorusPoint(a);
}

double pole_distance(const RationalChar& f, const TorusPoint& g)
{
    double best = std::numeric_limits<double>::infinity();
    for (const auto& gamma : f.denominator) {
        const Rational ph = g.phase(gamma);
        const double d    = ph == 0 ? 0.0 : std::abs(1.0 - g.character(gamma));
        best              = std::min(best, d);
    }
    return best;
}

std::complex<double> eval_numeric(const LaurentPoly& p, const TorusPoint& g)
{
    std::complex<double> s = 0;
    for (const auto& [mu, c] : p.terms())
        s += c.convert_to<double>() * g.character(mu);
    return s;
}

std::complex<double> eval_numeric(const RationalChar& f, const TorusPoint& g, double pole_tol)
{
    std::complex<double> v = eval_numeric(f.numerator, g);
    for (const auto& gamma : f.denominator) {
        const Rational ph = g.phase(gamma);
        const std::complex<double> factor = 1.0 - g.character(gamma);
        if (ph == 0 || std::abs(factor) <= pole_tol)
            throw PoleAtPoint("factor 1 - x^" + to_string(gamma) + " vanishes at the evaluation point");
        v /= factor;
    }
    return v;
}

} // namespace gkm
