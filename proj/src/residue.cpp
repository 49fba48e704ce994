#include "gkm/residue.hpp"

#include <algorithm>
#include <limits>

namespace gkm {

std::size_t ZForm::negative_count() const
{
    return static_cast<std::size_t>(
        std::count_if(factors.begin(), factors.end(), [](const ZFactor& f) { return f.k < 0; }));
}

ZForm to_z_form(const RationalChar& f, const LatticeVector& xi)
{
    if (xi.size() != f.dim())
        throw DimMismatch("to_z_form: xi has the wrong dimension");
    ZForm z{complete_to_basis(xi), LaurentPoly(f.dim()), {}};
    for (const auto& gamma : f.denominator) {
        SplitWeight s = weight_in_basis(gamma, z.basis);
        if (s.k == 0)
            throw NotGeneric("denominator weight " + to_string(gamma) + " is trivial on the circle " + to_string(xi));
        z.factors.push_back({std::move(s.beta), s.k});
    }
    for (const auto& [mu, c] : f.numerator.terms()) {
        SplitWeight s = weight_in_basis(mu, z.basis);
        std::vector<Coord> e = std::move(s.beta);
        e.push_back(s.k);
        z.numerator.add_term(Weight(std::move(e)), c);
    }
    return z;
}

RationalChar from_z_form(const ZForm& z)
{
    const std::size_t n = z.basis.dim();
    LaurentPoly num(n);
    for (const auto& [e, c] : z.numerator.terms())
        num.add_term(weight_from_basis(std::span<const Coord>(e.coords()).first(n - 1), e[n - 1], z.basis), c);
    std::vector<Weight> den;
    for (const auto& fac : z.factors)
        den.push_back(weight_from_basis(fac.beta, fac.k, z.basis));
    return RationalChar(std::move(num), std::move(den));
}

namespace {

/// Calls visit(l) for every l in N^d with sum_i l_i * step_i == total.
template <class Visit>
void compositions(const std::vector<Coord>& step, Coord total, Visit&& visit)
{
    std::vector<Coord> l(step.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, Coord left) -> void {
        if (i == step.size()) {
            if (left == 0)
                visit(l);
            return;
        }
        if (i + 1 == step.size()) {
            if (left % step[i] == 0) {
                l[i] = left / step[i];
                visit(l);
                l[i] = 0;
            }
            return;
        }
        for (Coord v = 0; v * step[i] <= left; ++v) {
            l[i] = v;
            self(self, i + 1, left - v * step[i]);
        }
        l[i] = 0;
    };
    if (total >= 0)
        rec(rec, 0, total);
}

} // namespace

LaurentPoly res_half(const ZForm& z, Side side)
{
    const std::size_t n = z.basis.dim();
    const std::size_t m = n - 1;
    const std::size_t d = z.factors.size();
    LaurentPoly out(m);

    std::vector<Coord> step(d);
    Coord neg_sum = 0, pos_sum = 0;  // sum |k_i| over k_i < 0 and k_i > 0
    for (std::size_t i = 0; i < d; ++i) {
        const Coord k = z.factors[i].k;
        step[i]       = k < 0 ? -k : k;
        (k < 0 ? neg_sum : pos_sum) += step[i];
    }
    const std::size_t r = z.negative_count();
    // Inside the circle 1/(1 - a z^k) expands as sum_{l>=0} a^l z^{lk} for
    // k > 0 and -sum_{l>=1} a^{-l} z^{l|k|} for k < 0; outside, the roles swap.
    const int sign = side == Side::minus ? ((r % 2) ? -1 : 1) : (((d - r) % 2) ? -1 : 1);

    for (const auto& [e, c] : z.numerator.terms()) {
        const Coord k = e[m];
        Weight beta(std::vector<Coord>(e.coords().begin(), e.coords().begin() + static_cast<std::ptrdiff_t>(m)));
        const Coord total = side == Side::minus ? -k - neg_sum : k - pos_sum;
        Weight shift(m);
        for (std::size_t i = 0; i < d; ++i) {
            const bool forced = side == Side::minus ? z.factors[i].k < 0 : z.factors[i].k > 0;
            if (forced)
                shift -= Weight(z.factors[i].beta);
        }
        compositions(step, total, [&](const std::vector<Coord>& l) {
            Weight y = beta + shift;
            for (std::size_t i = 0; i < d; ++i) {
                if (l[i] == 0)
                    continue;
                // Inside: positive k contributes +l beta, negative k -l beta.
                const bool up = (z.factors[i].k > 0) == (side == Side::minus);
                const Weight b(z.factors[i].beta);
                y += up ? l[i] * b : -(l[i] * b);
            }
            out.add_term(y, sign * c);
        });
    }
    return out;
}

LaurentPoly embed_annihilator(const LaurentPoly& y_poly, const BasisChange& basis)
{
    LaurentPoly out(basis.dim());
    for (const auto& [y, c] : y_poly.terms())
        out.add_term(weight_from_basis(y.span(), 0, basis), c);
    return out;
}

ResidueValue res_T(const RationalChar& f, const LatticeVector& xi)
{
    const ZForm z = to_z_form(f, xi);
    ResidueValue v;
    v.plus  = embed_annihilator(res_half(z, Side::plus), z.basis);
    v.minus = embed_annihilator(res_half(z, Side::minus), z.basis);
    v.total = v.plus - v.minus;
    return v;
}

namespace {

/// The |alpha(xi)| points of ker(x^alpha) lying over the image of g in G/T.
std::vector<TorusPoint> fiber_points(const Weight& alpha, const LatticeVector& xi, const TorusPoint& g)
{
    const Coord k = pairing(alpha, xi);
    if (k == 0)
        throw NotGeneric("weight " + to_string(alpha) + " is trivial on the circle " + to_string(xi));
    const Coord order = k < 0 ? -k : k;
    // alpha(g + t xi) = alpha(g) + t k is an integer for t = -phase / k.
    const TorusPoint base = g.translated(xi, -g.phase(alpha) / Rational(k));
    std::vector<TorusPoint> pts;
    pts.reserve(static_cast<std::size_t>(order));
    for (Coord l = 0; l < order; ++l)
        pts.push_back(base.translated(xi, Rational(l, order)));
    return pts;
}

RationalChar without_factor(const RationalChar& f, std::size_t i)
{
    std::vector<Weight> den;
    for (std::size_t j = 0; j < f.denominator.size(); ++j)
        if (j != i)
            den.push_back(f.denominator[j]);
    return RationalChar(f.numerator, std::move(den));
}

} // namespace

std::complex<double> fiber_average_numeric(const RationalChar& f, const Weight& alpha, const LatticeVector& xi,
                                           const TorusPoint& g, double pole_tol)
{
    const auto pts = fiber_points(alpha, xi, g);
    std::complex<double> s = 0;
    for (const auto& h : pts)
        s += eval_numeric(f, h, pole_tol);
    return s / static_cast<double>(pts.size());
}

std::complex<double> residue_by_fiber_averages(const RationalChar& f, const LatticeVector& xi, const TorusPoint& g,
                                               double pole_tol)
{
    std::complex<double> s = 0;
    for (std::size_t i = 0; i < f.denominator.size(); ++i) {
        const Coord k                = pairing(f.denominator[i], xi);
        const std::complex<double> a = fiber_average_numeric(without_factor(f, i), f.denominator[i], xi, g, pole_tol);
        s += k < 0 ? a : -a;
    }
    return s;
}

double fiber_pole_distance(const RationalChar& f, const LatticeVector& xi, const TorusPoint& g)
{
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < f.denominator.size(); ++i) {
        const RationalChar hat = without_factor(f, i);
        for (const auto& h : fiber_points(f.denominator[i], xi, g))
            best = std::min(best, pole_distance(hat, h));
    }
    return best;
}

} // namespace gkm
