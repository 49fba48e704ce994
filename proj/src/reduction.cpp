#include "gkm/reduction.hpp"

#include <algorithm>
#include <cmath>

#include "gkm/residue.hpp"

namespace gkm {

namespace {

/// Edge e points upward when alpha_e(xi) > 0.
bool upward(const GkmAction& a, std::size_t e, const LatticeVector& xi)
{
    return pairing(a.alpha(e), xi) > 0;
}

void check_moment_inequalities(const GkmAction& a, const LatticeVector& xi, const std::vector<Rational>& phi)
{
    if (phi.size() != a.num_vertices())
        throw DimMismatch("moment map needs one value per vertex");
    for (std::size_t e = 0; e < a.num_edges(); ++e) {
        const Edge& ed = a.edge(e);
        const Rational ratio = (phi[ed.to] - phi[ed.from]) / Rational(pairing(ed.alpha, xi));
        if (ratio <= 0)
            throw Error("moment map decreases along " + a.edge_label(e));
    }
    for (std::size_t p = 0; p < phi.size(); ++p)
        for (std::size_t q = p + 1; q < phi.size(); ++q)
            if (phi[p] == phi[q])
                throw Error("moment map takes the value " + phi[p].str() + " at " + a.vertex_name(p) + " and " +
                            a.vertex_name(q));
}

} // namespace

MomentMap moment_map(ActionPtr action, const LatticeVector& xi)
{
    const GkmAction& a = *action;
    require_generic(a, xi);
    const std::size_t nv = a.num_vertices();

    // Depth-first topological order; a back edge yields the witness cycle.
    enum class Mark { fresh, open, done };
    std::vector<Mark> mark(nv, Mark::fresh);
    std::vector<std::size_t> order, stack;
    auto visit = [&](auto&& self, std::size_t p) -> void {
        mark[p] = Mark::open;
        stack.push_back(p);
        for (std::size_t e : a.out_edges(p)) {
            if (!upward(a, e, xi))
                continue;
            const std::size_t q = a.edge(e).to;
            if (mark[q] == Mark::open) {
                std::string cyc;
                auto it = std::find(stack.begin(), stack.end(), q);
                for (; it != stack.end(); ++it)
                    cyc += a.vertex_name(*it) + " -> ";
                throw CycleError("orientation by " + to_string(xi) + " has the cycle " + cyc + a.vertex_name(q));
            }
            if (mark[q] == Mark::fresh)
                self(self, q);
        }
        stack.pop_back();
        mark[p] = Mark::done;
        order.push_back(p);
    };
    for (std::size_t p = 0; p < nv; ++p)
        if (mark[p] == Mark::fresh)
            visit(visit, p);
    std::reverse(order.begin(), order.end());

    std::vector<Coord> rank(nv, 0);
    for (std::size_t p : order)
        for (std::size_t e : a.out_edges(p))
            if (upward(a, e, xi))
                rank[a.edge(e).to] = std::max(rank[a.edge(e).to], rank[p] + 1);

    std::vector<Rational> phi(nv);
    for (std::size_t p = 0; p < nv; ++p)
        phi[p] = Rational(rank[p]) + Rational(static_cast<Coord>(p), static_cast<Coord>(2 * nv));
    check_moment_inequalities(a, xi, phi);
    return MomentMap{std::move(action), xi, std::move(phi)};
}

MomentMap moment_map_from_values(ActionPtr action, const LatticeVector& xi, std::vector<Rational> phi)
{
    require_generic(*action, xi);
    check_moment_inequalities(*action, xi, phi);
    return MomentMap{std::move(action), xi, std::move(phi)};
}

MomentMap symplectic_moment_map(const SymplecticClass& f, const LatticeVector& xi)
{
    const GkmAction& a = *f.action();
    require_generic(a, xi);
    const std::size_t nv = a.num_vertices();
    std::vector<Rational> phi(nv);
    for (std::size_t p = 0; p < nv; ++p)
        phi[p] = Rational(pairing(f.alpha_at(p), xi));
    bool tied = false;
    for (std::size_t p = 0; p < nv && !tied; ++p)
        for (std::size_t q = p + 1; q < nv; ++q)
            tied = tied || phi[p] == phi[q];
    if (tied) {
        // The values are integers, so shifts below 1/2 away from zero keep
        // every strict inequality and every nonzero sign.
        for (std::size_t p = 0; p < nv; ++p) {
            const Rational eps(static_cast<Coord>(p), static_cast<Coord>(2 * nv));
            phi[p] += phi[p] < 0 ? -eps : eps;
        }
    }
    check_moment_inequalities(a, xi, phi);
    return MomentMap{f.action(), xi, std::move(phi)};
}

CrossingSet crossing_set(const MomentMap& m, const Rational& c)
{
    const GkmAction& a = *m.action;
    for (std::size_t p = 0; p < a.num_vertices(); ++p)
        if (m.phi[p] == c)
            throw NotRegular(c.str() + " is the critical value of " + a.vertex_name(p));
    CrossingSet cs{c, {}};
    for (std::size_t e = 0; e < a.num_edges(); ++e) {
        const Edge& ed = a.edge(e);
        if (m.phi[ed.to] > c && c > m.phi[ed.from])
            cs.edges.push_back(e);
    }
    return cs;
}

LaurentPoly vertex_residue(const KClass& f, std::size_t p, const LatticeVector& xi)
{
    const GkmAction& a = *f.action();
    std::vector<Weight> den;
    for (std::size_t e : a.out_edges(p))
        den.push_back(a.alpha(e));
    return res_T(RationalChar(f.at(p), std::move(den)), xi).total;
}

LaurentPoly chi_reduced(const KClass& f, const MomentMap& m, const Rational& c)
{
    if (f.action() != m.action && f.action()->num_vertices() != m.action->num_vertices())
        throw DimMismatch("class and moment map live on different graphs");
    const GkmAction& a = *f.action();
    crossing_set(m, c);  // regularity
    LaurentPoly sum(a.torus_dim());
    for (std::size_t p = 0; p < a.num_vertices(); ++p)
        if (m.phi[p] > c)
            sum += vertex_residue(f, p, m.xi);
    return sum;
}

WallCrossing wall_crossing_check(const KClass& f, const MomentMap& m, const Rational& c, const Rational& c2)
{
    const Rational lo = std::min(c, c2), hi = std::max(c, c2);
    std::vector<std::size_t> between;
    for (std::size_t p = 0; p < m.phi.size(); ++p)
        if (lo < m.phi[p] && m.phi[p] < hi)
            between.push_back(p);
    if (between.size() != 1)
        throw WrongWallCount(std::to_string(between.size()) + " critical values between " + lo.str() + " and " +
                             hi.str());
    WallCrossing w;
    w.vertex     = between.front();
    w.difference = chi_reduced(f, m, lo) - chi_reduced(f, m, hi);
    w.residue    = vertex_residue(f, w.vertex, m.xi);
    w.pass       = w.difference == w.residue;
    return w;
}

namespace {

/// f_p over the factors of the edges at p other than e.
RationalChar edge_summand(const GkmAction& a, const LaurentPoly& fp, std::size_t e)
{
    const std::size_t p = a.edge(e).from;
    std::vector<Weight> den;
    for (std::size_t o : a.out_edges(p))
        if (o != e)
            den.push_back(a.alpha(o));
    return RationalChar(fp, std::move(den));
}

} // namespace

EdgeCompat edge_compat_check(const GkmAction& a, const std::vector<LaurentPoly>& values, std::size_t e,
                             std::size_t samples, std::mt19937_64& rng, double tol)
{
    if (values.size() != a.num_vertices())
        throw DimMismatch("edge_compat_check: one value per vertex required");
    const Edge& ed = a.edge(e);
    const RationalChar here  = edge_summand(a, values[ed.from], e);
    const RationalChar there = edge_summand(a, values[ed.to], ed.bar);

    // Moving along a coordinate axis with nonzero alpha-component reaches
    // the subgroup where x^alpha = 1.
    std::size_t axis = 0;
    while (ed.alpha[axis] == 0)
        ++axis;
    LatticeVector dir(a.torus_dim());
    dir[axis] = 1;

    constexpr double reject = 1e-3;
    const std::size_t budget = 50 * samples + 50;
    EdgeCompat out;
    for (std::size_t tries = 0; out.samples < samples; ++tries) {
        if (tries >= budget)
            throw PoleAtPoint("no pole-free sample on " + a.edge_label(e) + " after " + std::to_string(tries) +
                              " attempts");
        TorusPoint g = random_torus_point(rng, a.torus_dim());
        g            = g.translated(dir, -g.phase(ed.alpha) / Rational(ed.alpha[axis]));
        if (pole_distance(here, g) < reject || pole_distance(there, g) < reject)
            continue;
        const auto u   = eval_numeric(here, g);
        const auto v   = eval_numeric(there, g);
        const double d = std::abs(u - v) / std::max(1.0, std::abs(v));
        out.max_error  = std::max(out.max_error, d);
        ++out.samples;
    }
    out.pass = out.max_error <= tol;
    return out;
}

EdgeCompat edge_compat_check(const KClass& f, std::size_t e, std::size_t samples, std::mt19937_64& rng, double tol)
{
    return edge_compat_check(*f.action(), f.values(), e, samples, rng, tol);
}

QrResult qr_check(const SymplecticClass& f, const LatticeVector& xi, const ExpandOptions& opts)
{
    const GkmAction& a = *f.action();
    require_generic(a, xi);
    for (std::size_t p = 0; p < a.num_vertices(); ++p)
        if (pairing(f.alpha_at(p), xi) == 0)
            throw ZeroNotRegular("0 is the critical value of " + a.vertex_name(p) + " (alpha_p = " +
                                 to_string(f.alpha_at(p)) + ")");
    const Polarization pol = polarize(f.action(), xi);
    QrResult r;
    r.invariant = invariant_part(character_expand(f, pol, opts).poly, xi);
    r.reduced   = chi_reduced(f.base(), symplectic_moment_map(f, xi), Rational(0));
    r.pass      = r.invariant == r.reduced;
    return r;
}

} // namespace gkm
