#include "gkm/quantization.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace gkm {

Weight VertexPolarization::shift() const
{
    Weight s = two_delta_sharp - two_delta;
    for (std::size_t i = 0; i < s.size(); ++i)
        s[i] /= 2;
    return s;
}

namespace {

Polarization polarize_unchecked(ActionPtr action, const LatticeVector& xi)
{
    const GkmAction& a = *action;
    Polarization pol{action, xi, {}};
    pol.at.resize(a.num_vertices());
    for (std::size_t p = 0; p < a.num_vertices(); ++p) {
        VertexPolarization& vp = pol.at[p];
        vp.two_delta       = Weight(a.torus_dim());
        vp.two_delta_sharp = Weight(a.torus_dim());
        for (std::size_t e : a.out_edges(p)) {
            const Coord s = pairing(a.alpha(e), xi);
            if (s == 0)
                throw NotGeneric(a.edge_label(e) + " has alpha_e(xi) = 0 for xi = " + to_string(xi));
            // Exactly one orientation of the geometric edge pairs positively.
            const std::size_t pos = s > 0 ? e : a.edge(e).bar;
            const Weight& w       = a.alpha(pos);
            vp.edges.push_back(pos);
            vp.weights.push_back(w);
            vp.two_delta += w;
            if (s > 0) {
                vp.two_delta_sharp += w;
            } else {
                ++vp.sigma;
                vp.two_delta_sharp -= w;
            }
        }
    }
    return pol;
}

} // namespace

void require_generic(const GkmAction& action, const LatticeVector& xi)
{
    if (xi.size() != action.torus_dim())
        throw DimMismatch("xi " + to_string(xi) + " does not live in Z^" + std::to_string(action.torus_dim()));
    if (!is_primitive(xi))
        throw NotPrimitive("xi = " + to_string(xi) + " is not primitive");
    for (std::size_t e = 0; e < action.num_edges(); ++e)
        if (pairing(action.alpha(e), xi) == 0)
            throw NotGeneric(action.edge_label(e) + " has alpha_e(xi) = 0 for xi = " + to_string(xi));
}

Polarization polarize(ActionPtr action, const LatticeVector& xi)
{
    require_generic(*action, xi);
    return polarize_unchecked(std::move(action), xi);
}

// ---------------------------------------------------------------------------
// Partition functions

KostantCounter::KostantCounter(std::vector<Weight> weights, LatticeVector xi)
    : weights_(std::move(weights)), xi_(std::move(xi))
{
    for (const auto& w : weights_) {
        const Coord s = pairing(w, xi_);
        if (s <= 0)
            throw NotGeneric("partition weight " + to_string(w) + " does not pair positively with " + to_string(xi_));
        pair_.push_back(s);
    }
}

BigInt KostantCounter::operator()(const Weight& target) { return count(weights_.size(), target); }

BigInt KostantCounter::count(std::size_t j, const Weight& v)
{
    const Coord level = pairing(v, xi_);
    if (level < 0)
        return 0;
    if (j == 0)
        return v.is_zero() ? 1 : 0;
    auto key = std::make_pair(j, v);
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;
    BigInt total = 0;
    Weight rest  = v;
    for (Coord l = 0; l * pair_[j - 1] <= level; ++l) {
        total += count(j - 1, rest);
        rest -= weights_[j - 1];
    }
    memo_.emplace(std::move(key), total);
    return total;
}

BigInt kostant_count(std::span<const Weight> weights, const Weight& target, const LatticeVector& xi)
{
    KostantCounter k(std::vector<Weight>(weights.begin(), weights.end()), xi);
    return k(target);
}

MultiplicityFormula::MultiplicityFormula(const SymplecticClass& f, const Polarization& pol)
{
    if (pol.action != f.action())
        throw Error("polarization was built on a different action");
    for (std::size_t p = 0; p < pol.at.size(); ++p) {
        base_.push_back(f.alpha_at(p) - pol.at[p].shift());
        sign_.push_back(pol.at[p].sign());
        counters_.emplace_back(pol.at[p].weights, pol.xi);
    }
}

BigInt MultiplicityFormula::operator()(const Weight& alpha)
{
    BigInt m = 0;
    for (std::size_t p = 0; p < base_.size(); ++p)
        m += sign_[p] * counters_[p](alpha - base_[p]);
    return m;
}

BigInt multiplicity(const SymplecticClass& f, const Polarization& pol, const Weight& alpha)
{
    MultiplicityFormula mf(f, pol);
    return mf(alpha);
}

std::vector<RationalChar> fixed_point_summands(const KClass& f)
{
    const GkmAction& a = *f.action();
    std::vector<RationalChar> out;
    out.reserve(a.num_vertices());
    for (std::size_t p = 0; p < a.num_vertices(); ++p)
        out.emplace_back(f.at(p), a.out_weights(p));
    return out;
}

// ---------------------------------------------------------------------------
// Polarized expansion

namespace {

struct SeriesTerm
{
    Coord level;
    Weight exponent;
    BigInt count;
};

/// Terms of prod_j sum_{k >= 0} x^{k w_j} with xi-level at most `budget`,
/// sorted by level.
std::vector<SeriesTerm> truncated_series(const VertexPolarization& vp, const LatticeVector& xi, Coord budget,
                                         std::size_t& work, std::size_t work_limit)
{
    std::map<Weight, BigInt> acc;
    if (budget >= 0) {
        const std::size_t d = vp.weights.size();
        std::vector<Coord> lv(d);
        for (std::size_t j = 0; j < d; ++j)
            lv[j] = pairing(vp.weights[j], xi);
        Weight cur(xi.size());
        auto rec = [&](auto&& self, std::size_t j, Coord left) -> void {
            if (j == d) {
                if (++work > work_limit)
                    throw TruncationOverflow("polarized expansion exceeds the term budget");
                acc[cur] += 1;
                return;
            }
            const Weight saved = cur;
            for (Coord k = 0; k * lv[j] <= left; ++k) {
                self(self, j + 1, left - k * lv[j]);
                cur += vp.weights[j];
            }
            cur = saved;
        };
        rec(rec, 0, budget);
    }
    std::vector<SeriesTerm> out;
    out.reserve(acc.size());
    for (auto& [mu, c] : acc)
        out.push_back({pairing(mu, xi), mu, c});
    std::stable_sort(out.begin(), out.end(), [](const SeriesTerm& a, const SeriesTerm& b) { return a.level < b.level; });
    return out;
}

struct Bounds
{
    LatticeVector dir;
    Coord lo = std::numeric_limits<Coord>::max();
    Coord hi = std::numeric_limits<Coord>::min();
};

/// Every monomial of chi(f) has dir-level in [lo, hi]: the expansion along
/// dir is bounded below, the expansion along -dir bounded above.
Bounds level_bounds(const KClass& f, const LatticeVector& dir)
{
    const Polarization up   = polarize_unchecked(f.action(), dir);
    const Polarization down = polarize_unchecked(f.action(), -dir);
    Bounds b{dir};
    for (std::size_t p = 0; p < up.at.size(); ++p) {
        const Weight s_up = up.at[p].shift(), s_down = down.at[p].shift();
        for (const auto& [mu, c] : f.at(p).terms()) {
            b.lo = std::min(b.lo, pairing(mu - s_up, dir));
            b.hi = std::max(b.hi, pairing(mu - s_down, dir));
        }
    }
    return b;
}

std::vector<Bounds> box_bounds(const KClass& f, const LatticeVector& xi)
{
    const GkmAction& a  = *f.action();
    const std::size_t n = a.torus_dim();
    Coord big = 0, sum = 0;
    for (const Edge& e : a.edges())
        big = std::max<Coord>(big, std::llabs(pairing(e.alpha, xi)));
    for (std::size_t j = 0; j < n; ++j)
        sum += xi[j];
    const Coord scale = std::max<Coord>(big, std::llabs(sum)) + 1;
    std::vector<Bounds> out;
    for (std::size_t j = 0; j < n; ++j) {
        LatticeVector eta = xi;
        eta[j]            = checked_add(eta[j], scale);
        out.push_back(level_bounds(f, eta));
    }
    return out;
}

} // namespace

CharacterResult character_expand(const KClass& f, const Polarization& pol, const ExpandOptions& opts)
{
    if (pol.action != f.action())
        throw Error("polarization was built on a different action");
    const std::size_t n = f.action()->torus_dim();
    CharacterResult res{LaurentPoly(n), {}};

    const Polarization opposite = polarize_unchecked(f.action(), -pol.xi);
    bool any                    = false;
    Coord top                   = std::numeric_limits<Coord>::min();
    for (std::size_t p = 0; p < pol.at.size(); ++p) {
        const Weight s = opposite.at[p].shift();
        for (const auto& [mu, c] : f.at(p).terms()) {
            top = std::max(top, pairing(mu - s, pol.xi));
            any = true;
        }
    }
    if (!any)
        return res;

    std::vector<Bounds> box;
    if (opts.box_filter)
        box = box_bounds(f, pol.xi);
    auto inside_box = [&](const Weight& nu) {
        for (const auto& b : box) {
            const Coord l = pairing(nu, b.dir);
            if (l < b.lo || l > b.hi)
                return false;
        }
        return true;
    };

    std::size_t work = 0;
    for (std::size_t p = 0; p < pol.at.size(); ++p) {
        const VertexPolarization& vp = pol.at[p];
        const LaurentPoly& fp        = f.at(p);
        if (fp.is_zero())
            continue;
        const Weight shift = vp.shift();
        Coord lowest       = std::numeric_limits<Coord>::max();
        for (const auto& [mu, c] : fp.terms())
            lowest = std::min(lowest, pairing(mu - shift, pol.xi));
        const auto series = truncated_series(vp, pol.xi, top - lowest, work, opts.term_budget);
        for (const auto& [mu, c] : fp.terms()) {
            const Weight base = mu - shift;
            const Coord limit = top - pairing(base, pol.xi);
            const BigInt coef = vp.sign() * c;
            for (const auto& t : series) {
                if (t.level > limit)
                    break;
                if (++work > opts.term_budget)
                    throw TruncationOverflow("polarized expansion exceeds the term budget");
                Weight nu = base + t.exponent;
                if (inside_box(nu))
                    res.poly.add_term(nu, coef * t.count);
            }
        }
    }
    return res;
}

CharacterResult character_expand(const SymplecticClass& f, const Polarization& pol, const ExpandOptions& opts)
{
    CharacterResult res = character_expand(f.base(), pol, opts);
    res.hull_vertices   = hull_vertices(f.alphas());
    return res;
}

// ---------------------------------------------------------------------------
// Exact-division route

namespace {

/// Sign-normalized primitive direction: first nonzero coordinate positive.
std::pair<Weight, Coord> direction_of(const Weight& w)
{
    auto [prim, mult] = primitive_part(w);
    std::size_t i     = 0;
    while (prim[i] == 0)
        ++i;
    if (prim[i] < 0)
        return {-prim, -mult};
    return {prim, mult};
}

LaurentPoly one_minus(const Weight& gamma)
{
    LaurentPoly r = LaurentPoly::constant(gamma.size(), 1);
    r.add_term(gamma, -1);
    return r;
}

} // namespace

LaurentPoly character_oracle(const KClass& f)
{
    const GkmAction& a  = *f.action();
    const std::size_t n = a.torus_dim();

    std::map<Weight, Coord> lcm_of;  // primitive direction -> M_j
    for (const Edge& e : a.edges()) {
        auto [dir, m] = direction_of(e.alpha);
        Coord& M      = lcm_of[dir];
        M             = M == 0 ? std::llabs(m) : std::lcm(M, std::llabs(m));
    }
    std::vector<Weight> factors;  // M_j a_j
    for (const auto& [dir, M] : lcm_of)
        factors.push_back(M * dir);

    LaurentPoly g(n);
    for (std::size_t p = 0; p < a.num_vertices(); ++p) {
        if (f.at(p).is_zero())
            continue;
        // Common denominator divided by this vertex's own denominator.
        LaurentPoly cofactor = LaurentPoly::constant(n, 1);
        std::vector<bool> used(factors.size(), false);
        for (std::size_t e : a.out_edges(p)) {
            auto [dir, m]     = direction_of(a.alpha(e));
            const std::size_t j =
                static_cast<std::size_t>(std::distance(lcm_of.begin(), lcm_of.find(dir)));
            used[j] = true;
            auto q  = try_divide_exact(one_minus(factors[j]), a.alpha(e));
            if (!q)
                throw InternalDivisionFailure("1 - x^" + to_string(factors[j]) + " not divisible by 1 - x^" +
                                              to_string(a.alpha(e)));
            cofactor *= *q;
        }
        for (std::size_t j = 0; j < factors.size(); ++j)
            if (!used[j])
                cofactor *= one_minus(factors[j]);
        g += f.at(p) * cofactor;
    }

    for (const auto& gamma : factors) {
        auto q = try_divide_exact(g, gamma);
        if (!q)
            throw InternalDivisionFailure("numerator of the fixed-point sum is not divisible by 1 - x^" +
                                          to_string(gamma));
        g = std::move(*q);
    }
    return g;
}

// ---------------------------------------------------------------------------
// Convex hulls over Q

namespace {

/// Solves sum_i l_i p_i = x, sum_i l_i = 1 for affinely independent p_i;
/// returns nullopt when the points are dependent or the system inconsistent.
std::optional<std::vector<Rational>> barycentric(const Weight& x, const std::vector<const Weight*>& pts)
{
    const std::size_t k = pts.size();
    const std::size_t rows = x.size() + 1;
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(k + 1));
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < x.size(); ++i)
            m[i][j] = (*pts[j])[i];
        m[x.size()][j] = 1;
    }
    for (std::size_t i = 0; i < x.size(); ++i)
        m[i][k] = x[i];
    m[x.size()][k] = 1;

    std::size_t r = 0;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0)
            ++piv;
        if (piv == rows)
            return std::nullopt;  // affinely dependent
        std::swap(m[piv], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            const Rational t = m[i][c] / m[r][c];
            for (std::size_t j = c; j <= k; ++j)
                m[i][j] -= t * m[r][j];
        }
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (m[i][k] != 0)
            return std::nullopt;
    std::vector<Rational> l(k);
    for (std::size_t c = 0; c < k; ++c)
        l[c] = m[c][k] / m[c][c];
    return l;
}

std::vector<Weight> dedup(std::span<const Weight> points)
{
    std::vector<Weight> u;
    for (const auto& p : points)
        if (std::find(u.begin(), u.end(), p) == u.end())
            u.push_back(p);
    return u;
}

bool hull_contains(const Weight& x, const std::vector<Weight>& pts)
{
    if (pts.empty())
        return false;
    const std::size_t maxk = std::min(pts.size(), x.size() + 1);
    // Caratheodory: some affinely independent subset already contains x.
    for (std::size_t k = maxk; k >= 1; --k) {
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            std::vector<const Weight*> sub;
            for (std::size_t i : idx)
                sub.push_back(&pts[i]);
            if (auto l = barycentric(x, sub)) {
                if (std::all_of(l->begin(), l->end(), [](const Rational& v) { return v >= 0; }))
                    return true;
            }
            // next combination
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == pts.size() - k + i - 1)
                --i;
            if (i == 0)
                break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    return false;
}

} // namespace

bool in_convex_hull(const Weight& x, std::span<const Weight> points)
{
    return hull_contains(x, dedup(points));
}

std::vector<Weight> hull_vertices(std::span<const Weight> points)
{
    const std::vector<Weight> u = dedup(points);
    std::vector<Weight> out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        std::vector<Weight> others;
        for (std::size_t j = 0; j < u.size(); ++j)
            if (j != i)
                others.push_back(u[j]);
        if (!hull_contains(u[i], others))
            out.push_back(u[i]);
    }
    return out;
}

HullReport hull_report(const SymplecticClass& f, const CharacterResult& chr)
{
    HullReport rep;
    const std::vector<Weight> pts = dedup(f.alphas());
    rep.hull_vertices             = hull_vertices(pts);
    for (const auto& [mu, c] : chr.poly.terms())
        if (!hull_contains(mu, pts)) {
            rep.outside.push_back(mu);
            rep.support_in_hull = false;
        }
    for (const auto& v : rep.hull_vertices) {
        const BigInt c = chr.poly.coefficient(v);
        rep.extremal_coefficients.emplace_back(v, c);
        if (c != 1)
            rep.extremal_multiplicity_one = false;
    }
    return rep;
}

} // namespace gkm
