#include "gkm/generators.hpp"

#include <algorithm>
#include <numeric>

namespace gkm {

namespace {

Weight unit(std::size_t n, std::size_t k)
{
    Weight w(n);
    if (k > 0)
        w[k - 1] = 1;
    return w;
}

Example finish(std::string name, const RawAction& raw, std::vector<Weight> alphas)
{
    ActionPtr act = make_action(raw);
    return Example{std::move(name), symplectic_class(act, std::move(alphas)).get()};
}

Weight concat(const Weight& a, const Weight& b)
{
    std::vector<Coord> c = a.coords();
    c.insert(c.end(), b.coords().begin(), b.coords().end());
    return Weight(std::move(c));
}

Weight apply(const std::vector<std::vector<Coord>>& rows, const Weight& w)
{
    Weight r(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != w.size())
            throw DimMismatch("linear image: matrix does not match the torus dimension");
        Coord s = 0;
        for (std::size_t j = 0; j < w.size(); ++j)
            s = checked_add(s, checked_mul(rows[i][j], w[j]));
        r[i] = s;
    }
    return r;
}

} // namespace

Example gen_projective(std::size_t n)
{
    if (n < 1)
        throw Error("gen_projective: n must be positive");
    RawAction raw;
    raw.n = n;
    for (std::size_t k = 0; k <= n; ++k)
        raw.vertices.push_back("P" + std::to_string(k));
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            raw.add_edge_pair(i, j, unit(n, j) - unit(n, i));
    std::vector<Weight> alphas;
    for (std::size_t k = 0; k <= n; ++k)
        alphas.push_back(unit(n, k));
    return finish("CP" + std::to_string(n), raw, std::move(alphas));
}

Example gen_sphere(const Weight& alpha)
{
    RawAction raw;
    raw.n        = alpha.size();
    raw.vertices = {"p", "q"};
    raw.add_edge_pair(0, 1, alpha);
    return finish("sphere" + to_string(alpha), raw, {-alpha, alpha});
}

Example gen_product(const Example& a, const Example& b)
{
    const GkmAction& A = *a.action();
    const GkmAction& B = *b.action();
    const std::size_t na = A.torus_dim(), nb = B.torus_dim();
    const std::size_t vb = B.num_vertices();
    RawAction raw;
    raw.n = na + nb;
    for (std::size_t p = 0; p < A.num_vertices(); ++p)
        for (std::size_t q = 0; q < vb; ++q)
            raw.vertices.push_back(A.vertex_name(p) + "." + B.vertex_name(q));
    auto idx = [&](std::size_t p, std::size_t q) { return p * vb + q; };
    for (std::size_t e = 0; e < A.num_edges(); ++e) {
        const Edge& ed = A.edge(e);
        if (e > ed.bar)
            continue;
        for (std::size_t q = 0; q < vb; ++q)
            raw.add_edge_pair(idx(ed.from, q), idx(ed.to, q), concat(ed.alpha, Weight(nb)));
    }
    for (std::size_t e = 0; e < B.num_edges(); ++e) {
        const Edge& ed = B.edge(e);
        if (e > ed.bar)
            continue;
        for (std::size_t p = 0; p < A.num_vertices(); ++p)
            raw.add_edge_pair(idx(p, ed.from), idx(p, ed.to), concat(Weight(na), ed.alpha));
    }
    std::vector<Weight> alphas;
    for (std::size_t p = 0; p < A.num_vertices(); ++p)
        for (std::size_t q = 0; q < vb; ++q)
            alphas.push_back(concat(a.cls.alpha_at(p), b.cls.alpha_at(q)));
    return finish(a.name + "x" + b.name, raw, std::move(alphas));
}

Example gen_polygon(const std::string& name, const std::vector<Weight>& corners)
{
    const std::size_t k = corners.size();
    if (k < 3)
        throw Error("gen_polygon: need at least three corners");
    RawAction raw;
    raw.n = 2;
    for (std::size_t i = 0; i < k; ++i)
        raw.vertices.push_back("v" + std::to_string(i));
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = (i + 1) % k;
        raw.add_edge_pair(i, j, primitive_part(corners[j] - corners[i]).first);
    }
    return finish(name, raw, corners);
}

Example gen_flag3(const Weight& lambda)
{
    if (lambda.size() != 3 || lambda[0] == lambda[1] || lambda[1] == lambda[2] || lambda[0] == lambda[2])
        throw Error("gen_flag3: lambda must be a regular weight in Z^3");
    std::vector<Weight> orbit;
    std::vector<std::size_t> perm{0, 1, 2};
    do {
        orbit.push_back(Weight{lambda[perm[0]], lambda[perm[1]], lambda[perm[2]]});
    } while (std::next_permutation(perm.begin(), perm.end()));

    RawAction raw;
    raw.n = 3;
    for (std::size_t v = 0; v < orbit.size(); ++v)
        raw.vertices.push_back("w" + std::to_string(v));
    for (std::size_t v = 0; v < orbit.size(); ++v)
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = a + 1; b < 3; ++b) {
                Weight sw = orbit[v];
                std::swap(sw[a], sw[b]);
                const std::size_t u = static_cast<std::size_t>(
                    std::find(orbit.begin(), orbit.end(), sw) - orbit.begin());
                if (u < v)
                    continue;
                // Orient the weight so that the class increases along it.
                Weight root(3);
                if (orbit[v][b] > orbit[v][a]) {
                    root[a] = 1;
                    root[b] = -1;
                } else {
                    root[a] = -1;
                    root[b] = 1;
                }
                raw.add_edge_pair(v, u, root);
            }
    return finish("flag" + to_string(lambda), raw, orbit);
}

Example gen_linear_image(const Example& ex, const std::vector<std::vector<Coord>>& rows)
{
    const GkmAction& A = *ex.action();
    RawAction raw;
    raw.n        = rows.size();
    raw.vertices = A.vertex_names();
    for (std::size_t e = 0; e < A.num_edges(); ++e) {
        const Edge& ed = A.edge(e);
        if (e < ed.bar)
            raw.add_edge_pair(ed.from, ed.to, apply(rows, ed.alpha));
    }
    std::vector<Weight> alphas;
    for (const auto& w : ex.cls.alphas())
        alphas.push_back(apply(rows, w));
    return finish(ex.name + "'", raw, std::move(alphas));
}

std::vector<Example> standard_fixtures()
{
    std::vector<Example> fx;
    fx.push_back(gen_sphere(Weight{1, 0}));
    fx.push_back(gen_projective(1));
    fx.push_back(gen_projective(2));
    fx.push_back(gen_projective(3));
    fx.push_back(gen_product(gen_projective(1), gen_projective(1)));
    fx.push_back(gen_product(gen_projective(2), gen_projective(1)));
    fx.push_back(gen_polygon("hirzebruch1", {Weight{0, 0}, Weight{3, 0}, Weight{2, 1}, Weight{0, 1}}));
    fx.push_back(gen_polygon("hexagon", {Weight{1, 0}, Weight{2, 0}, Weight{2, 1}, Weight{1, 2}, Weight{0, 2},
                                         Weight{0, 1}}));
    fx.push_back(gen_flag3(Weight{2, 1, 0}));
    fx.push_back(gen_linear_image(gen_projective(2), {{2, 1}, {0, 1}}));
    return fx;
}

Example random_fixture(std::mt19937_64& rng)
{
    static const std::vector<Example> base = standard_fixtures();
    const Example& ex = base[std::uniform_int_distribution<std::size_t>(0, base.size() - 1)(rng)];
    if (std::uniform_int_distribution<int>(0, 1)(rng) == 0)
        return ex;
    const std::size_t n = ex.action()->torus_dim();
    std::uniform_int_distribution<Coord> entry(-2, 2);
    for (;;) {
        std::vector<std::vector<Coord>> rows(n, std::vector<Coord>(n));
        IntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = rows[i][j] = entry(rng);
        const BigInt det = m.determinant();
        if (det != 0 && abs(det) <= 3)
            return gen_linear_image(ex, rows);
    }
}

namespace {

LaurentPoly random_ring_element(std::size_t n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<Coord> expo(-2, 2);
    std::uniform_int_distribution<int> coef(-3, 3);
    LaurentPoly r(n);
    const int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Weight mu(n);
        for (std::size_t j = 0; j < n; ++j)
            mu[j] = expo(rng);
        int c = coef(rng);
        r.add_term(mu, c == 0 ? 1 : c);
    }
    if (r.is_zero())
        r = LaurentPoly::constant(n, 1);
    return r;
}

Weight random_shift(std::size_t n, std::mt19937_64& rng, Coord range)
{
    std::uniform_int_distribution<Coord> d(-range, range);
    Weight s(n);
    for (std::size_t j = 0; j < n; ++j)
        s[j] = d(rng);
    return s;
}

} // namespace

KClass random_class(const Example& ex, std::mt19937_64& rng)
{
    const std::size_t n = ex.action()->torus_dim();
    std::uniform_int_distribution<int> summands(1, 3);
    std::uniform_int_distribution<Coord> dil(-2, 2);
    std::uniform_int_distribution<int> coin(0, 3);

    auto monomial = [&] {
        const SymplecticClass m = translated(dilated(ex.cls, dil(rng)), random_shift(n, rng, 2));
        return m.base();
    };

    KClass f = KClass::constant(ex.action(), LaurentPoly(n));
    const int t = summands(rng);
    for (int i = 0; i < t; ++i) {
        KClass term = monomial();
        if (coin(rng) == 0)
            term = term * (monomial() + KClass::constant(ex.action(), random_ring_element(n, rng)));
        f = f + random_ring_element(n, rng) * term;
    }
    if (coin(rng) == 0)
        f = f + KClass::constant(ex.action(), random_ring_element(n, rng));
    return f;
}

SymplecticClass random_symplectic(const Example& ex, std::mt19937_64& rng)
{
    const std::size_t n = ex.action()->torus_dim();
    const Coord k = std::uniform_int_distribution<Coord>(1, 3)(rng);
    return translated(dilated(ex.cls, k), random_shift(n, rng, 2));
}

LatticeVector random_generic_xi(const GkmAction& action, std::mt19937_64& rng, Coord range)
{
    const std::size_t n = action.torus_dim();
    std::uniform_int_distribution<Coord> d(-range, range);
    for (;;) {
        LatticeVector xi(n);
        for (std::size_t j = 0; j < n; ++j)
            xi[j] = d(rng);
        if (!is_primitive(xi))
            continue;
        bool generic = true;
        for (const Edge& ed : action.edges())
            if (pairing(ed.alpha, xi) == 0) {
                generic = false;
                break;
            }
        if (generic)
            return xi;
    }
}

} // namespace gkm
