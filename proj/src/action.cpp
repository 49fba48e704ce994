#include "gkm/action.hpp"

#include <algorithm>
#include <map>

namespace gkm {

std::string to_string(const Violation& v)
{
    return v.code + " at " + v.where + ": " + v.message;
}

void RawAction::add_edge_pair(std::size_t from, std::size_t to, const Weight& alpha)
{
    const std::size_t e = edges.size();
    edges.push_back(RawEdge{from, to, alpha, e + 1});
    edges.push_back(RawEdge{to, from, -alpha, e});
}

std::size_t RawAction::vertex_index(const std::string& name) const
{
    auto it = std::find(vertices.begin(), vertices.end(), name);
    if (it == vertices.end())
        throw ParseError("unknown vertex '" + name + "'");
    return static_cast<std::size_t>(it - vertices.begin());
}

std::size_t GkmAction::vertex_index(const std::string& name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        throw Error("unknown vertex '" + name + "'");
    return static_cast<std::size_t>(it - names_.begin());
}

std::vector<Weight> GkmAction::out_weights(std::size_t p) const
{
    std::vector<Weight> w;
    for (std::size_t e : out_.at(p))
        w.push_back(edges_[e].alpha);
    return w;
}

std::string GkmAction::edge_label(std::size_t e) const
{
    const Edge& ed = edges_.at(e);
    return "edge " + std::to_string(e) + " (" + names_[ed.from] + "->" + names_[ed.to] + ")";
}

namespace {

std::string raw_edge_label(const RawAction& raw, std::size_t e)
{
    const RawEdge& ed = raw.edges[e];
    auto name = [&](std::size_t p) {
        return p < raw.vertices.size() ? raw.vertices[p] : "#" + std::to_string(p);
    };
    return "edge " + std::to_string(e) + " (" + name(ed.from) + "->" + name(ed.to) + ")";
}

/// Multiset of canonical residues mod Z*gamma.
std::vector<Weight> residues(const std::vector<Weight>& ws, const Weight& gamma)
{
    std::vector<Weight> r;
    r.reserve(ws.size());
    for (const auto& w : ws)
        r.push_back(reduce_mod_line(w, gamma).rep);
    std::sort(r.begin(), r.end());
    return r;
}

} // namespace

Validated<GkmAction> validate_action(const RawAction& raw)
{
    std::vector<Violation> bad;
    const std::size_t nv = raw.vertices.size();
    const std::size_t ne = raw.edges.size();

    bool structural = true;
    for (std::size_t e = 0; e < ne; ++e) {
        const RawEdge& ed = raw.edges[e];
        const std::string where = raw_edge_label(raw, e);
        if (ed.from >= nv || ed.to >= nv) {
            bad.push_back({"E_INVOLUTION", where, "endpoint is not a vertex"});
            structural = false;
            continue;
        }
        if (ed.alpha.size() != raw.n) {
            bad.push_back({"E_DIM", where,
                           "weight " + to_string(ed.alpha) + " is not in Z^" + std::to_string(raw.n)});
            structural = false;
        }
        if (!ed.bar || *ed.bar >= ne) {
            bad.push_back({"E_INVOLUTION", where, "edge has no reversed partner"});
            structural = false;
            continue;
        }
        const std::size_t b = *ed.bar;
        const RawEdge& rb = raw.edges[b];
        if (b == e || !rb.bar || *rb.bar != e || rb.from != ed.to || rb.to != ed.from) {
            bad.push_back({"E_INVOLUTION", where,
                           "reversal is not a fixed-point-free involution swapping endpoints"});
            structural = false;
        }
    }

    std::vector<std::vector<std::size_t>> out(nv);
    for (std::size_t e = 0; e < ne; ++e)
        if (raw.edges[e].from < nv)
            out[raw.edges[e].from].push_back(e);
    const std::size_t d = nv ? out[0].size() : 0;
    for (std::size_t p = 0; p < nv; ++p)
        if (out[p].size() != d) {
            bad.push_back({"E_VALENCE", raw.vertices[p],
                           std::to_string(out[p].size()) + " outgoing edges, expected " + std::to_string(d)});
            structural = false;
        }

    if (!structural)
        return {std::nullopt, std::move(bad)};

    for (std::size_t e = 0; e < ne; ++e) {
        const RawEdge& ed = raw.edges[e];
        if (e < *ed.bar && raw.edges[*ed.bar].alpha != -ed.alpha)
            bad.push_back({"E_ORIENT", raw_edge_label(raw, e),
                           "reversed edge carries " + to_string(raw.edges[*ed.bar].alpha) + " instead of " +
                               to_string(-ed.alpha)});
    }

    for (std::size_t p = 0; p < nv; ++p) {
        for (std::size_t a = 0; a < out[p].size(); ++a) {
            const Weight& wa = raw.edges[out[p][a]].alpha;
            if (wa.is_zero())
                bad.push_back({"E_GKM", raw.vertices[p], raw_edge_label(raw, out[p][a]) + " has zero weight"});
            for (std::size_t b = a + 1; b < out[p].size(); ++b) {
                const Weight& wb = raw.edges[out[p][b]].alpha;
                if (!wa.is_zero() && !wb.is_zero() && proportional(wa, wb))
                    bad.push_back({"E_GKM", raw.vertices[p],
                                   "weights " + to_string(wa) + " and " + to_string(wb) +
                                       " are linearly dependent"});
            }
        }
    }

    // Restriction of the vertex representations to the kernel of alpha_e.
    for (std::size_t e = 0; e < ne; ++e) {
        const RawEdge& ed = raw.edges[e];
        if (ed.alpha.is_zero())
            continue;
        std::vector<Weight> wp, wq;
        for (std::size_t x : out[ed.from])
            wp.push_back(raw.edges[x].alpha);
        for (std::size_t x : out[ed.to])
            wq.push_back(raw.edges[x].alpha);
        if (residues(wp, ed.alpha) != residues(wq, ed.alpha))
            bad.push_back({"E_COMPAT", raw_edge_label(raw, e),
                           "vertex weights at the endpoints do not match modulo Z" + to_string(ed.alpha)});
    }

    if (!bad.empty())
        return {std::nullopt, std::move(bad)};

    GkmAction act;
    act.n_     = raw.n;
    act.d_     = d;
    act.names_ = raw.vertices;
    act.edges_.reserve(ne);
    for (const auto& ed : raw.edges)
        act.edges_.push_back(Edge{ed.from, ed.to, *ed.bar, ed.alpha});
    act.out_ = std::move(out);
    return {std::move(act), {}};
}

ActionPtr make_action(const RawAction& raw)
{
    return std::make_shared<const GkmAction>(validate_action(raw).get());
}

// ---------------------------------------------------------------------------

Validated<KClass> validate_class(ActionPtr action, std::vector<LaurentPoly> values)
{
    std::vector<Violation> bad;
    const GkmAction& a = *action;
    if (values.size() != a.num_vertices()) {
        bad.push_back({"E_DIM", "class", "expected " + std::to_string(a.num_vertices()) + " vertex values, got " +
                                             std::to_string(values.size())});
        return {std::nullopt, std::move(bad)};
    }
    for (std::size_t p = 0; p < values.size(); ++p)
        if (values[p].dim() != a.torus_dim())
            bad.push_back({"E_DIM", a.vertex_name(p), "value lives in the wrong character ring"});
    if (!bad.empty())
        return {std::nullopt, std::move(bad)};

    for (std::size_t e = 0; e < a.num_edges(); ++e) {
        const Edge& ed = a.edge(e);
        if (e > ed.bar)
            continue;
        if (!congruent_mod_edge(values[ed.from], values[ed.to], ed.alpha))
            bad.push_back({"E_COMPAT", a.edge_label(e),
                           "f_" + a.vertex_name(ed.from) + " and f_" + a.vertex_name(ed.to) +
                               " differ on the kernel of x^" + to_string(ed.alpha)});
    }
    if (!bad.empty())
        return {std::nullopt, std::move(bad)};
    return {KClass(std::move(action), std::move(values)), {}};
}

KClass KClass::constant(ActionPtr action, const LaurentPoly& c)
{
    std::vector<LaurentPoly> v(action->num_vertices(), c);
    return KClass(std::move(action), std::move(v));
}

namespace {

template <class Op>
KClass combine(const KClass& a, const KClass& b, Op op)
{
    if (a.action() != b.action())
        throw Error("classes live on different actions");
    std::vector<LaurentPoly> v;
    v.reserve(a.values().size());
    for (std::size_t p = 0; p < a.values().size(); ++p)
        v.push_back(op(a.at(p), b.at(p)));
    // Sums and products of classes are classes; re-validation is cheap.
    return validate_class(a.action(), std::move(v)).get<InvalidClass>();
}

} // namespace

KClass operator+(const KClass& a, const KClass& b)
{
    return combine(a, b, [](const LaurentPoly& x, const LaurentPoly& y) { return x + y; });
}

KClass operator-(const KClass& a, const KClass& b)
{
    return combine(a, b, [](const LaurentPoly& x, const LaurentPoly& y) { return x - y; });
}

KClass operator*(const KClass& a, const KClass& b)
{
    return combine(a, b, [](const LaurentPoly& x, const LaurentPoly& y) { return x * y; });
}

KClass operator*(const LaurentPoly& r, const KClass& a)
{
    return KClass::constant(a.action(), r) * a;
}

// ---------------------------------------------------------------------------

namespace detail {

Validated<SymplecticClass> build_monomial(ActionPtr action, std::vector<Weight> alphas, bool require_positive)
{
    std::vector<Violation> bad;
    const GkmAction& a = *action;
    if (alphas.size() != a.num_vertices()) {
        bad.push_back({"E_DIM", "class", "expected one weight per vertex"});
        return {std::nullopt, std::move(bad)};
    }
    for (std::size_t p = 0; p < alphas.size(); ++p)
        if (alphas[p].size() != a.torus_dim())
            bad.push_back({"E_DIM", a.vertex_name(p), "weight " + to_string(alphas[p]) + " has wrong dimension"});
    if (!bad.empty())
        return {std::nullopt, std::move(bad)};

    std::vector<Coord> m(a.num_edges(), 0);
    for (std::size_t e = 0; e < a.num_edges(); ++e) {
        const Edge& ed     = a.edge(e);
        const Weight diff  = alphas[ed.to] - alphas[ed.from];
        std::size_t piv    = 0;
        while (ed.alpha[piv] == 0)
            ++piv;
        const Coord q = diff[piv] / ed.alpha[piv];
        if (diff[piv] % ed.alpha[piv] != 0 || q * ed.alpha != diff) {
            bad.push_back({"E_NOT_MULTIPLE", a.edge_label(e),
                           to_string(diff) + " is not an integer multiple of " + to_string(ed.alpha)});
            continue;
        }
        m[e] = q;
        if (require_positive && q <= 0)
            bad.push_back({"E_NONPOSITIVE", a.edge_label(e), "m_e = " + std::to_string(q) + " is not positive"});
    }
    if (!bad.empty())
        return {std::nullopt, std::move(bad)};

    std::vector<LaurentPoly> vals;
    vals.reserve(alphas.size());
    for (const auto& w : alphas)
        vals.push_back(LaurentPoly::monomial(w));
    KClass base = validate_class(action, std::move(vals)).get<InvalidClass>();
    return {SymplecticClass(std::move(base), std::move(alphas), std::move(m)), {}};
}

} // namespace detail

Validated<SymplecticClass> symplectic_class(ActionPtr action, std::vector<Weight> alphas)
{
    return detail::build_monomial(std::move(action), std::move(alphas), true);
}

Validated<SymplecticClass> monomial_class(ActionPtr action, std::vector<Weight> alphas)
{
    return detail::build_monomial(std::move(action), std::move(alphas), false);
}

SymplecticClass translated(const SymplecticClass& f, const Weight& shift)
{
    std::vector<Weight> a = f.alphas();
    for (auto& w : a)
        w += shift;
    return monomial_class(f.action(), std::move(a)).get<InvalidClass>();
}

SymplecticClass dilated(const SymplecticClass& f, Coord k)
{
    std::vector<Weight> a = f.alphas();
    for (auto& w : a)
        w = k * w;
    return monomial_class(f.action(), std::move(a)).get<InvalidClass>();
}

} // namespace gkm
