#pragma once

// Torus actions on finite regular graphs: the axial function, its axioms,
// the equivariant K-classes compatible with it, and symplectic classes.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gkm/charring.hpp"

namespace gkm {

/// One structured axiom violation. `code` is one of E_DIM, E_INVOLUTION,
/// E_VALENCE, E_ORIENT, E_GKM, E_COMPAT, E_NOT_MULTIPLE, E_NONPOSITIVE.
struct Violation
{
    std::string code;
    std::string where;   ///< offending vertex or edge, human readable
    std::string message;
};

std::string to_string(const Violation& v);

template <class T>
struct Validated
{
    std::optional<T> value;
    std::vector<Violation> violations;

    bool ok() const { return value.has_value(); }

    template <class E = InvalidAction>
    const T& get() const
    {
        if (!value) {
            std::string msg;
            for (const auto& v : violations)
                msg += (msg.empty() ? "" : "; ") + to_string(v);
            throw E(msg);
        }
        return *value;
    }
};

/// Unvalidated input: oriented edges with an explicit reversal map.
struct RawEdge
{
    std::size_t from = 0;
    std::size_t to   = 0;
    Weight alpha;
    std::optional<std::size_t> bar;
};

struct RawAction
{
    std::size_t n = 0;
    std::vector<std::string> vertices;
    std::vector<RawEdge> edges;

    /// Appends e: from -> to with weight alpha and its reversal with -alpha.
    void add_edge_pair(std::size_t from, std::size_t to, const Weight& alpha);
    std::size_t vertex_index(const std::string& name) const;
};

struct Edge
{
    std::size_t from = 0;
    std::size_t to   = 0;
    std::size_t bar  = 0;
    Weight alpha;
};

/// A validated GKM action. Immutable.
class GkmAction
{
  public:
    std::size_t torus_dim() const { return n_; }
    std::size_t valence() const { return d_; }
    std::size_t num_vertices() const { return names_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    const std::string& vertex_name(std::size_t p) const { return names_.at(p); }
    std::size_t vertex_index(const std::string& name) const;
    const std::vector<std::string>& vertex_names() const { return names_; }

    const Edge& edge(std::size_t e) const { return edges_.at(e); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Weight& alpha(std::size_t e) const { return edges_.at(e).alpha; }

    /// Edges with initial vertex p.
    const std::vector<std::size_t>& out_edges(std::size_t p) const { return out_.at(p); }
    /// Weights alpha_e over the edges leaving p.
    std::vector<Weight> out_weights(std::size_t p) const;

    std::string edge_label(std::size_t e) const;

  private:
    friend Validated<GkmAction> validate_action(const RawAction& raw);

    std::size_t n_ = 0;
    std::size_t d_ = 0;
    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> out_;
};

using ActionPtr = std::shared_ptr<const GkmAction>;

/// Checks the reversal involution, regularity, alpha_{bar e} = -alpha_e,
/// pairwise independence at each vertex and the restriction compatibility
/// of the vertex representations along every edge.
Validated<GkmAction> validate_action(const RawAction& raw);

/// Validated, shared; throws InvalidAction listing every violation.
ActionPtr make_action(const RawAction& raw);

/// f: V -> R(G) satisfying f_{i(e)} == f_{t(e)} mod (1 - x^{alpha_e}).
class KClass
{
  public:
    const ActionPtr& action() const { return action_; }
    const LaurentPoly& at(std::size_t p) const { return values_.at(p); }
    const std::vector<LaurentPoly>& values() const { return values_; }

    static KClass constant(ActionPtr action, const LaurentPoly& c);

    friend KClass operator+(const KClass& a, const KClass& b);
    friend KClass operator-(const KClass& a, const KClass& b);
    friend KClass operator*(const KClass& a, const KClass& b);
    /// Multiplication by an element of R(G) (a constant class).
    friend KClass operator*(const LaurentPoly& r, const KClass& a);

  private:
    friend Validated<KClass> validate_class(ActionPtr action, std::vector<LaurentPoly> values);
    KClass(ActionPtr a, std::vector<LaurentPoly> v) : action_(std::move(a)), values_(std::move(v)) {}

    ActionPtr action_;
    std::vector<LaurentPoly> values_;
};

Validated<KClass> validate_class(ActionPtr action, std::vector<LaurentPoly> values);

class SymplecticClass;
namespace detail {
Validated<SymplecticClass> build_monomial(ActionPtr action, std::vector<Weight> alphas, bool require_positive);
}

/// Monomial class f_p = x^{alpha_p}; multiplier m_e with
/// alpha_{t(e)} - alpha_{i(e)} = m_e alpha_e.
class SymplecticClass
{
  public:
    const KClass& base() const { return base_; }
    const ActionPtr& action() const { return base_.action(); }
    const Weight& alpha_at(std::size_t p) const { return alphas_.at(p); }
    const std::vector<Weight>& alphas() const { return alphas_; }
    Coord multiplier(std::size_t e) const { return m_.at(e); }
    bool is_symplectic() const
    {
        for (Coord m : m_)
            if (m <= 0)
                return false;
        return true;
    }

  private:
    friend Validated<SymplecticClass> detail::build_monomial(ActionPtr, std::vector<Weight>, bool);
    SymplecticClass(KClass b, std::vector<Weight> a, std::vector<Coord> m)
        : base_(std::move(b)), alphas_(std::move(a)), m_(std::move(m))
    {}

    KClass base_;
    std::vector<Weight> alphas_;
    std::vector<Coord> m_;
};

/// Requires every m_e to be a positive integer.
Validated<SymplecticClass> symplectic_class(ActionPtr action, std::vector<Weight> alphas);

/// Any integral m_e (used to build arbitrary monomial classes); the
/// returned object does not certify positivity.
Validated<SymplecticClass> monomial_class(ActionPtr action, std::vector<Weight> alphas);

/// alpha_p + shift at every vertex; m_e unchanged.
SymplecticClass translated(const SymplecticClass& f, const Weight& shift);
/// k * alpha_p at every vertex (k > 0 keeps the class symplectic).
SymplecticClass dilated(const SymplecticClass& f, Coord k);

} // namespace gkm
