#include "gkm/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gkm/residue.hpp"

namespace gkm {

TorusPoint pole_free_point(std::mt19937_64& rng, const std::vector<RationalChar>& fs, double min_dist)
{
    const std::size_t n = fs.empty() ? 1 : fs.front().dim();
    for (int tries = 0; tries < 10000; ++tries) {
        TorusPoint g = random_torus_point(rng, n);
        bool ok      = true;
        for (const auto& f : fs)
            if (pole_distance(f, g) < min_dist) {
                ok = false;
                break;
            }
        if (ok)
            return g;
    }
    throw PoleAtPoint("no pole-free sample point found");
}

std::vector<Weight> random_star(std::mt19937_64& rng, std::size_t n, std::size_t d, const LatticeVector& xi,
                                Coord range)
{
    std::uniform_int_distribution<Coord> coord(-range, range);
    for (;;) {
        std::vector<Weight> ws;
        for (int tries = 0; ws.size() < d && tries < 1000; ++tries) {
            Weight w(n);
            for (std::size_t j = 0; j < n; ++j)
                w[j] = coord(rng);
            if (w.is_zero() || pairing(w, xi) == 0)
                continue;
            bool independent = true;
            for (const auto& u : ws)
                if (proportional(u, w))
                    independent = false;
            if (independent)
                ws.push_back(w);
        }
        if (ws.size() == d)
            return ws;
    }
}

RationalChar random_rational_char(std::mt19937_64& rng, std::size_t n, const LatticeVector& xi, std::size_t max_den)
{
    std::uniform_int_distribution<std::size_t> nden(0, max_den);
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<Coord> expo(-3, 3);
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<Coord> small(-2, 2);
    std::vector<Weight> den;
    const std::size_t d = nden(rng);
    while (den.size() < d) {
        Weight w(n);
        for (std::size_t j = 0; j < n; ++j)
            w[j] = small(rng);
        if (pairing(w, xi) != 0)
            den.push_back(w);
    }
    LaurentPoly num(n);
    const int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Weight mu(n);
        for (std::size_t j = 0; j < n; ++j)
            mu[j] = expo(rng);
        const int c = coef(rng);
        num.add_term(mu, c == 0 ? 1 : c);
    }
    if (num.is_zero())
        num = LaurentPoly::constant(n, 1);
    return RationalChar(std::move(num), std::move(den));
}

LatticeVector random_zero_regular_xi(const SymplecticClass& f, std::mt19937_64& rng, Coord range)
{
    for (int tries = 0; tries < 1000; ++tries) {
        LatticeVector xi = random_generic_xi(*f.action(), rng, range);
        bool regular     = true;
        for (const auto& a : f.alphas())
            if (pairing(a, xi) == 0)
                regular = false;
        if (regular)
            return xi;
    }
    throw ZeroNotRegular("no generic xi with 0 regular found for this class");
}

std::complex<double> localization_sum(const KClass& f, const TorusPoint& g)
{
    std::complex<double> s = 0;
    for (const auto& r : fixed_point_summands(f))
        s += eval_numeric(r, g);
    return s;
}

namespace {

bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-6)
{
    return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

class Battery
{
  public:
    Battery(std::vector<SelftestEntry>& out, std::string battery, std::string property)
        : out_(out), entry_{std::move(battery), std::move(property), 0, {}}
    {}
    ~Battery() { out_.push_back(std::move(entry_)); }

    void check(bool ok, const std::string& what)
    {
        ++entry_.cases;
        if (!ok)
            entry_.failures.push_back(what);
    }
    void error(const std::string& what, const std::exception& e)
    {
        ++entry_.cases;
        entry_.failures.push_back(what + ": " + e.what());
    }

  private:
    std::vector<SelftestEntry>& out_;
    SelftestEntry entry_;
};

struct Case
{
    Example ex;
    KClass f;
};

void character_batteries(std::vector<SelftestEntry>& out, const SelftestOptions& o, std::mt19937_64& rng)
{
    std::vector<Case> cases;
    for (std::size_t i = 0; i < o.classes; ++i) {
        Example ex = random_fixture(rng);
        KClass f   = random_class(ex, rng);
        cases.push_back({std::move(ex), std::move(f)});
    }

    std::vector<LaurentPoly> chars(cases.size());
    {
        Battery b(out, "polynomiality", "the localized character sum is a Laurent polynomial");
        for (std::size_t i = 0; i < cases.size(); ++i) {
            const auto& c = cases[i];
            try {
                const LatticeVector xi = random_generic_xi(*c.ex.action(), rng);
                chars[i]               = character_expand(c.f, polarize(c.ex.action(), xi)).poly;
                const LaurentPoly o2   = character_oracle(c.f);
                b.check(o2 == chars[i], c.ex.name + ": exact division and polarized expansion disagree");
            } catch (const Error& e) {
                b.error(c.ex.name, e);
            }
        }
    }
    {
        Battery b(out, "localization", "the character equals the fixed-point sum pointwise");
        for (std::size_t i = 0; i < cases.size(); ++i) {
            const auto& c = cases[i];
            try {
                const auto summands = fixed_point_summands(c.f);
                for (std::size_t k = 0; k < o.points; ++k) {
                    const TorusPoint g = pole_free_point(rng, summands);
                    b.check(close(localization_sum(c.f, g), eval_numeric(chars[i], g)),
                            c.ex.name + ": numeric mismatch at a sample point");
                }
            } catch (const Error& e) {
                b.error(c.ex.name, e);
            }
        }
    }
    {
        Battery b(out, "xi-independence", "the polarized expansion does not depend on the polarization");
        for (std::size_t i = 0; i < cases.size(); ++i) {
            const auto& c = cases[i];
            try {
                for (std::size_t k = 0; k < o.directions; ++k) {
                    const LatticeVector xi = random_generic_xi(*c.ex.action(), rng);
                    b.check(character_expand(c.f, polarize(c.ex.action(), xi)).poly == chars[i],
                            c.ex.name + ": expansion differs for xi = " + to_string(xi));
                }
            } catch (const Error& e) {
                b.error(c.ex.name, e);
            }
        }
    }
}

void convexity_battery(std::vector<SelftestEntry>& out, const SelftestOptions& o, std::mt19937_64& rng)
{
    // Entries are recorded on destruction, so the later battery comes first.
    Battery mult(out, "multiplicity", "the Kostant-type formula reproduces the character coefficients");
    Battery hull(out, "convexity", "support in the moment polytope, extremal multiplicity one");
    for (std::size_t i = 0; i < o.symplectic; ++i) {
        const Example ex        = random_fixture(rng);
        const SymplecticClass f = random_symplectic(ex, rng);
        try {
            const Polarization pol   = polarize(ex.action(), random_generic_xi(*ex.action(), rng));
            const CharacterResult ch = character_expand(f, pol);
            const HullReport rep     = hull_report(f, ch);
            hull.check(rep.ok(), ex.name + ": convexity or extremal coefficient fails");

            const std::size_t n = ex.action()->torus_dim();
            std::vector<Coord> lo(n, std::numeric_limits<Coord>::max()), hi(n, std::numeric_limits<Coord>::min());
            for (const auto& a : f.alphas())
                for (std::size_t j = 0; j < n; ++j) {
                    lo[j] = std::min(lo[j], a[j] - 2);
                    hi[j] = std::max(hi[j], a[j] + 2);
                }
            MultiplicityFormula m(f, pol);
            Weight alpha(lo);
            bool ok = true;
            for (;;) {
                if (m(alpha) != ch.poly.coefficient(alpha))
                    ok = false;
                std::size_t j = 0;
                while (j < n && alpha[j] == hi[j])
                    alpha[j] = lo[j], ++j;
                if (j == n)
                    break;
                ++alpha[j];
            }
            mult.check(ok, ex.name + ": multiplicity differs from a character coefficient");
        } catch (const Error& e) {
            hull.error(ex.name, e);
        }
    }
}

void residue_batteries(std::vector<SelftestEntry>& out, const SelftestOptions& o, std::mt19937_64& rng)
{
    {
        Battery b(out, "residue vanishing", "one-sided residues vanish outside the admissible degree range");
        for (std::size_t i = 0; i < o.rational_chars; ++i) {
            const std::size_t n    = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
            LatticeVector xi;
            do {
                xi = LatticeVector(n);
                for (std::size_t j = 0; j < n; ++j)
                    xi[j] = std::uniform_int_distribution<Coord>(-3, 3)(rng);
            } while (xi.is_zero() || !is_primitive(xi));
            const RationalChar f = random_rational_char(rng, n, xi);
            const ZForm z        = to_z_form(f, xi);
            Coord neg = 0, pos = 0;
            std::size_t r = 0;
            for (const auto& fac : z.factors) {
                if (fac.k < 0) {
                    neg += fac.k;
                    ++r;
                } else {
                    pos += fac.k;
                }
            }
            const std::size_t d = z.factors.size();
            bool ok             = true;
            for (const auto& [e, c] : z.numerator.terms()) {
                ZForm single     = z;
                single.numerator = LaurentPoly::monomial(e, c);
                const Coord k    = e[n - 1];
                if ((k > neg || (k == 0 && r > 0)) && !res_half(single, Side::minus).is_zero())
                    ok = false;
                if ((k < pos || (k == 0 && d > r)) && !res_half(single, Side::plus).is_zero())
                    ok = false;
            }
            b.check(ok, "fraction with " + std::to_string(d) + " factors, xi = " + to_string(xi));
        }
    }
    {
        Battery b(out, "total residue", "the vertex residues of a class sum to zero");
        for (const auto& ex : standard_fixtures()) {
            try {
                const KClass f         = random_class(ex, rng);
                const LatticeVector xi = random_generic_xi(*ex.action(), rng);
                LaurentPoly sum(ex.action()->torus_dim());
                for (std::size_t p = 0; p < ex.action()->num_vertices(); ++p)
                    sum += vertex_residue(f, p, xi);
                b.check(sum.is_zero(), ex.name + ": residues sum to " + to_string(sum));
            } catch (const Error& e) {
                b.error(ex.name, e);
            }
        }
    }
    {
        Battery b(out, "fiber averages", "the residue equals the signed sum of fiber averages");
        for (std::size_t i = 0; i < o.stars; ++i) {
            const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 3)(rng);
            const std::size_t d = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
            LatticeVector xi(n);
            do {
                for (std::size_t j = 0; j < n; ++j)
                    xi[j] = std::uniform_int_distribution<Coord>(-2, 2)(rng);
            } while (xi.is_zero() || !is_primitive(xi));
            RationalChar f = random_rational_char(rng, n, xi, 0);
            f.denominator  = random_star(rng, n, d, xi);
            const LaurentPoly total = res_T(f, xi).total;
            for (std::size_t k = 0; k < o.points; ++k) {
                TorusPoint g;
                for (int tries = 0;; ++tries) {
                    g = random_torus_point(rng, n);
                    if (fiber_pole_distance(f, xi, g) > 1e-3)
                        break;
                    if (tries > 1000)
                        throw PoleAtPoint("fiber sampling");
                }
                b.check(close(eval_numeric(total, g), residue_by_fiber_averages(f, xi, g)),
                        "star of " + std::to_string(d) + " weights, xi = " + to_string(xi));
            }
        }
    }
}

void reduction_batteries(std::vector<SelftestEntry>& out, const SelftestOptions& o, std::mt19937_64& rng)
{
    {
        Battery b(out, "wall crossing", "chamber independence, telescoping and the one-wall identity");
        for (const auto& ex : standard_fixtures()) {
            try {
                const KClass f         = random_class(ex, rng);
                const LatticeVector xi = random_generic_xi(*ex.action(), rng);
                const MomentMap m      = moment_map(ex.action(), xi);
                std::vector<Rational> crit = m.phi;
                std::sort(crit.begin(), crit.end());
                // One regular level in each chamber, from below the minimum.
                std::vector<Rational> levels{crit.front() - 1};
                for (std::size_t i = 0; i + 1 < crit.size(); ++i)
                    levels.push_back((crit[i] + crit[i + 1]) / 2);
                levels.push_back(crit.back() + 1);

                bool ok = true;
                std::vector<LaurentPoly> chi;
                for (const auto& c : levels)
                    chi.push_back(chi_reduced(f, m, c));
                // Chamber independence: a second level in the same chamber.
                for (std::size_t i = 0; i + 1 < levels.size(); ++i)
                    if (chi_reduced(f, m, (levels[i] + crit[i]) / 2) != chi[i])
                        ok = false;
                LaurentPoly tele(ex.action()->torus_dim());
                for (std::size_t i = levels.size() - 1; i-- > 0;) {
                    const WallCrossing w = wall_crossing_check(f, m, levels[i], levels[i + 1]);
                    ok                   = ok && w.pass;
                    tele += w.residue;
                    ok = ok && tele == chi[i];
                }
                ok = ok && chi.front().is_zero() && chi.back().is_zero();
                b.check(ok, ex.name + ", xi = " + to_string(xi));
            } catch (const Error& e) {
                b.error(ex.name, e);
            }
        }
    }
    {
        Battery b(out, "quantization commutes with reduction", "invariant part of the character equals the reduced character");
        std::size_t made = 0;
        for (int tries = 0; made < o.qr_cases && tries < 1000; ++tries) {
            const Example ex        = random_fixture(rng);
            const SymplecticClass f = random_symplectic(ex, rng);
            LatticeVector xi;
            try {
                xi = random_zero_regular_xi(f, rng);
            } catch (const ZeroNotRegular&) {
                continue;
            }
            ++made;
            try {
                const QrResult r = qr_check(f, xi);
                b.check(r.pass, ex.name + ", xi = " + to_string(xi) + ": " + to_string(r.invariant) + " vs " +
                                    to_string(r.reduced));
            } catch (const Error& e) {
                b.error(ex.name, e);
            }
        }
    }
    {
        Battery b(out, "edge restriction", "the two edge expressions agree on the edge subgroup");
        for (const auto& ex : standard_fixtures()) {
            const KClass f = random_class(ex, rng);
            for (std::size_t e = 0; e < ex.action()->num_edges(); ++e) {
                try {
                    const EdgeCompat r = edge_compat_check(f, e, o.edge_samples, rng);
                    b.check(r.pass, ex.name + " " + ex.action()->edge_label(e));
                } catch (const Error& e2) {
                    b.error(ex.name, e2);
                }
            }
        }
    }
}

void corrupt_battery(std::vector<SelftestEntry>& out, const SelftestOptions& o, std::mt19937_64& rng)
{
    const Example ex             = gen_projective(2);
    std::vector<LaurentPoly> bad = ex.cls.base().values();
    bad[2].add_term(Weight{1, 1}, 1);  // breaks the congruences at P2
    {
        Battery b(out, "injected class", "K-class compatibility along every edge");
        const auto v = validate_class(ex.action(), bad);
        std::string why;
        for (const auto& viol : v.violations)
            why += (why.empty() ? "" : "; ") + to_string(viol);
        b.check(v.ok(), "corrupted class on " + ex.name + ": " + why);
    }
    {
        Battery b(out, "injected class", "the two edge expressions agree on the edge subgroup");
        for (std::size_t e = 0; e < ex.action()->num_edges(); ++e) {
            const EdgeCompat r = edge_compat_check(*ex.action(), bad, e, o.edge_samples, rng);
            b.check(r.pass, "corrupted class on " + ex.name + " " + ex.action()->edge_label(e));
        }
    }
}

} // namespace

std::vector<SelftestEntry> run_selftest(const SelftestOptions& opts)
{
    std::mt19937_64 rng(opts.seed);
    std::vector<SelftestEntry> out;
    character_batteries(out, opts, rng);
    convexity_battery(out, opts, rng);
    residue_batteries(out, opts, rng);
    reduction_batteries(out, opts, rng);
    if (opts.inject_corrupt)
        corrupt_battery(out, opts, rng);
    return out;
}

std::string render_selftest(const std::vector<SelftestEntry>& entries)
{
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& e : entries) {
        os << (e.pass() ? "PASS  " : "FAIL  ") << e.battery << " [" << e.property << "] " << e.cases - e.failures.size()
           << "/" << e.cases << "\n";
        for (const auto& f : e.failures)
            os << "      " << f << "\n";
        failed += e.pass() ? 0 : 1;
    }
    os << (failed == 0 ? "all batteries passed" : std::to_string(failed) + " batteries failed") << "\n";
    return os.str();
}

} // namespace gkm
