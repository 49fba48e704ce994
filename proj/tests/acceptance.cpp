// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "gkm/generators.hpp"
#include "gkm/graph_io.hpp"
#include "gkm/selftest.hpp"

using namespace gkm;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Report
{
    int failed = 0;

    void line(int id, bool pass, const std::string& what, const std::string& detail)
    {
        std::printf("%s  [%2d] %s (%s)\n", pass ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
        std::fflush(stdout);
        failed += pass ? 0 : 1;
    }
};

std::string fmt_seconds(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
}

const SelftestEntry* find(const std::vector<SelftestEntry>& es, const std::string& battery)
{
    for (const auto& e : es)
        if (e.battery == battery)
            return &e;
    return nullptr;
}

/// Pass state and "cases, failures" detail for a set of batteries.
std::pair<bool, std::string> summarize(const std::vector<SelftestEntry>& es, std::initializer_list<const char*> names)
{
    bool pass = true;
    std::string detail;
    for (const char* n : names) {
        const SelftestEntry* e = find(es, n);
        if (!detail.empty())
            detail += "; ";
        if (!e) {
            pass = false;
            detail += std::string(n) + ": missing";
            continue;
        }
        pass = pass && e->pass() && e->cases > 0;
        detail += std::string(n) + ": " + std::to_string(e->cases) + " checks, " + std::to_string(e->failures.size()) +
                  " failures";
        if (!e->failures.empty())
            detail += " [first: " + e->failures.front() + "]";
    }
    return {pass, detail};
}

Example two_vertex()
{
    RawAction raw;
    raw.n        = 2;
    raw.vertices = {"p", "q"};
    raw.add_edge_pair(0, 1, Weight{1, 0});
    return Example{"CP1", symplectic_class(make_action(raw), {Weight{-1, 0}, Weight{1, 0}}).get()};
}

bool guarded(const std::function<bool(std::string&)>& body, std::string& detail)
{
    try {
        return body(detail);
    } catch (const std::exception& e) {
        detail = std::string("error: ") + e.what();
        return false;
    }
}

} // namespace

int main()
{
    Report rep;

    {
        const auto t0 = Clock::now();
        std::string detail;
        const bool ok = guarded(
            [](std::string& d) {
                LaurentPoly want(2);
                want.add_term(Weight{-1, 0}, 1);
                want.add_term(Weight{0, 0}, 1);
                want.add_term(Weight{1, 0}, 1);
                const Example ex     = two_vertex();
                const LaurentPoly ex_chi = character_expand(ex.cls, polarize(ex.action(), LatticeVector{1, 0})).poly;
                const LaurentPoly or_chi = character_oracle(ex.cls.base());
                d = "expand = " + to_string(ex_chi) + ", oracle = " + to_string(or_chi);
                return ex_chi == want && or_chi == want;
            },
            detail);
        const double s = seconds_since(t0);
        rep.line(1, ok && s < 1.0, "two-vertex character", detail + ", " + fmt_seconds(s));
    }

    {
        const auto t0 = Clock::now();
        std::string detail;
        const bool ok = guarded(
            [](std::string& d) {
                LaurentPoly want(2);
                want.add_term(Weight{0, 0}, 1);
                want.add_term(Weight{1, 0}, 1);
                want.add_term(Weight{0, 1}, 1);
                const Example ex         = gen_projective(2);
                const CharacterResult ch = character_expand(ex.cls, polarize(ex.action(), LatticeVector{1, 2}));
                const HullReport hull    = hull_report(ex.cls, ch);
                bool extremal            = hull.hull_vertices.size() == 3;
                for (const auto& [w, c] : hull.extremal_coefficients)
                    extremal = extremal && c == 1;
                d = "chi = " + to_string(ch.poly) + ", " + std::to_string(hull.hull_vertices.size()) +
                    " extremal weights";
                return ch.poly == want && character_oracle(ex.cls.base()) == want && extremal && hull.ok();
            },
            detail);
        const double s = seconds_since(t0);
        rep.line(2, ok && s < 1.0, "CP2 character and extremal weights", detail + ", " + fmt_seconds(s));
    }

    // The batteries run with the default sizes: 100 classes, 20 points,
    // 5 directions, 50 symplectic classes, 200 fractions, 25 stars,
    // 25 reduction cases, 10 samples per edge.
    const SelftestOptions opts;
    const auto t0                         = Clock::now();
    const std::vector<SelftestEntry> runs = run_selftest(opts);
    const double total                    = seconds_since(t0);

    {
        auto [ok, d] = summarize(runs, {"polynomiality"});
        // The whole battery run bounds the time spent on this criterion.
        rep.line(3, ok && total < 60.0, "exact division agrees with the expansion on 100 classes",
                 d + ", full battery run " + fmt_seconds(total));
    }
    {
        auto [ok, d] = summarize(runs, {"localization"});
        rep.line(4, ok, "numeric fixed-point sum within 1e-6 at 20 points per class", d);
    }
    {
        auto [ok, d] = summarize(runs, {"xi-independence"});
        rep.line(5, ok, "character independent of 5 generic directions per class", d);
    }
    {
        auto [ok, d] = summarize(runs, {"convexity", "multiplicity"});
        rep.line(6, ok, "support in the polytope and multiplicities on a margin-2 box", d);
    }
    {
        auto [ok, d] = summarize(runs, {"residue vanishing", "total residue"});
        rep.line(7, ok, "per-monomial residue vanishing and total residue zero", d);
    }
    {
        auto [ok, d] = summarize(runs, {"fiber averages"});
        rep.line(8, ok, "residue equals the fiber-average sum within 1e-6", d);
    }
    {
        auto [ok, d] = summarize(runs, {"wall crossing"});
        rep.line(9, ok, "chamber independence, telescoping and wall crossing", d);
    }
    {
        auto [ok, d] = summarize(runs, {"quantization commutes with reduction"});
        std::string fixed;
        const bool fixed_ok = guarded(
            [](std::string& out) {
                const Example cp1 = two_vertex();
                const Example cp2 = gen_projective(2);
                const Example cp3 = gen_projective(3);
                const std::vector<std::pair<std::string, QrResult>> rs{
                    {"CP1", qr_check(cp1.cls, LatticeVector{1, 0})},
                    {"CP2", qr_check(translated(dilated(cp2.cls, 3), Weight{1, 0}), LatticeVector{1, -1})},
                    {"CP3", qr_check(translated(dilated(cp3.cls, 3), Weight{1, 0, 0}), LatticeVector{1, -1, 2})},
                };
                bool all = true;
                for (const auto& [name, r] : rs) {
                    out += (out.empty() ? "" : ", ") + name + " chi_red = " + to_string(r.reduced);
                    all = all && r.pass;
                }
                return all;
            },
            fixed);
        rep.line(10, ok && fixed_ok, "invariant part equals the reduced character", fixed + "; " + d);
    }
    {
        auto [ok, d] = summarize(runs, {"edge restriction"});
        rep.line(11, ok, "edge restriction at 10 samples per edge on all fixtures", d);
    }

    std::printf("%d of 11 criteria failed\n", rep.failed);
    return rep.failed == 0 ? 0 : 1;
}
