#include "treepoly/suites.hpp"

#include "treepoly/caterpillar.hpp"
#include "treepoly/closed_form.hpp"
#include "treepoly/csf.hpp"
#include "treepoly/exhibits.hpp"
#include "treepoly/free_trees.hpp"
#include "treepoly/transforms.hpp"

namespace treepoly {

namespace {

// Runs `check` on every free tree with 1..max_n vertices; stops at the first
// failure, whose description becomes the counterexample.
template <typename Check>
void each_tree(SuiteResult& r, Check check)
{
    for (int n = 1; n <= r.max_n && r.ok; ++n) {
        FreeTreeGenerator gen(n);
        while (auto t = gen.next()) {
            ++r.cases;
            if (auto failure = check(*t)) {
                r.ok = false;
                r.counterexample = *failure + "\n" + t->to_edge_list();
                return;
            }
        }
    }
}

using Failure = std::optional<std::string>;

} // namespace

SuiteResult run_suite(const std::string& suite, int max_n)
{
    SuiteResult r;
    r.suite = suite;
    r.max_n = max_n;
    if (suite == "crew") {
        each_tree(r, [](const Tree& t) -> Failure {
            const PsumCsf csf = csf_powersum(t);
            const GdpPoly g = gdp_from_csf(csf);
            if (g != gdp(t))
                return "gdp_from_csf gives " + g.to_text() + ", gdp is " + gdp(t).to_text();
            const auto degrees = degree_sequence_from_csf(csf);
            const auto actual = t.degree_sequence();
            if (!std::equal(degrees.begin(), degrees.end(), actual.begin(), actual.end()))
                return std::string("degree sequence from csf differs");
            return std::nullopt;
        });
    } else if (suite == "bridge") {
        each_tree(r, [](const Tree& t) -> Failure {
            const BridgeReport b = verify_bridge(t);
            if (!b.all_hold())
                return "bridge report " + b.to_json();
            return std::nullopt;
        });
    } else if (suite == "recurrence") {
        each_tree(r, [](const Tree& t) -> Failure {
            const HdpPoly lhs = (SparsePoly::variable(vars::hdp, "y") + SparsePoly::variable(vars::hdp, "z")) * uhdp(t);
            for (auto [v, w] : t.edges()) {
                if (t.degree(v) < 2 || t.degree(w) < 2)
                    continue;
                const HdpPoly rhs = uhdp_recurrence_rhs(t, v, w);
                if (lhs != rhs)
                    return "edge " + std::to_string(v) + "-" + std::to_string(w) + ": lhs " + lhs.to_text() +
                           ", rhs " + rhs.to_text();
            }
            return std::nullopt;
        });
    } else if (suite == "closedform") {
        for (int n = 2; n <= max_n && r.ok; ++n)
            for (const Composition& alpha : compositions_of(n)) {
                if (!alpha.is_caterpillar_signature())
                    continue;
                ++r.cases;
                const Tree t = cat(alpha);
                if (gdp_cat(alpha) != gdp(t) || hdp_cat(alpha) != hdp(t)) {
                    r.ok = false;
                    r.counterexample = "closed form differs for Cat(" + alpha.to_string() + ")";
                    break;
                }
            }
    } else if (suite == "exhibits") {
        for (const ExhibitReport& e : verify_exhibits())
            for (const CheckLine& c : e.checks) {
                ++r.cases;
                if (!c.ok && r.ok) {
                    r.ok = false;
                    r.counterexample = e.name + ": " + c.label;
                }
            }
    } else {
        throw DomainError("unknown suite '" + suite + "'");
    }
    r.summary = suite + ": " + std::to_string(r.cases) + " cases, " + (r.ok ? "all passed" : "FAILED");
    return r;
}

} // namespace treepoly
