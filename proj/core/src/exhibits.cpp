#include "treepoly/exhibits.hpp"

#include <algorithm>

#include "treepoly/canonical.hpp"
#include "treepoly/caterpillar.hpp"
#include "treepoly/degree_poly.hpp"
#include "treepoly/fingerprint.hpp"
#include "treepoly/subtree_census.hpp"

namespace treepoly {

namespace {

struct Transcription {
    const char* name;
    const char* description;
    const char* first;
    const char* second;
    const char* checksum;
};

// Edge lists transcribed from the figures.
constexpr Transcription kTranscriptions[] = {
    {"figure2", "smallest pair of trees with equal generalized degree polynomial: Cat(2,2,1,3,3), Cat(2,3,2,1,3)",
     "n=11\n0 1\n1 2\n2 3\n3 4\n0 5\n1 6\n3 7\n3 8\n4 9\n4 10\n",
     "n=11\n0 1\n1 2\n2 3\n3 4\n0 5\n1 6\n1 7\n2 8\n4 9\n4 10\n",
     "c6c1ed3441cec819517efb75785b6a09"},
    {"figure9", "18-vertex pair with equal hdp that is not of the form alpha o T",
     "n=18\n0 1\n0 8\n0 16\n0 17\n1 2\n2 3\n3 4\n4 5\n6 3\n3 7\n13 12\n12 8\n8 9\n9 10\n10 11\n14 8\n8 15\n",
     "n=18\n0 8\n0 1\n1 2\n2 3\n3 4\n4 5\n7 2\n2 6\n14 8\n8 9\n17 8\n8 16\n12 9\n9 10\n10 11\n9 13\n14 15\n",
     "5d2430f947ffb80be0443351762e372f"},
    {"figure10", "19-vertex pair with equal hdp and different gdp",
     "n=19\n18 9\n9 8\n8 7\n7 6\n6 0\n0 1\n1 2\n2 3\n3 4\n4 14\n16 8\n8 17\n10 0\n0 11\n1 5\n5 15\n3 13\n2 12\n",
     "n=19\n14 4\n4 3\n3 2\n2 1\n1 0\n0 6\n6 7\n7 8\n8 9\n9 18\n7 16\n8 17\n0 10\n12 3\n3 13\n11 1\n1 5\n5 15\n",
     "7dae58c865e80361e0e4e13b7dea03c4"},
};

CheckLine check(std::string label, bool ok) { return {std::move(label), ok}; }

} // namespace

std::string exhibit_checksum(const Tree& first, const Tree& second)
{
    return digest_hex(digest_of(first.to_edge_list() + second.to_edge_list()));
}

std::vector<Exhibit> builtin_exhibits()
{
    std::vector<Exhibit> out;
    for (const auto& tr : kTranscriptions) {
        Exhibit e{tr.name, tr.description, parse_tree(tr.first), parse_tree(tr.second), tr.checksum};
        if (exhibit_checksum(e.first, e.second) != e.checksum)
            throw Error(std::string("exhibit ") + tr.name + " fails its checksum");
        out.push_back(std::move(e));
    }
    return out;
}

bool ExhibitReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.ok; });
}

std::vector<ExhibitReport> verify_exhibits()
{
    std::vector<ExhibitReport> out;
    for (const Exhibit& e : builtin_exhibits()) {
        ExhibitReport r{e.name, {}};
        const Tree& a = e.first;
        const Tree& b = e.second;
        r.checks.push_back(check("checksum", exhibit_checksum(a, b) == e.checksum));
        r.checks.push_back(check("not isomorphic", !isomorphic(a, b)));
        r.checks.push_back(check("equal hdp", hdp(a) == hdp(b)));
        if (e.name == "figure2") {
            r.checks.push_back(check("11 vertices", a.size() == 11 && b.size() == 11));
            r.checks.push_back(check("signatures 2,2,1,3,3 and 2,3,2,1,3",
                                     is_caterpillar(a) && is_caterpillar(b) &&
                                         signature(a) == Composition{2, 2, 1, 3, 3} &&
                                         signature(b) == Composition{2, 3, 2, 1, 3}));
            r.checks.push_back(check("equal gdp", gdp(a) == gdp(b)));
            r.checks.push_back(check("equal stp", stp(a) == stp(b)));
            const SoupPoly sa = soup(a), sb = soup(b);
            r.checks.push_back(check("soup differs", sa != sb));
            const std::array<int, 3> x3yz2{3, 1, 2};
            const Int ca = sa.coefficient(x3yz2), cb = sb.coefficient(x3yz2);
            r.checks.push_back(check("soup coefficient of x^3*y*z^2 is 1 in the first tree", ca == 1));
            r.checks.push_back(check("soup coefficient of x^3*y*z^2 is 0 in the second tree", cb == 0));
        } else if (e.name == "figure9") {
            r.checks.push_back(check("18 vertices", a.size() == 18 && b.size() == 18));
            r.checks.push_back(check("equal stp", stp(a) == stp(b)));
        } else if (e.name == "figure10") {
            r.checks.push_back(check("19 vertices", a.size() == 19 && b.size() == 19));
            const GdpPoly ga = gdp(a), gb = gdp(b);
            r.checks.push_back(check("gdp differs", ga != gb));
            const std::array<int, 3> x5y15{5, 15, 0};
            r.checks.push_back(check("gdp coefficient of x^5*y^15 is 1 in the first tree", ga.coefficient(x5y15) == 1));
            r.checks.push_back(check("gdp coefficient of x^5*y^15 is 0 in the second tree", gb.coefficient(x5y15) == 0));
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace treepoly
