// treepoly: command-line front end for the tree invariant library.
//
// Exit codes: 0 success, 1 verification failure (counterexample on stdout),
// 2 usage or input error (diagnostic on stderr).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "treepoly/canonical.hpp"
#include "treepoly/classify.hpp"
#include "treepoly/csf.hpp"
#include "treepoly/degree_poly.hpp"
#include "treepoly/factorization.hpp"
#include "treepoly/families.hpp"
#include "treepoly/free_trees.hpp"
#include "treepoly/subtree_census.hpp"
#include "treepoly/suites.hpp"

using namespace treepoly;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct InvariantsArgs {
    std::string tree_file;
    bool csf = false, gdp = false, hdp = false, stp = false, soup = false, all = false;
    std::string format = "text";
};

int run_invariants(const InvariantsArgs& a)
{
    const Tree t = read_tree_file(a.tree_file);
    const bool json = a.format == "json";
    std::vector<std::pair<std::string, std::function<std::string()>>> selected;
    const bool none = !(a.csf || a.gdp || a.hdp || a.stp || a.soup);
    auto want = [&](bool flag) { return flag || a.all || none; };
    if (want(a.csf))
        selected.emplace_back("csf", [&] { return json ? csf_powersum(t).to_json() : csf_powersum(t).to_text(); });
    if (want(a.gdp))
        selected.emplace_back("gdp", [&] { return json ? gdp(t).to_json() : gdp(t).to_text(); });
    if (want(a.hdp))
        selected.emplace_back("hdp", [&] { return json ? hdp(t).to_json() : hdp(t).to_text(); });
    if (want(a.stp))
        selected.emplace_back("stp", [&] { return json ? stp(t).to_json() : stp(t).to_text(); });
    if (want(a.soup))
        selected.emplace_back("soup", [&] { return json ? soup(t).to_json() : soup(t).to_text(); });

    if (selected.size() == 1) {
        std::cout << selected.front().second() << "\n";
        return kOk;
    }
    if (json) {
        nlohmann::ordered_json out;
        out["n"] = t.size();
        for (auto& [name, f] : selected)
            out[name] = nlohmann::ordered_json::parse(f());
        std::cout << out.dump(2) << "\n";
    } else {
        for (auto& [name, f] : selected)
            std::cout << name << ": " << f() << "\n";
    }
    return kOk;
}

struct ClassifyArgs {
    int n = 0;
    std::string invariant;
    int jobs = 1;
    std::string out_dir;
    std::string cache_dir;
    bool allow_large = false;
    bool use_cache = false;
};

int run_classify(const ClassifyArgs& a)
{
    const auto tag = parse_invariant_tag(a.invariant);
    if (!tag) {
        std::cerr << "error: unknown invariant '" << a.invariant << "' (csf, gdp, hdp, stp, soup, hdp+gdp)\n";
        return kUsage;
    }
    if (a.n > kDefaultMaxN && a.allow_large)
        std::cerr << "warning: n=" << a.n << " is above the default cap; this can take a long time\n";
    ClassifyOptions o;
    o.n = a.n;
    o.tag = *tag;
    o.jobs = a.jobs;
    o.allow_large = a.allow_large;
    o.cache_dir = a.cache_dir;
    o.use_cache = a.use_cache || !a.cache_dir.empty();
    const ClassReport r = classify(o);
    const std::string json = r.to_json();
    if (a.out_dir.empty()) {
        std::cout << json << "\n";
    } else {
        std::filesystem::create_directories(a.out_dir);
        std::string name(to_string(*tag));
        std::replace(name.begin(), name.end(), '+', '_');
        const auto path = std::filesystem::path(a.out_dir) / ("classify-n" + std::to_string(a.n) + "-" + name + ".json");
        std::ofstream(path) << json << "\n";
        std::cout << "n=" << r.n << " invariant=" << to_string(r.tag) << " trees=" << r.num_trees
                  << " non-singleton classes=" << r.classes.size() << " -> " << path.string() << "\n";
    }
    return kOk;
}

int run_verify(const std::string& suite, int max_n)
{
    const SuiteResult r = run_suite(suite, max_n);
    std::cout << r.summary << "\n";
    if (!r.ok) {
        std::cout << "counterexample:\n" << r.counterexample.value_or("") << "\n";
        return kFailed;
    }
    return kOk;
}

struct FamilyArgs {
    std::string composition;
    std::string tree_file;
    int left = 0, right = 0;
    int max_vertices = kFamilyMaxVertices;
};

int run_family(const FamilyArgs& a)
{
    const Composition alpha = Composition::parse(a.composition);
    const PolarizedTree base =
        a.tree_file.empty() ? PolarizedTree::single_vertex() : PolarizedTree(read_tree_file(a.tree_file), a.left, a.right);
    std::cout << "factorization: " << irreducible_factorization(alpha).to_string() << "\n";
    const auto raw = switching_class(alpha);
    const auto reduced = switching_class(alpha, true);
    std::cout << "switching class: " << raw.size() << " compositions, " << reduced.size() << " up to reversal\n";
    for (const auto& beta : raw)
        std::cout << "  " << beta.to_string() << "\n";
    const auto family = theorem7_family(alpha, base, a.max_vertices);
    std::cout << "trees: " << family.size() << " up to isomorphism\n";
    bool same = true;
    const HdpPoly h0 = hdp(family.front());
    for (const Tree& t : family) {
        std::cout << "\n" << t.to_edge_list();
        same = same && hdp(t) == h0;
    }
    std::cout << "\nhdp " << (same ? "shared: " + h0.to_text() : std::string("NOT shared")) << "\n";
    return same ? kOk : kFailed;
}

int run_factor(const std::string& text)
{
    const Composition alpha = Composition::parse(text);
    std::cout << irreducible_factorization(alpha).to_string() << "\n";
    return kOk;
}

int run_eg(const std::string& poly, int a, int b)
{
    std::vector<int> p;
    std::stringstream ss(poly);
    for (std::string tok; std::getline(ss, tok, ',');) {
        try {
            p.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw DomainError("bad coefficient list '" + poly + "'");
        }
    }
    const EisenstatGordonPair pair = eisenstat_gordon(p, a, b);
    std::cout << "L1 = (" << pair.first.to_string() << ")\n";
    std::cout << "L2 = (" << pair.second.to_string() << ")\n";
    const bool iso = isomorphic(pair.first_tree, pair.second_tree);
    const bool same_stp = stp(pair.first_tree) == stp(pair.second_tree);
    std::cout << "isomorphic: " << (iso ? "yes" : "no") << "\n";
    std::cout << "equal stp: " << (same_stp ? "yes" : "no") << "\n";
    return same_stp ? kOk : kFailed;
}

int run_gen(int n)
{
    bool first = true;
    for_each_free_tree(n, [&](const Tree& t) {
        if (!first)
            std::cout << "\n";
        first = false;
        std::cout << t.to_edge_list();
    });
    return kOk;
}

int run_compare(int n, bool allow_large)
{
    std::cout << compare_invariants(n, allow_large).to_json() << "\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact tree invariants: chromatic symmetric function, degree and subtree polynomials"};
    app.require_subcommand(1);

    InvariantsArgs inv;
    auto* c_inv = app.add_subcommand("invariants", "compute invariants of one tree");
    c_inv->add_option("--tree", inv.tree_file, "edge-list file")->required();
    c_inv->add_flag("--csf", inv.csf, "power-sum coefficients of the chromatic symmetric function");
    c_inv->add_flag("--gdp", inv.gdp, "generalized degree polynomial");
    c_inv->add_flag("--hdp", inv.hdp, "half-generalized degree polynomial");
    c_inv->add_flag("--stp", inv.stp, "subtree polynomial");
    c_inv->add_flag("--soup", inv.soup, "joint subtree polynomial");
    c_inv->add_flag("--all", inv.all, "every invariant");
    c_inv->add_option("--format", inv.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    ClassifyArgs cls;
    auto* c_cls = app.add_subcommand("classify", "group all free trees on n vertices by an invariant");
    c_cls->add_option("--n", cls.n, "vertex count")->required()->check(CLI::PositiveNumber);
    c_cls->add_option("--invariant", cls.invariant, "csf, gdp, hdp, stp, soup or hdp+gdp")->required();
    c_cls->add_option("--jobs", cls.jobs, "worker threads")->check(CLI::PositiveNumber);
    c_cls->add_option("--out", cls.out_dir, "write the JSON report into this directory");
    c_cls->add_option("--cache", cls.cache_dir, std::string("cache directory (default $") + kCacheEnvVar + ")");
    c_cls->add_flag("--use-cache", cls.use_cache, std::string("use the cache directory in $") + kCacheEnvVar);
    c_cls->add_flag("--allow-large", cls.allow_large, "permit n up to 19");

    std::string suite;
    int max_n = 8;
    auto* c_ver = app.add_subcommand("verify", "run a verification suite");
    c_ver->add_option("--suite", suite, "crew, bridge, recurrence, closedform or exhibits")
        ->required()
        ->check(CLI::IsMember({"crew", "bridge", "recurrence", "closedform", "exhibits"}));
    c_ver->add_option("--max-n", max_n, "largest tree size checked")->check(CLI::Range(1, 16));

    FamilyArgs fam;
    auto* c_fam = app.add_subcommand("family", "trees sharing hdp built from a switching class");
    c_fam->add_option("--composition", fam.composition, "e.g. 1,2,1,3,2")->required();
    c_fam->add_option("--tree", fam.tree_file, "polarized base tree (default: single vertex)");
    c_fam->add_option("--left", fam.left, "left end of the base tree");
    c_fam->add_option("--right", fam.right, "right end of the base tree");
    c_fam->add_option("--max-vertices", fam.max_vertices, "size cap for family members");

    std::string factor_text;
    auto* c_fac = app.add_subcommand("factor", "irreducible factorization of a composition");
    c_fac->add_option("--composition", factor_text, "e.g. 1,2,1,3,2")->required();

    std::string eg_poly;
    int eg_a = 1, eg_b = 2;
    auto* c_eg = app.add_subcommand("eg", "caterpillar pair from a gap-free coefficient list");
    c_eg->add_option("--poly", eg_poly, "0/1 coefficients, constant term first, e.g. 1,1,0,1")->required();
    c_eg->add_option("--a", eg_a, "positive integer")->required();
    c_eg->add_option("--b", eg_b, "positive integer")->required();

    int gen_n = 0;
    auto* c_gen = app.add_subcommand("gen", "emit every free tree on n vertices");
    c_gen->add_option("--n", gen_n, "vertex count")->required()->check(CLI::Range(1, 19));

    int cmp_n = 0;
    bool cmp_large = false;
    auto* c_cmp = app.add_subcommand("compare", "refinement relations among gdp, hdp, stp, soup");
    c_cmp->add_option("--n", cmp_n, "vertex count")->required()->check(CLI::PositiveNumber);
    c_cmp->add_flag("--allow-large", cmp_large, "permit n up to 19");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*c_inv)
            return run_invariants(inv);
        if (*c_cls)
            return run_classify(cls);
        if (*c_ver)
            return run_verify(suite, max_n);
        if (*c_fam)
            return run_family(fam);
        if (*c_fac)
            return run_factor(factor_text);
        if (*c_eg)
            return run_eg(eg_poly, eg_a, eg_b);
        if (*c_gen)
            return run_gen(gen_n);
        if (*c_cmp)
            return run_compare(cmp_n, cmp_large);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const TreeError& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}
