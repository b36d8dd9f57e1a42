#include "treepoly/transforms.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

namespace treepoly {

Int omega(const Partition& lambda, int n, int a, int b, int c)
{
    if (lambda.size() != n)
        throw DomainError("omega: " + lambda.to_string() + " is not a partition of " + std::to_string(n));
    if (a < 0 || b < 0 || c < 0)
        throw DomainError("omega: negative argument");
    const int l = lambda.length();
    Int sum = 0;
    for (const Partition& mu : partitions_of(a)) {
        const Int mb = multiset_binomial(lambda, mu);
        if (mb == 0)
            continue;
        const int lm = mu.length();
        const Int term = checked_mul(checked_mul(binomial(a - lm, c), mb), binomial(n - l + lm - a, n - b - c - 1));
        sum = checked_add(sum, term);
    }
    return checked_mul(sign_of_parity(n - b - 1), sum);
}

GdpPoly gdp_from_csf(const PsumCsf& csf)
{
    const int n = csf.n;
    GdpPoly g(vars::gdp);
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                Int sum = 0;
                for (const auto& [lambda, coeff] : csf.coeffs)
                    sum = checked_add(sum, checked_mul(coeff, omega(lambda, n, a, b, c)));
                g.add_term(std::array{a, b, c}, sum);
            }
    return g;
}

std::vector<Int> degree_sequence_from_csf(const PsumCsf& csf)
{
    const int n = csf.n;
    std::vector<Int> out(static_cast<std::size_t>(n), 0);
    for (int b = 0; b < n; ++b) {
        Int sum = 0;
        for (const auto& [lambda, coeff] : csf.coeffs) {
            const Int t = checked_mul(lambda.multiplicity(1), binomial(n - lambda.length(), n - b - 1));
            sum = checked_add(sum, checked_mul(coeff, t));
        }
        out[static_cast<std::size_t>(b)] = checked_mul(sign_of_parity(n - b - 1), sum);
    }
    return out;
}

std::vector<IndexPair> h2_index(int n)
{
    std::vector<IndexPair> out;
    for (int a = 1; a <= n - 2; ++a)
        for (int b = 1; a + b <= n - 1; ++b)
            out.emplace_back(a, b);
    return out;
}

std::vector<IndexPair> s2_index(int n)
{
    std::vector<IndexPair> out;
    for (int i = 2; i <= n - 1; ++i)
        for (int j = 2; j <= i; ++j)
            out.emplace_back(i, j);
    return out;
}

namespace {

std::size_t position(const std::vector<IndexPair>& keys, IndexPair key)
{
    auto it = std::lower_bound(keys.begin(), keys.end(), key);
    return static_cast<std::size_t>(it - keys.begin());
}

void extract_h(const HdpPoly& hdp, int n, std::vector<Int>& h1, std::vector<Int>& h2)
{
    if (hdp.vars() != vars::hdp)
        throw DomainError("expected a polynomial over y, z");
    const auto keys = h2_index(n);
    h1.assign(static_cast<std::size_t>(n), 0);
    h2.assign(keys.size(), 0);
    bool forced = false;
    for (const auto& [e, c] : hdp.terms()) {
        const int b = e[0], a = e[1];
        if (c < 0)
            throw DomainError("negative coefficient in a subtree census");
        if (a == n - 1 && b == 0) {
            if (c != 1)
                throw DomainError("coefficient of z^(n-1) must be 1");
            forced = true;
            if (n == 1)
                h1[0] = c;
        } else if (a == 0 && b < n) {
            h1[static_cast<std::size_t>(b)] = c;
        } else if (a >= 1 && b >= 1 && a + b <= n - 1) {
            h2[position(keys, {a, b})] = c;
        } else {
            throw DomainError("term y^" + std::to_string(b) + " z^" + std::to_string(a) +
                              " cannot occur for an " + std::to_string(n) + "-vertex tree");
        }
    }
    if (!forced)
        throw DomainError("missing term z^(n-1)");
}

void extract_s(const StpPoly& stp, int n, std::vector<Int>& s1, std::vector<Int>& s2)
{
    if (stp.vars() != vars::stp)
        throw DomainError("expected a polynomial over q, r");
    const auto keys = s2_index(n);
    s1.assign(static_cast<std::size_t>(n), 0);
    s2.assign(keys.size(), 0);
    for (const auto& [e, c] : stp.terms()) {
        const int i = e[0], j = e[1];
        if (c < 0)
            throw DomainError("negative coefficient in a subtree census");
        if (i >= n || j > i || (j < 2 && j != i))
            throw DomainError("term q^" + std::to_string(i) + " r^" + std::to_string(j) +
                              " cannot occur for an " + std::to_string(n) + "-vertex tree");
        if (i == j)
            s1[static_cast<std::size_t>(i)] = c;
        if (j >= 2)
            s2[position(keys, {i, j})] = c;
    }
}

std::vector<Fraction> fractions(const std::vector<Int>& v)
{
    std::vector<Fraction> out;
    out.reserve(v.size());
    for (Int x : v)
        out.emplace_back(static_cast<long>(x));
    return out;
}

Int to_integer(const Fraction& f)
{
    if (f.get_den() != 1)
        throw DomainError("non-integer solution " + f.get_str() + ": not the invariant of a tree");
    if (!f.get_num().fits_slong_p())
        throw OverflowError("solution exceeds 64 bits");
    const Int v = f.get_num().get_si();
    if (v < 0)
        throw DomainError("negative solution: not the invariant of a tree");
    return v;
}

} // namespace

BridgeVectors extract_vectors(const HdpPoly& hdp, const StpPoly& stp, int n)
{
    if (n < 1)
        throw DomainError("n must be positive");
    BridgeVectors v;
    v.n = n;
    extract_h(hdp, n, v.h1, v.h2);
    extract_s(stp, n, v.s1, v.s2);
    return v;
}

BridgeMatrices build_matrices(int n)
{
    if (n < 1)
        throw DomainError("n must be positive");
    BridgeMatrices bm;
    bm.n = n;
    bm.row_keys = h2_index(n);
    bm.h2_keys = h2_index(n);
    bm.s2_keys = s2_index(n);
    const auto un = static_cast<std::size_t>(n);
    bm.p = RationalMatrix(un, un);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            bm.p(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = static_cast<long>(binomial(j, i));
    const std::size_t m = bm.row_keys.size();
    bm.m = RationalMatrix(m, m);
    bm.nmat = RationalMatrix(m, m);
    for (std::size_t r = 0; r < m; ++r) {
        const auto [a, k] = bm.row_keys[r];
        for (std::size_t c = 0; c < m; ++c) {
            const auto [ha, hb] = bm.h2_keys[c];
            if (ha == a)
                bm.m(r, c) = static_cast<long>(binomial(hb, k));
            const auto [si, sj] = bm.s2_keys[c];
            if (si == a + k)
                bm.nmat(r, c) = static_cast<long>(binomial(sj, k));
        }
    }
    bm.n_block_order.resize(m);
    std::iota(bm.n_block_order.begin(), bm.n_block_order.end(), std::size_t{0});
    std::stable_sort(bm.n_block_order.begin(), bm.n_block_order.end(), [&](std::size_t x, std::size_t y) {
        const auto [ax, kx] = bm.row_keys[x];
        const auto [ay, ky] = bm.row_keys[y];
        return std::pair(ax + kx, ax) < std::pair(ay + ky, ay);
    });
    return bm;
}

std::vector<RationalMatrix> BridgeMatrices::m_blocks() const
{
    std::vector<RationalMatrix> out;
    std::size_t start = 0;
    for (int a = 1; a <= n - 2; ++a) {
        const auto size = static_cast<std::size_t>(n - 1 - a);
        out.push_back(m.submatrix(start, start, size, size));
        start += size;
    }
    return out;
}

std::vector<RationalMatrix> BridgeMatrices::n_blocks() const
{
    const RationalMatrix permuted = nmat.rows_permuted(n_block_order);
    std::vector<RationalMatrix> out;
    std::size_t start = 0;
    for (int i = 2; i <= n - 1; ++i) {
        const auto size = static_cast<std::size_t>(i - 1);
        out.push_back(permuted.submatrix(start, start, size, size));
        start += size;
    }
    return out;
}

RationalMatrix corrected_p(int n)
{
    RationalMatrix p = build_matrices(n).p;
    if (n >= 2)
        for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
            p(1, j) /= 2;
    return p;
}

StpPoly stp_from_hdp(const HdpPoly& hdp, int n)
{
    std::vector<Int> h1, h2;
    extract_h(hdp, n, h1, h2);
    const BridgeMatrices bm = build_matrices(n);
    const auto s1 = corrected_p(n) * fractions(h1);
    const auto s2 = mat_solve(bm.nmat, bm.m * fractions(h2));
    StpPoly out(vars::stp);
    for (int k = 0; k < n; ++k)
        out.add_term(std::array{k, k}, to_integer(s1[static_cast<std::size_t>(k)]));
    for (std::size_t r = 0; r < bm.s2_keys.size(); ++r) {
        const auto [i, j] = bm.s2_keys[r];
        const Int v = to_integer(s2[r]);
        if (i == j) {
            if (v != out.coefficient(std::array{i, i}))
                throw DomainError("inconsistent star counts: not the invariant of a tree");
            continue;
        }
        out.add_term(std::array{i, j}, v);
    }
    return out;
}

HdpPoly hdp_from_stp(const StpPoly& stp, int n)
{
    std::vector<Int> s1, s2;
    extract_s(stp, n, s1, s2);
    const BridgeMatrices bm = build_matrices(n);
    const auto h1 = mat_solve(corrected_p(n), fractions(s1));
    const auto h2 = mat_solve(bm.m, bm.nmat * fractions(s2));
    HdpPoly out(vars::hdp);
    for (int b = 0; b < n; ++b)
        out.add_term(std::array{b, 0}, to_integer(h1[static_cast<std::size_t>(b)]));
    for (std::size_t r = 0; r < bm.h2_keys.size(); ++r) {
        const auto [a, b] = bm.h2_keys[r];
        out.add_term(std::array{b, a}, to_integer(h2[r]));
    }
    if (n > 1)
        out.add_term(std::array{0, n - 1}, 1);
    return out;
}

BridgeReport verify_bridge(const Tree& t)
{
    const int n = t.size();
    const SubtreeCensus census(t);
    const HdpPoly h = census.hdp();
    const StpPoly s = census.stp();
    const BridgeVectors v = extract_vectors(h, s, n);
    const BridgeMatrices bm = build_matrices(n);
    BridgeReport r;
    r.n = n;
    r.s1 = v.s1;
    r.p_lhs = bm.p * fractions(v.h1);
    for (int k = 0; k < n; ++k)
        if (r.p_lhs[static_cast<std::size_t>(k)] != Fraction(static_cast<long>(v.s1[static_cast<std::size_t>(k)])))
            r.p_failing_rows.push_back(k);
    r.p_identity = r.p_failing_rows.empty();
    r.corrected_p_identity = corrected_p(n) * fractions(v.h1) == fractions(v.s1);
    r.m_h2 = bm.m * fractions(v.h2);
    r.n_s2 = bm.nmat * fractions(v.s2);
    r.mn_identity = r.m_h2 == r.n_s2;
    try {
        r.stp_roundtrip = stp_from_hdp(h, n) == s;
    } catch (const DomainError&) {
        r.stp_roundtrip = false;
    }
    try {
        r.hdp_roundtrip = hdp_from_stp(s, n) == h;
    } catch (const DomainError&) {
        r.hdp_roundtrip = false;
    }
    return r;
}

std::string BridgeReport::to_json() const
{
    auto strings = [](const std::vector<Fraction>& v) {
        std::vector<std::string> out;
        for (const auto& f : v)
            out.push_back(f.get_str());
        return out;
    };
    nlohmann::json j{{"n", n},
                     {"p_identity", p_identity},
                     {"p_failing_rows", p_failing_rows},
                     {"p_h1", strings(p_lhs)},
                     {"s1", s1},
                     {"corrected_p_identity", corrected_p_identity},
                     {"mn_identity", mn_identity},
                     {"m_h2", strings(m_h2)},
                     {"n_s2", strings(n_s2)},
                     {"stp_roundtrip", stp_roundtrip},
                     {"hdp_roundtrip", hdp_roundtrip}};
    return j.dump();
}

} // namespace treepoly
