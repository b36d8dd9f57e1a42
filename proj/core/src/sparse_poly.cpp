#include "treepoly/sparse_poly.hpp"

#include <algorithm>
#include <limits>

#include <json.hpp>

namespace treepoly {

namespace {

using Exponents = SparsePoly::Exponents;

Exponents add_exponents(const Exponents& a, const Exponents& b, std::size_t arity)
{
    Exponents r{};
    for (std::size_t i = 0; i < arity; ++i) {
        unsigned s = unsigned{a[i]} + unsigned{b[i]};
        if (s > std::numeric_limits<std::uint8_t>::max())
            throw OverflowError("exponent exceeds 255");
        r[i] = static_cast<std::uint8_t>(s);
    }
    return r;
}

void accumulate(SparsePoly::TermMap& terms, const Exponents& e, Int c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms.try_emplace(e, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0)
            terms.erase(it);
    }
}

} // namespace

SparsePoly::SparsePoly(VarList vars) : vars_(std::move(vars))
{
    if (vars_.size() > kMaxVars)
        throw DomainError("too many polynomial variables");
}

SparsePoly SparsePoly::constant(VarList vars, Coeff c)
{
    SparsePoly p(std::move(vars));
    accumulate(p.terms_, Exponents{}, c);
    return p;
}

SparsePoly SparsePoly::variable(VarList vars, std::string_view name)
{
    SparsePoly p(std::move(vars));
    Exponents e{};
    e[p.var_index(name)] = 1;
    p.terms_.emplace(e, 1);
    return p;
}

SparsePoly SparsePoly::monomial(VarList vars, std::span<const int> exponents, Coeff c)
{
    SparsePoly p(std::move(vars));
    p.add_term(exponents, c);
    return p;
}

std::size_t SparsePoly::var_index(std::string_view name) const
{
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end())
        throw DomainError("unknown variable '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - vars_.begin());
}

SparsePoly::Exponents SparsePoly::pack(std::span<const int> exponents) const
{
    if (exponents.size() != vars_.size())
        throw DomainError("exponent vector has wrong arity");
    Exponents e{};
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 0 || exponents[i] > std::numeric_limits<std::uint8_t>::max())
            throw DomainError("exponent out of range");
        e[i] = static_cast<std::uint8_t>(exponents[i]);
    }
    return e;
}

SparsePoly::Coeff SparsePoly::coefficient(std::span<const int> exponents) const
{
    return coefficient(pack(exponents));
}

SparsePoly::Coeff SparsePoly::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void SparsePoly::add_term(std::span<const int> exponents, Coeff c) { accumulate(terms_, pack(exponents), c); }

void SparsePoly::add_term(const Exponents& e, Coeff c) { accumulate(terms_, e, c); }

int SparsePoly::degree_in(std::string_view name) const
{
    std::size_t i = var_index(name);
    int d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, int{e[i]});
    return d;
}

void SparsePoly::require_same_vars(const SparsePoly& other, const char* op) const
{
    if (vars_ != other.vars_)
        throw DomainError(std::string("variable lists differ in ") + op);
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& rhs)
{
    require_same_vars(rhs, "+");
    for (const auto& [e, c] : rhs.terms_)
        accumulate(terms_, e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& rhs)
{
    require_same_vars(rhs, "-");
    for (const auto& [e, c] : rhs.terms_)
        accumulate(terms_, e, checked_sub(0, c));
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b)
{
    a.require_same_vars(b, "*");
    SparsePoly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            accumulate(r.terms_, add_exponents(ea, eb, a.arity()), checked_mul(ca, cb));
    return r;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& rhs) { return *this = *this * rhs; }

SparsePoly& SparsePoly::operator*=(Coeff c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v = checked_mul(v, c);
    return *this;
}

SparsePoly SparsePoly::pow(unsigned k) const
{
    SparsePoly result = constant(vars_, 1);
    SparsePoly base = *this;
    while (k) {
        if (k & 1)
            result *= base;
        k >>= 1;
        if (k)
            base *= base;
    }
    return result;
}

SparsePoly SparsePoly::substitute(std::string_view name, const SparsePoly& value) const
{
    require_same_vars(value, "substitute");
    const std::size_t i = var_index(name);
    std::vector<SparsePoly> powers{constant(vars_, 1)};
    SparsePoly r(vars_);
    for (const auto& [e, c] : terms_) {
        while (powers.size() <= e[i])
            powers.push_back(powers.back() * value);
        Exponents rest = e;
        rest[i] = 0;
        SparsePoly mono(vars_);
        mono.terms_.emplace(rest, c);
        r += mono * powers[e[i]];
    }
    return r;
}

SparsePoly SparsePoly::embed(const VarList& target) const
{
    SparsePoly r(target);
    std::vector<std::size_t> where(vars_.size(), kMaxVars);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(target.begin(), target.end(), vars_[i]);
        if (it != target.end())
            where[i] = static_cast<std::size_t>(it - target.begin());
    }
    for (const auto& [e, c] : terms_) {
        Exponents t{};
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (where[i] == kMaxVars)
                throw DomainError("embed: variable '" + vars_[i] + "' missing from target");
            t[where[i]] = e[i];
        }
        r.terms_.emplace(t, c);
    }
    return r;
}

SparsePoly SparsePoly::renamed(VarList names) const
{
    if (names.size() != vars_.size())
        throw DomainError("renamed: arity mismatch");
    SparsePoly r(std::move(names));
    r.terms_ = terms_;
    return r;
}

SparsePoly::Coeff SparsePoly::evaluate(std::span<const Int> point) const
{
    if (point.size() != vars_.size())
        throw DomainError("evaluate: point has wrong arity");
    Int total = 0;
    for (const auto& [e, c] : terms_) {
        Int v = c;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            for (int k = 0; k < e[i]; ++k)
                v = checked_mul(v, point[i]);
        total = checked_add(total, v);
    }
    return total;
}

SparsePoly SparsePoly::divide_exact(const SparsePoly& divisor) const
{
    require_same_vars(divisor, "divide_exact");
    if (divisor.is_zero())
        throw DomainError("division by the zero polynomial");
    const auto& [de, dc] = *divisor.terms_.rbegin();
    SparsePoly rem = *this;
    SparsePoly quot(vars_);
    while (!rem.is_zero()) {
        const auto [re, rc] = *rem.terms_.rbegin();
        Exponents qe{};
        for (std::size_t i = 0; i < arity(); ++i) {
            if (re[i] < de[i])
                throw DomainError("polynomial division leaves a remainder");
            qe[i] = static_cast<std::uint8_t>(re[i] - de[i]);
        }
        if (rc % dc != 0)
            throw DomainError("polynomial division leaves a remainder");
        SparsePoly term(vars_);
        term.terms_.emplace(qe, rc / dc);
        rem -= term * divisor;
        quot += term;
    }
    return quot;
}

std::string SparsePoly::to_text() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int mag = c;
        if (first) {
            if (c < 0) {
                out += '-';
                mag = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            mag = c < 0 ? -c : c;
        }
        first = false;
        out += std::to_string(mag);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0)
                continue;
            out += '*';
            out += vars_[i];
            if (e[i] > 1)
                out += '^' + std::to_string(e[i]);
        }
    }
    return out;
}

std::string SparsePoly::to_json() const
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : terms_)
        arr.push_back({{"coeff", c}, {"exponents", exponent_vector(e)}});
    return arr.dump();
}

std::vector<int> SparsePoly::exponent_vector(const Exponents& e) const
{
    return std::vector<int>(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(vars_.size()));
}

namespace vars {

SparsePoly::VarList indexed_x(int n)
{
    SparsePoly::VarList v;
    for (int i = 1; i <= n; ++i)
        v.push_back("x" + std::to_string(i));
    return v;
}

SparsePoly::VarList hbar(int n)
{
    SparsePoly::VarList v{"y", "z"};
    for (auto& x : indexed_x(n))
        v.push_back(std::move(x));
    return v;
}

} // namespace vars

} // namespace treepoly
