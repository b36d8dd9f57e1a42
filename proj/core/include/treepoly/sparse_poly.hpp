#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treepoly/checked.hpp"

namespace treepoly {

/// Exact multivariate polynomial with int64 coefficients over a named, ordered
/// list of variables. Terms are kept in a map keyed by exponent vector, so
/// iteration order is lexicographic on exponents and zero terms never persist.
/// All arithmetic is checked; overflow throws OverflowError.
class SparsePoly {
public:
    static constexpr std::size_t kMaxVars = 48;
    using Coeff = Int;
    using Exponents = std::array<std::uint8_t, kMaxVars>;
    using VarList = std::vector<std::string>;
    using TermMap = std::map<Exponents, Coeff>;

    SparsePoly() = default;
    explicit SparsePoly(VarList vars);

    static SparsePoly constant(VarList vars, Coeff c);
    static SparsePoly variable(VarList vars, std::string_view name);
    static SparsePoly monomial(VarList vars, std::span<const int> exponents, Coeff c);

    const VarList& vars() const { return vars_; }
    std::size_t arity() const { return vars_.size(); }
    std::size_t var_index(std::string_view name) const;

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Coeff coefficient(std::span<const int> exponents) const;
    Coeff coefficient(const Exponents& e) const;
    void add_term(std::span<const int> exponents, Coeff c);
    void add_term(const Exponents& e, Coeff c);

    /// Total degree in the named variable over all terms (0 for the zero polynomial).
    int degree_in(std::string_view name) const;

    SparsePoly& operator+=(const SparsePoly& rhs);
    SparsePoly& operator-=(const SparsePoly& rhs);
    SparsePoly& operator*=(const SparsePoly& rhs);
    SparsePoly& operator*=(Coeff c);

    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator*(SparsePoly a, Coeff c) { return a *= c; }
    friend SparsePoly operator*(Coeff c, SparsePoly a) { return a *= c; }
    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

    SparsePoly pow(unsigned k) const;

    /// Replaces every occurrence of `name` by `value`. `value` must be over the
    /// same variable list.
    SparsePoly substitute(std::string_view name, const SparsePoly& value) const;

    /// Re-expresses the polynomial over `target`, which must contain every
    /// variable that actually occurs.
    SparsePoly embed(const VarList& target) const;

    /// Renames variables positionally; `names` must have the same arity.
    SparsePoly renamed(VarList names) const;

    Coeff evaluate(std::span<const Int> point) const;

    /// Exact quotient by `divisor`; throws DomainError when a remainder is left.
    SparsePoly divide_exact(const SparsePoly& divisor) const;

    /// "1 + 2*x*y + 1*x^2*z": terms in ascending lexicographic exponent order,
    /// every non-constant term carries an explicit coefficient.
    std::string to_text() const;

    /// [{"coeff": c, "exponents": [..]}, ...] in the same term order as to_text().
    std::string to_json() const;

    std::vector<int> exponent_vector(const Exponents& e) const;

private:
    void require_same_vars(const SparsePoly& other, const char* op) const;
    Exponents pack(std::span<const int> exponents) const;

    VarList vars_;
    TermMap terms_;
};

namespace vars {
inline const SparsePoly::VarList gdp{"x", "y", "z"};
inline const SparsePoly::VarList hdp{"y", "z"};
inline const SparsePoly::VarList stp{"q", "r"};
inline const SparsePoly::VarList soup{"x", "y", "z"};

/// y, z, x1, ..., xN
SparsePoly::VarList hbar(int n);
/// x1, ..., xN
SparsePoly::VarList indexed_x(int n);
} // namespace vars

} // namespace treepoly
