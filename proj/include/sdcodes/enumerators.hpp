// Exact polynomial algebra for weight enumerators of self-dual codes:
// Gleason bases, shadow enumerators, parameterized enumerator families and
// the Mallows-Sloane bound.
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sdcodes/numeric.hpp"
#include "sdcodes/weights.hpp"

namespace sdc {

/// Polynomial in one variable y with exact coefficients; zero terms are never stored.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    static Polynomial monomial(T coefficient, std::size_t exponent) {
        Polynomial p;
        if (coefficient != 0) p.terms_.emplace(exponent, std::move(coefficient));
        return p;
    }
    static Polynomial constant(T c) { return monomial(std::move(c), 0); }

    T coefficient(std::size_t e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? T(0) : it->second;
    }
    std::size_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::size_t, T>& terms() const { return terms_; }

    Polynomial& operator+=(const Polynomial& rhs) {
        for (const auto& [e, c] : rhs.terms_) add_term(e, c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, T(ca * cb));
        return out;
    }
    Polynomial scaled(const T& s) const {
        Polynomial out;
        if (s == 0) return out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, T(c * s));
        return out;
    }
    Polynomial pow(std::size_t k) const {
        Polynomial result = constant(T(1));
        Polynomial base = *this;
        while (k) {
            if (k & 1U) result = result * base;
            k >>= 1U;
            if (k) base = base * base;
        }
        return result;
    }

    bool operator==(const Polynomial&) const = default;

    /// "1 + 14y^4 + y^8"
    std::string to_string() const;

private:
    void add_term(std::size_t e, const T& c) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        } else if (c == 0) {
            terms_.erase(it);
        }
    }

    std::map<std::size_t, T> terms_;
};

using IntPolynomial = Polynomial<Integer>;
using RationalPolynomial = Polynomial<Rational>;

/// Type I: self-dual (singly or doubly even); type II: doubly even.
enum class GleasonType { I, II };

std::string to_string(GleasonType t);
GleasonType parse_gleason_type(const std::string& s);

/// (1+y^2)^(n/2-4j) (y^2(1-y^2)^2)^j for j = 0..floor(n/8). Requires even n.
std::vector<IntPolynomial> gleason_basis_I(std::size_t n);
/// (1+14y^4+y^8)^(n/8-3j) (y^4(1-y^4)^4)^j for j = 0..floor(n/24). Requires 8 | n.
std::vector<IntPolynomial> gleason_basis_II(std::size_t n);
std::vector<IntPolynomial> gleason_basis(std::size_t n, GleasonType type);

struct GleasonCoefficients {
    std::size_t n = 0;
    GleasonType type = GleasonType::I;
    std::vector<Rational> a;
};

/// Sum of a_j times the j-th basis polynomial.
RationalPolynomial combine(const GleasonCoefficients& coeffs);

/// Shadow enumerator sum_j (-1)^j a_j 2^(n/2-6j) y^(n/2-4j) (1-y^4)^(2j). Type I only.
RationalPolynomial shadow_enumerator(const GleasonCoefficients& coeffs);

/// The unique a_j reproducing the distribution. Throws DomainError when the
/// distribution is not in the span of the basis.
GleasonCoefficients fit_coefficients(const WeightDistribution& dist, GleasonType type);

RationalPolynomial to_polynomial(const WeightDistribution& dist);
/// Throws DomainError unless every coefficient is a nonnegative integer of degree <= n.
WeightDistribution to_distribution(const RationalPolynomial& p, std::size_t n);

/// 4 floor(n/24) + 4. Requires 8 | n.
std::size_t mallows_sloane(std::size_t n);
bool is_extremal(std::size_t n, std::size_t d);

/// c_0 + sum_p c_p * p over a fixed, ordered parameter list.
class AffineExpr {
public:
    AffineExpr() = default;
    explicit AffineExpr(std::size_t parameter_count) : coeffs_(parameter_count + 1) {}
    static AffineExpr constant(std::size_t parameter_count, Rational c);
    static AffineExpr parameter(std::size_t parameter_count, std::size_t index);

    const Rational& constant_term() const { return coeffs_[0]; }
    const Rational& coefficient(std::size_t param) const { return coeffs_[param + 1]; }
    std::size_t parameter_count() const { return coeffs_.size() - 1; }
    bool is_zero() const;
    bool is_constant() const;

    AffineExpr& operator+=(const AffineExpr& rhs);
    AffineExpr& operator-=(const AffineExpr& rhs);
    AffineExpr scaled(const Rational& s) const;

    Rational evaluate(const std::vector<Rational>& values) const;

    /// Constant first, then parameters from last to first: "355740 + 16 b + 2 a".
    std::string render(const std::vector<std::string>& names) const;

    bool operator==(const AffineExpr&) const = default;

private:
    std::vector<Rational> coeffs_;
};

/// Defines a family parameter as scale * (a_j | A_i | B_i).
struct ParameterDef {
    enum class Source { gleason, code, shadow };
    std::string name;
    Source source = Source::code;
    std::size_t index = 0;
    Rational scale = 1;
};

struct FamilyConstraints {
    std::size_t min_weight = 0;            ///< pins A_0 = 1 and A_i = 0 for 0 < i < min_weight
    std::vector<std::size_t> shadow_zero;  ///< extra B_i = 0 pins (type I); B_0 = 0 is always pinned
    std::optional<std::vector<ParameterDef>> parameters;  ///< default parameterization when empty
};

/// Possible enumerators of a self-dual code under the constraints: every
/// a_j, A_i and (for type I) B_i as affine expressions in the free parameters.
struct EnumeratorFamily {
    std::size_t n = 0;
    GleasonType type = GleasonType::I;
    std::vector<std::string> parameters;
    std::vector<ParameterDef> definitions;
    std::vector<AffineExpr> gleason;
    std::map<std::size_t, AffineExpr> code;
    std::map<std::size_t, AffineExpr> shadow;

    std::size_t degrees_of_freedom() const { return parameters.size(); }

    /// One "(expr) y^i" line per nonzero coefficient with i <= max_degree.
    std::string render_code(std::size_t max_degree) const;
    std::string render_shadow(std::size_t max_degree) const;
};

/// The default parameters. Type II: the i-th parameter is A_(d+4i). Type I: the
/// first is a_(d/2), the middle ones are a_j 2^(n/2-6j), and the last one is
/// the lowest shadow coefficient it controls, B_(n/2-4j).
std::vector<ParameterDef> default_parameters(std::size_t n, GleasonType type, const FamilyConstraints& constraints);

EnumeratorFamily solve_family(std::size_t n, GleasonType type, const FamilyConstraints& constraints);

/// Concrete code distribution at the given parameter values.
WeightDistribution substitute(const EnumeratorFamily& family, const std::map<std::string, Rational>& values);
/// Concrete shadow distribution at the given parameter values (type I).
WeightDistribution substitute_shadow(const EnumeratorFamily& family, const std::map<std::string, Rational>& values);

std::string format_rational(const Rational& r);

}  // namespace sdc
