#include "sdcodes/enumerators.hpp"

#include <algorithm>
#include <sstream>

namespace sdc {

namespace {

Rational power_of_two(long e) {
    Rational r = 1;
    const Rational two = 2;
    for (long i = 0; i < std::abs(e); ++i) r *= two;
    return e >= 0 ? r : Rational(1) / r;
}

RationalPolynomial to_rational(const IntPolynomial& p) {
    RationalPolynomial out;
    for (const auto& [e, c] : p.terms()) out += RationalPolynomial::monomial(Rational(c), e);
    return out;
}

std::size_t gleason_top(std::size_t n, GleasonType type) { return type == GleasonType::I ? n / 8 : n / 24; }
std::size_t gleason_step(GleasonType type) { return type == GleasonType::I ? 2 : 4; }

void check_length(std::size_t n, GleasonType type) {
    if (type == GleasonType::I && n % 2) throw DomainError("self-dual codes need even length, got " + std::to_string(n));
    if (type == GleasonType::II && n % 8)
        throw DomainError("doubly even self-dual codes need length divisible by 8, got " + std::to_string(n));
    if (n == 0) throw DomainError("length must be positive");
}

std::vector<RationalPolynomial> shadow_basis(std::size_t n) {
    std::vector<RationalPolynomial> out;
    const auto one_minus_y4 = IntPolynomial::constant(1) + IntPolynomial::monomial(-1, 4);
    for (std::size_t j = 0; j <= n / 8; ++j) {
        Rational lead = power_of_two(static_cast<long>(n / 2) - 6 * static_cast<long>(j));
        if (j % 2) lead = -lead;
        const auto body = IntPolynomial::monomial(1, n / 2 - 4 * j) * one_minus_y4.pow(2 * j);
        out.push_back(to_rational(body).scaled(lead));
    }
    return out;
}

std::string parameter_name(std::size_t i) {
    if (i < 26) return std::string(1, static_cast<char>('a' + i));
    return "p" + std::to_string(i);
}

}  // namespace

template <class T>
std::string Polynomial<T>::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        T mag = c < 0 ? T(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        const bool unit = mag == 1;
        if (!unit || e == 0) os << mag;
        if (e > 0) os << "y" << (e > 1 ? "^" + std::to_string(e) : "");
    }
    return os.str();
}

template class Polynomial<Integer>;
template class Polynomial<Rational>;

std::string to_string(GleasonType t) { return t == GleasonType::I ? "I" : "II"; }

GleasonType parse_gleason_type(const std::string& s) {
    if (s == "I" || s == "i" || s == "1") return GleasonType::I;
    if (s == "II" || s == "ii" || s == "2") return GleasonType::II;
    throw DomainError("unknown enumerator type '" + s + "' (expected I or II)");
}

std::vector<IntPolynomial> gleason_basis_I(std::size_t n) {
    check_length(n, GleasonType::I);
    const auto g1 = IntPolynomial::constant(1) + IntPolynomial::monomial(1, 2);
    const auto one_minus_y2 = IntPolynomial::constant(1) + IntPolynomial::monomial(-1, 2);
    const auto g2 = IntPolynomial::monomial(1, 2) * one_minus_y2 * one_minus_y2;
    std::vector<IntPolynomial> out;
    for (std::size_t j = 0; j <= n / 8; ++j) out.push_back(g1.pow(n / 2 - 4 * j) * g2.pow(j));
    return out;
}

std::vector<IntPolynomial> gleason_basis_II(std::size_t n) {
    check_length(n, GleasonType::II);
    const auto e8 = IntPolynomial::constant(1) + IntPolynomial::monomial(14, 4) + IntPolynomial::monomial(1, 8);
    const auto one_minus_y4 = IntPolynomial::constant(1) + IntPolynomial::monomial(-1, 4);
    const auto g24 = IntPolynomial::monomial(1, 4) * one_minus_y4.pow(4);
    std::vector<IntPolynomial> out;
    for (std::size_t j = 0; j <= n / 24; ++j) out.push_back(e8.pow(n / 8 - 3 * j) * g24.pow(j));
    return out;
}

std::vector<IntPolynomial> gleason_basis(std::size_t n, GleasonType type) {
    return type == GleasonType::I ? gleason_basis_I(n) : gleason_basis_II(n);
}

RationalPolynomial combine(const GleasonCoefficients& coeffs) {
    const auto basis = gleason_basis(coeffs.n, coeffs.type);
    if (coeffs.a.size() != basis.size()) throw DomainError("coefficient count does not match the basis size");
    RationalPolynomial out;
    for (std::size_t j = 0; j < basis.size(); ++j) out += to_rational(basis[j]).scaled(coeffs.a[j]);
    return out;
}

RationalPolynomial shadow_enumerator(const GleasonCoefficients& coeffs) {
    if (coeffs.type != GleasonType::I) throw DomainError("the shadow formula takes type I coefficients");
    check_length(coeffs.n, GleasonType::I);
    const auto basis = shadow_basis(coeffs.n);
    if (coeffs.a.size() != basis.size()) throw DomainError("coefficient count does not match the basis size");
    RationalPolynomial out;
    for (std::size_t j = 0; j < basis.size(); ++j) out += basis[j].scaled(coeffs.a[j]);
    return out;
}

RationalPolynomial to_polynomial(const WeightDistribution& dist) {
    RationalPolynomial p;
    for (std::size_t i = 0; i < dist.counts.size(); ++i)
        if (dist.counts[i] != 0) p += RationalPolynomial::monomial(Rational(dist.counts[i]), i);
    return p;
}

WeightDistribution to_distribution(const RationalPolynomial& p, std::size_t n) {
    WeightDistribution d(n);
    for (const auto& [e, c] : p.terms()) {
        if (e > n) throw DomainError("term y^" + std::to_string(e) + " exceeds the length");
        if (denominator(c) != 1 || c < 0)
            throw DomainError("coefficient of y^" + std::to_string(e) + " is " + format_rational(c) +
                              ", not a nonnegative integer");
        d.counts[e] = numerator(c);
    }
    return d;
}

GleasonCoefficients fit_coefficients(const WeightDistribution& dist, GleasonType type) {
    const std::size_t n = dist.n;
    const auto basis = gleason_basis(n, type);
    const std::size_t step = gleason_step(type);
    GleasonCoefficients out{n, type, {}};
    // Basis polynomial j starts with y^(step*j) and coefficient 1: solve top-down.
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Rational a = Rational(dist.counts[step * j]);
        for (std::size_t i = 0; i < j; ++i) a -= out.a[i] * Rational(basis[i].coefficient(step * j));
        out.a.push_back(a);
    }
    if (combine(out) != to_polynomial(dist))
        throw DomainError("distribution is not a type " + to_string(type) + " Gleason polynomial of length " +
                          std::to_string(n));
    return out;
}

std::size_t mallows_sloane(std::size_t n) {
    if (n == 0 || n % 8) throw DomainError("the bound applies to lengths divisible by 8, got " + std::to_string(n));
    return 4 * (n / 24) + 4;
}

bool is_extremal(std::size_t n, std::size_t d) { return d == mallows_sloane(n); }

AffineExpr AffineExpr::constant(std::size_t parameter_count, Rational c) {
    AffineExpr e(parameter_count);
    e.coeffs_[0] = std::move(c);
    return e;
}

AffineExpr AffineExpr::parameter(std::size_t parameter_count, std::size_t index) {
    AffineExpr e(parameter_count);
    e.coeffs_[index + 1] = 1;
    return e;
}

bool AffineExpr::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool AffineExpr::is_constant() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

AffineExpr& AffineExpr::operator+=(const AffineExpr& rhs) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

AffineExpr& AffineExpr::operator-=(const AffineExpr& rhs) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

AffineExpr AffineExpr::scaled(const Rational& s) const {
    AffineExpr out = *this;
    for (auto& c : out.coeffs_) c *= s;
    return out;
}

Rational AffineExpr::evaluate(const std::vector<Rational>& values) const {
    Rational v = coeffs_[0];
    for (std::size_t i = 0; i < values.size(); ++i) v += coeffs_[i + 1] * values[i];
    return v;
}

std::string format_rational(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

std::string AffineExpr::render(const std::vector<std::string>& names) const {
    std::string out;
    auto emit = [&](const Rational& c, const std::string& name) {
        if (c == 0) return;
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (name.empty())
            out += format_rational(mag);
        else if (mag == 1)
            out += name;
        else
            out += format_rational(mag) + " " + name;
    };
    emit(coeffs_[0], "");
    for (std::size_t p = parameter_count(); p-- > 0;) emit(coeffs_[p + 1], names.at(p));
    return out.empty() ? "0" : out;
}

namespace {

std::string render_map(const std::map<std::size_t, AffineExpr>& m, const std::vector<std::string>& names,
                       std::size_t max_degree) {
    std::string out;
    for (const auto& [i, e] : m) {
        if (i > max_degree) break;
        if (e.is_zero()) continue;
        out += "(" + e.render(names) + ") y^" + std::to_string(i) + "\n";
    }
    return out;
}

}  // namespace

std::string EnumeratorFamily::render_code(std::size_t max_degree) const { return render_map(code, parameters, max_degree); }

std::string EnumeratorFamily::render_shadow(std::size_t max_degree) const {
    return render_map(shadow, parameters, max_degree);
}

std::vector<ParameterDef> default_parameters(std::size_t n, GleasonType type, const FamilyConstraints& constraints) {
    check_length(n, type);
    const std::size_t d = constraints.min_weight;
    const std::size_t top = gleason_top(n, type);
    const std::size_t step = gleason_step(type);
    const std::size_t first = d == 0 ? 0 : (d + step - 1) / step;
    std::vector<ParameterDef> out;
    if (type == GleasonType::II) {
        for (std::size_t j = std::max<std::size_t>(first, 1); j <= top; ++j)
            out.push_back({parameter_name(out.size()), ParameterDef::Source::code, step * j, 1});
        return out;
    }
    // Shadow pins fix the highest Gleason coefficients, one each.
    std::size_t pinned = constraints.shadow_zero.size();
    if (n / 2 == 4 * top) ++pinned;  // B_0 = 0 is a real constraint only when 8 | n
    if (pinned > top + 1) return out;
    const std::size_t last = top - pinned;
    const std::size_t lo = std::max<std::size_t>(first, 1);
    for (std::size_t j = lo; j <= last; ++j) {
        ParameterDef def;
        def.name = parameter_name(out.size());
        if (j == lo) {
            def.source = ParameterDef::Source::gleason;
            def.index = j;
        } else if (j == last) {
            def.source = ParameterDef::Source::shadow;
            def.index = n / 2 - 4 * j;
        } else {
            def.source = ParameterDef::Source::gleason;
            def.index = j;
            def.scale = power_of_two(static_cast<long>(n / 2) - 6 * static_cast<long>(j));
        }
        out.push_back(std::move(def));
    }
    return out;
}

EnumeratorFamily solve_family(std::size_t n, GleasonType type, const FamilyConstraints& constraints) {
    check_length(n, type);
    if (constraints.min_weight % gleason_step(type))
        throw DomainError("minimum weight must be a multiple of " + std::to_string(gleason_step(type)));
    if (type == GleasonType::II && !constraints.shadow_zero.empty())
        throw DomainError("shadow pins apply to type I families only");

    const auto basis = gleason_basis(n, type);
    const std::size_t unknowns = basis.size();
    const auto sbasis = type == GleasonType::I ? shadow_basis(n) : std::vector<RationalPolynomial>{};

    EnumeratorFamily fam;
    fam.n = n;
    fam.type = type;
    fam.definitions = constraints.parameters ? *constraints.parameters : default_parameters(n, type, constraints);
    for (const auto& def : fam.definitions) {
        if (std::find(fam.parameters.begin(), fam.parameters.end(), def.name) != fam.parameters.end())
            throw DomainError("parameter '" + def.name + "' defined twice");
        fam.parameters.push_back(def.name);
    }
    const std::size_t np = fam.parameters.size();

    auto code_row = [&](std::size_t i) {
        std::vector<Rational> row(unknowns);
        for (std::size_t j = 0; j < unknowns; ++j) row[j] = Rational(basis[j].coefficient(i));
        return row;
    };
    auto shadow_row = [&](std::size_t i) {
        if (type != GleasonType::I) throw DomainError("shadow coefficients exist for type I families only");
        std::vector<Rational> row(unknowns);
        for (std::size_t j = 0; j < unknowns; ++j) row[j] = sbasis[j].coefficient(i);
        return row;
    };

    // Equations row . (a_0..a_J) = rhs, rhs affine in the parameters.
    std::vector<std::vector<Rational>> rows;
    std::vector<AffineExpr> rhs;
    std::vector<std::string> origin;
    auto add = [&](std::vector<Rational> row, AffineExpr value, std::string what) {
        rows.push_back(std::move(row));
        rhs.push_back(std::move(value));
        origin.push_back(std::move(what));
    };

    add(code_row(0), AffineExpr::constant(np, 1), "A_0 = 1");
    for (std::size_t i = gleason_step(type); i < constraints.min_weight; i += gleason_step(type))
        add(code_row(i), AffineExpr(np), "A_" + std::to_string(i) + " = 0");
    if (type == GleasonType::I) {
        add(shadow_row(0), AffineExpr(np), "B_0 = 0");
        for (auto i : constraints.shadow_zero) add(shadow_row(i), AffineExpr(np), "B_" + std::to_string(i) + " = 0");
    }
    for (std::size_t p = 0; p < np; ++p) {
        const auto& def = fam.definitions[p];
        std::vector<Rational> row;
        switch (def.source) {
            case ParameterDef::Source::gleason:
                if (def.index >= unknowns) throw DomainError("parameter '" + def.name + "': no such Gleason coefficient");
                row.assign(unknowns, 0);
                row[def.index] = 1;
                break;
            case ParameterDef::Source::code: row = code_row(def.index); break;
            case ParameterDef::Source::shadow: row = shadow_row(def.index); break;
        }
        for (auto& x : row) x *= def.scale;
        add(std::move(row), AffineExpr::parameter(np, p), "definition of " + def.name);
    }

    // Gauss-Jordan over the rationals.
    std::vector<std::size_t> pivot_row(unknowns, SIZE_MAX);
    std::size_t r = 0;
    for (std::size_t col = 0; col < unknowns && r < rows.size(); ++col) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][col] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        std::swap(rhs[r], rhs[p]);
        std::swap(origin[r], origin[p]);
        const Rational inv = Rational(1) / rows[r][col];
        for (auto& x : rows[r]) x *= inv;
        rhs[r] = rhs[r].scaled(inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            const Rational f = rows[i][col];
            for (std::size_t c = 0; c < unknowns; ++c) rows[i][c] -= f * rows[r][c];
            rhs[i] -= rhs[r].scaled(f);
        }
        pivot_row[col] = r;
        ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i) {
        if (rhs[i].is_zero()) continue;
        if (rhs[i].is_constant()) throw DomainError("inconsistent constraints (" + origin[i] + ")");
        throw DomainError("over-determined: a parameter is already fixed by the constraints (" + origin[i] + ")");
    }
    if (r < unknowns)
        throw DomainError("under-determined: " + std::to_string(unknowns - r) + " more parameter(s) needed");

    fam.gleason.resize(unknowns);
    for (std::size_t j = 0; j < unknowns; ++j) fam.gleason[j] = rhs[pivot_row[j]];

    for (std::size_t i = 0; i <= n; ++i) {
        AffineExpr e(np);
        for (std::size_t j = 0; j < unknowns; ++j) {
            const auto c = basis[j].coefficient(i);
            if (c != 0) e += fam.gleason[j].scaled(Rational(c));
        }
        if (!e.is_zero()) fam.code.emplace(i, std::move(e));
    }
    if (type == GleasonType::I) {
        for (std::size_t i = 0; i <= n; ++i) {
            AffineExpr e(np);
            for (std::size_t j = 0; j < unknowns; ++j) {
                const auto c = sbasis[j].coefficient(i);
                if (c != 0) e += fam.gleason[j].scaled(c);
            }
            if (!e.is_zero()) fam.shadow.emplace(i, std::move(e));
        }
    }
    return fam;
}

namespace {

WeightDistribution substitute_map(const EnumeratorFamily& family, const std::map<std::size_t, AffineExpr>& coeffs,
                                  const std::map<std::string, Rational>& values) {
    std::vector<Rational> v;
    for (const auto& name : family.parameters) {
        auto it = values.find(name);
        if (it == values.end()) throw DomainError("no value given for parameter '" + name + "'");
        v.push_back(it->second);
    }
    for (const auto& [name, _] : values)
        if (std::find(family.parameters.begin(), family.parameters.end(), name) == family.parameters.end())
            throw DomainError("unknown parameter '" + name + "'");
    RationalPolynomial p;
    for (const auto& [i, e] : coeffs) p += RationalPolynomial::monomial(e.evaluate(v), i);
    return to_distribution(p, family.n);
}

}  // namespace

WeightDistribution substitute(const EnumeratorFamily& family, const std::map<std::string, Rational>& values) {
    return substitute_map(family, family.code, values);
}

WeightDistribution substitute_shadow(const EnumeratorFamily& family, const std::map<std::string, Rational>& values) {
    if (family.type != GleasonType::I) throw DomainError("shadow enumerators exist for type I families only");
    return substitute_map(family, family.shadow, values);
}

}  // namespace sdc
