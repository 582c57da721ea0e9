#pragma once

// Exact unit phases exp(pi*i*l) where l is a rational linear form in named
// formal deformation parameters.

#include "thetaq/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace thetaq {

/// A named formal deformation parameter ("theta", "lambda1", "tp14", ...).
/// Ordered by name.
struct ParamSymbol {
    std::string name;

    friend auto operator<=>(const ParamSymbol&, const ParamSymbol&) = default;
};

class LinearForm;
using Bindings = std::map<std::string, LinearForm>;

struct CyclicBinding : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// c + sum_k q_k * p_k with exact rational c and q_k; zero q_k are never stored.
class LinearForm {
public:
    using Term = std::pair<std::string, Rational>;

    LinearForm() = default;
    explicit LinearForm(Rational constant) : constant_(std::move(constant)) {}
    static LinearForm param(std::string name, Rational coeff = 1);
    /// `terms` sorted by name; zero coefficients are dropped.
    static LinearForm from_sorted(Rational constant, std::vector<Term> terms);

    /// Accepts e.g. "theta", "-t", "2*lambda1 - theta + 1/2", "lambda1-theta", "0".
    static LinearForm parse(std::string_view text);

    const Rational& constant() const { return constant_; }
    const std::vector<Term>& terms() const { return terms_; }
    Rational coeff(std::string_view name) const;

    bool is_zero() const { return terms_.empty() && sgn(constant_) == 0; }
    bool is_constant() const { return terms_.empty(); }

    LinearForm& operator+=(const LinearForm& o);
    LinearForm& operator-=(const LinearForm& o);
    LinearForm& operator*=(const Rational& s);
    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
    friend LinearForm operator*(LinearForm a, const Rational& s) { return a *= s; }
    LinearForm operator-() const { return *this * Rational(-1); }

    /// Rewrites every bound parameter through `bindings`, recursively. Throws CyclicBinding.
    LinearForm substitute(const Bindings& bindings) const;

    void set_constant(Rational c) { constant_ = std::move(c); }

    /// Parameters first (by name), constant last: "2*lambda1 - theta + 1/2"; "0" when empty.
    std::string to_string() const;

    std::size_t hash() const;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
    friend bool operator<(const LinearForm& a, const LinearForm& b);

private:
    void add_term(const std::string& name, const Rational& q);

    Rational constant_{0};
    std::vector<Term> terms_;  // sorted by name
};

/// exp(pi*i*exponent) with the constant of the exponent kept in [0, 2).
class PhaseExponent {
public:
    PhaseExponent() = default;
    explicit PhaseExponent(LinearForm exponent);
    static PhaseExponent constant(Rational c) { return PhaseExponent(LinearForm(std::move(c))); }
    static PhaseExponent of(std::string name, Rational coeff) {
        return PhaseExponent(LinearForm::param(std::move(name), std::move(coeff)));
    }

    const LinearForm& exponent() const { return exponent_; }

    /// Generic-parameter identity test: every coefficient zero and constant = 0 mod 2.
    bool is_generically_trivial() const { return exponent_.is_zero(); }
    bool is_constant() const { return exponent_.is_constant(); }

    PhaseExponent conj() const;
    PhaseExponent substitute(const Bindings& bindings) const;

    PhaseExponent& operator*=(const PhaseExponent& o);
    friend PhaseExponent operator*(PhaseExponent a, const PhaseExponent& b) { return a *= b; }

    /// "exp(pi*i*(1/2 + 2*theta))"; the identity renders as "exp(pi*i*(0))".
    std::string to_string() const;

    std::size_t hash() const { return exponent_.hash(); }

    friend bool operator==(const PhaseExponent&, const PhaseExponent&) = default;
    friend bool operator<(const PhaseExponent& a, const PhaseExponent& b) { return a.exponent_ < b.exponent_; }

private:
    void normalize();
    LinearForm exponent_;
};

PhaseExponent phase_mul(const PhaseExponent& a, const PhaseExponent& b);
PhaseExponent phase_conj(const PhaseExponent& a);
bool is_generically_trivial(const PhaseExponent& a);
PhaseExponent substitute(const PhaseExponent& a, const Bindings& bindings);

}  // namespace thetaq
