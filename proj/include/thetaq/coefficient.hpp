#pragma once

#include "thetaq/phase.hpp"
#include "thetaq/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace thetaq {

/// Element of the group algebra Q(i)[phases]: a finite sum g_k * exp(pi*i*l_k).
///
/// Phases whose constant part is a multiple of 1/2 are folded into the Q(i)
/// scalar (exp(pi*i/2) = i), so the stored phase keys are distinct characters
/// of the parameter space and equality is coefficientwise.
class Coefficient {
public:
    using Term = std::pair<PhaseExponent, GaussianRational>;

    Coefficient() = default;
    Coefficient(GaussianRational scalar);  // NOLINT(google-explicit-constructor)
    Coefficient(long scalar) : Coefficient(GaussianRational(scalar)) {}  // NOLINT
    Coefficient(const PhaseExponent& phase, GaussianRational scalar = 1);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// Single term with trivial phase.
    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_generically_trivial()); }
    /// Scalar value; precondition is_scalar().
    GaussianRational scalar() const;

    Coefficient& operator+=(const Coefficient& o);
    Coefficient& operator-=(const Coefficient& o);
    Coefficient& operator*=(const Coefficient& o);
    Coefficient& operator*=(const PhaseExponent& phase);
    Coefficient& operator*=(const GaussianRational& s);
    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
    Coefficient operator-() const;

    Coefficient conj() const;
    Coefficient substitute(const Bindings& bindings) const;

    std::string to_string() const;
    std::size_t hash() const;

    friend bool operator==(const Coefficient&, const Coefficient&) = default;

private:
    void add_term(PhaseExponent phase, GaussianRational scalar);
    std::vector<Term> terms_;  // sorted by phase, non-zero scalars
};

}  // namespace thetaq
