#pragma once

#include "thetaq/coefficient.hpp"
#include "thetaq/monomial.hpp"

#include <unordered_map>
#include <utility>
#include <vector>

namespace thetaq {

/// Finite sum of classical monomials with phase-group coefficients. No zero
/// coefficient is ever stored.
class Element {
public:
    using Map = std::unordered_map<Monomial, Coefficient, MonomialHash>;

    Element() = default;
    Element(Coefficient scalar);  // NOLINT(google-explicit-constructor)
    Element(long scalar) : Element(Coefficient(scalar)) {}  // NOLINT
    static Element monomial(const Monomial& m, Coefficient c = 1);

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Coefficient coeff(const Monomial& m) const;
    /// Coefficient of the empty monomial.
    Coefficient constant_term() const { return coeff(Monomial()); }
    bool is_scalar() const;

    void add(const Monomial& m, const Coefficient& c);
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Coefficient& c);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const Coefficient& c) { return a *= c; }
    friend Element operator*(const Coefficient& c, Element a) { return a *= c; }
    Element operator-() const;

    Element substitute(const Bindings& bindings) const;

    /// Terms in canonical Monomial order.
    std::vector<std::pair<Monomial, Coefficient>> sorted_terms() const;
    unsigned max_degree() const;

    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

private:
    Map terms_;
};

}  // namespace thetaq
