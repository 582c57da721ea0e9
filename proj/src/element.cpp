#include "thetaq/element.hpp"

#include <algorithm>

namespace thetaq {

Element::Element(Coefficient scalar) {
    if (!scalar.is_zero()) terms_.emplace(Monomial(), std::move(scalar));
}

Element Element::monomial(const Monomial& m, Coefficient c) {
    Element e;
    if (!c.is_zero()) e.terms_.emplace(m, std::move(c));
    return e;
}

Coefficient Element::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coefficient() : it->second;
}

bool Element::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

void Element::add(const Monomial& m, const Coefficient& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

Element& Element::operator*=(const Coefficient& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    if (c.is_one()) return *this;
    Map old = std::move(terms_);
    terms_.clear();
    for (auto& [m, a] : old) add(m, a * c);
    return *this;
}

Element Element::operator-() const {
    Element out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Element Element::substitute(const Bindings& bindings) const {
    Element out;
    for (const auto& [m, c] : terms_) out.add(m, c.substitute(bindings));
    return out;
}

std::vector<std::pair<Monomial, Coefficient>> Element::sorted_terms() const {
    std::vector<std::pair<Monomial, Coefficient>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

unsigned Element::max_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

}  // namespace thetaq
