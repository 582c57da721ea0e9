#include "thetaq/coefficient.hpp"

#include <algorithm>

namespace thetaq {

namespace {

// Moves a constant k/2 out of the exponent into the scalar as i^k.
void fold_quarter_turns(PhaseExponent& phase, GaussianRational& scalar) {
    const Rational& c = phase.exponent().constant();
    if (sgn(c) == 0) return;
    Rational twice = c * 2;
    if (!is_integer(twice)) return;
    long k = twice.get_num().get_si();  // 1, 2 or 3 since c in [0, 2)
    static const GaussianRational turns[4] = {
        GaussianRational(1), GaussianRational::i(), GaussianRational(-1), -GaussianRational::i()};
    scalar *= turns[k & 3];
    LinearForm e = phase.exponent();
    e.set_constant(0);
    phase = PhaseExponent(std::move(e));
}

}  // namespace

Coefficient::Coefficient(GaussianRational scalar) {
    if (!scalar.is_zero()) terms_.emplace_back(PhaseExponent(), std::move(scalar));
}

Coefficient::Coefficient(const PhaseExponent& phase, GaussianRational scalar) { add_term(phase, std::move(scalar)); }

bool Coefficient::is_one() const {
    return terms_.size() == 1 && terms_[0].first.is_generically_trivial() && terms_[0].second.is_one();
}

GaussianRational Coefficient::scalar() const {
    if (terms_.empty()) return 0;
    return terms_[0].second;
}

void Coefficient::add_term(PhaseExponent phase, GaussianRational scalar) {
    if (scalar.is_zero()) return;
    fold_quarter_turns(phase, scalar);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), phase,
                               [](const Term& t, const PhaseExponent& p) { return t.first < p; });
    if (it != terms_.end() && it->first == phase) {
        it->second += scalar;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, Term{std::move(phase), std::move(scalar)});
    }
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
    if (terms_.empty()) {
        terms_ = o.terms_;
        return *this;
    }
    for (const auto& [p, s] : o.terms_) add_term(p, s);
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
    for (const auto& [p, s] : o.terms_) add_term(p, -s);
    return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    Coefficient out;
    if (a.terms_.size() == 1 && b.terms_.size() == 1) {
        out.add_term(a.terms_[0].first * b.terms_[0].first, a.terms_[0].second * b.terms_[0].second);
        return out;
    }
    for (const auto& [pa, sa] : a.terms_)
        for (const auto& [pb, sb] : b.terms_) out.add_term(pa * pb, sa * sb);
    return out;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) { return *this = *this * o; }

Coefficient& Coefficient::operator*=(const PhaseExponent& phase) {
    if (phase.is_generically_trivial()) return *this;
    std::vector<Term> old = std::move(terms_);
    terms_.clear();
    for (auto& [p, s] : old) add_term(p * phase, std::move(s));
    return *this;
}

Coefficient& Coefficient::operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= s;
    return *this;
}

Coefficient Coefficient::operator-() const {
    Coefficient out = *this;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
}

Coefficient Coefficient::conj() const {
    Coefficient out;
    for (const auto& [p, s] : terms_) out.add_term(p.conj(), s.conj());
    return out;
}

Coefficient Coefficient::substitute(const Bindings& bindings) const {
    Coefficient out;
    for (const auto& [p, s] : terms_) out.add_term(p.substitute(bindings), s);
    return out;
}

std::string Coefficient::to_string() const {
    if (terms_.empty()) return "0";
    auto one = [](const PhaseExponent& p, const GaussianRational& s) {
        if (p.is_generically_trivial()) return s.to_string();
        if (s.is_one()) return p.to_string();
        if (s == GaussianRational(-1)) return "-" + p.to_string();
        std::string g = s.to_string();
        if (!s.is_simple()) g = "(" + g + ")";
        return g + "*" + p.to_string();
    };
    if (terms_.size() == 1) return one(terms_[0].first, terms_[0].second);
    std::string out = "(";
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        if (k) out += " + ";
        out += one(terms_[k].first, terms_[k].second);
    }
    return out + ")";
}

std::size_t Coefficient::hash() const {
    std::size_t h = terms_.size();
    for (const auto& [p, s] : terms_) h = h * 131 + (p.hash() ^ s.hash());
    return h;
}

}  // namespace thetaq
