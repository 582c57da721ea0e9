#include "thetaq/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace thetaq {

Monomial::Monomial(std::initializer_list<Factor> factors) {
    for (const Factor& f : factors) *this = *this * letter(f.letter, f.exp);
}

Monomial Monomial::letter(LetterId id, std::uint16_t exp) {
    Monomial m;
    if (exp > 0) m.factors_.push_back({id, exp});
    return m;
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (const Factor& f : factors_) d += f.exp;
    return d;
}

std::uint16_t Monomial::exponent(LetterId id) const {
    for (const Factor& f : factors_)
        if (f.letter == id) return f.exp;
    return 0;
}

std::vector<LetterId> Monomial::word() const {
    std::vector<LetterId> w;
    for (const Factor& f : factors_) w.insert(w.end(), f.exp, f.letter);
    return w;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.factors_.empty()) return b;
    if (b.factors_.empty()) return a;
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto x = a.factors_.begin();
    auto y = b.factors_.begin();
    while (x != a.factors_.end() || y != b.factors_.end()) {
        if (y == b.factors_.end() || (x != a.factors_.end() && x->letter < y->letter)) {
            out.factors_.push_back(*x++);
        } else if (x == a.factors_.end() || y->letter < x->letter) {
            out.factors_.push_back(*y++);
        } else {
            out.factors_.push_back({x->letter, static_cast<std::uint16_t>(x->exp + y->exp)});
            ++x;
            ++y;
        }
    }
    return out;
}

bool Monomial::divides(const Monomial& m) const {
    auto y = m.factors_.begin();
    for (const Factor& f : factors_) {
        while (y != m.factors_.end() && y->letter < f.letter) ++y;
        if (y == m.factors_.end() || y->letter != f.letter || y->exp < f.exp) return false;
    }
    return true;
}

Monomial Monomial::cofactor(const Monomial& m) const {
    Monomial out;
    auto x = factors_.begin();
    for (const Factor& f : m.factors_) {
        while (x != factors_.end() && x->letter < f.letter) ++x;
        std::uint16_t sub = (x != factors_.end() && x->letter == f.letter) ? x->exp : 0;
        if (sub > f.exp) throw std::logic_error("Monomial::cofactor: not a divisor");
        if (f.exp > sub) out.factors_.push_back({f.letter, static_cast<std::uint16_t>(f.exp - sub)});
    }
    return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto x = a.factors_.begin();
    auto y = b.factors_.begin();
    while (x != a.factors_.end() || y != b.factors_.end()) {
        if (y == b.factors_.end() || (x != a.factors_.end() && x->letter < y->letter)) {
            out.factors_.push_back(*x++);
        } else if (x == a.factors_.end() || y->letter < x->letter) {
            out.factors_.push_back(*y++);
        } else {
            out.factors_.push_back({x->letter, std::max(x->exp, y->exp)});
            ++x;
            ++y;
        }
    }
    return out;
}

bool coprime(const Monomial& a, const Monomial& b) {
    auto x = a.factors_.begin();
    auto y = b.factors_.begin();
    while (x != a.factors_.end() && y != b.factors_.end()) {
        if (x->letter == y->letter) return false;
        if (x->letter < y->letter)
            ++x;
        else
            ++y;
    }
    return true;
}

Monomial Monomial::shifted(int shift) const {
    Monomial out = *this;
    for (Factor& f : out.factors_) f.letter = static_cast<LetterId>(f.letter + shift);
    return out;
}

Monomial Monomial::restricted(LetterId from, LetterId to) const {
    Monomial out;
    for (const Factor& f : factors_)
        if (f.letter >= from && f.letter < to) out.factors_.push_back({static_cast<LetterId>(f.letter - from), f.exp});
    return out;
}

std::size_t Monomial::hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const Factor& f : factors_) {
        h ^= (static_cast<std::size_t>(f.letter) << 16) | f.exp;
        h *= 0x100000001b3ULL;
    }
    return h;
}

bool operator<(const Monomial& a, const Monomial& b) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.factors_ < b.factors_;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0, j = 0;
    while (i < fa.size() && j < fb.size()) {
        if (fa[i].letter != fb[j].letter) {
            // The monomial carrying the smaller variable has the larger exponent there.
            return fa[i].letter < fb[j].letter ? -1 : 1;
        }
        if (fa[i].exp != fb[j].exp) return fa[i].exp > fb[j].exp ? -1 : 1;
        ++i;
        ++j;
    }
    return 0;  // equal degree and identical prefix => identical
}

}  // namespace thetaq
