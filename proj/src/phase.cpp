#include "thetaq/phase.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace thetaq {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Term grammar: [rational ['*']] [ident] with at least one part present.
void parse_term(std::string_view t, const Rational& sign, LinearForm& out, std::string_view whole) {
    auto fail = [&] { throw std::invalid_argument("malformed linear form: '" + std::string(whole) + "'"); };
    if (t.empty()) fail();
    std::size_t k = 0;
    while (k < t.size() && (std::isdigit(static_cast<unsigned char>(t[k])) || t[k] == '/')) ++k;
    Rational coeff = 1;
    if (k > 0) coeff = parse_rational(t.substr(0, k));
    std::string_view rest = t.substr(k);
    if (!rest.empty() && rest[0] == '*') {
        if (k == 0) fail();
        rest.remove_prefix(1);
        if (rest.empty()) fail();
    }
    if (rest.empty()) {
        out += LinearForm(Rational(sign * coeff));
        return;
    }
    if (!is_ident_start(rest[0])) fail();
    for (char c : rest)
        if (!is_ident_char(c)) fail();
    out += LinearForm::param(std::string(rest), Rational(sign * coeff));
}

}  // namespace

LinearForm LinearForm::param(std::string name, Rational coeff) {
    LinearForm f;
    f.add_term(name, coeff);
    return f;
}

LinearForm LinearForm::from_sorted(Rational constant, std::vector<Term> terms) {
    LinearForm f(std::move(constant));
    f.terms_.reserve(terms.size());
    for (auto& t : terms)
        if (sgn(t.second) != 0) f.terms_.push_back(std::move(t));
    return f;
}

LinearForm LinearForm::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty linear form");
    LinearForm out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        Rational sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = -1;
            ++pos;
        } else if (pos != 0) {
            throw std::invalid_argument("malformed linear form: '" + std::string(text) + "'");
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        parse_term(std::string_view(s).substr(pos, end - pos), sign, out, text);
        pos = end;
    }
    return out;
}

Rational LinearForm::coeff(std::string_view name) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), name,
                               [](const Term& t, std::string_view n) { return t.first < n; });
    if (it != terms_.end() && it->first == name) return it->second;
    return 0;
}

void LinearForm::add_term(const std::string& name, const Rational& q) {
    if (sgn(q) == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), name,
                               [](const Term& t, const std::string& n) { return t.first < n; });
    if (it != terms_.end() && it->first == name) {
        it->second += q;
        if (sgn(it->second) == 0) terms_.erase(it);
    } else {
        terms_.insert(it, Term{name, q});
    }
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
    constant_ += o.constant_;
    if (terms_.empty()) {
        terms_ = o.terms_;
        return *this;
    }
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first < a->first) {
            merged.push_back(*b++);
        } else {
            Rational q = a->second + b->second;
            if (sgn(q) != 0) merged.emplace_back(a->first, std::move(q));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) { return *this += -o; }

LinearForm& LinearForm::operator*=(const Rational& s) {
    if (sgn(s) == 0) {
        terms_.clear();
        constant_ = 0;
        return *this;
    }
    constant_ *= s;
    for (auto& t : terms_) t.second *= s;
    return *this;
}

LinearForm LinearForm::substitute(const Bindings& bindings) const {
    // Depth-first expansion with an explicit stack of names being expanded.
    std::set<std::string> active;
    auto expand = [&](auto&& self, const LinearForm& f) -> LinearForm {
        LinearForm out(f.constant_);
        for (const auto& [name, q] : f.terms_) {
            auto it = bindings.find(name);
            if (it == bindings.end() || (it->second == LinearForm::param(name))) {
                out.add_term(name, q);
                continue;
            }
            if (!active.insert(name).second) throw CyclicBinding("cyclic binding through '" + name + "'");
            out += self(self, it->second) * q;
            active.erase(name);
        }
        return out;
    };
    return expand(expand, *this);
}

std::string LinearForm::to_string() const {
    std::string s;
    auto emit = [&](Rational q, const std::string& body) {
        bool neg = sgn(q) < 0;
        if (neg) q = -q;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (body.empty())
            s += q.get_str();
        else if (q == 1)
            s += body;
        else
            s += q.get_str() + "*" + body;
    };
    for (const auto& [name, q] : terms_) emit(q, name);
    if (sgn(constant_) != 0) emit(constant_, "");
    return s.empty() ? "0" : s;
}

std::size_t LinearForm::hash() const {
    std::size_t h = hash_value(constant_);
    for (const auto& [name, q] : terms_) h = h * 1000003 ^ (std::hash<std::string>{}(name) + 31 * hash_value(q));
    return h;
}

bool operator<(const LinearForm& a, const LinearForm& b) {
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
    for (std::size_t k = 0; k < a.terms_.size(); ++k) {
        if (a.terms_[k].first != b.terms_[k].first) return a.terms_[k].first < b.terms_[k].first;
        if (a.terms_[k].second != b.terms_[k].second) return a.terms_[k].second < b.terms_[k].second;
    }
    return a.constant_ < b.constant_;
}

PhaseExponent::PhaseExponent(LinearForm exponent) : exponent_(std::move(exponent)) { normalize(); }

void PhaseExponent::normalize() { exponent_.set_constant(reduce_mod2(exponent_.constant())); }

PhaseExponent PhaseExponent::conj() const { return PhaseExponent(-exponent_); }

PhaseExponent PhaseExponent::substitute(const Bindings& bindings) const {
    return PhaseExponent(exponent_.substitute(bindings));
}

PhaseExponent& PhaseExponent::operator*=(const PhaseExponent& o) {
    exponent_ += o.exponent_;
    normalize();
    return *this;
}

std::string PhaseExponent::to_string() const {
    // Constant first, then parameters.
    LinearForm params = exponent_;
    params.set_constant(0);
    std::string s;
    if (sgn(exponent_.constant()) != 0) s = exponent_.constant().get_str();
    if (!params.is_zero()) {
        std::string p = params.to_string();
        if (s.empty())
            s = p;
        else if (p[0] == '-')
            s += " - " + p.substr(1);
        else
            s += " + " + p;
    }
    if (s.empty()) s = "0";
    return "exp(pi*i*(" + s + "))";
}

PhaseExponent phase_mul(const PhaseExponent& a, const PhaseExponent& b) { return a * b; }
PhaseExponent phase_conj(const PhaseExponent& a) { return a.conj(); }
bool is_generically_trivial(const PhaseExponent& a) { return a.is_generically_trivial(); }
PhaseExponent substitute(const PhaseExponent& a, const Bindings& bindings) { return a.substitute(bindings); }

}  // namespace thetaq
