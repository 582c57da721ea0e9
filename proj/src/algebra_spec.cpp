#include "thetaq/algebra_spec.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace thetaq {

CompiledDeformation::CompiledDeformation(const std::vector<std::vector<LinearForm>>& d) {
    std::set<std::string> names;
    for (const auto& row : d)
        for (const auto& f : row)
            for (const auto& [name, q] : f.terms()) names.insert(name);
    params_.assign(names.begin(), names.end());
    for (std::size_t j = 0; j < d.size(); ++j)
        for (std::size_t k = 0; k < d[j].size(); ++k) {
            const LinearForm& f = d[j][k];
            if (f.is_zero()) continue;
            Entry e{j, k, f.constant(), {}};
            for (const auto& [name, q] : f.terms()) {
                auto idx = static_cast<std::size_t>(std::lower_bound(params_.begin(), params_.end(), name) -
                                                    params_.begin());
                e.coeffs.emplace_back(idx, q);
            }
            entries_.push_back(std::move(e));
        }
}

PhaseExponent CompiledDeformation::operator()(const std::vector<int>& n, const std::vector<int>& m) const {
    Rational c = 0;
    std::vector<Rational> acc(params_.size());
    bool any = false;
    for (const Entry& e : entries_) {
        long s = static_cast<long>(n[e.j]) * m[e.k];
        if (s == 0) continue;
        any = true;
        c += e.constant * s;
        for (const auto& [p, q] : e.coeffs) acc[p] += q * s;
    }
    if (!any) return PhaseExponent();
    std::vector<LinearForm::Term> terms;
    for (std::size_t p = 0; p < params_.size(); ++p)
        if (sgn(acc[p]) != 0) terms.emplace_back(params_[p], acc[p]);
    return PhaseExponent(LinearForm::from_sorted(c, std::move(terms)));
}

AlgebraSpec::AlgebraSpec(std::string name, std::size_t torus_rank)
    : name_(std::move(name)),
      torus_rank_(torus_rank),
      deformation_(torus_rank, std::vector<LinearForm>(torus_rank)) {
    recompile();
}

void AlgebraSpec::recompile() { compiled_ = std::make_shared<CompiledDeformation>(deformation_); }

LetterId AlgebraSpec::add_generator(GeneratorSpec g) {
    if (g.weight.size() != torus_rank_)
        throw SpecError("generator '" + g.name + "': weight length " + std::to_string(g.weight.size()) +
                        " != torus rank " + std::to_string(torus_rank_));
    if (find_letter(g.name)) throw SpecError("duplicate letter '" + g.name + "'");
    auto id = static_cast<LetterId>(letters_.size());
    std::vector<int> neg(g.weight.size());
    std::transform(g.weight.begin(), g.weight.end(), neg.begin(), [](int x) { return -x; });
    letters_.push_back(Letter{g.name, g.weight, LetterKind::Generator, static_cast<LetterId>(id + 1)});
    letters_.push_back(Letter{g.name + "^*", neg, LetterKind::Adjoint, id});
    generators_.push_back(std::move(g));
    generator_letters_.push_back(id);
    finalized_ = false;
    return id;
}

LetterId AlgebraSpec::add_central(std::string name) {
    if (find_letter(name)) throw SpecError("duplicate letter '" + name + "'");
    auto id = static_cast<LetterId>(letters_.size());
    letters_.push_back(Letter{name, std::vector<int>(torus_rank_, 0), LetterKind::Central, id});
    central_.push_back(CentralSymbol{std::move(name), id, Element()});
    finalized_ = false;
    return id;
}

void AlgebraSpec::set_deformation(std::size_t j, std::size_t k, const LinearForm& f) {
    if (j >= torus_rank_ || k >= torus_rank_) throw SpecError("deformation index out of range");
    if (j == k) {
        if (!f.is_zero()) throw SpecError("deformation diagonal must vanish");
        return;
    }
    deformation_[j][k] = f;
    deformation_[k][j] = -f;
    recompile();
}

void AlgebraSpec::add_rule(Monomial lhs, Element rhs) {
    rules_.push_back(RewriteRule{std::move(lhs), std::move(rhs)});
    finalized_ = false;
}

void AlgebraSpec::localize(LetterId central, Element denominator) {
    for (auto& c : central_)
        if (c.letter == central) {
            for (const auto& [m, k] : denominator.terms()) {
                std::vector<int> w = weight(m);
                for (const Letter& l : letters_) {
                    PhaseExponent chi = (*compiled_)(w, l.weight);
                    if (!(chi * chi).is_generically_trivial())
                        throw SpecError("denominator of '" + c.name + "' does not commute with " + l.name);
                }
            }
            c.denominator = std::move(denominator);
            return;
        }
    throw SpecError("not a central symbol");
}

void AlgebraSpec::finalize() {
    for (std::size_t j = 0; j < torus_rank_; ++j)
        for (std::size_t k = 0; k < torus_rank_; ++k)
            if (deformation_[j][k] != -deformation_[k][j]) throw SpecError("deformation matrix is not skew");
    std::vector<Polynomial> polys;
    for (const auto& r : rules_) {
        if (r.lhs.is_one()) throw SpecError("rule with empty left-hand side");
        std::vector<int> w = weight(r.lhs);
        for (const auto& [m, c] : r.rhs.terms()) {
            if (weight(m) != w) throw SpecError("rule " + render(*this, r.lhs) + " is not weight-homogeneous");
            if (grevlex_compare(m, r.lhs) >= 0)
                throw SpecError("rule " + render(*this, r.lhs) + " does not decrease the term order");
        }
        Element diff = Element::monomial(r.lhs) - r.rhs;
        polys.push_back(to_polynomial(diff));
    }
    if (legs_.size() <= 1) {
        legs_ = {Leg{name_, 0, static_cast<LetterId>(letters_.size()), 0, torus_rank_}};
        oriented_ = std::make_shared<RewriteSystem>(RewriteSystem::oriented(polys));
        completed_ = std::make_shared<RewriteSystem>(RewriteSystem::complete(polys));
    }
    finalized_ = true;
}

const RewriteSystem& AlgebraSpec::rewrite() const {
    if (!finalized_) throw std::logic_error("AlgebraSpec '" + name_ + "' used before finalize()");
    return *completed_;
}

const RewriteSystem& AlgebraSpec::oriented_rules() const {
    if (!finalized_) throw std::logic_error("AlgebraSpec '" + name_ + "' used before finalize()");
    return *oriented_;
}

std::optional<LetterId> AlgebraSpec::find_letter(std::string_view name, std::size_t leg) const {
    std::size_t begin = 0, end = letters_.size();
    if (!legs_.empty()) {
        if (leg >= legs_.size()) return std::nullopt;
        begin = legs_[leg].begin;
        end = legs_[leg].end;
    }
    for (std::size_t k = begin; k < end; ++k)
        if (letters_[k].name == name) return static_cast<LetterId>(k);
    return std::nullopt;
}

LetterId AlgebraSpec::letter_id(std::string_view name, std::size_t leg) const {
    auto id = find_letter(name, leg);
    if (!id) throw std::invalid_argument("unknown letter '" + std::string(name) + "' in " + name_);
    return *id;
}

std::vector<int> AlgebraSpec::weight(const Monomial& m) const {
    std::vector<int> w(torus_rank_, 0);
    for (const auto& f : m.factors()) {
        const auto& lw = letters_.at(f.letter).weight;
        for (std::size_t k = 0; k < torus_rank_; ++k) w[k] += f.exp * lw[k];
    }
    return w;
}

bool AlgebraSpec::is_homogeneous(const Element& e) const {
    if (e.terms().empty()) return true;
    std::vector<int> w = weight(e.terms().begin()->first);
    for (const auto& [m, c] : e.terms())
        if (weight(m) != w) return false;
    return true;
}

std::set<std::string> AlgebraSpec::params() const {
    std::set<std::string> out;
    for (const auto& row : deformation_)
        for (const auto& f : row)
            for (const auto& [name, q] : f.terms()) out.insert(name);
    return out;
}

AlgebraSpec AlgebraSpec::substitute(const Bindings& bindings) const {
    AlgebraSpec out = *this;
    for (auto& row : out.deformation_)
        for (auto& f : row) f = f.substitute(bindings);
    for (auto& c : out.central_) c.denominator = c.denominator.substitute(bindings);
    out.recompile();
    return out;
}

AlgebraSpec tensor(const AlgebraSpec& a, const AlgebraSpec& b, std::string name) {
    if (!a.finalized_ || !b.finalized_) throw std::logic_error("tensor() of unfinalized specs");
    if (name.empty()) name = a.name_ + "⊗" + b.name_;
    AlgebraSpec out(std::move(name), a.torus_rank_ + b.torus_rank_);
    auto shift = static_cast<LetterId>(a.letters_.size());
    for (const Letter& l : a.letters_) {
        Letter c = l;
        c.weight.resize(out.torus_rank_, 0);
        out.letters_.push_back(std::move(c));
    }
    for (const Letter& l : b.letters_) {
        Letter c = l;
        c.weight.insert(c.weight.begin(), a.torus_rank_, 0);
        c.star = static_cast<LetterId>(c.star + shift);
        out.letters_.push_back(std::move(c));
    }
    auto pad = [&](GeneratorSpec g, bool left) {
        if (left)
            g.weight.resize(out.torus_rank_, 0);
        else
            g.weight.insert(g.weight.begin(), a.torus_rank_, 0);
        return g;
    };
    for (std::size_t k = 0; k < a.generators_.size(); ++k) {
        out.generators_.push_back(pad(a.generators_[k], true));
        out.generator_letters_.push_back(a.generator_letters_[k]);
    }
    for (std::size_t k = 0; k < b.generators_.size(); ++k) {
        out.generators_.push_back(pad(b.generators_[k], false));
        out.generator_letters_.push_back(static_cast<LetterId>(b.generator_letters_[k] + shift));
    }
    for (std::size_t j = 0; j < a.torus_rank_; ++j)
        for (std::size_t k = 0; k < a.torus_rank_; ++k) out.deformation_[j][k] = a.deformation_[j][k];
    for (std::size_t j = 0; j < b.torus_rank_; ++j)
        for (std::size_t k = 0; k < b.torus_rank_; ++k)
            out.deformation_[a.torus_rank_ + j][a.torus_rank_ + k] = b.deformation_[j][k];
    auto shift_element = [&](const Element& e) {
        Element s;
        for (const auto& [m, c] : e.terms()) s.add(m.shifted(shift), c);
        return s;
    };
    out.rules_ = a.rules_;
    for (const auto& r : b.rules_) out.rules_.push_back(RewriteRule{r.lhs.shifted(shift), shift_element(r.rhs)});
    out.central_ = a.central_;
    for (const auto& c : b.central_)
        out.central_.push_back(
            CentralSymbol{c.name, static_cast<LetterId>(c.letter + shift), shift_element(c.denominator)});
    for (const Leg& l : a.legs_) out.legs_.push_back(l);
    for (const Leg& l : b.legs_)
        out.legs_.push_back(Leg{l.name, static_cast<LetterId>(l.begin + shift), static_cast<LetterId>(l.end + shift),
                                l.torus_begin + a.torus_rank_, l.torus_end + a.torus_rank_});
    out.recompile();
    out.oriented_ = std::make_shared<RewriteSystem>(RewriteSystem::disjoint_union(*a.oriented_, *b.oriented_, shift));
    out.completed_ =
        std::make_shared<RewriteSystem>(RewriteSystem::disjoint_union(*a.completed_, *b.completed_, shift));
    out.finalized_ = true;
    return out;
}

// ---- rendering -------------------------------------------------------------

namespace {

std::string render_factors(const AlgebraSpec& spec, const Monomial& m, LetterId begin, LetterId end) {
    std::string s;
    for (const auto& f : m.factors()) {
        if (f.letter < begin || f.letter >= end) continue;
        if (!s.empty()) s += "*";
        s += spec.letter(f.letter).name;
        if (f.exp > 1) s += "^" + std::to_string(f.exp);
    }
    return s;
}

std::string render_coefficient(const Coefficient& c) {
    if (c.is_scalar()) {
        GaussianRational g = c.scalar();
        std::string s = g.to_string();
        return g.is_simple() ? s : "(" + s + ")";
    }
    return c.to_string();
}

}  // namespace

std::string render(const AlgebraSpec& spec, const Monomial& m) {
    const auto& legs = spec.legs();
    if (legs.size() <= 1) {
        std::string s = render_factors(spec, m, 0, static_cast<LetterId>(spec.letters().size()));
        return s.empty() ? "1" : s;
    }
    std::string s;
    for (std::size_t k = 0; k < legs.size(); ++k) {
        if (k) s += " ⊗ ";
        std::string p = render_factors(spec, m, legs[k].begin, legs[k].end);
        s += p.empty() ? "1" : p;
    }
    return s;
}

std::string render(const AlgebraSpec& spec, const Element& e) {
    if (e.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : e.sorted_terms()) {
        std::string t;
        bool unit_monomial = m.is_one() && spec.legs().size() <= 1;
        if (unit_monomial) {
            t = render_coefficient(c);
        } else if (c.is_one()) {
            t = render(spec, m);
        } else if (c == Coefficient(-1)) {
            t = "-" + render(spec, m);
        } else {
            t = render_coefficient(c) + "*" + render(spec, m);
        }
        if (out.empty())
            out = t;
        else if (t[0] == '-')
            out += " - " + t.substr(1);
        else
            out += " + " + t;
    }
    return out;
}

// ---- parsing ---------------------------------------------------------------

namespace {

std::string strip(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
    throw std::invalid_argument("cannot parse element '" + std::string(text) + "': " + why);
}

Element parse_sum(const AlgebraSpec& spec, std::string_view text);

Element parse_factor(const AlgebraSpec& spec, std::string_view f, std::string_view whole) {
    std::string s = strip(f);
    if (s.empty()) parse_fail(whole, "empty factor");
    if (s.front() == '(') {
        if (s.back() != ')') parse_fail(whole, "unbalanced parenthesis");
        return parse_sum(spec, std::string_view(s).substr(1, s.size() - 2));
    }
    if (s.rfind("exp(pi*i*(", 0) == 0) {
        if (s.size() < 12 || s.substr(s.size() - 2) != "))") parse_fail(whole, "malformed phase");
        LinearForm l = LinearForm::parse(std::string_view(s).substr(10, s.size() - 12));
        return Element(Coefficient(PhaseExponent(l)));
    }
    if (s == "i") return Element(Coefficient(GaussianRational::i()));
    if (std::isdigit(static_cast<unsigned char>(s.front()))) return Element(Coefficient(GaussianRational(parse_rational(s))));
    // letter [^*] [^k]
    std::size_t k = 0;
    while (k < s.size() && (std::isalnum(static_cast<unsigned char>(s[k])) || s[k] == '_')) ++k;
    std::string name = s.substr(0, k);
    if (name.empty()) parse_fail(whole, "bad factor '" + s + "'");
    if (s.compare(k, 2, "^*") == 0) {
        name += "^*";
        k += 2;
    }
    std::uint16_t exp = 1;
    if (k < s.size()) {
        if (s[k] != '^') parse_fail(whole, "bad factor '" + s + "'");
        std::string digits = s.substr(k + 1);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); }))
            parse_fail(whole, "bad exponent in '" + s + "'");
        exp = static_cast<std::uint16_t>(std::stoi(digits));
    }
    auto id = spec.find_letter(name);
    if (!id) parse_fail(whole, "unknown letter '" + name + "'");
    return Element::monomial(Monomial::letter(*id, exp));
}

Element multiply_classical(const Element& a, const Element& b) {
    Element out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out.add(ma * mb, ca * cb);
    return out;
}

Element parse_term(const AlgebraSpec& spec, std::string_view t, std::string_view whole) {
    Element acc(1);
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t k = 0; k <= t.size(); ++k) {
        char c = k < t.size() ? t[k] : '\0';
        if (c == '(') ++depth;
        if (c == ')') --depth;
        bool split = k == t.size() || (depth == 0 && c == '*' && !(k > 0 && t[k - 1] == '^'));
        if (!split) continue;
        acc = multiply_classical(acc, parse_factor(spec, t.substr(start, k - start), whole));
        start = k + 1;
    }
    return acc;
}

Element parse_sum(const AlgebraSpec& spec, std::string_view text) {
    std::string s = strip(text);
    if (s.empty()) parse_fail(text, "empty");
    Element out;
    int depth = 0;
    std::size_t start = 0;
    bool negative = false;
    if (s[0] == '-' || s[0] == '+') {
        negative = s[0] == '-';
        start = 1;
    }
    for (std::size_t k = start; k <= s.size(); ++k) {
        char c = k < s.size() ? s[k] : '\0';
        if (c == '(') ++depth;
        if (c == ')') --depth;
        bool split = k == s.size() || (depth == 0 && (c == '+' || c == '-') && k > start);
        if (!split) continue;
        Element t = parse_term(spec, std::string_view(s).substr(start, k - start), text);
        out += negative ? -t : t;
        negative = c == '-';
        start = k + 1;
    }
    if (depth != 0) parse_fail(text, "unbalanced parenthesis");
    return out;
}

}  // namespace

Element parse_element(const AlgebraSpec& spec, std::string_view text) { return parse_sum(spec, text); }

// ---- declarative text ------------------------------------------------------

std::string AlgebraSpec::to_text() const {
    std::ostringstream os;
    os << "algebra " << name_ << "\n";
    os << "torus_rank " << torus_rank_ << "\n";
    std::size_t g = 0;
    for (const Letter& l : letters_) {
        if (l.kind == LetterKind::Generator) {
            os << "generator " << l.name << " weight";
            for (int x : l.weight) os << " " << x;
            os << (generators_[g++].normal ? " normal" : " nonnormal") << "\n";
        } else if (l.kind == LetterKind::Central) {
            os << "central " << l.name << "\n";
        }
    }
    for (std::size_t j = 0; j < torus_rank_; ++j)
        for (std::size_t k = j + 1; k < torus_rank_; ++k)
            if (!deformation_[j][k].is_zero())
                os << "deformation " << j + 1 << " " << k + 1 << " " << deformation_[j][k].to_string() << "\n";
    for (const auto& r : rules_) os << "rule " << render(*this, r.lhs) << " -> " << render(*this, r.rhs) << "\n";
    for (const auto& c : central_)
        if (!c.denominator.is_zero()) os << "localize " << c.name << " " << render(*this, c.denominator) << "\n";
    return os.str();
}

AlgebraSpec AlgebraSpec::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<AlgebraSpec> spec;
    std::string name;
    std::vector<std::pair<std::string, std::string>> localizations;
    int lineno = 0;
    auto fail = [&](const std::string& why) {
        throw SpecError("line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = strip(line);
        if (s.empty() || s[0] == '#') continue;
        std::istringstream ls(s);
        std::string key;
        ls >> key;
        if (key == "algebra") {
            ls >> name;
        } else if (key == "torus_rank") {
            std::size_t r = 0;
            if (!(ls >> r) || name.empty()) fail("torus_rank needs a preceding algebra line");
            spec.emplace(name, r);
        } else if (!spec) {
            fail("expected torus_rank before '" + key + "'");
        } else if (key == "generator") {
            GeneratorSpec gs;
            std::string kw;
            ls >> gs.name >> kw;
            if (kw != "weight") fail("expected 'weight'");
            for (std::size_t k = 0; k < spec->torus_rank(); ++k) {
                int x;
                if (!(ls >> x)) fail("short weight vector");
                gs.weight.push_back(x);
            }
            std::string flag;
            if (ls >> flag) {
                if (flag == "nonnormal")
                    gs.normal = false;
                else if (flag != "normal")
                    fail("unknown generator flag '" + flag + "'");
            }
            spec->add_generator(std::move(gs));
        } else if (key == "central") {
            std::string c;
            ls >> c;
            spec->add_central(c);
        } else if (key == "deformation") {
            std::size_t j = 0, k = 0;
            if (!(ls >> j >> k) || j == 0 || k == 0) fail("deformation needs 1-based indices");
            std::string rest;
            std::getline(ls, rest);
            spec->set_deformation(j - 1, k - 1, LinearForm::parse(rest));
        } else if (key == "rule") {
            std::string rest = s.substr(4);
            auto arrow = rest.find("->");
            if (arrow == std::string::npos) fail("rule needs '->'");
            Element lhs = parse_element(*spec, rest.substr(0, arrow));
            if (lhs.size() != 1 || !lhs.terms().begin()->second.is_one()) fail("rule lhs must be a monomial");
            spec->add_rule(lhs.terms().begin()->first, parse_element(*spec, rest.substr(arrow + 2)));
        } else if (key == "localize") {
            std::string c;
            ls >> c;
            std::string rest;
            std::getline(ls, rest);
            localizations.emplace_back(c, rest);
        } else {
            fail("unknown directive '" + key + "'");
        }
    }
    if (!spec) throw SpecError("missing algebra/torus_rank header");
    spec->finalize();
    for (const auto& [c, rest] : localizations) spec->localize(spec->letter_id(c), parse_element(*spec, rest));
    return std::move(*spec);
}

}  // namespace thetaq
