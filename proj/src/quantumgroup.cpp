#include "thetaq/quantumgroup.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace thetaq {

namespace {

const int kRowWeight[3][2] = {{-1, 0}, {0, -1}, {1, 1}};
const int kColWeight[3][2] = {{1, 0}, {0, 1}, {-1, -1}};

std::string u_name(int i, int j) { return "u" + std::to_string(i) + std::to_string(j); }

// Generator index of a letter, or -1 for central symbols.
int generator_index(const AlgebraSpec& spec, LetterId l) {
    LetterId g = spec.letter(l).kind == LetterKind::Adjoint ? spec.letter(l).star : l;
    for (std::size_t k = 0; k < spec.generators().size(); ++k)
        if (spec.generator_letter(k) == g) return static_cast<int>(k);
    return -1;
}

// (i, j) of a SU(3) generator letter in leg-local numbering: u_ij sits at 2*(3*(j-1)+(i-1)).
std::pair<int, int> su3_index(LetterId local) {
    int g = local / 2;
    return {g % 3 + 1, g / 3 + 1};
}

}  // namespace

LetterId su3_letter(const AlgebraSpec& spec, int i, int j, bool adjoint, std::size_t leg) {
    return spec.letter_id(u_name(i, j) + (adjoint ? "^*" : ""), leg);
}

Element su3_u(const AlgebraSpec& spec, int i, int j, bool adjoint, std::size_t leg) {
    return letter_element(su3_letter(spec, i, j, adjoint, leg));
}

HopfSpec build_su3_theta(const std::string& theta, std::size_t torus_rank) {
    if (torus_rank != 0 && torus_rank != 4) throw std::invalid_argument("SU(3) torus rank must be 0 or 4");
    AlgebraSpec base(torus_rank ? "SU(3)_" + theta : "SU(3)", torus_rank);
    for (int j = 1; j <= 3; ++j)
        for (int i = 1; i <= 3; ++i) {
            std::vector<int> w;
            if (torus_rank)
                w = {kRowWeight[i - 1][0], kRowWeight[i - 1][1], kColWeight[j - 1][0], kColWeight[j - 1][1]};
            base.add_generator(GeneratorSpec{u_name(i, j), w, true});
        }
    if (torus_rank) {
        LinearForm t = LinearForm::param(theta);
        base.set_deformation(0, 1, -t);
        base.set_deformation(2, 3, t);
    }
    auto L = [&](int i, int j, bool adj) { return Monomial::letter(su3_letter(base, i, j, adj)); };
    for (int j = 1; j <= 3; ++j)
        for (int l = 1; l <= 3; ++l) {
            // Rows: sum_k u_jk u_lk^* = delta_jl.
            Element rhs(j == l ? 1 : 0);
            for (int k = 1; k <= 2; ++k) rhs -= Element::monomial(L(j, k, false) * L(l, k, true));
            base.add_rule(L(j, 3, false) * L(l, 3, true), rhs);
        }
    for (int j = 1; j <= 3; ++j)
        for (int l = 1; l <= 3; ++l) {
            // Columns: sum_k u_kj^* u_kl = delta_jl.
            Element rhs(j == l ? 1 : 0);
            for (int k = 1; k <= 2; ++k) rhs -= Element::monomial(L(k, j, true) * L(k, l, false));
            base.add_rule(L(3, j, true) * L(3, l, false), rhs);
        }
    base.finalize();

    HopfSpec h{base, tensor(base, base, base.name() + "⊗" + base.name()), {}, {}, {}, {}};
    for (std::size_t g = 0; g < base.generators().size(); ++g) {
        auto [i, j] = su3_index(base.generator_letter(g));
        Element d;
        for (int k = 1; k <= 3; ++k)
            d += deformed_mul(h.square, su3_u(h.square, i, k, false, 0), su3_u(h.square, k, j, false, 1));
        h.coproduct.push_back(d);
        h.counit.push_back(i == j ? 1 : 0);
        h.antipode.push_back(su3_u(base, j, i, true));
        h.antipode_adjoint.push_back(su3_u(base, j, i, false));
    }
    return h;
}

HopfSpec substitute(const HopfSpec& h, const Bindings& bindings) {
    HopfSpec out = h;
    out.base = h.base.substitute(bindings);
    out.square = h.square.substitute(bindings);
    for (auto& e : out.coproduct) e = e.substitute(bindings);
    for (auto& e : out.antipode) e = e.substitute(bindings);
    for (auto& e : out.antipode_adjoint) e = e.substitute(bindings);
    return out;
}

PhaseExponent ordering_phase(const AlgebraSpec& spec, const Monomial& m) {
    std::vector<int> prefix(spec.torus_rank(), 0);
    PhaseExponent acc;
    for (LetterId l : m.word()) {
        const auto& w = spec.letter(l).weight;
        acc *= bicharacter(spec, prefix, w);
        for (std::size_t k = 0; k < w.size(); ++k) prefix[k] += w[k];
    }
    return acc.conj();
}

Element extend_multiplicatively(const AlgebraSpec& src, const AlgebraSpec& dst, const Element& a,
                                const std::function<Element(LetterId)>& image) {
    std::map<LetterId, Element> cache;
    auto img = [&](LetterId l) -> const Element& {
        auto it = cache.find(l);
        if (it == cache.end()) it = cache.emplace(l, image(l)).first;
        return it->second;
    };
    Element out;
    for (const auto& [m, c] : a.terms()) {
        Element acc(1);
        for (LetterId l : m.word()) acc = deformed_mul(dst, acc, img(l));
        Coefficient k = c;
        k *= ordering_phase(src, m);
        out += acc * k;
    }
    return out;
}

Element map_legs(const AlgebraSpec& src, const Element& a, const AlgebraSpec& dst, const std::vector<LegMap>& maps) {
    const auto& legs = src.legs();
    if (maps.size() != legs.size()) throw std::invalid_argument("map_legs: one map per leg required");
    std::vector<std::map<Monomial, Element>> caches(legs.size());
    Element out;
    for (const auto& [m, c] : a.terms()) {
        Element acc(1);
        for (std::size_t k = 0; k < legs.size() && !acc.is_zero(); ++k) {
            Monomial part = m.restricted(legs[k].begin, legs[k].end);
            auto it = caches[k].find(part);
            if (it == caches[k].end()) it = caches[k].emplace(part, maps[k](part)).first;
            acc = deformed_mul(dst, acc, it->second);
        }
        out += acc * c;
    }
    return out;
}

LegMap place_at(LetterId shift) {
    return [shift](const Monomial& m) { return Element::monomial(m.shifted(shift)); };
}

Element coproduct(const HopfSpec& h, const Element& a) {
    return extend_multiplicatively(h.base, h.square, a, [&](LetterId l) {
        int g = generator_index(h.base, l);
        if (g < 0) throw std::invalid_argument("coproduct: central symbol");
        const Element& d = h.coproduct[static_cast<std::size_t>(g)];
        return h.base.letter(l).kind == LetterKind::Adjoint ? star(h.square, d) : d;
    });
}

Coefficient counit(const HopfSpec& h, const Element& a) {
    Coefficient out;
    for (const auto& [m, c] : a.terms()) {
        GaussianRational v = 1;
        for (LetterId l : m.word()) {
            int g = generator_index(h.base, l);
            if (g < 0) throw std::invalid_argument("counit: central symbol");
            GaussianRational e = h.counit[static_cast<std::size_t>(g)];
            v *= h.base.letter(l).kind == LetterKind::Adjoint ? e.conj() : e;
        }
        if (v.is_zero()) continue;
        Coefficient k = c;
        k *= ordering_phase(h.base, m);
        k *= v;
        out += k;
    }
    return out;
}

Element antipode(const HopfSpec& h, const Element& a) {
    Element out;
    for (const auto& [m, c] : a.terms()) {
        std::vector<LetterId> w = m.word();
        Element acc(1);
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            int g = generator_index(h.base, *it);
            if (g < 0) throw std::invalid_argument("antipode: central symbol");
            const auto& table = h.base.letter(*it).kind == LetterKind::Adjoint ? h.antipode_adjoint : h.antipode;
            acc = deformed_mul(h.base, acc, table[static_cast<std::size_t>(g)]);
        }
        Coefficient k = c;
        k *= ordering_phase(h.base, m);
        out += acc * k;
    }
    return out;
}

// ---- relation table --------------------------------------------------------

namespace {

bool nonnegative(const PhaseExponent& p) {
    const LinearForm& e = p.exponent();
    if (!e.terms().empty()) return sgn(e.terms().front().second) > 0;
    return e.constant() <= 1;
}

std::pair<int, int> generator_ij(const AlgebraSpec& spec, LetterId l) {
    const std::string& n = spec.letter(l).name;
    return {n[1] - '0', n[2] - '0'};
}

}  // namespace

std::vector<RelationEntry> derive_relation_table(const HopfSpec& h) {
    const AlgebraSpec& s = h.base;
    std::vector<LetterId> gens;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) gens.push_back(su3_letter(s, i, j));
    std::vector<RelationEntry> out;
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
            PhaseExponent phi = commutation_phase(s, gens[a], gens[b]);
            if (phi.is_generically_trivial() || nonnegative(phi))
                out.push_back(RelationEntry{gens[a], gens[b], phi});
            else
                out.push_back(RelationEntry{gens[b], gens[a], phi.conj()});
        }
    return out;
}

std::string format_relation_phase(const PhaseExponent& p) {
    const LinearForm& e = p.exponent();
    if (e.is_zero()) return "1";
    if (e.terms().size() == 1 && sgn(e.constant()) == 0) {
        const auto& [name, q] = e.terms().front();
        std::string coeff;
        if (q == 1)
            coeff = "";
        else if (q == -1)
            coeff = "-";
        else
            coeff = q.get_str() + "*";
        return "exp(" + coeff + "pi*i*" + name + ")";
    }
    return p.to_string();
}

std::string format_relation(const AlgebraSpec& spec, const RelationEntry& r) {
    std::string a = spec.letter(r.lhs_first).name, b = spec.letter(r.lhs_second).name;
    std::string phase = r.phase.is_generically_trivial() ? "" : format_relation_phase(r.phase) + " ";
    return a + "*" + b + " = " + phase + b + "*" + a;
}

namespace {

PhaseExponent parse_relation_phase(const std::string& text) {
    if (text.empty()) return PhaseExponent();
    if (text.rfind("exp(", 0) != 0 || text.back() != ')') throw std::invalid_argument("bad phase '" + text + "'");
    std::string inner = text.substr(4, text.size() - 5);
    auto pos = inner.find("pi*i*");
    if (pos == std::string::npos) throw std::invalid_argument("bad phase '" + text + "'");
    std::string prefix = inner.substr(0, pos), rest = inner.substr(pos + 5);
    Rational q = 1;
    if (prefix == "-")
        q = -1;
    else if (!prefix.empty()) {
        if (prefix.back() != '*') throw std::invalid_argument("bad phase '" + text + "'");
        q = parse_rational(prefix.substr(0, prefix.size() - 1));
    }
    if (!rest.empty() && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
    return PhaseExponent(LinearForm::parse(rest) * q);
}

}  // namespace

RelationDiff diff_relation_table(const HopfSpec& h, const std::string& reference_text, const Bindings& bindings) {
    static const std::regex line_re(R"(^\s*(u\d\d)\*(u\d\d)\s*=\s*(?:(exp\(.*\))\s+)?(u\d\d)\*(u\d\d)\s*$)");
    RelationDiff diff;
    std::set<std::pair<LetterId, LetterId>> seen;
    std::istringstream in(reference_text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        ++diff.total;
        std::smatch m;
        if (!std::regex_match(line, m, line_re) || m[1] != m[5] || m[2] != m[4]) {
            diff.mismatches.push_back(line + "    [unparsable]");
            continue;
        }
        LetterId a = h.base.letter_id(m[1].str()), b = h.base.letter_id(m[2].str());
        seen.insert({std::min(a, b), std::max(a, b)});
        PhaseExponent ref = parse_relation_phase(m[3].str()).substitute(bindings);
        PhaseExponent got = commutation_phase(h.base, a, b).substitute(bindings);
        if (ref == got)
            ++diff.matched;
        else
            diff.mismatches.push_back(line + "    [derived: " +
                                      format_relation(h.base, RelationEntry{a, b, got}) + "]");
    }
    if (seen.size() != 36) diff.mismatches.push_back("reference covers " + std::to_string(seen.size()) + " of 36 pairs");
    return diff;
}

// ---- Haar ------------------------------------------------------------------

Coefficient haar_low_degree(const HopfSpec& h, const Element& a) {
    Coefficient out;
    for (const auto& [m, c] : a.terms()) {
        std::vector<LetterId> gens, adjs;
        for (LetterId l : m.word()) {
            if (h.base.letter(l).kind == LetterKind::Generator)
                gens.push_back(l);
            else if (h.base.letter(l).kind == LetterKind::Adjoint)
                adjs.push_back(l);
            else
                throw std::domain_error("haar_low_degree: central symbol");
        }
        if (gens.size() > 1 || adjs.size() > 1)
            throw std::domain_error("haar_low_degree: degree out of supported range: " + render(h.base, m));
        if (gens.empty() && adjs.empty()) {
            out += c;
            continue;
        }
        if (gens.size() != 1 || adjs.size() != 1) continue;
        auto [i, j] = generator_ij(h.base, gens[0]);
        auto [k, l] = generator_ij(h.base, h.base.letter(adjs[0]).star);
        if (i == k && j == l) {
            Coefficient v = c;
            v *= GaussianRational(Rational(1, 3));
            out += v;
        }
    }
    return out;
}

// ---- axiom checks ----------------------------------------------------------

namespace {

std::vector<Monomial> all_monomials(const std::vector<LetterId>& letters, unsigned max_degree) {
    std::vector<Monomial> out{Monomial()};
    std::vector<Monomial> frontier{Monomial()};
    std::vector<std::size_t> last{0};
    for (unsigned d = 0; d < max_degree; ++d) {
        std::vector<Monomial> next;
        std::vector<std::size_t> next_last;
        for (std::size_t k = 0; k < frontier.size(); ++k)
            for (std::size_t j = last[k]; j < letters.size(); ++j) {
                next.push_back(frontier[k] * Monomial::letter(letters[j]));
                next_last.push_back(j);
            }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
        last = std::move(next_last);
    }
    return out;
}

}  // namespace

AlgebraSpec untwisted_square(const HopfSpec& h) {
    Bindings zero;
    for (const auto& p : h.base.params()) zero[p] = LinearForm();
    AlgebraSpec flat = h.base.substitute(zero);
    return tensor(flat, flat, h.square.name() + "(untwisted)");
}

CheckReport check_hopf_axioms(const HopfSpec& h, unsigned max_degree) {
    CheckReport rep;
    rep.title = "hopf";
    const AlgebraSpec& H = h.base;
    AlgebraSpec triple = tensor(h.square, H, H.name() + "^⊗3");
    auto hl = static_cast<LetterId>(H.letters().size());
    std::map<Monomial, Element> memo;
    auto cop = [&](const Monomial& m) -> const Element& {
        auto it = memo.find(m);
        if (it == memo.end()) it = memo.emplace(m, coproduct(h, Element::monomial(m))).first;
        return it->second;
    };
    LegMap delta = [&](const Monomial& m) { return cop(m); };
    LegMap delta_right = [&](const Monomial& m) {
        const Element& d = cop(m);
        Element s;
        for (const auto& [mm, c] : d.terms()) s.add(mm.shifted(hl), c);
        return s;
    };
    LegMap eps = [&](const Monomial& m) { return Element(counit(h, Element::monomial(m))); };

    std::vector<LetterId> letters = generator_letters(H);
    std::size_t coassoc_fail = 0, counit_fail = 0, total = 0;
    std::string coassoc_witness, counit_witness;
    for (const Monomial& m : all_monomials(letters, max_degree)) {
        ++total;
        Element x = Element::monomial(m);
        Element d = cop(m);
        Element lhs = map_legs(h.square, d, triple, {delta, place_at(static_cast<LetterId>(2 * hl))});
        Element rhs = map_legs(h.square, d, triple, {place_at(0), delta_right});
        if (!(lhs == rhs)) {
            if (coassoc_fail++ == 0) coassoc_witness = render(H, x);
        }
        Element left = map_legs(h.square, d, H, {eps, place_at(0)});
        Element right = map_legs(h.square, d, H, {place_at(0), eps});
        if (!(left == x) || !(right == x)) {
            if (counit_fail++ == 0) counit_witness = render(H, x);
        }
    }
    rep.add("coassociativity on " + std::to_string(total) + " monomials of degree <= " + std::to_string(max_degree),
            coassoc_fail == 0, coassoc_witness);
    rep.add("counit on " + std::to_string(total) + " monomials of degree <= " + std::to_string(max_degree),
            counit_fail == 0, counit_witness);

    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            Element left, right;
            for (int k = 1; k <= 3; ++k) {
                left += deformed_mul(H, antipode(h, su3_u(H, i, k)), su3_u(H, k, j));
                right += deformed_mul(H, su3_u(H, i, k), antipode(h, su3_u(H, k, j)));
            }
            Element want(i == j ? 1 : 0);
            Element l = reduce(H, left), r = reduce(H, right);
            rep.add("sum_k S(u" + std::to_string(i) + "k) u_k" + std::to_string(j) + " = delta", l == want, render(H, l));
            rep.add("sum_k u" + std::to_string(i) + "k S(u_k" + std::to_string(j) + ") = delta", r == want, render(H, r));
        }

    std::size_t hom_fail = 0, pairs = 0;
    std::string hom_witness;
    for (LetterId g : letters)
        for (LetterId k : letters) {
            ++pairs;
            Element gk = deformed_mul(H, letter_element(g), letter_element(k));
            Element lhs = coproduct(h, gk);
            Element rhs = deformed_mul(h.square, coproduct(h, letter_element(g)), coproduct(h, letter_element(k)));
            if (!(lhs == rhs) && hom_fail++ == 0) hom_witness = "(" + H.letter(g).name + ", " + H.letter(k).name + ")";
        }
    rep.add("coproduct is a homomorphism into the twisted square on " + std::to_string(pairs) + " pairs", hom_fail == 0,
            hom_witness);
    return rep;
}

CheckReport check_unimodularity_low_degree(const HopfSpec& h) {
    CheckReport rep;
    rep.title = "haar";
    const AlgebraSpec& H = h.base;
    LegMap mu = [&](const Monomial& m) { return Element(haar_low_degree(h, Element::monomial(m))); };
    std::vector<Element> balanced{Element(1)};
    std::vector<std::string> names{"1"};
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k)
                for (int l = 1; l <= 3; ++l) {
                    balanced.push_back(deformed_mul(H, su3_u(H, i, j), su3_u(H, k, l, true)));
                    names.push_back(render(H, balanced.back()));
                }
    std::size_t left_fail = 0, right_fail = 0, s_fail = 0;
    std::string lw, rw, sw;
    for (std::size_t n = 0; n < balanced.size(); ++n) {
        const Element& a = balanced[n];
        Element want(haar_low_degree(h, a));
        Element d = coproduct(h, a);
        Element left = reduce(H, map_legs(h.square, d, H, {place_at(0), mu}));
        Element right = reduce(H, map_legs(h.square, d, H, {mu, place_at(0)}));
        if (!(left == want) && left_fail++ == 0) lw = names[n] + " -> " + render(H, left);
        if (!(right == want) && right_fail++ == 0) rw = names[n] + " -> " + render(H, right);
        Coefficient ms = haar_low_degree(h, antipode(h, a));
        if (!(ms == haar_low_degree(h, a)) && s_fail++ == 0) sw = names[n] + " -> " + ms.to_string();
    }
    std::string count = std::to_string(balanced.size()) + " balanced monomials";
    rep.add("(id⊗mu)Δ = mu(.)1 on " + count, left_fail == 0, lw);
    rep.add("(mu⊗id)Δ = mu(.)1 on " + count, right_fail == 0, rw);
    rep.add("mu∘S = mu on " + count, s_fail == 0, sw);
    return rep;
}

}  // namespace thetaq
