#include "thetaq/algebra.hpp"

#include <algorithm>
#include <map>

namespace thetaq {

namespace {

using WeightGroups = std::map<std::vector<int>, std::vector<std::pair<const Monomial*, const Coefficient*>>>;

WeightGroups group_by_weight(const AlgebraSpec& spec, const Element& a) {
    WeightGroups g;
    for (const auto& [m, c] : a.terms()) g[spec.weight(m)].emplace_back(&m, &c);
    return g;
}

}  // namespace

PhaseExponent bicharacter(const AlgebraSpec& spec, const std::vector<int>& n, const std::vector<int>& m) {
    if (n.size() != spec.torus_rank() || m.size() != spec.torus_rank())
        throw std::invalid_argument("bicharacter: weight length does not match torus rank " +
                                    std::to_string(spec.torus_rank()));
    return spec.compiled_deformation()(n, m);
}

Element deformed_mul(const AlgebraSpec& spec, const Element& a, const Element& b) {
    if (a.is_zero() || b.is_zero()) return Element();
    const CompiledDeformation& chi = spec.compiled_deformation();
    WeightGroups ga = group_by_weight(spec, a);
    WeightGroups gb = group_by_weight(spec, b);
    Element out;
    for (const auto& [wa, ta] : ga)
        for (const auto& [wb, tb] : gb) {
            PhaseExponent phase = chi(wa, wb);
            for (const auto& [ma, ca] : ta)
                for (const auto& [mb, cb] : tb) {
                    Coefficient c = *ca * *cb;
                    c *= phase;
                    out.add(*ma * *mb, c);
                }
        }
    return out;
}

Element classical_mul(const Element& a, const Element& b) {
    Element out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out.add(ma * mb, ca * cb);
    return out;
}

Element deformed_product(const AlgebraSpec& spec, const std::vector<Element>& factors) {
    Element acc(1);
    for (const auto& f : factors) acc = deformed_mul(spec, acc, f);
    return acc;
}

Element deformed_pow(const AlgebraSpec& spec, const Element& a, unsigned k) {
    Element acc(1);
    for (unsigned j = 0; j < k; ++j) acc = deformed_mul(spec, acc, a);
    return acc;
}

Element star(const AlgebraSpec& spec, const Element& a) {
    Element out;
    for (const auto& [m, c] : a.terms()) {
        Monomial s;
        for (const auto& f : m.factors()) s = s * Monomial::letter(spec.letter(f.letter).star, f.exp);
        out.add(s, c.conj());
    }
    return out;
}

PhaseExponent commutation_phase(const AlgebraSpec& spec, LetterId g, LetterId h) {
    PhaseExponent chi = bicharacter(spec, spec.letter(g).weight, spec.letter(h).weight);
    return chi * chi;
}

Element reduce(const AlgebraSpec& spec, const Element& a) { return spec.rewrite().reduce(a); }

Element clear_denominators(const AlgebraSpec& spec, const Element& a, unsigned* clearing) {
    Element cur = a;
    unsigned kmax = 0;
    for (const auto& sym : spec.central_symbols()) {
        if (sym.denominator.is_zero()) continue;
        unsigned K = 0;
        for (const auto& [m, c] : cur.terms()) K = std::max<unsigned>(K, m.exponent(sym.letter));
        if (K == 0) continue;
        kmax = std::max(kmax, K);
        // Group by Q-exponent, strip Q, multiply by D^(K-i); D is central.
        std::vector<Element> parts(K + 1);
        for (const auto& [m, c] : cur.terms()) {
            unsigned i = m.exponent(sym.letter);
            Monomial rest;
            for (const auto& f : m.factors())
                if (f.letter != sym.letter) rest = rest * Monomial::letter(f.letter, f.exp);
            parts[i].add(rest, c);
        }
        std::vector<Element> dpow{Element(1)};
        for (unsigned j = 1; j <= K; ++j) dpow.push_back(reduce(spec, deformed_mul(spec, dpow.back(), sym.denominator)));
        Element next;
        for (unsigned i = 0; i <= K; ++i)
            if (!parts[i].is_zero()) next += deformed_mul(spec, dpow[K - i], parts[i]);
        cur = std::move(next);
    }
    if (clearing) *clearing = kmax;
    return cur;
}

bool eq_mod_ideal(const AlgebraSpec& spec, const Element& a, const Element& b, unsigned* clearing) {
    return reduce(spec, clear_denominators(spec, a - b, clearing)).is_zero();
}

Element letter_element(const AlgebraSpec& spec, std::string_view name, std::size_t leg) {
    return Element::monomial(Monomial::letter(spec.letter_id(name, leg)));
}

Element letter_element(LetterId id) { return Element::monomial(Monomial::letter(id)); }

std::vector<LetterId> generator_letters(const AlgebraSpec& spec, std::size_t leg) {
    std::vector<LetterId> out;
    const Leg& l = spec.legs().at(leg);
    for (LetterId k = l.begin; k < l.end; ++k)
        if (spec.letter(k).kind != LetterKind::Central) out.push_back(k);
    return out;
}

std::vector<Monomial> normal_monomials(const AlgebraSpec& spec, const std::vector<LetterId>& letters,
                                       unsigned degree) {
    std::vector<Monomial> out;
    std::vector<Monomial> frontier{Monomial()};
    // Non-decreasing letter index; non-normal prefixes are pruned.
    std::vector<std::size_t> last{0};
    for (unsigned d = 0; d < degree; ++d) {
        std::vector<Monomial> next;
        std::vector<std::size_t> next_last;
        for (std::size_t k = 0; k < frontier.size(); ++k)
            for (std::size_t j = last[k]; j < letters.size(); ++j) {
                Monomial m = frontier[k] * Monomial::letter(letters[j]);
                if (!spec.rewrite().is_normal(m)) continue;
                next.push_back(std::move(m));
                next_last.push_back(j);
            }
        frontier = std::move(next);
        last = std::move(next_last);
    }
    out = std::move(frontier);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace thetaq
