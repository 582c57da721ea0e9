#include "thetaq/bundle.hpp"

#include <algorithm>
#include <stdexcept>

namespace thetaq {

namespace {

Element z(const AlgebraSpec& a, int j, bool adjoint = false) {
    return letter_element(a, "z" + std::to_string(j) + (adjoint ? "^*" : ""));
}

Element q_power(const Bundle& b, unsigned n) { return deformed_pow(b.algebra(), letter_element(b.q), n); }

const Element& denominator(const Bundle& b) {
    for (const auto& c : b.algebra().central_symbols())
        if (c.letter == b.q) return c.denominator;
    throw std::logic_error("bundle without localization");
}

}  // namespace

Element build_w(const AlgebraSpec& a) {
    Element w;
    for (int j = 1; j <= 3; ++j) w += deformed_mul(a, z(a, j), z(a, j + 3, true));
    return w;
}

Bundle build_bundle(const HopfSpec& h, const std::string& lambda, const Bindings& extra) {
    CoactionSpec raw = build_s5xs5_coaction(h, symbolic_skew(6, "tp"));
    ConstraintSet cs = extract_constraints(raw);
    if (!cs.consistent) throw std::logic_error("inconsistent S5xS5 constraints");
    Bindings sol = cs.solution();
    Bindings rename;
    for (const auto& p : raw.target.params())
        if (!sol.count(p)) rename[p] = LinearForm::param(lambda);
    if (rename.size() != 1) throw std::logic_error("expected one free target parameter");
    for (auto& [name, f] : sol) f = f.substitute(rename);
    sol.insert(rename.begin(), rename.end());
    for (auto& [name, f] : sol) f = f.substitute(extra);
    for (const auto& [name, f] : extra) sol.emplace(name, f);

    CoactionSpec c = substitute(raw, sol);
    AlgebraSpec a = c.target;
    LetterId q = a.add_central("Q");
    a.finalize();
    Element w = build_w(a);
    Element ws = star(a, w);
    a.localize(q, reduce(a, Element(1) - deformed_mul(a, w, ws)));
    Bundle b{with_target(c, a), sol, lambda, q, w, ws, {}, {}};
    for (int j = 1; j <= 3; ++j) b.pairing += deformed_mul(a, z(a, j, true), z(a, j + 3));
    auto mu = proportional(b.pairing, b.w_star);
    if (!mu) throw std::logic_error("z^* . z' is not proportional to w^*");
    b.mu = *mu;
    return b;
}

CheckReport check_w_relations(const Bundle& b, unsigned central_degree) {
    CheckReport rep;
    rep.title = "w relations";
    const AlgebraSpec& a = b.algebra();
    PhaseExponent lam = PhaseExponent::of(b.lambda, 2).substitute(b.parameters);
    Coefficient down(lam.conj()), up(lam);
    auto mul = [&](const Element& x, const Element& y) { return reduce(a, deformed_mul(a, x, y)); };
    bool w_central = true;
    for (int j = 1; j <= 6; ++j) {
        Element zj = z(a, j);
        Element l = mul(zj, b.w), r = mul(b.w, zj);
        rep.add("z" + std::to_string(j) + " w = exp(-2*pi*i*" + b.lambda + ") w z" + std::to_string(j), l == r * down,
                render(a, l - r * down));
        Element ls = mul(zj, b.w_star), rs = mul(b.w_star, zj);
        rep.add("z" + std::to_string(j) + " w^* = exp(2*pi*i*" + b.lambda + ") w^* z" + std::to_string(j),
                ls == rs * up, render(a, ls - rs * up));
        if (!(l == r)) w_central = false;
    }
    Element ww = mul(b.w, b.w_star);
    rep.add("w w^* = w^* w", ww == mul(b.w_star, b.w), render(a, ww - mul(b.w_star, b.w)));

    std::vector<LetterId> letters = generator_letters(a);
    letters.erase(std::remove(letters.begin(), letters.end(), b.q), letters.end());
    std::size_t count = 0, fail = 0;
    std::string witness;
    for (unsigned d = 1; d <= central_degree; ++d)
        for (const Monomial& m : normal_monomials(a, letters, d)) {
            ++count;
            Element x = Element::monomial(m);
            if (!(mul(ww, x) == mul(x, ww)) && fail++ == 0) witness = render(a, x);
        }
    rep.add("w w^* commutes with " + std::to_string(count) + " normal monomials of degree <= " +
                std::to_string(central_degree),
            fail == 0, witness);
    if (lam.is_generically_trivial())
        rep.notes.push_back("exp(2*pi*i*" + b.lambda + ") = 1, so w is central here");
    else
        rep.add("w is not central", !w_central, w_central ? "w commutes with every generator" : "");
    rep.notes.push_back("z1^* z4 + z2^* z5 + z3^* z6 = " + b.mu.to_string() + " w^*");
    return rep;
}

FundamentalFrames build_fundamental_frames(const Bundle& b, Normalizer n) {
    const AlgebraSpec& a = b.algebra();
    FundamentalFrames f;
    Element q = letter_element(b.q);
    for (int j = 1; j <= 3; ++j) {
        f.z1.entries.push_back(z(a, j));
        f.w1.entries.push_back(z(a, j, true));
        Element e = z(a, j + 3) - deformed_mul(a, z(a, j), b.pairing);
        if (n == Normalizer::PaperLiteral) e = deformed_mul(a, e, q);
        f.z2.entries.push_back(e);
        f.w2.entries.push_back(star(a, e));
    }
    if (n == Normalizer::Corrected) f.z2.n_power = f.w2.n_power = 1;
    return f;
}

Element raw_pairing(const Bundle& b, const FrameVector& u, const FrameVector& v) {
    if (u.entries.size() != v.entries.size()) throw std::invalid_argument("pairing of frames of different length");
    const AlgebraSpec& a = b.algebra();
    Element out;
    for (std::size_t k = 0; k < u.entries.size(); ++k) out += deformed_mul(a, star(a, u.entries[k]), v.entries[k]);
    return out;
}

CheckReport check_gram(const Bundle& b, const std::vector<FrameVector>& frames, const std::string& label) {
    CheckReport rep;
    rep.title = label + " Gram";
    const AlgebraSpec& a = b.algebra();
    for (std::size_t i = 0; i < frames.size(); ++i)
        for (std::size_t j = i; j < frames.size(); ++j) {
            Element g = raw_pairing(b, frames[i], frames[j]);
            Element want(i == j ? 1 : 0);
            if (i == j) g = deformed_mul(a, g, q_power(b, frames[i].n_power)) * Coefficient(GaussianRational(frames[i].c2));
            unsigned K = 0;
            bool ok = eq_mod_ideal(a, g, want, &K);
            std::string name = label + std::to_string(i + 1) + "^* " + label + std::to_string(j + 1) + " = " +
                               (i == j ? "1" : "0");
            rep.add(name, ok, ok ? "" : render(a, reduce(a, g)));
        }
    return rep;
}

ProjectionMatrix build_projection(const Bundle& b, const std::vector<FrameVector>& frames) {
    if (frames.empty()) throw std::invalid_argument("projection from no frames");
    const AlgebraSpec& a = b.algebra();
    std::size_t n = frames.front().entries.size();
    ProjectionMatrix p;
    p.frames = frames;
    p.entries.assign(n, std::vector<Element>(n));
    for (const FrameVector& f : frames) {
        if (f.entries.size() != n) throw std::invalid_argument("frames of different length");
        Element scale = q_power(b, f.n_power) * Coefficient(GaussianRational(f.c2));
        std::vector<Element> right;
        for (const auto& e : f.entries) right.push_back(deformed_mul(a, star(a, e), scale));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) p.entries[j][k] += deformed_mul(a, f.entries[j], right[k]);
    }
    return p;
}

ProjectionMatrix identity_projection(std::size_t n) {
    ProjectionMatrix p;
    p.entries.assign(n, std::vector<Element>(n));
    for (std::size_t j = 0; j < n; ++j) p.entries[j][j] = Element(1);
    return p;
}

CheckReport check_projection(const Bundle& b, const ProjectionMatrix& p, const std::string& label,
                             std::size_t direct_limit) {
    CheckReport rep;
    rep.title = label;
    const AlgebraSpec& a = b.algebra();
    const std::size_t n = p.size();
    unsigned kmax = 0;
    auto track = [&](const Element& x, const Element& y) {
        unsigned K = 0;
        bool ok = eq_mod_ideal(a, x, y, &K);
        kmax = std::max(kmax, K);
        return ok;
    };

    std::size_t adj_fail = 0;
    std::string adj_witness;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j; k < n; ++k)
            if (!track(star(a, p.entries[k][j]), p.entries[j][k]) && adj_fail++ == 0)
                adj_witness = "entry (" + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
    rep.add(label + ": p^* = p", adj_fail == 0, adj_witness);

    if (n <= direct_limit || p.frames.empty()) {
        std::vector<std::vector<Element>> r(n, std::vector<Element>(n));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) r[j][k] = reduce(a, p.entries[j][k]);
        std::size_t fail = 0;
        std::string witness;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                Element sq;
                for (std::size_t k = 0; k < n; ++k) sq += deformed_mul(a, r[j][k], r[k][l]);
                if (!track(sq, r[j][l]) && fail++ == 0)
                    witness = "entry (" + std::to_string(j + 1) + "," + std::to_string(l + 1) +
                              "): p^2 - p = " + render(a, reduce(a, clear_denominators(a, sq - r[j][l])));
            }
        rep.add(label + ": p^2 = p", fail == 0, witness);
    } else {
        CheckReport gram = check_gram(b, p.frames, "U");
        std::string witness;
        for (const auto& item : gram.items)
            if (!item.pass) {
                witness = item.name;
                break;
            }
        for (std::size_t i = 0; i < p.frames.size(); ++i) {
            Element g = deformed_mul(a, raw_pairing(b, p.frames[i], p.frames[i]), q_power(b, p.frames[i].n_power));
            unsigned K = 0;
            clear_denominators(a, g, &K);
            kmax = std::max(kmax, K);
        }
        rep.add(label + ": p^2 = U (U^* U) U^* = p on " + std::to_string(gram.items.size()) + " frame pairings",
                gram.pass(), witness);
    }
    rep.notes.push_back(label + ": clearing exponent K = " + std::to_string(kmax));
    return rep;
}

Element chern0(const Bundle& b, const ProjectionMatrix& p) {
    const AlgebraSpec& a = b.algebra();
    Element t;
    for (std::size_t j = 0; j < p.size(); ++j) t += p.entries[j][j];
    unsigned K = 0;
    Element cleared = reduce(a, clear_denominators(a, t, &K));
    Element dk = reduce(a, deformed_pow(a, denominator(b), K));
    auto c = proportional(cleared, dk);
    if (c && c->is_scalar()) return Element(*c);
    return reduce(a, t);
}

Rational sym_normalizer_squared(unsigned n, unsigned m, unsigned p, unsigned s) {
    if (p < 1 || p > n + 1 || s < 1 || s > m + 1) throw std::invalid_argument("symmetrization index out of range");
    mpz_class x, y;
    mpz_bin_uiui(x.get_mpz_t(), n, p - 1);
    mpz_bin_uiui(y.get_mpz_t(), m, s - 1);
    return Rational(x * y);
}

namespace {

// Sym(first^(k-b) ⊗ second^b): average over distinct placements of the factors, entries
// indexed by base-3 multi-indices.
std::vector<Element> symmetrize(const AlgebraSpec& a, const FrameVector& first, const FrameVector& second,
                                unsigned k, unsigned b) {
    std::size_t len = 1;
    for (unsigned t = 0; t < k; ++t) len *= 3;
    std::vector<Element> out(len);
    std::vector<int> which(k, 0);
    std::fill(which.end() - b, which.end(), 1);
    std::size_t placements = 0;
    do {
        ++placements;
        for (std::size_t idx = 0; idx < len; ++idx) {
            Element acc(1);
            std::size_t rest = idx;
            std::vector<std::size_t> digits(k);
            for (unsigned t = k; t-- > 0;) {
                digits[t] = rest % 3;
                rest /= 3;
            }
            for (unsigned t = 0; t < k; ++t)
                acc = deformed_mul(a, acc, (which[t] ? second : first).entries[digits[t]]);
            out[idx] += acc;
        }
    } while (std::next_permutation(which.begin(), which.end()));
    Coefficient avg(GaussianRational(Rational(1, static_cast<long>(placements))));
    for (auto& e : out) e *= avg;
    return out;
}

}  // namespace

std::vector<FrameVector> build_sym_frame(const Bundle& b, const FundamentalFrames& f, unsigned n, unsigned m) {
    const AlgebraSpec& a = b.algebra();
    std::vector<FrameVector> out;
    for (unsigned p = 1; p <= n + 1; ++p) {
        std::vector<Element> zs = symmetrize(a, f.z1, f.z2, n, p - 1);
        for (unsigned s = 1; s <= m + 1; ++s) {
            std::vector<Element> ws = symmetrize(a, f.w1, f.w2, m, s - 1);
            FrameVector u;
            for (const auto& x : zs)
                for (const auto& y : ws) u.entries.push_back(deformed_mul(a, x, y));
            u.n_power = (p - 1) * f.z2.n_power + (s - 1) * f.w2.n_power;
            u.c2 = sym_normalizer_squared(n, m, p, s);
            out.push_back(std::move(u));
        }
    }
    return out;
}

long irrep_dimension(long n, long m) {
    if (n < 0 || m < 0) throw std::invalid_argument("irrep_dimension: negative label");
    return (n + 1) * (m + 1) * (n + m + 2) / 2;
}

}  // namespace thetaq
