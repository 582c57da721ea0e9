#include "thetaq/coaction.hpp"

#include "thetaq/linalg.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

namespace thetaq {

// ---- skew matrices and targets ---------------------------------------------

SkewMatrix symbolic_skew(std::size_t n, const std::string& prefix) {
    if (n > 9) throw std::invalid_argument("symbolic_skew: at most 9 rows");
    SkewMatrix m = zero_skew(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
            m[j][k] = LinearForm::param(prefix + std::to_string(j + 1) + std::to_string(k + 1));
            m[k][j] = -m[j][k];
        }
    return m;
}

SkewMatrix zero_skew(std::size_t n) { return SkewMatrix(n, std::vector<LinearForm>(n)); }

void require_skew(const SkewMatrix& m) {
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[j].size() != m.size()) throw SpecError("deformation matrix is not square");
        if (!m[j][j].is_zero()) throw SpecError("deformation matrix has a nonzero diagonal entry");
        for (std::size_t k = 0; k < j; ++k)
            if (m[j][k] != -m[k][j]) throw SpecError("deformation matrix is not skew");
    }
}

AlgebraSpec build_sphere_product(const std::string& name, std::size_t spheres, const SkewMatrix& theta,
                                 bool graded) {
    require_skew(theta);
    const std::size_t n = 3 * spheres;
    if (graded && theta.size() != n)
        throw SpecError("deformation matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    if (!graded)
        for (const auto& row : theta)
            for (const auto& f : row)
                if (!f.is_zero()) throw SpecError("an ungraded target admits no deformation");
    AlgebraSpec a(name, graded ? n : 0);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<int> w;
        if (graded) {
            w.assign(n, 0);
            w[j] = 1;
        }
        a.add_generator(GeneratorSpec{"z" + std::to_string(j + 1), w, true});
    }
    if (graded)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (!theta[j][k].is_zero()) a.set_deformation(j, k, theta[j][k]);
    for (std::size_t b = 0; b < spheres; ++b) {
        auto zz = [&](std::size_t k) {
            LetterId l = a.generator_letter(3 * b + k);
            return Monomial::letter(l) * Monomial::letter(static_cast<LetterId>(l + 1));
        };
        a.add_rule(zz(2), Element(1) - Element::monomial(zz(0)) - Element::monomial(zz(1)));
    }
    a.finalize();
    return a;
}

// ---- construction ----------------------------------------------------------

namespace {

LetterId hopf_letters(const CoactionSpec& c) { return static_cast<LetterId>(c.hopf.base.letters().size()); }

CoactionSpec build_blocks(const HopfSpec& h, const std::string& name, std::size_t spheres, const SkewMatrix& theta) {
    bool graded = h.base.torus_rank() > 0;
    CoactionSpec c{h, build_sphere_product(name, spheres, graded ? theta : zero_skew(0), graded), AlgebraSpec("", 0),
                   {}, {}};
    if (!graded) require_skew(theta);
    if (!graded)
        for (const auto& row : theta)
            for (const auto& f : row)
                if (!f.is_zero()) throw SpecError("an ungraded group admits no target deformation");
    c.tensor = tensor(h.base, c.target);
    for (std::size_t b = 0; b < spheres; ++b)
        for (int j = 0; j < 3; ++j) {
            Element d;
            for (int k = 0; k < 3; ++k) {
                LetterId z = static_cast<LetterId>(c.target.generator_letter(3 * b + k) + hopf_letters(c));
                d += deformed_mul(c.tensor, su3_u(c.tensor, j + 1, k + 1), letter_element(z));
            }
            c.map.push_back(d);
            c.slot.emplace_back(static_cast<int>(b), j);
        }
    return c;
}

// Generator index of a target letter, -1 for central symbols.
int target_generator(const AlgebraSpec& a, LetterId l) {
    const Letter& L = a.letter(l);
    if (L.kind == LetterKind::Central) return -1;
    LetterId g = L.kind == LetterKind::Adjoint ? L.star : l;
    for (std::size_t k = 0; k < a.generators().size(); ++k)
        if (a.generator_letter(k) == g) return static_cast<int>(k);
    return -1;
}

// δ of a single target letter, in c.tensor.
Element letter_image(const CoactionSpec& c, LetterId l) {
    int g = target_generator(c.target, l);
    if (g < 0) return letter_element(static_cast<LetterId>(l + hopf_letters(c)));
    const Element& d = c.map[static_cast<std::size_t>(g)];
    return c.target.letter(l).kind == LetterKind::Adjoint ? star(c.tensor, d) : d;
}

}  // namespace

CoactionSpec build_s5_coaction(const HopfSpec& h, const SkewMatrix& theta_a) {
    return build_blocks(h, "S5", 1, theta_a);
}

CoactionSpec build_s5xs5_coaction(const HopfSpec& h, const SkewMatrix& theta6) {
    return build_blocks(h, "S5xS5", 2, theta6);
}

CoactionSpec substitute(const CoactionSpec& c, const Bindings& bindings) {
    CoactionSpec out = c;
    out.hopf = substitute(c.hopf, bindings);
    out.target = c.target.substitute(bindings);
    out.tensor = c.tensor.substitute(bindings);
    for (auto& e : out.map) e = e.substitute(bindings);
    return out;
}

CoactionSpec with_target(const CoactionSpec& c, const AlgebraSpec& target) {
    if (target.generators().size() != c.target.generators().size())
        throw SpecError("with_target: generator count differs");
    for (std::size_t k = 0; k < target.generators().size(); ++k)
        if (target.generator_letter(k) != c.target.generator_letter(k) ||
            target.generators()[k].name != c.target.generators()[k].name)
            throw SpecError("with_target: generator layout differs");
    CoactionSpec out = c;
    out.target = target;
    out.tensor = tensor(c.hopf.base, target);
    return out;
}

// ---- maps ------------------------------------------------------------------

Element coact(const CoactionSpec& c, const Element& x) {
    return extend_multiplicatively(c.target, c.tensor, x, [&](LetterId l) { return letter_image(c, l); });
}

Element coact_classical(const CoactionSpec& c, const Element& x) {
    std::map<LetterId, Element> cache;
    Element out;
    for (const auto& [m, coeff] : x.terms()) {
        Element acc(1);
        for (LetterId l : m.word()) {
            auto it = cache.find(l);
            if (it == cache.end()) it = cache.emplace(l, letter_image(c, l)).first;
            acc = classical_mul(acc, it->second);
        }
        out += acc * coeff;
    }
    return out;
}

Element one_tensor(const CoactionSpec& c, const Element& x) {
    Element out;
    for (const auto& [m, coeff] : x.terms()) out.add(m.shifted(hopf_letters(c)), coeff);
    return out;
}

// ---- homomorphism and constraints ------------------------------------------

namespace {

struct PairForm {
    Monomial product;
    LinearForm form;  // rhs exponent - lhs exponent, constant mod 2
};

// Summand-by-summand exponent differences between δ(g)×δ(h) and χ(g,h) δ_cl(gh).
std::vector<PairForm> pair_forms(const CoactionSpec& c, LetterId g, LetterId h, const Element& dg, const Element& dh) {
    PhaseExponent lhs = bicharacter(c.target, c.target.letter(g).weight, c.target.letter(h).weight);
    std::vector<PairForm> out;
    for (const auto& [ma, ca] : dg.terms())
        for (const auto& [mb, cb] : dh.terms()) {
            PhaseExponent rhs = bicharacter(c.tensor, c.tensor.weight(ma), c.tensor.weight(mb));
            LinearForm f = rhs.exponent() - lhs.exponent();
            f.set_constant(reduce_mod2(f.constant()));
            out.push_back(PairForm{ma * mb, std::move(f)});
        }
    std::sort(out.begin(), out.end(), [](const PairForm& a, const PairForm& b) { return a.product < b.product; });
    return out;
}

}  // namespace

CheckReport check_homomorphism(const CoactionSpec& c) {
    CheckReport rep;
    rep.title = "coaction homomorphism";
    std::vector<LetterId> letters = generator_letters(c.target);
    std::map<LetterId, Element> img;
    for (LetterId l : letters) img[l] = letter_image(c, l);
    for (LetterId g : letters)
        for (LetterId h : letters) {
            const Element &dg = img[g], &dh = img[h];
            Coefficient chi(bicharacter(c.target, c.target.letter(g).weight, c.target.letter(h).weight));
            Element lhs = classical_mul(dg, dh) * chi;
            Element rhs = deformed_mul(c.tensor, dg, dh);
            bool ok = lhs == rhs;
            std::string witness;
            if (!ok) {
                for (const PairForm& p : pair_forms(c, g, h, dg, dh))
                    if (!p.form.is_zero()) {
                        witness = "phase " + PhaseExponent(-p.form).to_string() + " at " + render(c.tensor, p.product);
                        break;
                    }
                if (witness.empty()) witness = render(c.tensor, lhs - rhs);
            }
            rep.add("(" + c.target.letter(g).name + ", " + c.target.letter(h).name + ")", ok, witness);
        }
    return rep;
}

CheckReport check_equivariance(const CoactionSpec& c) {
    CheckReport rep;
    rep.title = "coaction equivariance";
    const Leg& hl = c.tensor.legs().at(0);
    std::size_t mid = hl.torus_begin + (hl.torus_end - hl.torus_begin) / 2;
    std::map<std::vector<int>, std::vector<int>> column_of;  // target weight -> column part of the H weight
    bool consistent = true;
    std::string bad;
    for (std::size_t g = 0; g < c.map.size(); ++g) {
        std::string name = c.target.generators()[g].name;
        std::set<std::vector<int>> rows;
        for (const auto& [m, coeff] : c.map[g].terms()) {
            std::vector<int> w = c.tensor.weight(m);
            rows.insert(std::vector<int>(w.begin() + static_cast<std::ptrdiff_t>(hl.torus_begin),
                                         w.begin() + static_cast<std::ptrdiff_t>(mid)));
            std::vector<int> col(w.begin() + static_cast<std::ptrdiff_t>(mid),
                                 w.begin() + static_cast<std::ptrdiff_t>(hl.torus_end));
            std::vector<int> tw(w.begin() + static_cast<std::ptrdiff_t>(hl.torus_end), w.end());
            auto [it, fresh] = column_of.emplace(tw, col);
            if (!fresh && it->second != col && consistent) {
                consistent = false;
                bad = render(c.tensor, m);
            }
        }
        rep.add("δ(" + name + ") has one row weight", rows.size() <= 1, render(c.tensor, c.map[g]));
    }
    rep.add("summand weights follow one linear rule", consistent, bad);
    return rep;
}

CheckReport check_coaction_axioms(const CoactionSpec& c) {
    CheckReport rep;
    rep.title = "coaction axioms";
    const HopfSpec& h = c.hopf;
    LetterId hl = hopf_letters(c);
    AlgebraSpec triple = tensor(h.square, c.target);
    std::map<Monomial, Element> cop_memo, coact_memo;
    LegMap delta_h = [&](const Monomial& m) {
        auto it = cop_memo.find(m);
        if (it == cop_memo.end()) it = cop_memo.emplace(m, coproduct(h, Element::monomial(m))).first;
        return it->second;
    };
    LegMap delta_a = [&](const Monomial& m) {
        auto it = coact_memo.find(m);
        if (it == coact_memo.end()) it = coact_memo.emplace(m, coact(c, Element::monomial(m))).first;
        Element s;
        for (const auto& [mm, k] : it->second.terms()) s.add(mm.shifted(hl), k);
        return s;
    };
    LegMap eps = [&](const Monomial& m) { return Element(counit(h, Element::monomial(m))); };

    std::vector<LetterId> letters = generator_letters(c.target);
    std::vector<Monomial> sample;
    for (LetterId l : letters) sample.push_back(Monomial::letter(l));
    for (std::size_t a = 0; a < letters.size(); ++a)
        for (std::size_t b = a; b < letters.size(); ++b)
            sample.push_back(Monomial::letter(letters[a]) * Monomial::letter(letters[b]));

    std::size_t coassoc_fail = 0, counit_fail = 0;
    std::string cw, ew;
    for (const Monomial& m : sample) {
        Element x = Element::monomial(m);
        Element d = coact(c, x);
        Element lhs = map_legs(c.tensor, d, triple, {delta_h, place_at(static_cast<LetterId>(2 * hl))});
        Element rhs = map_legs(c.tensor, d, triple, {place_at(0), delta_a});
        if (!(lhs == rhs) && coassoc_fail++ == 0) cw = render(c.target, x);
        Element back = map_legs(c.tensor, d, c.target, {eps, place_at(0)});
        if (!(back == x) && counit_fail++ == 0) ew = render(c.target, x);
    }
    std::string scope = std::to_string(sample.size()) + " monomials of degree <= 2";
    rep.add("(Δ⊗id)δ = (id⊗δ)δ on " + scope, coassoc_fail == 0, cw);
    rep.add("(ε⊗id)δ = id on " + scope, counit_fail == 0, ew);
    return rep;
}

std::vector<std::string> ConstraintSet::to_strings() const {
    std::vector<std::string> out;
    for (const LinearForm& row : rows) {
        auto pivot = std::find_if(variables.begin(), variables.end(),
                                  [&](const std::string& v) { return sgn(row.coeff(v)) != 0; });
        if (pivot == variables.end()) {
            out.push_back("0 = " + LinearForm(row.constant()).to_string());
            continue;
        }
        LinearForm rest = row - LinearForm::param(*pivot);
        out.push_back(*pivot + " = " + (-rest).to_string());
    }
    return out;
}

Bindings ConstraintSet::solution() const {
    Bindings b;
    for (const LinearForm& row : rows) {
        auto pivot = std::find_if(variables.begin(), variables.end(),
                                  [&](const std::string& v) { return sgn(row.coeff(v)) != 0; });
        if (pivot == variables.end()) continue;
        b[*pivot] = -(row - LinearForm::param(*pivot));
    }
    return b;
}

ConstraintSet reduce_constraints(const std::vector<LinearForm>& forms, const std::vector<std::string>& variables) {
    ConstraintSet out;
    out.variables = variables;
    std::set<std::string> known(variables.begin(), variables.end()), extra;
    for (const auto& f : forms)
        for (const auto& [name, q] : f.terms())
            if (!known.count(name)) extra.insert(name);
    out.variables.insert(out.variables.end(), extra.begin(), extra.end());
    const std::size_t nv = out.variables.size();

    Matrix<Rational> rows;
    for (const auto& f : forms) {
        std::vector<Rational> r(nv + 1);
        for (std::size_t k = 0; k < nv; ++k) r[k] = f.coeff(out.variables[k]);
        r[nv] = reduce_mod2(f.constant());
        if (std::any_of(r.begin(), r.end(), [](const Rational& q) { return sgn(q) != 0; })) rows.push_back(std::move(r));
    }
    std::vector<std::size_t> pivots = rref(rows, nv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        LinearForm f(rows[i][nv]);
        for (std::size_t k = 0; k < nv; ++k)
            if (sgn(rows[i][k]) != 0) f += LinearForm::param(out.variables[k], rows[i][k]);
        if (i >= pivots.size()) {
            const Rational& k = rows[i][nv];
            if (is_integer(k) && k.get_num() % 2 == 0) continue;
            out.consistent = false;
        }
        out.rows.push_back(std::move(f));
    }
    return out;
}

ConstraintSet extract_constraints(const CoactionSpec& c) {
    std::vector<LetterId> letters = generator_letters(c.target);
    std::map<LetterId, Element> img;
    for (LetterId l : letters) img[l] = letter_image(c, l);
    std::set<LinearForm> forms;
    for (LetterId g : letters)
        for (LetterId h : letters)
            for (PairForm& p : pair_forms(c, g, h, img[g], img[h]))
                if (!p.form.is_zero()) forms.insert(std::move(p.form));
    std::set<std::string> target = c.target.params();
    std::vector<std::string> vars(target.begin(), target.end());
    for (const auto& p : c.hopf.base.params())
        if (!target.count(p)) vars.push_back(p);
    return reduce_constraints(std::vector<LinearForm>(forms.begin(), forms.end()), vars);
}

// ---- coinvariants ----------------------------------------------------------

namespace {

using Sl3 = std::array<std::array<Rational, 3>, 3>;

std::vector<Sl3> sl3_basis() {
    std::vector<Sl3> out;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a != b) {
                Sl3 e{};
                e[a][b] = 1;
                out.push_back(e);
            }
    for (int a = 0; a < 2; ++a) {
        Sl3 h{};
        h[a][a] = 1;
        h[a + 1][a + 1] = -1;
        out.push_back(h);
    }
    return out;
}

using SparseVec = std::map<Monomial, Rational>;

struct LetterSlots {
    std::map<LetterId, std::pair<int, int>> slot;      // target letter -> (block, row)
    std::map<std::pair<int, int>, LetterId> generator;  // (block, row) -> generator letter
};

LetterSlots letter_slots(const CoactionSpec& c) {
    LetterSlots s;
    for (std::size_t g = 0; g < c.slot.size(); ++g) {
        LetterId l = c.target.generator_letter(g);
        s.slot[l] = c.slot[g];
        s.slot[static_cast<LetterId>(l + 1)] = c.slot[g];
        s.generator[c.slot[g]] = l;
    }
    return s;
}

// z_r -> sum_k X[r][k] z_k, z_r^* -> -sum_k X[k][r] z_k^*, extended as a derivation.
SparseVec derive(const CoactionSpec& c, const LetterSlots& s, const Sl3& x, const Monomial& m) {
    SparseVec out;
    for (const auto& f : m.factors()) {
        Monomial rest = Monomial::letter(f.letter).cofactor(m);
        auto [block, row] = s.slot.at(f.letter);
        bool adj = c.target.letter(f.letter).kind == LetterKind::Adjoint;
        for (int k = 0; k < 3; ++k) {
            Rational q = adj ? Rational(-x[k][row]) : x[row][k];
            if (sgn(q) == 0) continue;
            LetterId l = s.generator.at({block, k});
            if (adj) ++l;
            out[rest * Monomial::letter(l)] += q * f.exp;
        }
    }
    for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
    return out;
}

std::vector<Monomial> multisets(const std::vector<LetterId>& letters, unsigned k) {
    std::vector<Monomial> frontier{Monomial()};
    std::vector<std::size_t> last{0};
    for (unsigned d = 0; d < k; ++d) {
        std::vector<Monomial> next;
        std::vector<std::size_t> next_last;
        for (std::size_t i = 0; i < frontier.size(); ++i)
            for (std::size_t j = last[i]; j < letters.size(); ++j) {
                next.push_back(frontier[i] * Monomial::letter(letters[j]));
                next_last.push_back(j);
            }
        frontier = std::move(next);
        last = std::move(next_last);
    }
    return frontier;
}

bool sl3_weight_zero(const CoactionSpec& c, const LetterSlots& s, const Monomial& m) {
    int n[3] = {0, 0, 0};
    for (const auto& f : m.factors()) {
        int sign = c.target.letter(f.letter).kind == LetterKind::Adjoint ? -1 : 1;
        n[s.slot.at(f.letter).second] += sign * f.exp;
    }
    return n[0] == n[1] && n[1] == n[2];
}

// Target copy without rewrite rules.
AlgebraSpec free_copy(const AlgebraSpec& a) {
    AlgebraSpec f(a.name() + "_free", a.torus_rank());
    std::size_t g = 0;
    for (const Letter& l : a.letters()) {
        if (l.kind == LetterKind::Generator)
            f.add_generator(a.generators()[g++]);
        else if (l.kind == LetterKind::Central)
            f.add_central(l.name);
    }
    for (std::size_t j = 0; j < a.torus_rank(); ++j)
        for (std::size_t k = j + 1; k < a.torus_rank(); ++k)
            if (!a.deformation(j, k).is_zero()) f.set_deformation(j, k, a.deformation(j, k));
    f.finalize();
    return f;
}

Matrix<GaussianRational> echelon(Matrix<GaussianRational> rows, std::size_t ncols) {
    rref(rows, ncols);
    return rows;
}

}  // namespace

CoinvariantResult coinvariants(const CoactionSpec& c, unsigned max_degree, bool run_oracle) {
    CoinvariantResult result;
    LetterSlots slots = letter_slots(c);
    std::vector<LetterId> gens, adjs;
    for (LetterId l : generator_letters(c.target))
        (c.target.letter(l).kind == LetterKind::Adjoint ? adjs : gens).push_back(l);
    std::vector<Sl3> algebra = sl3_basis();

    std::optional<CoactionSpec> oracle;
    if (run_oracle) oracle = with_target(c, free_copy(c.target));

    for (unsigned total = 0; total <= max_degree; ++total)
        for (unsigned p = total + 1; p-- > 0;) {
            unsigned q = total - p;
            CoinvariantBidegree bd;
            bd.p = p;
            bd.q = q;
            std::vector<Monomial> all;
            for (const Monomial& a : multisets(gens, p))
                for (const Monomial& b : multisets(adjs, q)) all.push_back(a * b);
            std::sort(all.begin(), all.end());
            std::vector<Monomial> cols;
            for (const Monomial& m : all)
                if (sl3_weight_zero(c, slots, m)) cols.push_back(m);

            Matrix<Rational> eqs;
            for (const Sl3& x : algebra) {
                std::map<Monomial, std::size_t> row_of;
                for (std::size_t j = 0; j < cols.size(); ++j)
                    for (const auto& [mo, v] : derive(c, slots, x, cols[j])) {
                        auto [it, fresh] = row_of.emplace(mo, eqs.size());
                        if (fresh) eqs.emplace_back(cols.size());
                        eqs[it->second][j] += v;
                    }
            }
            Matrix<Rational> null = null_space(eqs, cols.size());
            for (const auto& v : null) {
                Element e;
                for (std::size_t j = 0; j < cols.size(); ++j)
                    if (sgn(v[j]) != 0) e.add(cols[j], GaussianRational(v[j]));
                bd.invariants.push_back(std::move(e));
            }

            if (run_oracle) {
                std::map<Monomial, std::size_t> col_of;
                for (std::size_t j = 0; j < all.size(); ++j) col_of[all[j]] = j;
                std::map<Monomial, std::size_t> row_of;
                Matrix<GaussianRational> sys;
                for (std::size_t j = 0; j < all.size(); ++j) {
                    Element x = Element::monomial(all[j]);
                    Element d = reduce(oracle->tensor, coact_classical(*oracle, x)) - one_tensor(*oracle, x);
                    for (const auto& [mo, k] : d.terms()) {
                        if (!k.is_scalar()) throw std::logic_error("oracle: phase in a classical coaction");
                        auto [it, fresh] = row_of.emplace(mo, sys.size());
                        if (fresh) sys.emplace_back(all.size());
                        sys[it->second][j] = k.scalar();
                    }
                }
                Matrix<GaussianRational> fixed = null_space(sys, all.size());
                bd.oracle_dim = fixed.size();
                Matrix<GaussianRational> mine;
                for (const auto& v : null) {
                    std::vector<GaussianRational> row(all.size());
                    for (std::size_t j = 0; j < cols.size(); ++j) row[col_of.at(cols[j])] = v[j];
                    mine.push_back(std::move(row));
                }
                bd.oracle_agrees = echelon(mine, all.size()) == echelon(fixed, all.size());
            }
            result.bidegrees.push_back(std::move(bd));
        }

    std::set<Monomial> support;
    std::vector<Element> reduced;
    for (const auto& bd : result.bidegrees)
        for (const auto& e : bd.invariants) {
            reduced.push_back(reduce(c.target, e));
            for (const auto& [m, k] : reduced.back().terms()) support.insert(m);
        }
    std::vector<Monomial> cols(support.rbegin(), support.rend());
    std::map<Monomial, std::size_t> col_of;
    for (std::size_t j = 0; j < cols.size(); ++j) col_of[cols[j]] = j;
    Matrix<GaussianRational> rows;
    for (const auto& e : reduced) {
        std::vector<GaussianRational> r(cols.size());
        for (const auto& [m, k] : e.terms()) r[col_of.at(m)] = k.scalar();
        rows.push_back(std::move(r));
    }
    rref(rows, cols.size());
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        Element e;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (!(*it)[j].is_zero()) e.add(cols[j], (*it)[j]);
        result.basis.push_back(std::move(e));
    }
    for (const auto& e : result.basis)
        result.confirmed.push_back(reduce(c.tensor, coact(c, e)) == reduce(c.tensor, one_tensor(c, e)));
    return result;
}

std::optional<Coefficient> proportional(const Element& a, const Element& b) {
    if (b.is_zero()) return a.is_zero() ? std::optional<Coefficient>(Coefficient()) : std::nullopt;
    auto terms = b.sorted_terms();
    const auto& [m, cb] = terms.front();
    if (cb.terms().size() != 1) return std::nullopt;
    Coefficient inv(cb.terms()[0].first.conj(), cb.terms()[0].second.inverse());
    Coefficient k = a.coeff(m) * inv;
    if (k.terms().size() != 1) return std::nullopt;
    if (!(b * k == a)) return std::nullopt;
    return k;
}

namespace {

// Splits x into e^{phase} x_phase with scalar-coefficient parts.
std::map<PhaseExponent, Element> phase_components(const Element& x) {
    std::map<PhaseExponent, Element> out;
    for (const auto& [m, k] : x.terms())
        for (const auto& [phase, s] : k.terms()) out[phase].add(m, s);
    return out;
}

}  // namespace

bool in_span(const std::vector<Element>& basis, const std::vector<Element>& xs) {
    // Each basis element may carry one overall phase; it is divided out.
    std::vector<Element> flat;
    for (const Element& b : basis) {
        auto parts = phase_components(b);
        if (parts.size() > 1) throw std::invalid_argument("in_span: basis element mixes phases");
        if (!parts.empty()) flat.push_back(parts.begin()->second);
    }
    std::vector<Element> targets;
    for (const Element& x : xs)
        for (auto& [phase, part] : phase_components(x)) targets.push_back(part);

    std::map<Monomial, std::size_t> col_of;
    for (const auto* group : {&flat, &targets})
        for (const Element& e : *group)
            for (const auto& [m, k] : e.terms()) col_of.emplace(m, col_of.size());
    auto row = [&](const Element& e) {
        std::vector<GaussianRational> r(col_of.size());
        for (const auto& [m, k] : e.terms()) r[col_of.at(m)] = k.scalar();
        return r;
    };
    Matrix<GaussianRational> b;
    for (const Element& e : flat) b.push_back(row(e));
    std::size_t r0 = rank(b, col_of.size());
    for (const Element& t : targets) {
        Matrix<GaussianRational> ext = b;
        ext.push_back(row(t));
        if (rank(ext, col_of.size()) != r0) return false;
    }
    return true;
}

CheckReport check_coinvariant_subalgebra(const CoactionSpec& c, const CoinvariantResult& r) {
    CheckReport rep;
    rep.title = "coinvariant subalgebra";
    std::map<unsigned, std::vector<Element>> span_at;
    std::size_t pairs = 0, commute_fail = 0, closure_fail = 0;
    std::string cw, sw;
    for (std::size_t i = 0; i < r.basis.size(); ++i)
        for (std::size_t j = i; j < r.basis.size(); ++j) {
            ++pairs;
            const Element &a = r.basis[i], &b = r.basis[j];
            Element ab = reduce(c.target, deformed_mul(c.target, a, b));
            Element ba = reduce(c.target, deformed_mul(c.target, b, a));
            if (!(ab == ba) && commute_fail++ == 0) cw = render(c.target, a) + " | " + render(c.target, b);
            unsigned d = a.max_degree() + b.max_degree();
            auto it = span_at.find(d);
            if (it == span_at.end()) it = span_at.emplace(d, coinvariants(c, d, false).basis).first;
            if (!in_span(it->second, {ab}) && closure_fail++ == 0) sw = render(c.target, ab);
        }
    std::string scope = std::to_string(pairs) + " basis pairs";
    rep.add("products commute on " + scope, commute_fail == 0, cw);
    rep.add("products lie in the coinvariant span on " + scope, closure_fail == 0, sw);
    return rep;
}

}  // namespace thetaq
