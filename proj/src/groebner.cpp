#include "thetaq/groebner.hpp"

#include <algorithm>
#include <set>

namespace thetaq {

namespace {

void add_term(Polynomial& p, const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = p.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
}

Polynomial monic(Polynomial p) {
    if (p.empty()) return p;
    GaussianRational inv = p.begin()->second.inverse();
    for (auto& [m, c] : p) c *= inv;
    return p;
}

// p -= c * cof * g
void sub_multiple(Polynomial& p, const GaussianRational& c, const Monomial& cof, const Polynomial& g) {
    for (const auto& [m, a] : g) add_term(p, cof * m, -(c * a));
}

Polynomial normal_form(Polynomial f, const std::vector<Polynomial>& basis) {
    Polynomial r;
    while (!f.empty()) {
        auto it = f.begin();
        Monomial m = it->first;
        GaussianRational c = it->second;
        const Polynomial* hit = nullptr;
        for (const auto& g : basis)
            if (g.begin()->first.divides(m)) {
                hit = &g;
                break;
            }
        if (hit) {
            sub_multiple(f, c, hit->begin()->first.cofactor(m), *hit);
        } else {
            r.emplace(m, c);
            f.erase(f.begin());
        }
    }
    return r;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const Monomial& lf = f.begin()->first;
    const Monomial& lg = g.begin()->first;
    Monomial l = lcm(lf, lg);
    Polynomial s;
    for (const auto& [m, c] : f) add_term(s, lf.cofactor(l) * m, c);
    sub_multiple(s, 1, lg.cofactor(l), g);
    return s;
}

RewriteSystem::Rule to_rule(const Polynomial& p) {
    RewriteSystem::Rule r;
    auto it = p.begin();
    r.lead = it->first;
    for (++it; it != p.end(); ++it) r.tail.emplace_back(it->first, it->second);
    return r;
}

}  // namespace

Polynomial to_polynomial(const Element& e) {
    Polynomial p;
    for (const auto& [m, c] : e.terms()) {
        if (!c.is_scalar()) throw std::invalid_argument("relation coefficients must be phase-free");
        add_term(p, m, c.scalar());
    }
    return p;
}

Element to_element(const Polynomial& p) {
    Element e;
    for (const auto& [m, c] : p) e.add(m, Coefficient(c));
    return e;
}

void RewriteSystem::index() {
    by_letter_.clear();
    for (std::size_t k = 0; k < rules_.size(); ++k) {
        LetterId first = rules_[k].lead.factors().front().letter;
        if (by_letter_.size() <= first) by_letter_.resize(first + 1);
        by_letter_[first].push_back(k);
    }
}

RewriteSystem RewriteSystem::oriented(const std::vector<Polynomial>& polys) {
    RewriteSystem rs;
    for (const auto& p : polys) {
        if (p.empty()) continue;
        if (p.begin()->first.is_one()) throw std::invalid_argument("rule with constant lead");
        rs.rules_.push_back(to_rule(monic(p)));
    }
    rs.index();
    return rs;
}

RewriteSystem RewriteSystem::complete(const std::vector<Polynomial>& generators, std::size_t max_basis) {
    std::vector<Polynomial> basis;
    struct Pair {
        Monomial lcm;
        std::size_t i, j;
        bool operator<(const Pair& o) const {
            int c = grevlex_compare(lcm, o.lcm);
            if (c != 0) return c < 0;
            return std::tie(i, j) < std::tie(o.i, o.j);
        }
    };
    std::set<Pair> pairs;
    auto insert = [&](Polynomial p) {
        p = monic(normal_form(std::move(p), basis));
        if (p.empty()) return;
        if (p.begin()->first.is_one()) throw std::invalid_argument("relations generate the unit ideal");
        std::size_t n = basis.size();
        for (std::size_t k = 0; k < n; ++k) {
            const Monomial& a = basis[k].begin()->first;
            const Monomial& b = p.begin()->first;
            if (coprime(a, b)) continue;  // product criterion
            pairs.insert(Pair{lcm(a, b), k, n});
        }
        basis.push_back(std::move(p));
        if (basis.size() > max_basis) throw BudgetExceeded("Groebner basis exceeds size budget");
    };
    for (const auto& g : generators) insert(g);
    while (!pairs.empty()) {
        Pair pr = *pairs.begin();
        pairs.erase(pairs.begin());
        // Chain criterion: skip when some third lead divides the lcm and its pairs are pending or done.
        bool redundant = false;
        for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!basis[k].begin()->first.divides(pr.lcm)) continue;
            auto pending = [&](std::size_t a, std::size_t b) {
                if (a > b) std::swap(a, b);
                const Monomial l = lcm(basis[a].begin()->first, basis[b].begin()->first);
                return pairs.count(Pair{l, a, b}) > 0;
            };
            if (!pending(pr.i, k) && !pending(pr.j, k)) redundant = true;
        }
        if (redundant) continue;
        insert(s_polynomial(basis[pr.i], basis[pr.j]));
    }
    // Minimal then reduced basis.
    std::vector<Polynomial> minimal;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const Monomial& lk = basis[k].begin()->first;
        bool drop = false;
        for (std::size_t j = 0; j < basis.size() && !drop; ++j) {
            if (j == k) continue;
            const Monomial& lj = basis[j].begin()->first;
            if (lj.divides(lk) && (lj != lk || j < k)) drop = true;
        }
        if (!drop) minimal.push_back(basis[k]);
    }
    std::vector<Polynomial> reduced;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != k) others.push_back(minimal[j]);
        Polynomial lead;
        lead.emplace(minimal[k].begin()->first, GaussianRational(1));
        Polynomial tail = minimal[k];
        tail.erase(tail.begin());
        Polynomial r = normal_form(tail, others);
        for (auto& [m, c] : r) lead.emplace(m, c);
        reduced.push_back(std::move(lead));
    }
    std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
        return grevlex_compare(a.begin()->first, b.begin()->first) < 0;
    });
    return oriented(reduced);
}

RewriteSystem RewriteSystem::disjoint_union(const RewriteSystem& a, const RewriteSystem& b, int b_shift) {
    RewriteSystem rs = a;
    for (const Rule& r : b.rules_) {
        Rule s{r.lead.shifted(b_shift), {}};
        for (const auto& [m, c] : r.tail) s.tail.emplace_back(m.shifted(b_shift), c);
        rs.rules_.push_back(std::move(s));
    }
    rs.index();
    return rs;
}

const RewriteSystem::Rule* RewriteSystem::find_rule(const Monomial& m, bool last) const {
    const Rule* hit = nullptr;
    for (const auto& f : m.factors()) {
        if (f.letter >= by_letter_.size()) break;
        for (std::size_t k : by_letter_[f.letter]) {
            if (!rules_[k].lead.divides(m)) continue;
            if (!last) return &rules_[k];
            if (!hit || &rules_[k] > hit) hit = &rules_[k];
        }
    }
    return hit;
}

bool RewriteSystem::is_normal(const Monomial& m) const { return find_rule(m, false) == nullptr; }

Element RewriteSystem::reduce(const Element& a, ReduceOrder order, std::size_t budget) const {
    if (rules_.empty()) return a;
    std::size_t steps = 0;
    auto tick = [&] {
        if (++steps > budget) throw BudgetExceeded("rewrite step budget exceeded");
    };
    if (order == ReduceOrder::LargestFirst) {
        std::map<Monomial, Coefficient, GrevlexGreater> todo(a.terms().begin(), a.terms().end());
        Element out;
        while (!todo.empty()) {
            auto node = todo.extract(todo.begin());
            Coefficient& c = node.mapped();
            if (c.is_zero()) continue;
            const Monomial& m = node.key();
            const Rule* r = find_rule(m, false);
            if (!r) {
                out.add(m, c);
                continue;
            }
            tick();
            Monomial cof = r->lead.cofactor(m);
            for (const auto& [tm, tc] : r->tail) {
                Coefficient d = c;
                d *= -tc;
                todo[cof * tm] += d;
            }
        }
        return out;
    }
    Element cur = a;
    for (;;) {
        auto terms = cur.sorted_terms();
        bool changed = false;
        for (const auto& [m, c] : terms) {
            const Rule* r = find_rule(m, true);
            if (!r) continue;
            tick();
            Monomial cof = r->lead.cofactor(m);
            cur.add(m, -c);
            for (const auto& [tm, tc] : r->tail) {
                Coefficient d = c;
                d *= -tc;
                cur.add(cof * tm, d);
            }
            changed = true;
            break;
        }
        if (!changed) return cur;
    }
}

}  // namespace thetaq
