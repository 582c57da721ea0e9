#pragma once

#include "thetaq/element.hpp"
#include "thetaq/monomial.hpp"
#include "thetaq/rational.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

namespace thetaq {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Commutative polynomial over Q(i), terms kept in grevlex-descending order.
using Polynomial = std::map<Monomial, GaussianRational, GrevlexGreater>;

/// Element with scalar coefficients -> Polynomial. Throws if a coefficient carries a phase.
Polynomial to_polynomial(const Element& e);
Element to_element(const Polynomial& p);

enum class ReduceOrder {
    LargestFirst,   // grevlex-largest term first, first matching rule
    SmallestFirst,  // canonical-smallest reducible term first, last matching rule
};

/// Rewriting with monic rules lead -> -(tail).
class RewriteSystem {
public:
    struct Rule {
        Monomial lead;
        std::vector<std::pair<Monomial, GaussianRational>> tail;  // lead + tail = 0
    };

    RewriteSystem() = default;

    /// Uses the given polynomials verbatim (made monic), no completion.
    static RewriteSystem oriented(const std::vector<Polynomial>& polys);
    /// Reduced Groebner basis of the ideal spanned by `generators`.
    static RewriteSystem complete(const std::vector<Polynomial>& generators, std::size_t max_basis = 4096);
    /// Union of two systems in disjoint letters; `b` is shifted by `b_shift`.
    static RewriteSystem disjoint_union(const RewriteSystem& a, const RewriteSystem& b, int b_shift);

    const std::vector<Rule>& rules() const { return rules_; }
    bool empty() const { return rules_.empty(); }

    /// Normal form; throws BudgetExceeded after `budget` rewrite steps.
    Element reduce(const Element& a, ReduceOrder order = ReduceOrder::LargestFirst,
                   std::size_t budget = 50'000'000) const;
    bool is_normal(const Monomial& m) const;

private:
    const Rule* find_rule(const Monomial& m, bool last) const;
    void index();

    std::vector<Rule> rules_;
    std::vector<std::vector<std::size_t>> by_letter_;  // smallest lead letter -> rule ids
};

}  // namespace thetaq
