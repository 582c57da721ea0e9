#pragma once

#include "thetaq/quantumgroup.hpp"
#include "thetaq/report.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace thetaq {

using SkewMatrix = std::vector<std::vector<LinearForm>>;

/// n×n skew matrix with entry (j,k) = prefix + "jk" (1-based) above the diagonal.
SkewMatrix symbolic_skew(std::size_t n, const std::string& prefix);
SkewMatrix zero_skew(std::size_t n);
/// Throws SpecError unless m is square, skew and zero on the diagonal.
void require_skew(const SkewMatrix& m);

/// Normal generators z1..zn (n = 3*spheres) with weights e_j, one sphere rule per block of three:
/// z_{3b+3} z_{3b+3}^* -> 1 - z_{3b+1} z_{3b+1}^* - z_{3b+2} z_{3b+2}^*.
/// torus_rank 0 drops the grading and `theta` must then be empty.
AlgebraSpec build_sphere_product(const std::string& name, std::size_t spheres, const SkewMatrix& theta,
                                 bool graded = true);

/// A linear coaction z -> sum u ⊗ z of a quantum group on a deformed algebra.
struct CoactionSpec {
    HopfSpec hopf;
    AlgebraSpec target;
    AlgebraSpec tensor;                        // hopf.base ⊗ target
    std::vector<Element> map;                  // per target generator, in `tensor`
    std::vector<std::pair<int, int>> slot;     // per target generator: (block, row 0..2)
};

/// δ(z_j) = sum_k u_jk ⊗ z_k on the deformed 5-sphere with matrix `theta_a`.
CoactionSpec build_s5_coaction(const HopfSpec& h, const SkewMatrix& theta_a);
/// Diagonal coaction on two 5-spheres z1..z3, z4..z6 with 6×6 matrix `theta6`.
CoactionSpec build_s5xs5_coaction(const HopfSpec& h, const SkewMatrix& theta6);

/// Same coaction with every deformation parameter rewritten through `bindings`.
CoactionSpec substitute(const CoactionSpec& c, const Bindings& bindings);
/// Same coaction on a target with extra central symbols (e.g. a localized copy of the target).
CoactionSpec with_target(const CoactionSpec& c, const AlgebraSpec& target);

/// Algebra-map extension of the generator table into the twisted tensor product.
Element coact(const CoactionSpec& c, const Element& x);
/// The untwisted linear map: classical products of the generator images.
Element coact_classical(const CoactionSpec& c, const Element& x);
/// x placed in the second leg of the tensor product.
Element one_tensor(const CoactionSpec& c, const Element& x);

/// Compares χ(g,h) δ(gh) with δ(g) × δ(h) on every ordered pair of generators and adjoints.
CheckReport check_homomorphism(const CoactionSpec& c);
/// Every δ(generator) has a single H row weight, and the H column weight of a summand is
/// a function of its target weight.
CheckReport check_equivariance(const CoactionSpec& c);
/// (Δ⊗id)δ = (id⊗δ)δ and (ε⊗id)δ = id on generators, adjoints and all degree-2 monomials.
CheckReport check_coaction_axioms(const CoactionSpec& c);

/// Linear forms required to vanish (constants mod 2), in reduced row echelon form
/// over the rationals with respect to `variables`.
struct ConstraintSet {
    std::vector<std::string> variables;
    std::vector<LinearForm> rows;
    bool consistent = true;

    bool empty() const { return rows.empty(); }
    /// "theta12 = -theta", one per row, in pivot order.
    std::vector<std::string> to_strings() const;
    /// Pivot variable -> minus the rest of its row.
    Bindings solution() const;
};

ConstraintSet reduce_constraints(const std::vector<LinearForm>& forms, const std::vector<std::string>& variables);
/// Pairs every summand of δ(g) × δ(h) with χ(g,h) and collects the exponent differences.
/// Target parameters are ordered first, group parameters last.
ConstraintSet extract_constraints(const CoactionSpec& c);

struct CoinvariantBidegree {
    unsigned p = 0, q = 0;             // unstarred, starred letter counts
    std::vector<Element> invariants;   // free-ring null space of the sl(3) action
    std::size_t oracle_dim = 0;        // fixed space of δ(x) = 1⊗x on the same monomials
    bool oracle_agrees = false;        // same span, not only the same dimension
};

struct CoinvariantResult {
    std::vector<CoinvariantBidegree> bidegrees;
    std::vector<Element> basis;        // reduced modulo the target rules, echelon form
    std::vector<bool> confirmed;       // δ(x) reduces to 1⊗x in the twisted tensor product
};

/// Classical invariants of the infinitesimal sl(3) action, bidegree by bidegree up to
/// total degree `max_degree`, lifted unchanged and confirmed in the deformed algebra.
CoinvariantResult coinvariants(const CoactionSpec& c, unsigned max_degree, bool run_oracle = true);

/// Products of basis elements commute and land in the span of coinvariants of the product degree.
CheckReport check_coinvariant_subalgebra(const CoactionSpec& c, const CoinvariantResult& r);

/// a = coeff * b for a single phase-times-scalar coefficient; returns the coefficient when so.
std::optional<Coefficient> proportional(const Element& a, const Element& b);
/// True when every element of `xs` lies in the Q(i)[phases]-span of `basis` (phase by phase).
bool in_span(const std::vector<Element>& basis, const std::vector<Element>& xs);

}  // namespace thetaq
