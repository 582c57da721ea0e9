#pragma once

#include "thetaq/algebra.hpp"
#include "thetaq/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace thetaq {

/// A deformed *-algebra with coalgebra tables on its generators.
struct HopfSpec {
    AlgebraSpec base;
    AlgebraSpec square;                    // base ⊗ base with block-diagonal deformation
    std::vector<Element> coproduct;        // per generator, in `square`
    std::vector<GaussianRational> counit;  // per generator
    std::vector<Element> antipode;         // per generator, in `base`
    std::vector<Element> antipode_adjoint; // per generator, image of its adjoint
};

/// C(SU(3)_theta): generators u_ij declared column by column, weights (a_i, b_j),
/// deformation theta ⊕ (-theta) with theta = [[0,-t],[t,0]], row and column unitarity.
/// torus_rank 0 drops the grading (classical, undeformed); otherwise it must be 4.
HopfSpec build_su3_theta(const std::string& theta = "theta", std::size_t torus_rank = 4);

/// Same Hopf algebra with the deformation parameters rewritten through `bindings`.
HopfSpec substitute(const HopfSpec& h, const Bindings& bindings);

/// Letter id of u_ij (1-based), optionally its adjoint, inside leg `leg` of `spec`.
LetterId su3_letter(const AlgebraSpec& spec, int i, int j, bool adjoint = false, std::size_t leg = 0);
Element su3_u(const AlgebraSpec& spec, int i, int j, bool adjoint = false, std::size_t leg = 0);

/// Inverse of the twist picked up when a classical monomial is written as the
/// deformed product of its letters in ascending letter order.
PhaseExponent ordering_phase(const AlgebraSpec& spec, const Monomial& m);

/// Extends a letter map to an algebra map (src, ×) -> (dst, ×). `image` is called on src letters.
Element extend_multiplicatively(const AlgebraSpec& src, const AlgebraSpec& dst, const Element& a,
                                const std::function<Element(LetterId)>& image);

/// Monomial-wise map of a tensor element: leg k of each monomial goes through maps[k]
/// (leg-local letter ids in, dst element out) and the images are multiplied in dst.
using LegMap = std::function<Element(const Monomial&)>;
Element map_legs(const AlgebraSpec& src, const Element& a, const AlgebraSpec& dst, const std::vector<LegMap>& maps);

/// Leg map that places a leg-local monomial at letter offset `shift` of the target.
LegMap place_at(LetterId shift);

Element coproduct(const HopfSpec& h, const Element& a);
Coefficient counit(const HopfSpec& h, const Element& a);
/// Anti-multiplicative extension of the antipode table.
Element antipode(const HopfSpec& h, const Element& a);

struct RelationEntry {
    LetterId lhs_first, lhs_second;  // lhs_first * lhs_second = phase * lhs_second * lhs_first
    PhaseExponent phase;
};

/// All unordered generator pairs, oriented so the phase exponent is non-negative
/// (first generator first when the pair commutes), sorted by the pair's index order.
std::vector<RelationEntry> derive_relation_table(const HopfSpec& h);

/// "u11*u12 = exp(2*pi*i*theta) u12*u11" / "u11*u22 = u22*u11".
std::string format_relation(const AlgebraSpec& spec, const RelationEntry& r);
/// Phase in relation style: "exp(2*pi*i*theta)", "exp(-4*pi*i*theta)"; multi-term forms
/// fall back to "exp(pi*i*(...))"; the identity renders as "1".
std::string format_relation_phase(const PhaseExponent& p);

struct RelationDiff {
    std::size_t total = 0, matched = 0;
    std::vector<std::string> mismatches;  // reference line + derived phase
};

/// Compares reference lines (format of format_relation) with phases derived in the same
/// orientation. Both sides go through `bindings` first.
RelationDiff diff_relation_table(const HopfSpec& h, const std::string& reference_text, const Bindings& bindings = {});

/// Reference relation table shipped with the library.
const std::string& su3_reference_relations();

/// Low-degree Haar functional: mu(1) = 1, mu(u) = mu(u*) = 0, mu(u_ij u_kl^*) = delta_ik delta_jl / 3.
/// Throws std::domain_error on monomials beyond one generator and one adjoint factor.
Coefficient haar_low_degree(const HopfSpec& h, const Element& a);

/// Coassociativity and counit on all u-monomials up to `max_degree`, antipode sums on all (i,j),
/// homomorphism of the coproduct into the twisted square.
CheckReport check_hopf_axioms(const HopfSpec& h, unsigned max_degree = 3);
/// (id⊗mu)Δ = mu(.)1 = (mu⊗id)Δ and mu∘S = mu on balanced degree-(1,1) monomials.
CheckReport check_unimodularity_low_degree(const HopfSpec& h);

/// Square of h with the classical (untwisted) product, for negative controls.
AlgebraSpec untwisted_square(const HopfSpec& h);

}  // namespace thetaq
