#pragma once

// The SU(3)_theta fibration over the coinvariants of S^5 x S^5: the element w,
// orthonormal frames, the projections they define and their ranks.

#include "thetaq/coaction.hpp"

#include <string>
#include <vector>

namespace thetaq {

/// Constrained S^5 x S^5 coaction on the target localized at Q = (1 - w w^*)^{-1}.
struct Bundle {
    CoactionSpec coaction;  // coaction.target carries the central symbol Q
    Bindings parameters;    // tp_jk in terms of theta and `lambda`
    std::string lambda;
    LetterId q = 0;
    Element w, w_star;
    Element pairing;        // z1^* z4 + z2^* z5 + z3^* z6
    Coefficient mu;         // pairing = mu * w^*

    const AlgebraSpec& algebra() const { return coaction.target; }
};

/// Derives the S^5 x S^5 constraints, names the free target parameter `lambda`
/// and localizes at 1 - w w^*. `extra` then binds any remaining parameter, e.g. lambda1 = 0.
Bundle build_bundle(const HopfSpec& h, const std::string& lambda = "lambda1", const Bindings& extra = {});

/// w = z1 z4^* + z2 z5^* + z3 z6^* (deformed products) in a six-generator algebra.
Element build_w(const AlgebraSpec& a);

/// z_j w = exp(-2 pi i lambda1) w z_j and z_j w^* = exp(2 pi i lambda1) w^* z_j for j = 1..6,
/// w w^* central against all normal monomials up to `central_degree`, and whether w is central.
CheckReport check_w_relations(const Bundle& b, unsigned central_degree = 5);

enum class Normalizer {
    Corrected,     // Z2 carries N with N^2 = Q
    PaperLiteral,  // Z2 carries Q itself
};

/// Column vector of algebra elements. The true entries are entries[k] * N^n_power * c with
/// N^2 = Q and c^2 = c2; neither N nor c is ever formed.
struct FrameVector {
    std::vector<Element> entries;
    unsigned n_power = 0;
    Rational c2 = 1;
};

struct FundamentalFrames {
    FrameVector z1, z2, w1, w2;
};

FundamentalFrames build_fundamental_frames(const Bundle& b, Normalizer n = Normalizer::Corrected);

/// sum_k U_k^* V_k without the N and c factors.
Element raw_pairing(const Bundle& b, const FrameVector& u, const FrameVector& v);

/// U_a^* U_b = delta_ab in the localized quotient for every pair of `frames`.
CheckReport check_gram(const Bundle& b, const std::vector<FrameVector>& frames, const std::string& label);

struct ProjectionMatrix {
    std::vector<std::vector<Element>> entries;
    std::vector<FrameVector> frames;  // p = sum U U^*, empty when given entrywise

    std::size_t size() const { return entries.size(); }
};

/// sum over frames of U U^* Q^n_power c2.
ProjectionMatrix build_projection(const Bundle& b, const std::vector<FrameVector>& frames);
ProjectionMatrix identity_projection(std::size_t n);

/// p^* = p and p^2 = p modulo the sphere rules after clearing powers of 1 - w w^*.
/// Matrices larger than `direct_limit` are squared as U (U^* U) U^*.
CheckReport check_projection(const Bundle& b, const ProjectionMatrix& p, const std::string& label,
                             std::size_t direct_limit = 3);

/// Trace of p; a scalar when the trace is a constant in the localized quotient.
Element chern0(const Bundle& b, const ProjectionMatrix& p);

/// c_{p,s}^2 = C(n, p-1) C(m, s-1) for 1 <= p <= n+1, 1 <= s <= m+1.
Rational sym_normalizer_squared(unsigned n, unsigned m, unsigned p, unsigned s);

/// U_{p,s} = Sym(Z1^(n-p+1) ⊗ Z2^(p-1)) ⊗ Sym(W1^(m-s+1) ⊗ W2^(s-1)) c_{p,s}, p, s from 1.
std::vector<FrameVector> build_sym_frame(const Bundle& b, const FundamentalFrames& f, unsigned n, unsigned m);

/// (n+1)(m+1)(n+m+2)/2.
long irrep_dimension(long n, long m);

}  // namespace thetaq
