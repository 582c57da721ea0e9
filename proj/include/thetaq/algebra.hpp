#pragma once

#include "thetaq/algebra_spec.hpp"

#include <string_view>
#include <vector>

namespace thetaq {

/// exp(pi*i * n^T D m) for the spec's deformation matrix D. Throws on length mismatch.
PhaseExponent bicharacter(const AlgebraSpec& spec, const std::vector<int>& n, const std::vector<int>& m);

/// Twisted product: monomials of weights n, m multiply to bicharacter(n, m) times the
/// classical product. Not reduced.
Element deformed_mul(const AlgebraSpec& spec, const Element& a, const Element& b);
/// Commutative product of the underlying monomials, no twist.
Element classical_mul(const Element& a, const Element& b);
/// Left-to-right deformed product of all factors; the empty product is 1.
Element deformed_product(const AlgebraSpec& spec, const std::vector<Element>& factors);
/// k-fold deformed power.
Element deformed_pow(const AlgebraSpec& spec, const Element& a, unsigned k);

/// Involution: letters to their star images, coefficients conjugated.
Element star(const AlgebraSpec& spec, const Element& a);

/// phi with g h = phi h g in the deformed algebra.
PhaseExponent commutation_phase(const AlgebraSpec& spec, LetterId g, LetterId h);

Element reduce(const AlgebraSpec& spec, const Element& a);

/// Multiplies out every localized central symbol: returns sum_i D^(K-i) c_i for
/// a = sum_i Q^i c_i, symbol by symbol. `clearing` receives the largest K used.
Element clear_denominators(const AlgebraSpec& spec, const Element& a, unsigned* clearing = nullptr);

/// a == b in the localized quotient, assuming each denominator is a non-zerodivisor.
bool eq_mod_ideal(const AlgebraSpec& spec, const Element& a, const Element& b, unsigned* clearing = nullptr);

/// The generator or adjoint named `name` (e.g. "z1", "u12^*") as an element.
Element letter_element(const AlgebraSpec& spec, std::string_view name, std::size_t leg = 0);
Element letter_element(LetterId id);

/// Monomials of exact degree `degree` in `letters` that are normal for the completed rules.
std::vector<Monomial> normal_monomials(const AlgebraSpec& spec, const std::vector<LetterId>& letters,
                                       unsigned degree);

/// Generator and adjoint letters of one leg (central symbols excluded).
std::vector<LetterId> generator_letters(const AlgebraSpec& spec, std::size_t leg = 0);

}  // namespace thetaq
