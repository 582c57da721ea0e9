#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace thetaq {

/// Index of a letter (generator, adjoint generator, or central symbol) inside an AlgebraSpec.
using LetterId = std::uint16_t;

/// A classical (commutative) monomial: letter -> positive exponent, sorted by letter.
class Monomial {
public:
    struct Factor {
        LetterId letter;
        std::uint16_t exp;
        friend auto operator<=>(const Factor&, const Factor&) = default;
    };

    Monomial() = default;
    Monomial(std::initializer_list<Factor> factors);
    static Monomial letter(LetterId id, std::uint16_t exp = 1);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    unsigned degree() const;
    std::uint16_t exponent(LetterId id) const;

    /// Letters repeated by multiplicity in ascending letter order.
    std::vector<LetterId> word() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    bool divides(const Monomial& m) const;
    /// m / *this; precondition divides(m).
    Monomial cofactor(const Monomial& m) const;
    /// Lowest common multiple.
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend bool coprime(const Monomial& a, const Monomial& b);

    /// Adds `shift` to every letter id.
    Monomial shifted(int shift) const;
    /// Keeps only letters in [from, to), re-based at `from`.
    Monomial restricted(LetterId from, LetterId to) const;

    std::size_t hash() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Canonical storage/rendering order: degree, then lexicographic on factors.
    friend bool operator<(const Monomial& a, const Monomial& b);

private:
    std::vector<Factor> factors_;
};

/// Graded reverse lexicographic order where a smaller letter id is a smaller variable.
/// Returns <0, 0, >0.
int grevlex_compare(const Monomial& a, const Monomial& b);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

}  // namespace thetaq
