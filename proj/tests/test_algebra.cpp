#include "thetaq/algebra.hpp"
#include "thetaq/coaction.hpp"
#include "thetaq/groebner.hpp"

#include <gtest/gtest.h>

namespace thetaq {
namespace {

AlgebraSpec sphere() { return build_sphere_product("S5", 1, symbolic_skew(3, "theta")); }

Element x(const AlgebraSpec& a, const char* name) { return letter_element(a, name); }

TEST(Monomial, GrevlexOrder) {
    Monomial x2 = Monomial::letter(0, 2), xy{{0, 1}, {1, 1}}, y2 = Monomial::letter(1, 2), x3 = Monomial::letter(0, 3);
    EXPECT_GT(grevlex_compare(y2, xy), 0);
    EXPECT_GT(grevlex_compare(xy, x2), 0);
    EXPECT_GT(grevlex_compare(x3, y2), 0);
    EXPECT_EQ(grevlex_compare(xy, xy), 0);
}

TEST(Monomial, DivisionAndLcm) {
    Monomial a{{0, 2}, {3, 1}}, b{{0, 1}, {2, 2}};
    Monomial l = lcm(a, b);
    EXPECT_EQ(l, (Monomial{{0, 2}, {2, 2}, {3, 1}}));
    EXPECT_TRUE(a.divides(l));
    EXPECT_EQ(a * a.cofactor(l), l);
    EXPECT_FALSE(coprime(a, b));
    EXPECT_EQ(a.shifted(2).restricted(2, 10), a);
}

TEST(Groebner, CompletesSmallCommutativeIdeal) {
    // x = letter 0 < y = letter 1; sympy: basis {y^2 - x, x y - 1, x^2 - y}.
    Polynomial f1{{Monomial::letter(0, 2), 1}, {Monomial::letter(1), -1}};
    Polynomial f2{{Monomial{{0, 1}, {1, 1}}, 1}, {Monomial(), -1}};
    RewriteSystem rs = RewriteSystem::complete({f1, f2});
    EXPECT_EQ(rs.rules().size(), 3u);
    Element e = Element::monomial(Monomial::letter(1, 3)) + Element::monomial(Monomial::letter(0, 5));
    Element want = Element::monomial(Monomial::letter(1)) + Element(1);
    EXPECT_EQ(rs.reduce(e), want);
    EXPECT_EQ(rs.reduce(e, ReduceOrder::SmallestFirst), want);
}

TEST(Groebner, BudgetExceededThrows) {
    Polynomial f{{Monomial::letter(0, 2), 1}, {Monomial::letter(1), -1}};
    RewriteSystem rs = RewriteSystem::oriented({f});
    EXPECT_THROW(rs.reduce(Element::monomial(Monomial::letter(0, 64)), ReduceOrder::LargestFirst, 3), BudgetExceeded);
}

TEST(AlgebraSpec, SphereRelationsAndLetters) {
    AlgebraSpec a = sphere();
    EXPECT_EQ(a.letters().size(), 6u);
    EXPECT_EQ(a.letter(a.letter_id("z1")).star, a.letter_id("z1^*"));
    Element s;
    for (const char* z : {"z1", "z2", "z3"}) s += deformed_mul(a, x(a, z), star(a, x(a, z)));
    EXPECT_EQ(reduce(a, s), Element(1));
}

TEST(AlgebraSpec, CommutationPhaseOfGenerators) {
    AlgebraSpec a = sphere();
    // z1 z2 = exp(2 pi i theta12) z2 z1.
    EXPECT_EQ(commutation_phase(a, a.letter_id("z1"), a.letter_id("z2")), PhaseExponent::of("theta12", 2));
    EXPECT_EQ(commutation_phase(a, a.letter_id("z1"), a.letter_id("z2^*")), PhaseExponent::of("theta12", -2));
    EXPECT_TRUE(commutation_phase(a, a.letter_id("z1"), a.letter_id("z1^*")).is_generically_trivial());
}

TEST(AlgebraSpec, TextRoundTrip) {
    AlgebraSpec a = sphere();
    AlgebraSpec b = AlgebraSpec::parse(a.to_text());
    EXPECT_EQ(b.to_text(), a.to_text());
    Element e = deformed_mul(a, x(a, "z1"), x(a, "z2^*"));
    EXPECT_EQ(parse_element(a, render(a, e)), e);
}

TEST(AlgebraSpec, RejectsNonSkewDeformation) {
    SkewMatrix m = symbolic_skew(3, "theta");
    m[1][0] = LinearForm::param("theta12");
    EXPECT_THROW(require_skew(m), SpecError);
}

TEST(AlgebraSpec, ClassicalLimitIsCommutative) {
    AlgebraSpec a = sphere().substitute({{"theta12", LinearForm()}, {"theta13", LinearForm()}, {"theta23", LinearForm()}});
    for (LetterId g : generator_letters(a))
        for (LetterId h : generator_letters(a)) {
            Element eg = letter_element(g), eh = letter_element(h);
            EXPECT_EQ(deformed_mul(a, eg, eh), classical_mul(eg, eh));
        }
}

TEST(Localization, CentralSymbolInvertsDenominator) {
    AlgebraSpec a = build_sphere_product("S5xS5", 2, zero_skew(6));
    LetterId q = a.add_central("Q");
    a.finalize();
    Element w;
    for (int j = 1; j <= 3; ++j)
        w += deformed_mul(a, letter_element(a, "z" + std::to_string(j)), letter_element(a, "z" + std::to_string(j + 3) + "^*"));
    Element d = reduce(a, Element(1) - deformed_mul(a, w, star(a, w)));
    a.localize(q, d);
    unsigned k = 0;
    EXPECT_TRUE(eq_mod_ideal(a, deformed_mul(a, letter_element(q), d), Element(1), &k));
    EXPECT_EQ(k, 1u);
    EXPECT_FALSE(eq_mod_ideal(a, letter_element(q), Element(1)));
    EXPECT_EQ(clear_denominators(a, Element(3)), Element(3));
}

TEST(Localization, NonCentralDenominatorRejected) {
    AlgebraSpec a = sphere();
    LetterId q = a.add_central("Q");
    a.finalize();
    EXPECT_THROW(a.localize(q, Element(1) - x(a, "z1")), SpecError);
}

TEST(NormalMonomials, CountOnTheSphere) {
    AlgebraSpec a = sphere();
    // Degree-2 monomials in six letters minus the leading term z3 z3^*.
    EXPECT_EQ(normal_monomials(a, generator_letters(a), 2).size(), 20u);
}

}  // namespace
}  // namespace thetaq
