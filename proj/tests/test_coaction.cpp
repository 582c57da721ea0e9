#include "thetaq/bundle.hpp"
#include "thetaq/coaction.hpp"

#include <gtest/gtest.h>

namespace thetaq {
namespace {

LinearForm P(const char* text) { return LinearForm::parse(text); }

class Coaction : public ::testing::Test {
protected:
    static void SetUpTestSuite() {
        h_ = new HopfSpec(build_su3_theta());
        s5_ = new CoactionSpec(build_s5_coaction(*h_, symbolic_skew(3, "theta")));
        s5s5_ = new CoactionSpec(build_s5xs5_coaction(*h_, symbolic_skew(6, "tp")));
    }
    static void TearDownTestSuite() {
        delete s5s5_;
        delete s5_;
        delete h_;
    }
    static HopfSpec* h_;
    static CoactionSpec *s5_, *s5s5_;
};
HopfSpec* Coaction::h_ = nullptr;
CoactionSpec* Coaction::s5_ = nullptr;
CoactionSpec* Coaction::s5s5_ = nullptr;

TEST_F(Coaction, SkewHelpers) {
    SkewMatrix m = symbolic_skew(3, "x");
    EXPECT_EQ(m[0][1], P("x12"));
    EXPECT_EQ(m[1][0], P("-x12"));
    EXPECT_TRUE(m[2][2].is_zero());
    EXPECT_NO_THROW(require_skew(m));
}

TEST_F(Coaction, GeneratorImages) {
    EXPECT_EQ(s5_->map.size(), 3u);
    EXPECT_EQ(render(s5_->tensor, s5_->map[0]).find("u11 ⊗ z1") != std::string::npos, true);
    EXPECT_EQ(s5_->map[0].size(), 3u);
}

TEST_F(Coaction, S5ConstraintsAreThree) {
    ConstraintSet cs = extract_constraints(*s5_);
    EXPECT_TRUE(cs.consistent);
    EXPECT_EQ(cs.to_strings(), (std::vector<std::string>{"theta12 = -theta", "theta13 = theta", "theta23 = -theta"}));
    Bindings sol = cs.solution();
    EXPECT_EQ(sol.at("theta12"), P("-theta"));
}

TEST_F(Coaction, S5SubstitutedCheckPassesAllPairs) {
    CoactionSpec c = substitute(*s5_, extract_constraints(*s5_).solution());
    CheckReport r = check_homomorphism(c);
    EXPECT_EQ(r.items.size(), 36u);
    EXPECT_TRUE(r.pass());
    EXPECT_TRUE(check_equivariance(c).pass());
    EXPECT_TRUE(check_coaction_axioms(c).pass());
}

TEST_F(Coaction, GenericParametersFailWithWitness) {
    CheckReport r = check_homomorphism(*s5_);
    EXPECT_FALSE(r.pass());
    bool found = false;
    for (const auto& it : r.items)
        if (it.name == "(z1, z2)") {
            found = true;
            EXPECT_FALSE(it.pass);
            EXPECT_NE(it.witness.find("theta12"), std::string::npos);
        }
    EXPECT_TRUE(found);
}

TEST_F(Coaction, EverySinglePerturbationFails) {
    Bindings sol = extract_constraints(*s5_).solution();
    for (const auto& [name, value] : sol) {
        for (const LinearForm& bad : {LinearForm::param(name), value + LinearForm(Rational(1, 3)), -value}) {
            Bindings b = sol;
            if (bad == LinearForm::param(name))
                b.erase(name);
            else
                b[name] = bad;
            EXPECT_FALSE(check_homomorphism(substitute(*s5_, b)).pass()) << name << " -> " << bad.to_string();
        }
    }
}

TEST_F(Coaction, S5xS5SystemMatchesReferenceForms) {
    ConstraintSet got = extract_constraints(*s5s5_);
    // theta = -tp12 = tp13 = -tp23 = -tp45 = tp46 = -tp56; tp14 = tp25 = tp36 (lambda1),
    // tp15 = tp26 = tp34 (lambda2), tp16 = tp24 = tp35 (lambda3); lambda1 - lambda2 = lambda3 - lambda1 = theta.
    std::vector<LinearForm> ref = {
        P("tp12 + theta"), P("tp13 - theta"), P("tp23 + theta"), P("tp45 + theta"), P("tp46 - theta"),
        P("tp56 + theta"), P("tp14 - tp25"),  P("tp14 - tp36"),  P("tp15 - tp26"),  P("tp15 - tp34"),
        P("tp16 - tp24"),  P("tp16 - tp35"),  P("tp14 - tp15 - theta"), P("tp16 - tp14 - theta"),
    };
    ConstraintSet want = reduce_constraints(ref, got.variables);
    EXPECT_TRUE(got.consistent);
    EXPECT_EQ(got.rows.size(), 14u);
    EXPECT_EQ(got.rows, want.rows);
    EXPECT_EQ(got.to_strings(), want.to_strings());
}

TEST_F(Coaction, ReduceConstraintsDetectsInconsistency) {
    ConstraintSet cs = reduce_constraints({P("a - b"), P("a - b + 1")}, {"a", "b"});
    EXPECT_FALSE(cs.consistent);
    ConstraintSet even = reduce_constraints({P("a - b"), P("a - b + 2")}, {"a", "b"});
    EXPECT_TRUE(even.consistent);
    EXPECT_EQ(even.rows.size(), 1u);
}

TEST_F(Coaction, TorusRankZeroHasNoConstraints) {
    HopfSpec h0 = build_su3_theta("theta", 0);
    EXPECT_TRUE(extract_constraints(build_s5_coaction(h0, zero_skew(3))).empty());
    EXPECT_THROW(build_s5_coaction(h0, symbolic_skew(3, "theta")), SpecError);
}

TEST_F(Coaction, S5IsCotransitive) {
    CoactionSpec c = substitute(*s5_, extract_constraints(*s5_).solution());
    CoinvariantResult r = coinvariants(c, 3);
    ASSERT_EQ(r.basis.size(), 1u);
    EXPECT_EQ(r.basis[0], Element(1));
    EXPECT_TRUE(r.confirmed[0]);
    for (const auto& b : r.bidegrees) {
        // Only powers of z1 z1^* + z2 z2^* + z3 z3^* survive, and those reduce to 1.
        EXPECT_EQ(b.invariants.size(), b.p == b.q ? 1u : 0u) << b.p << "," << b.q;
        for (const auto& e : b.invariants) EXPECT_TRUE(reduce(c.target, e).is_scalar());
    }
}

TEST_F(Coaction, DegreeZeroIsScalars) {
    CoactionSpec c = substitute(*s5s5_, extract_constraints(*s5s5_).solution());
    CoinvariantResult r = coinvariants(c, 0);
    ASSERT_EQ(r.basis.size(), 1u);
    EXPECT_EQ(r.basis[0], Element(1));
}

TEST_F(Coaction, S5xS5CoinvariantsAreOneWWstar) {
    CoactionSpec c = substitute(*s5s5_, extract_constraints(*s5s5_).solution());
    CoinvariantResult r = coinvariants(c, 2);
    ASSERT_EQ(r.basis.size(), 3u);
    for (bool ok : r.confirmed) EXPECT_TRUE(ok);
    const AlgebraSpec& a = c.target;
    Element w = build_w(a), ws = star(a, w);
    std::vector<Element> expected{Element(1), reduce(a, w), reduce(a, ws)};
    EXPECT_TRUE(in_span(r.basis, expected));
    EXPECT_TRUE(in_span(expected, r.basis));
    EXPECT_EQ(reduce(a, deformed_mul(a, w, ws)), reduce(a, deformed_mul(a, ws, w)));
    EXPECT_EQ(reduce(c.tensor, coact(c, w)), reduce(c.tensor, one_tensor(c, w)));
    EXPECT_TRUE(check_coinvariant_subalgebra(c, r).pass());
}

TEST_F(Coaction, ClassicalMapAgreesOnGenerators) {
    CoactionSpec c = substitute(*s5_, extract_constraints(*s5_).solution());
    for (LetterId l : generator_letters(c.target))
        EXPECT_EQ(coact(c, letter_element(l)), coact_classical(c, letter_element(l))) << c.target.letter(l).name;
}

TEST(Proportional, PhaseTimesScalar) {
    AlgebraSpec a = build_sphere_product("S5", 1, symbolic_skew(3, "theta"));
    Element z = letter_element(a, "z1");
    Coefficient c = Coefficient(PhaseExponent::of("theta12", 2), GaussianRational(3));
    auto k = proportional(z * c, z);
    ASSERT_TRUE(k.has_value());
    EXPECT_EQ(*k, c);
    EXPECT_FALSE(proportional(z + letter_element(a, "z2"), z).has_value());
}

}  // namespace
}  // namespace thetaq
