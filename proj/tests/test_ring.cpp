#include <gtest/gtest.h>

#include "ulink/ring.hpp"

using namespace ulink;

namespace {

RingElement E(const char* s, Presentation p = Presentation::B1) { return parse_element(s, p); }
std::string nf(const char* s, Presentation p = Presentation::B1) { return normalize(E(s, p)).to_string(); }

}  // namespace

TEST(Arithmetic, Basics) {
    auto x = E("a*v_1 - e*v_2");
    EXPECT_EQ(x + RingElement(Presentation::B1), x);
    EXPECT_EQ((E("a*v_1") * E("e")).to_string(), "e*a*v_1");
    EXPECT_EQ(((E("v_1") + E("v_2")) * E("a")).to_string(), "a*v_1 + a*v_2");
    EXPECT_THROW(E("v_1") * E("v_2"), RingError);
    EXPECT_THROW(E("v_1") + E("v_1", Presentation::B2), RingError);
}

TEST(Arithmetic, Rendering) {
    EXPECT_EQ(E("-e'*v_2 - a'*v_1 - e*a'*v_1").to_string(), "- e'*v_2 - a'*v_1 - e*a'*v_1");
    EXPECT_EQ(E("b*v_1").to_string(), "e*a*v_1");
    EXPECT_EQ(E("b*v_1", Presentation::B2).to_string(), "b*v_1");
    EXPECT_EQ(E("0").to_string(), "0");
    EXPECT_THROW(E("b^2*x"), RingError);
    EXPECT_THROW(E("A*v_1"), RingError);
}

TEST(Normalize, SpecExamples) {
    EXPECT_EQ(nf("e^2*v_1"), "v_1");
    EXPECT_EQ(nf("a*v_2"), "- v_1 - e*v_1 - e*a*v_1");
    EXPECT_EQ(nf("e'*a*v_1"), "e*a*v_1");
    EXPECT_TRUE(equal(E("v_2", Presentation::B2), E("a'*v_1 + b'*v_1", Presentation::B2)));
}

TEST(Normalize, B2Derived) {
    // (a - b)(a + b - 1) v_1 expands to a^2 v_1 - b^2 v_1 - a v_1 + b v_1.
    auto x = (E("a - b", Presentation::B2) * E("a + b - 1", Presentation::B2)) * E("v_1", Presentation::B2);
    EXPECT_TRUE(normalize(x).is_zero());
    EXPECT_EQ(nf("v_2", Presentation::B2), "a*v_1 + b*v_1");
    EXPECT_EQ(nf("a*b*v_1", Presentation::B2), "v_1 - a*v_1 - b^2*v_1");
}

TEST(Equal, Examples) {
    EXPECT_TRUE(equal(E("e*a*v_1"), E("b*v_1")));
    EXPECT_FALSE(equal(E("v_1"), E("v_2")));
    EXPECT_TRUE(equal(E("b*v_2", Presentation::B2), E("v_1 - a*v_1", Presentation::B2)));
    EXPECT_THROW(equal(E("v_1"), E("v_1", Presentation::B2)), RingError);
}

TEST(Equal, HopfFormsAgree) {
    EXPECT_TRUE(equal(E("-e'*v_2 - a'*v_1 - e*a'*v_1"), E("-e'*v_2 - a*v_1 - e*a*v_1")));
}

TEST(Normalize, ImpliedRelation) {
    // (ee' - 1) a^2 = 0 follows from the rules.
    EXPECT_TRUE(normalize(E("e*e'*a^2*v_3 - a^2*v_3")).is_zero());
    EXPECT_TRUE(normalize(E("e*e'*a^2 - a^2")).is_zero());
}

TEST(Normalize, B1ShapeOfNormalForms) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        auto x = normalize(random_element(Presentation::B1, rng, 6, 6, 4));
        for (const auto& [m, c] : x.terms()) {
            EXPECT_FALSE(m[Gen::a] >= 1 && m[Gen::ap] >= 1);
            EXPECT_FALSE(m[Gen::ep] == 1 && (m[Gen::a] >= 1 || m[Gen::ap] >= 1));
            EXPECT_FALSE(m[Gen::a] >= 1 && m.n >= 2);
            EXPECT_LE(m[Gen::e], 1);
            EXPECT_LE(m[Gen::ep], 1);
        }
        EXPECT_TRUE(is_normal(x));
    }
}

TEST(Rewriting, ConfluenceAndRelations) {
    for (auto p : {Presentation::B1, Presentation::B1A, Presentation::B2}) {
        RewriteHealth h = check_rewriting(p, 200, 5, 17);
        EXPECT_TRUE(h.pass()) << to_string(p) << " " << h.witness;
    }
}

TEST(Rewriting, B1AKinkRule) {
    auto p = Presentation::B1A;
    EXPECT_EQ(nf("a*v_2", p), "- A*v_1 - e*a*v_1 - e*A^-1*v_1");
}

TEST(Json, RoundTrip) {
    std::mt19937_64 rng(9);
    for (auto p : {Presentation::B1, Presentation::B1A, Presentation::B2}) {
        for (int i = 0; i < 50; ++i) {
            auto x = normalize(random_element(p, rng, 5, 4, 4));
            EXPECT_EQ(element_from_json(to_json(x), p), x);
            EXPECT_EQ(parse_element(x.to_string(), p), x);
        }
    }
    auto big = E("v_1") * mpz_class("123456789012345678901234567890");
    EXPECT_EQ(element_from_json(to_json(big), Presentation::B1), big);
    EXPECT_THROW(element_from_json("{", Presentation::B1), RingError);
}
