#include <gtest/gtest.h>

#include "ulink/census.hpp"
#include "ulink/oracle.hpp"
#include "ulink/skein.hpp"

using namespace ulink;

namespace {

const char* kTrefoil = "C(1,5,2,4) C(3,1,4,6) C(5,3,6,2)";

LinkDiagram D(const char* s) { return parse_diagram(s); }

// Bracket by recursive smoothing; loops come from trace_components.
LaurentPoly bracket_by_smoothing(const LinkDiagram& d) {
    if (d.crossing_count() == 0) {
        auto delta = LaurentPoly::monomial(-1, 2, "A") + LaurentPoly::monomial(-1, -2, "A");
        return delta.pow(trace_components(d).mu - 1);
    }
    return LaurentPoly::monomial(1, 1, "A") * bracket_by_smoothing(smooth(d, 0, Smoothing::I)) +
           LaurentPoly::monomial(1, -1, "A") * bracket_by_smoothing(smooth(d, 0, Smoothing::II));
}

}  // namespace

TEST(Bracket, SmallCases) {
    EXPECT_EQ(bracket_state_sum(D("O 1")).to_string(), "1");
    EXPECT_EQ(bracket_state_sum(D("C(1,1,2,2)")).to_string(), "-A^3");
    EXPECT_EQ(bracket_state_sum(D("C(1,2,2,1)")).to_string(), "-A^-3");
}

TEST(Bracket, MirrorInvertsA) {
    auto t = D(kTrefoil);
    EXPECT_EQ(bracket_state_sum(mirror(t)), bracket_state_sum(t).scale_exponents(-1));
}

TEST(Bracket, SerialMatchesParallel) {
    for (std::uint64_t s = 1; s <= 40; ++s) {
        auto d = random_diagram(s, 10);
        EXPECT_EQ(bracket_state_sum(d), bracket_state_sum_serial(d));
    }
}

TEST(Bracket, LoopCountMatchesComponentTracing) {
    for (std::uint64_t s = 1; s <= 60; ++s) {
        auto d = random_diagram(s, 7);
        EXPECT_EQ(bracket_state_sum(d), bracket_by_smoothing(d)) << d.to_string();
    }
}

TEST(Bracket, Cap) {
    EXPECT_THROW(bracket_state_sum(D(kTrefoil), 2), CapError);
    EXPECT_THROW(q_oracle(D(kTrefoil), 2), CapError);
}

TEST(JonesOracle, KinkAndHopf) {
    EXPECT_EQ(jones_from_bracket(D("C(1,1,2,2)")).to_string(), "1");
    EXPECT_EQ(jones_from_bracket(D("O 1")).to_string(), "1");
    auto hopf = D("C(1,3,2,4) C(3,1,4,2)");
    EXPECT_EQ(jones_from_bracket(hopf), jones(hopf));
}

TEST(JonesOracle, InvariantUnderMoves) {
    std::mt19937_64 rng(8);
    for (std::uint64_t s = 1; s <= 40; ++s) {
        auto d = random_diagram(s, 7);
        auto br = bracket_state_sum(d);
        auto m = random_move(d, rng, 9);
        ASSERT_TRUE(m);
        auto e = apply_move(d, *m);
        EXPECT_EQ(jones_from_bracket(d), jones_from_bracket(e));
        if (m->kind == MoveKind::R1Plus || m->kind == MoveKind::R1Minus) {
            int dw = e.writhe() - d.writhe();
            EXPECT_EQ(bracket_state_sum(e), br * LaurentPoly::monomial(-1, 3 * dw, "A"));
        } else {
            EXPECT_EQ(bracket_state_sum(e), br);
        }
    }
}

TEST(QOracle, Values) {
    EXPECT_EQ(q_oracle(D("O 1")).to_string(), "1");
    EXPECT_EQ(q_oracle(D(kTrefoil)).to_string(), "2*x^2 + 2*x - 3");
    EXPECT_EQ(q_oracle(D("C(4,2,5,1) C(8,6,1,5) C(6,3,7,4) C(2,7,3,8)")).to_string(), "2*x^3 + 4*x^2 - 2*x - 3");
}

TEST(QOracle, MirrorAndMoves) {
    for (const auto& e : load_census(default_census_path()))
        EXPECT_EQ(q_oracle(mirror(e.diagram)), q_oracle(e.diagram)) << e.name;
    std::mt19937_64 rng(12);
    for (std::uint64_t s = 1; s <= 40; ++s) {
        auto d = random_diagram(s, 7);
        auto m = random_move(d, rng, 9);
        ASSERT_TRUE(m);
        EXPECT_EQ(q_oracle(apply_move(d, *m)), q_oracle(d));
    }
}

TEST(QOracle, ContextFree) {
    // The oracle always starts from the canonical context; relabeling must not matter.
    for (std::uint64_t s = 1; s <= 30; ++s) {
        auto d = random_diagram(s, 7);
        EXPECT_EQ(q_oracle(canonical(d, false)), q_oracle(d));
    }
}
