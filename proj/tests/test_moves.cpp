#include <gtest/gtest.h>

#include "ulink/diagram.hpp"

using namespace ulink;

namespace {

int mu(const LinkDiagram& d) { return trace_components(d).mu; }

}  // namespace

TEST(Moves, R1PlusOnUnknotGivesKink) {
    auto u = parse_diagram("O 1");
    auto sites = enumerate_moves(u, MoveKind::R1Plus);
    ASSERT_FALSE(sites.empty());
    for (const auto& m : sites) {
        auto k = apply_move(u, m);
        EXPECT_EQ(k.crossing_count(), 1);
        EXPECT_EQ(mu(k), 1);
        auto code = canonical_code(k, false);
        EXPECT_TRUE(code == canonical_code(parse_diagram("C(1,2,2,1)"), false) ||
                    code == canonical_code(parse_diagram("C(1,1,2,2)"), false));
    }
}

TEST(Moves, R1MinusUndoesR1Plus) {
    auto d = parse_diagram("C(1,5,2,4) C(3,1,4,6) C(5,3,6,2)");
    for (const auto& m : enumerate_moves(d, MoveKind::R1Plus)) {
        auto k = apply_move(d, m);
        bool back = false;
        for (const auto& r : enumerate_moves(k, MoveKind::R1Minus))
            back |= canonical_code(apply_move(k, r), true) == canonical_code(d, true);
        EXPECT_TRUE(back);
    }
}

TEST(Moves, R2PlusThenR2Minus) {
    for (std::uint64_t s = 1; s <= 30; ++s) {
        auto d = random_diagram(s, 5);
        std::mt19937_64 rng(s);
        auto sites = enumerate_moves(d, MoveKind::R2Plus);
        ASSERT_FALSE(sites.empty());
        auto m = sites[rng() % sites.size()];
        auto e = apply_move(d, m);
        EXPECT_EQ(e.crossing_count(), d.crossing_count() + 2);
        bool back = false;
        for (const auto& r : enumerate_moves(e, MoveKind::R2Minus))
            back |= canonical_code(apply_move(e, r), true) == canonical_code(d, true);
        EXPECT_TRUE(back) << d.to_string();
    }
}

TEST(Moves, R3KeepsCrossingsAndWrithe) {
    int applied = 0;
    for (std::uint64_t s = 1; s <= 200 && applied < 40; ++s) {
        auto d = random_diagram(s, 8);
        for (const auto& m : enumerate_moves(d, MoveKind::R3)) {
            auto e = apply_move(d, m);
            EXPECT_EQ(e.crossing_count(), d.crossing_count());
            EXPECT_EQ(e.writhe(), d.writhe());
            EXPECT_EQ(mu(e), mu(d));
            EXPECT_TRUE(is_planar(e));
            ++applied;
        }
    }
    EXPECT_GT(applied, 0);
}

TEST(Moves, PatternNotFound) {
    auto d = parse_diagram("C(1,5,2,4) C(3,1,4,6) C(5,3,6,2)");
    EXPECT_TRUE(enumerate_moves(d, MoveKind::R1Minus).empty());
    EXPECT_TRUE(enumerate_moves(d, MoveKind::R2Minus).empty());
    MoveSpec bad{MoveKind::R1Minus, {}, {}, 0, false};
    EXPECT_THROW(apply_move(d, bad), DiagramError);
}

TEST(Moves, RandomWalkProperties) {
    std::mt19937_64 rng(11);
    for (std::uint64_t s = 1; s <= 40; ++s) {
        auto d = random_diagram(s, 6);
        for (int t = 0; t < 40; ++t) {
            auto m = random_move(d, rng, 9);
            if (!m) break;
            auto e = apply_move(d, *m);
            EXPECT_EQ(mu(e), mu(d));
            EXPECT_LE(e.crossing_count(), 9);
            EXPECT_TRUE(is_planar(e));
            int dw = e.writhe() - d.writhe();
            if (m->kind == MoveKind::R1Plus || m->kind == MoveKind::R1Minus)
                EXPECT_EQ(std::abs(dw), 1);
            else
                EXPECT_EQ(dw, 0) << to_string(m->kind);
            d = e;
        }
    }
}

TEST(Moves, FacesSatisfyEuler) {
    auto d = parse_diagram("C(4,2,5,1) C(8,6,1,5) C(6,3,7,4) C(2,7,3,8)");
    EXPECT_EQ(static_cast<int>(faces(d).size()), d.crossing_count() + 2);
    EXPECT_TRUE(is_planar(d));
}
