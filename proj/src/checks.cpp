#include <random>

#include "ulink/skein.hpp"

namespace ulink {

OrderReport check_order_independence(const LinkDiagram& d, int b1_contexts, std::uint64_t seed) {
    OrderReport r;
    SkeinOptions opt;
    if (d.crossing_count() >= 2) {
        RingElement base = invariant_b2(d, 0, opt).element;
        for (int x = 0; x < d.crossing_count(); ++x) {
            ++r.b2_sites;
            RingElement f = invariant_b2(d, x, opt).element;
            if (r.pass && !equal(base, f)) {
                r.pass = false;
                r.witness = "B2 site 0 gives " + base.to_string() + ", site " + std::to_string(x) + " gives " + f.to_string();
            }
        }
    }
    {
        RingElement base = invariant_b1(d, std::nullopt, opt).element;
        std::mt19937_64 rng(seed);
        for (int i = 0; i < b1_contexts; ++i) {
            TraversalContext ctx = random_context(d, rng);
            ++r.b1_contexts;
            RingElement f = invariant_b1(d, ctx, opt).element;
            if (r.pass && !equal(base, f)) {
                r.pass = false;
                r.witness = "B1 canonical context gives " + base.to_string() + ", sampled context " +
                            std::to_string(i) + " gives " + f.to_string();
            }
        }
    }
    return r;
}

int ReidemeisterReport::failures() const {
    int k = 0;
    for (const auto& m : moves)
        if (!m.ok()) ++k;
    return k;
}

namespace {

struct Values {
    RingElement b1, b2, f, F;
    int w = 0;
    LaurentPoly jones;
};

Values evaluate(const LinkDiagram& d) {
    Values v;
    v.b1 = invariant_b1(d).element;
    v.b2 = invariant_b2(d).element;
    WritheInvariant bw = invariant_b1_writhe(d);
    v.f = bw.f;
    v.F = bw.F;
    v.w = bw.stats.w;
    v.jones = jones(d);
    return v;
}

}  // namespace

ReidemeisterReport check_reidemeister(const LinkDiagram& d, int trials, std::uint64_t seed, int max_crossings) {
    ReidemeisterReport r;
    std::mt19937_64 rng(seed);
    LinkDiagram cur = d;
    Values before = evaluate(cur);
    for (int t = 0; t < trials; ++t) {
        auto m = random_move(cur, rng, max_crossings);
        if (!m) break;
        LinkDiagram next = apply_move(cur, *m);
        Values after = evaluate(next);
        MoveOutcome o;
        o.kind = m->kind;
        o.c_before = cur.crossing_count();
        o.c_after = next.crossing_count();
        o.b1 = equal(before.b1, after.b1);
        o.b2 = equal(before.b2, after.b2);
        o.b1w_F = equal(before.F, after.F);
        o.jones = before.jones == after.jones;
        const int dw = after.w - before.w;
        if (m->kind == MoveKind::R1Plus || m->kind == MoveKind::R1Minus) {
            o.b1w_f = (dw == 1 || dw == -1) &&
                      equal(after.f, RingElement::gen(Presentation::B1A, Gen::A, dw) * before.f);
        } else {
            o.b1w_f = dw == 0 && equal(before.f, after.f);
        }
        r.moves.push_back(o);
        cur = std::move(next);
        before = std::move(after);
    }
    return r;
}

}  // namespace ulink
