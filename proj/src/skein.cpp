#include "ulink/skein.hpp"

#include <unordered_map>

namespace ulink {

namespace {

void check_cap(const LinkDiagram& d, const SkeinOptions& opt) {
    if (d.crossing_count() > opt.max_crossings)
        throw CapError("diagram has " + std::to_string(d.crossing_count()) + " crossings, cap is " +
                       std::to_string(opt.max_crossings));
}

RingElement gen(Presentation p, Gen g, int k = 1) { return RingElement::gen(p, g, k); }

// Resolution at the first bad point of the traversal.
class B1Evaluator {
public:
    B1Evaluator(Presentation p, bool memo) : p_(p), memo_(memo) {}

    RingElement eval(const LinkDiagram& d, const TraversalContext& ctx, bool canonical_ctx) {
        std::string key;
        if (memo_ && canonical_ctx) {
            key = d.exact_code();
            if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        }
        CrossingReport r = classify(d, ctx);
        RingElement out(p_);
        if (!r.first_bad) {
            out = RingElement::v(p_, d.component_count());
            if (p_ == Presentation::B1A) out *= gen(p_, Gen::A, r.writhe);
        } else {
            const int x = *r.first_bad;
            const bool self = d.is_self(x);
            const Gen e = self ? Gen::e : Gen::ep;
            const Gen a = self ? Gen::a : Gen::ap;
            LinkDiagram sw = switch_crossing(d, x);
            LinkDiagram s1 = smooth(d, x, Smoothing::I);
            LinkDiagram s2 = smooth(d, x, Smoothing::II);
            RingElement f_sw = eval(sw, ctx, canonical_ctx);
            RingElement f1 = eval(s1, canonical_context(s1), true);
            RingElement f2 = eval(s2, canonical_context(s2), true);
            out = -(gen(p_, e) * f_sw) - gen(p_, a) * f1 - gen(p_, e) * gen(p_, a) * f2;
            out = normalize(out);
        }
        if (!key.empty()) cache_.emplace(std::move(key), out);
        return out;
    }

private:
    Presentation p_;
    bool memo_;
    std::unordered_map<std::string, RingElement> cache_;
};

// H = a I + b II at the lowest-index crossing, or at a forced site on top.
template <class Value, class Leaf, class Step>
class B2Evaluator {
public:
    B2Evaluator(bool memo, Leaf leaf, Step step) : memo_(memo), leaf_(leaf), step_(step) {}

    Value eval(const LinkDiagram& d, std::optional<int> site = {}) {
        if (d.crossing_count() == 0) return leaf_(d.component_count());
        std::string key;
        if (memo_ && !site) {
            key = d.exact_code();
            if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        }
        const int x = site.value_or(0);
        if (x < 0 || x >= d.crossing_count()) throw DiagramError("invalid crossing index");
        Value f1 = eval(smooth(d, x, Smoothing::I));
        Value f2 = eval(smooth(d, x, Smoothing::II));
        Value out = step_(d.is_self(x), f1, f2);
        if (!key.empty()) cache_.emplace(std::move(key), out);
        return out;
    }

private:
    bool memo_;
    Leaf leaf_;
    Step step_;
    std::unordered_map<std::string, Value> cache_;
};

template <class Value, class Leaf, class Step>
Value resolve_b2(const LinkDiagram& d, std::optional<int> site, bool memo, Leaf leaf, Step step) {
    B2Evaluator<Value, Leaf, Step> ev(memo, leaf, step);
    return ev.eval(d, site);
}

}  // namespace

DiagramStats stats(const LinkDiagram& d, const TraversalContext& ctx) {
    CrossingReport r = classify(d, ctx);
    return {d.crossing_count(), r.bad_count, d.component_count(), r.writhe};
}

InvariantValue invariant_b1(const LinkDiagram& d, const std::optional<TraversalContext>& ctx, const SkeinOptions& opt) {
    check_cap(d, opt);
    TraversalContext c = ctx ? *ctx : canonical_context(d);
    B1Evaluator ev(Presentation::B1, opt.memo);
    return {ev.eval(d, c, !ctx), stats(d, c)};
}

WritheInvariant invariant_b1_writhe(const LinkDiagram& d, const std::optional<TraversalContext>& ctx,
                                    const SkeinOptions& opt) {
    check_cap(d, opt);
    TraversalContext c = ctx ? *ctx : canonical_context(d);
    B1Evaluator ev(Presentation::B1A, opt.memo);
    WritheInvariant out;
    out.f = ev.eval(d, c, !ctx);
    out.stats = stats(d, c);
    out.F = normalize(gen(Presentation::B1A, Gen::A, -out.stats.w) * out.f);
    return out;
}

InvariantValue invariant_b2(const LinkDiagram& d, std::optional<int> first_site, const SkeinOptions& opt) {
    check_cap(d, opt);
    const Presentation p = Presentation::B2;
    auto leaf = [p](int mu) { return normalize(RingElement::v(p, mu)); };
    auto step = [p](bool self, const RingElement& f1, const RingElement& f2) {
        return normalize(gen(p, self ? Gen::a : Gen::ap) * f1 + gen(p, self ? Gen::b : Gen::bp) * f2);
    };
    RingElement f = resolve_b2<RingElement>(d, first_site, opt.memo, leaf, step);
    return {f, stats(d, canonical_context(d))};
}

LaurentPoly invariant_b2_writhe(const LinkDiagram& d, const Homomorphism& h, const SkeinOptions& opt,
                                std::optional<int> first_site) {
    check_cap(d, opt);
    if (!h.b2prime) throw RingError("homomorphism " + h.name + " is not a writhe-modified B2 specialization");
    const LaurentPoly a = h.image(Gen::a), b = h.image(Gen::b);
    const LaurentPoly ap = h.image(Gen::ap), bp = h.image(Gen::bp);
    auto leaf = [&h](int mu) { return h.v(mu); };
    auto step = [&](bool self, const LaurentPoly& f1, const LaurentPoly& f2) {
        return self ? a * f1 + b * f2 : ap * f1 + bp * f2;
    };
    LaurentPoly f = resolve_b2<LaurentPoly>(d, first_site, opt.memo, leaf, step);
    return h.image(Gen::A).pow(d.writhe()) * f;
}

LaurentPoly jones(const LinkDiagram& d, const SkeinOptions& opt) {
    static const Homomorphism h = jones_hom();
    return invariant_b2_writhe(d, h, opt);
}

}  // namespace ulink
