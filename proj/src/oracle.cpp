#include "ulink/oracle.hpp"

#include <omp.h>

#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "ulink/skein.hpp"

namespace ulink {

namespace {

void check_cap(const LinkDiagram& d, int cap) {
    if (d.crossing_count() > cap)
        throw CapError("oracle refuses " + std::to_string(d.crossing_count()) + " crossings (cap " +
                       std::to_string(cap) + ")");
}

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) {}
    void reset() { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[a] = b;
        return true;
    }

private:
    std::vector<int> parent_;
};

// hist[k * width + loops]: states with k type-I smoothings and that many loops.
using Histogram = std::vector<std::int64_t>;

int hist_width(const LinkDiagram& d) { return d.arc_count() + d.free_loops() + 2; }

void count_states(const LinkDiagram& d, std::uint64_t lo, std::uint64_t hi, Histogram& hist) {
    const int n = d.crossing_count();
    const int arcs = d.arc_count();
    UnionFind uf(arcs + 1);
    for (std::uint64_t s = lo; s < hi; ++s) {
        uf.reset();
        int loops = arcs;
        for (int x = 0; x < n; ++x) {
            const auto& e = d.crossings()[x].ends;
            if ((s >> x) & 1) {
                loops -= uf.unite(e[0], e[3]);
                loops -= uf.unite(e[1], e[2]);
            } else {
                loops -= uf.unite(e[0], e[1]);
                loops -= uf.unite(e[2], e[3]);
            }
        }
        int k = n - __builtin_popcountll(s);
        ++hist[k * hist_width(d) + loops + d.free_loops()];
    }
}

LaurentPoly sum_histogram(const LinkDiagram& d, const Histogram& hist) {
    const int n = d.crossing_count();
    const int width = hist_width(d);
    const LaurentPoly delta = LaurentPoly::monomial(-1, 2, "A") + LaurentPoly::monomial(-1, -2, "A");
    std::vector<LaurentPoly> dpow{LaurentPoly::constant(1, "A")};
    LaurentPoly out("A");
    for (int k = 0; k <= n; ++k) {
        for (int loops = 1; loops < width; ++loops) {
            std::int64_t cnt = hist[k * width + loops];
            if (cnt == 0) continue;
            while (static_cast<int>(dpow.size()) < loops) dpow.push_back(dpow.back() * delta);
            mpz_class c(std::to_string(cnt));
            out += LaurentPoly::monomial(c, 2 * k - n, "A") * dpow[loops - 1];
        }
    }
    return out;
}

LaurentPoly unlink_bracket(const LinkDiagram& d) {
    const LaurentPoly delta = LaurentPoly::monomial(-1, 2, "A") + LaurentPoly::monomial(-1, -2, "A");
    return delta.pow(d.component_count() - 1);
}

}  // namespace

LaurentPoly bracket_state_sum_serial(const LinkDiagram& d, int cap) {
    check_cap(d, cap);
    if (d.crossing_count() == 0) return unlink_bracket(d);
    const int n = d.crossing_count();
    Histogram hist(static_cast<std::size_t>(n + 1) * hist_width(d), 0);
    count_states(d, 0, std::uint64_t{1} << n, hist);
    return sum_histogram(d, hist);
}

LaurentPoly bracket_state_sum(const LinkDiagram& d, int cap) {
    check_cap(d, cap);
    if (d.crossing_count() == 0) return unlink_bracket(d);
    const int n = d.crossing_count();
    const std::size_t size = static_cast<std::size_t>(n + 1) * hist_width(d);
    const std::uint64_t total = std::uint64_t{1} << n;
    const std::uint64_t block = 1 << 10;
    const std::int64_t blocks = static_cast<std::int64_t>((total + block - 1) / block);
    Histogram hist(size, 0);
#pragma omp parallel
    {
        Histogram local(size, 0);
#pragma omp for schedule(static)
        for (std::int64_t b = 0; b < blocks; ++b) {
            std::uint64_t lo = static_cast<std::uint64_t>(b) * block;
            count_states(d, lo, std::min(total, lo + block), local);
        }
#pragma omp critical
        for (std::size_t i = 0; i < size; ++i) hist[i] += local[i];
    }
    return sum_histogram(d, hist);
}

LaurentPoly jones_from_bracket(const LinkDiagram& d, int cap) {
    LaurentPoly br = bracket_state_sum(d, cap);
    LaurentPoly norm = LaurentPoly::monomial(-1, 3, "A").pow(-d.writhe());
    LaurentPoly j = norm * br;
    LaurentPoly out("q");
    for (const auto& [e, c] : j.terms()) out.add_term(e, c);
    return out;
}

namespace {

class QEvaluator {
public:
    QEvaluator()
        : x_(LaurentPoly::monomial(1, 1, "x")),
          delta_(LaurentPoly::monomial(2, -1, "x") - LaurentPoly::constant(1, "x")) {}

    LaurentPoly eval(const LinkDiagram& d, const TraversalContext& ctx, bool canonical_ctx) {
        std::string key;
        if (canonical_ctx) {
            key = d.exact_code();
            if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        }
        CrossingReport r = classify(d, ctx);
        LaurentPoly out("x");
        if (!r.first_bad) {
            out = delta_.pow(d.component_count() - 1);
        } else {
            const int p = *r.first_bad;
            LinkDiagram s1 = smooth(d, p, Smoothing::I);
            LinkDiagram s2 = smooth(d, p, Smoothing::II);
            out = x_ * (eval(s1, canonical_context(s1), true) + eval(s2, canonical_context(s2), true)) -
                  eval(switch_crossing(d, p), ctx, canonical_ctx);
        }
        if (!key.empty()) cache_.emplace(std::move(key), out);
        return out;
    }

private:
    LaurentPoly x_;
    LaurentPoly delta_;
    std::unordered_map<std::string, LaurentPoly> cache_;
};

}  // namespace

LaurentPoly q_oracle(const LinkDiagram& d, int cap) {
    check_cap(d, cap);
    QEvaluator ev;
    return ev.eval(d, canonical_context(d), true);
}

}  // namespace ulink
