#include <array>
#include <cstdint>

#include "ulink/ring.hpp"

namespace ulink {

namespace {

using P = Presentation;

RingElement T(P p, const Monomial& m, const mpz_class& c = 1) { return RingElement::term(p, m, c); }

Monomial shift(Monomial m, Gen g, int k) {
    m[g] += k;
    return m;
}

Monomial with_n(Monomial m, int n) {
    m.n = n;
    return m;
}

// ---- rules shared by B1 and B1A

bool m_e2(const Monomial& m) { return m[Gen::e] >= 2; }
RingElement a_e2(P p, const Monomial& m) { return T(p, shift(m, Gen::e, -2)); }

bool m_ep2(const Monomial& m) { return m[Gen::ep] >= 2; }
RingElement a_ep2(P p, const Monomial& m) { return T(p, shift(m, Gen::ep, -2)); }

bool m_epa(const Monomial& m) { return m[Gen::ep] >= 1 && m[Gen::a] >= 1; }
bool m_epap(const Monomial& m) { return m[Gen::ep] >= 1 && m[Gen::ap] >= 1; }
RingElement a_ep_to_e(P p, const Monomial& m) { return T(p, shift(shift(m, Gen::ep, -1), Gen::e, 1)); }

bool m_aap(const Monomial& m) { return m[Gen::a] >= 1 && m[Gen::ap] >= 1; }
RingElement a_ap_to_a(P p, const Monomial& m) { return T(p, shift(shift(m, Gen::ap, -1), Gen::a, 1)); }

// a v_{n+1} = -(1 + e + e a) v_n, or -(A + A^-1 e + e a) v_n with the A extension
bool m_av(const Monomial& m) { return m[Gen::a] >= 1 && m.n >= 2; }
RingElement a_av(P p, const Monomial& m) {
    Monomial r = with_n(shift(m, Gen::a, -1), m.n - 1);
    RingElement out(p);
    if (p == P::B1A) {
        out.add(shift(r, Gen::A, 1), -1);
        out.add(shift(shift(r, Gen::e, 1), Gen::A, -1), -1);
    } else {
        out.add(r, -1);
        out.add(shift(r, Gen::e, 1), -1);
    }
    out.add(shift(shift(r, Gen::e, 1), Gen::a, 1), -1);
    return out;
}

// e e' v = v + e v - e' v, with A^2 on the last two terms in B1A
bool m_eepv(const Monomial& m) { return m[Gen::e] >= 1 && m[Gen::ep] >= 1 && m.n >= 1; }
RingElement a_eepv(P p, const Monomial& m) {
    Monomial r = shift(shift(m, Gen::e, -1), Gen::ep, -1);
    int s = p == P::B1A ? 2 : 0;
    RingElement out(p);
    out.add(r, 1);
    out.add(shift(shift(r, Gen::e, 1), Gen::A, s), 1);
    out.add(shift(shift(r, Gen::ep, 1), Gen::A, s), -1);
    return out;
}

// e a'^l v = e a^l v + a^l v - a'^l v, with A^2 on the last two terms in B1A
bool m_eapv(const Monomial& m) { return m[Gen::e] >= 1 && m[Gen::ap] >= 1 && m.n >= 1; }
RingElement a_eapv(P p, const Monomial& m) {
    int l = m[Gen::ap];
    Monomial r = shift(shift(m, Gen::e, -1), Gen::ap, -l);
    int s = p == P::B1A ? 2 : 0;
    RingElement out(p);
    out.add(shift(shift(r, Gen::e, 1), Gen::a, l), 1);
    out.add(shift(shift(r, Gen::a, l), Gen::A, s), 1);
    out.add(shift(shift(r, Gen::ap, l), Gen::A, s), -1);
    return out;
}

// (A^4 - 1)(e' - e) v = 0 and (A^4 - 1)(a'^l - a^l) v = 0 bring the A exponent
// of e' and a' terms into 0..3.
bool out_of_window(int k) { return k < 0 || k > 3; }
int window_step(int k) { return k > 3 ? -4 : 4; }

bool m_torsion_ep(const Monomial& m) { return m[Gen::ep] >= 1 && m.n >= 1 && out_of_window(m[Gen::A]); }
RingElement a_torsion_ep(P p, const Monomial& m) {
    int s = window_step(m[Gen::A]);
    Monomial swapped = shift(shift(m, Gen::ep, -1), Gen::e, 1);
    RingElement out(p);
    out.add(shift(m, Gen::A, s), 1);
    out.add(swapped, 1);
    out.add(shift(swapped, Gen::A, s), -1);
    return out;
}

bool m_torsion_ap(const Monomial& m) { return m[Gen::ap] >= 1 && m.n >= 1 && out_of_window(m[Gen::A]); }
RingElement a_torsion_ap(P p, const Monomial& m) {
    int s = window_step(m[Gen::A]);
    int l = m[Gen::ap];
    Monomial swapped = shift(shift(m, Gen::ap, -l), Gen::a, l);
    RingElement out(p);
    out.add(shift(m, Gen::A, s), 1);
    out.add(swapped, 1);
    out.add(shift(swapped, Gen::A, s), -1);
    return out;
}

// ---- B2

bool m_apb(const Monomial& m) { return m[Gen::ap] >= 1 && m[Gen::b] >= 1; }
bool m_abp(const Monomial& m) { return m[Gen::a] >= 1 && m[Gen::bp] >= 1; }
RingElement a_bp_to_b(P p, const Monomial& m) { return T(p, shift(shift(m, Gen::bp, -1), Gen::b, 1)); }
bool m_bbp(const Monomial& m) { return m[Gen::b] >= 1 && m[Gen::bp] >= 1; }

// a^2 = a - b + b^2
bool m_a2(const Monomial& m) { return m[Gen::a] >= 2; }
RingElement a_a2(P p, const Monomial& m) {
    Monomial r = shift(m, Gen::a, -2);
    RingElement out(p);
    out.add(shift(r, Gen::a, 1), 1);
    out.add(shift(r, Gen::b, 1), -1);
    out.add(shift(r, Gen::b, 2), 1);
    return out;
}

// v_n = (a' + b') v_{n-1}
bool m_vn(const Monomial& m) { return m.n >= 2; }
RingElement a_vn(P p, const Monomial& m) {
    Monomial r = with_n(m, m.n - 1);
    RingElement out(p);
    out.add(shift(r, Gen::ap, 1), 1);
    out.add(shift(r, Gen::bp, 1), 1);
    return out;
}

bool m_apv1(const Monomial& m) { return m[Gen::ap] >= 1 && m.n == 1; }
bool m_bpv1(const Monomial& m) { return m[Gen::bp] >= 1 && m.n == 1; }

// a b v_1 = (1 - a - b^2) v_1
bool m_abv1(const Monomial& m) { return m[Gen::a] >= 1 && m[Gen::b] >= 1 && m.n == 1; }
RingElement a_abv1(P p, const Monomial& m) {
    Monomial r = shift(shift(m, Gen::a, -1), Gen::b, -1);
    RingElement out(p);
    out.add(r, 1);
    out.add(shift(r, Gen::a, 1), -1);
    out.add(shift(r, Gen::b, 2), -1);
    return out;
}

const std::vector<RewriteRule> kB1 = {
    {"e^2 -> 1", m_e2, a_e2},
    {"e'^2 -> 1", m_ep2, a_ep2},
    {"e'a -> ea", m_epa, a_ep_to_e},
    {"e'a' -> ea'", m_epap, a_ep_to_e},
    {"aa' -> aa", m_aap, a_ap_to_a},
    {"a v_{n+1} -> -(1+e+ea) v_n", m_av, a_av},
    {"ee' v -> (1+e-e') v", m_eepv, a_eepv},
    {"ea'^l v -> (ea^l+a^l-a'^l) v", m_eapv, a_eapv},
};

const std::vector<RewriteRule> kB1A = {
    {"e^2 -> 1", m_e2, a_e2},
    {"e'^2 -> 1", m_ep2, a_ep2},
    {"e'a -> ea", m_epa, a_ep_to_e},
    {"e'a' -> ea'", m_epap, a_ep_to_e},
    {"aa' -> aa", m_aap, a_ap_to_a},
    {"a v_{n+1} -> -(A+A^-1e+ea) v_n", m_av, a_av},
    {"ee' v -> (1+A^2e-A^2e') v", m_eepv, a_eepv},
    {"ea'^l v -> (ea^l+A^2a^l-A^2a'^l) v", m_eapv, a_eapv},
    {"A^m e' v -> A^(m-+4) e' v + (A^m-A^(m-+4)) e v", m_torsion_ep, a_torsion_ep},
    {"A^m a'^l v -> A^(m-+4) a'^l v + (A^m-A^(m-+4)) a^l v", m_torsion_ap, a_torsion_ap},
};

const std::vector<RewriteRule> kB2 = {
    {"a'b -> ab", m_apb, a_ap_to_a},
    {"ab' -> ab", m_abp, a_bp_to_b},
    {"aa' -> aa", m_aap, a_ap_to_a},
    {"bb' -> bb", m_bbp, a_bp_to_b},
    {"a^2 -> a-b+b^2", m_a2, a_a2},
    {"v_n -> (a'+b') v_{n-1}", m_vn, a_vn},
    {"a'v_1 -> av_1", m_apv1, a_ap_to_a},
    {"b'v_1 -> bv_1", m_bpv1, a_bp_to_b},
    {"abv_1 -> (1-a-b^2)v_1", m_abv1, a_abv1},
};

using Cache = std::map<Monomial, RingElement::Terms, MonomialOrder>;

const RingElement::Terms& normal_monomial(P p, const Monomial& m, Cache& cache) {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    RingElement acc(p);
    bool rewritten = false;
    for (const auto& rule : rules(p)) {
        if (!rule.matches(m)) continue;
        RingElement rep = rule.apply(p, m);
        for (const auto& [m2, c2] : rep.terms()) {
            RingElement part(p);
            for (const auto& [m3, c3] : normal_monomial(p, m2, cache)) part.add(m3, c3);
            acc += part * c2;
        }
        rewritten = true;
        break;
    }
    if (!rewritten) acc.add(m, 1);
    return cache.emplace(m, acc.terms()).first->second;
}

}  // namespace

const std::vector<RewriteRule>& rules(Presentation p) {
    switch (p) {
        case P::B1: return kB1;
        case P::B1A: return kB1A;
        case P::B2: return kB2;
    }
    return kB1;
}

RingElement normalize(const RingElement& x) {
    thread_local std::array<Cache, 3> caches;
    Cache& cache = caches[static_cast<int>(x.presentation())];
    if (cache.size() > 2'000'000) cache.clear();
    RingElement out(x.presentation());
    for (const auto& [m, c] : x.terms())
        for (const auto& [m2, c2] : normal_monomial(x.presentation(), m, cache)) out.add(m2, c * c2);
    return out;
}

RingElement normalize_random(const RingElement& x, std::mt19937_64& rng) {
    const P p = x.presentation();
    const auto& rs = rules(p);
    RingElement cur = x;
    std::vector<std::pair<Monomial, int>> options;
    while (true) {
        options.clear();
        for (const auto& [m, c] : cur.terms())
            for (int r = 0; r < static_cast<int>(rs.size()); ++r)
                if (rs[r].matches(m)) options.emplace_back(m, r);
        if (options.empty()) return cur;
        auto [m, r] = options[rng() % options.size()];
        mpz_class c = cur.terms().at(m);
        RingElement step = rs[r].apply(p, m) * c;
        step.add(m, -c);
        cur += step;
    }
}

bool is_normal(const RingElement& x) {
    for (const auto& [m, c] : x.terms())
        for (const auto& rule : rules(x.presentation()))
            if (rule.matches(m)) return false;
    return true;
}

bool equal(const RingElement& x, const RingElement& y) {
    if (x.presentation() != y.presentation()) throw RingError("presentation mismatch");
    return normalize(x - y).is_zero();
}

std::vector<Relation> relations(Presentation p, int n_max) {
    auto g = [p](Gen x, int k = 1) { return RingElement::gen(p, x, k); };
    auto one = RingElement::constant(p, 1);
    auto zero = RingElement(p);
    auto v = [p](int n) { return RingElement::v(p, n); };
    std::vector<Relation> out;
    if (p == P::B1 || p == P::B1A) {
        out.push_back({"e^2=1", 0, g(Gen::e, 2), one, 0});
        out.push_back({"e'^2=1", 0, g(Gen::ep, 2), one, 0});
        out.push_back({"b=ea", 0, g(Gen::b), g(Gen::e) * g(Gen::a), 0});
        out.push_back({"b'=e'a'", 0, g(Gen::bp), g(Gen::ep) * g(Gen::ap), 0});
        out.push_back({"(e'-e)a'=0", 0, (g(Gen::ep) - g(Gen::e)) * g(Gen::ap), zero, 2});
        out.push_back({"(e'-e)a=0", 0, (g(Gen::ep) - g(Gen::e)) * g(Gen::a), zero, 2});
        out.push_back({"aa=aa'", 0, g(Gen::a, 2), g(Gen::a) * g(Gen::ap), 2});
        out.push_back({"(ee'-1)aa=0", 0, (g(Gen::e) * g(Gen::ep) - one) * g(Gen::a, 2), zero, 2});
        for (int n = 1; n < n_max; ++n) {
            RingElement coeff = p == P::B1 ? one + g(Gen::e) + g(Gen::e) * g(Gen::a)
                                           : g(Gen::A) + g(Gen::A, -1) * g(Gen::e) + g(Gen::e) * g(Gen::a);
            out.push_back({p == P::B1 ? "(1+e+ea)v_n+av_{n+1}=0" : "(A+A^-1e+ea)v_n+av_{n+1}=0", n,
                           coeff * v(n) + g(Gen::a) * v(n + 1), zero, 3});
        }
    } else {
        out.push_back({"a'b=ab", 0, g(Gen::ap) * g(Gen::b), g(Gen::a) * g(Gen::b), 2});
        out.push_back({"ab'=ab", 0, g(Gen::a) * g(Gen::bp), g(Gen::a) * g(Gen::b), 2});
        out.push_back({"aa=aa'", 0, g(Gen::a, 2), g(Gen::a) * g(Gen::ap), 2});
        out.push_back({"bb=bb'", 0, g(Gen::b, 2), g(Gen::b) * g(Gen::bp), 2});
        out.push_back({"(1-a)a=(1-b)b", 0, (one - g(Gen::a)) * g(Gen::a), (one - g(Gen::b)) * g(Gen::b), 3});
        for (int n = 1; n < n_max; ++n)
            out.push_back({"(1-a)v_n=bv_{n+1}", n, (one - g(Gen::a)) * v(n), g(Gen::b) * v(n + 1), 3});
        for (int n = 2; n <= n_max; ++n)
            out.push_back({"v_n=(a'+b')v_{n-1}", n, v(n), (g(Gen::ap) + g(Gen::bp)) * v(n - 1), 3});
    }
    return out;
}

RingElement random_element(Presentation p, std::mt19937_64& rng, int max_degree, int max_n, int max_terms) {
    std::vector<Gen> gens;
    for (int i = 0; i < kGenCount; ++i) {
        Gen g = static_cast<Gen>(i);
        bool ok = p == P::B2 ? (g == Gen::a || g == Gen::ap || g == Gen::b || g == Gen::bp)
                             : (g == Gen::e || g == Gen::ep || g == Gen::a || g == Gen::ap || (p == P::B1A && g == Gen::A));
        if (ok) gens.push_back(g);
    }
    RingElement out(p);
    int terms = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        int deg = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1));
        int a_sign = (rng() & 1) ? 1 : -1;
        for (int k = 0; k < deg; ++k) {
            Gen g = gens[rng() % gens.size()];
            m[g] += g == Gen::A ? a_sign : 1;
        }
        m.n = (rng() % 4 == 0) ? 0 : 1 + static_cast<int>(rng() % static_cast<unsigned>(max_n));
        int c = static_cast<int>(rng() % 7) - 3;
        if (c == 0) c = 1;
        out.add(m, c);
    }
    return out;
}

RewriteHealth check_rewriting(Presentation p, int samples, int orders, std::uint64_t seed, int n_max) {
    RewriteHealth h;
    h.samples = samples;
    int first_bad = samples;
    int non_confluent = 0, non_idempotent = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : non_confluent, non_idempotent)
    for (int i = 0; i < samples; ++i) {
        std::mt19937_64 rng(seed * 1000003u + static_cast<std::uint64_t>(i));
        RingElement x = random_element(p, rng, 6, 6, 4);
        RingElement nf = normalize(x);
        bool bad = false;
        if (!(normalize(nf) == nf)) {
            ++non_idempotent;
            bad = true;
        }
        for (int k = 0; k < orders; ++k) {
            if (!(normalize_random(x, rng) == nf)) {
                ++non_confluent;
                bad = true;
                break;
            }
        }
        if (bad) {
#pragma omp critical
            if (i < first_bad) {
                first_bad = i;
                h.witness = x.to_string();
            }
        }
    }
    h.non_confluent = non_confluent;
    h.non_idempotent = non_idempotent;
    for (const auto& r : relations(p, n_max)) {
        if (!equal(r.lhs, r.rhs)) {
            ++h.relation_failures;
            if (h.witness.empty()) h.witness = r.name + " (n=" + std::to_string(r.n) + ")";
        }
    }
    return h;
}

}  // namespace ulink
