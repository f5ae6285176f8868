#include "ulink/homomorphism.hpp"

#include "json.hpp"

namespace ulink {

LaurentPoly Homomorphism::v(int n) const {
    if (n < 1) throw RingError("v_n needs n >= 1");
    return v1 * delta.pow(n - 1);
}

const LaurentPoly& Homomorphism::image(Gen g) const {
    auto it = images.find(g);
    if (it == images.end()) throw RingError("homomorphism " + name + " has no image for " + to_string(g));
    return it->second;
}

namespace {

LaurentPoly mono(long c, int e, const std::string& var) { return LaurentPoly::monomial(c, e, var); }

}  // namespace

Homomorphism jones_hom() {
    Homomorphism h;
    h.name = "jones";
    h.var = "q";
    h.source = Presentation::B2;
    h.b2prime = true;
    for (Gen g : {Gen::a, Gen::ap}) h.images[g] = mono(1, 1, "q");
    for (Gen g : {Gen::b, Gen::bp}) h.images[g] = mono(1, -1, "q");
    h.images[Gen::A] = mono(-1, -3, "q");
    h.v1 = LaurentPoly::constant(1, "q");
    h.delta = mono(-1, 2, "q") + mono(-1, -2, "q");
    return h;
}

Homomorphism bracket_hom() {
    Homomorphism h = jones_hom();
    h.name = "bracket";
    h.var = "A";
    auto rename = [](const LaurentPoly& p) {
        LaurentPoly r("A");
        for (const auto& [e, c] : p.terms()) r.add_term(e, c);
        return r;
    };
    for (auto& [g, p] : h.images) p = rename(p);
    h.v1 = rename(h.v1);
    h.delta = rename(h.delta);
    return h;
}

Homomorphism q_hom() {
    Homomorphism h;
    h.name = "q";
    h.var = "x";
    h.source = Presentation::B1;
    for (Gen g : {Gen::e, Gen::ep}) h.images[g] = LaurentPoly::constant(1, "x");
    for (Gen g : {Gen::a, Gen::ap}) h.images[g] = mono(-1, 1, "x");
    h.v1 = LaurentPoly::constant(1, "x");
    h.delta = mono(2, -1, "x") - LaurentPoly::constant(1, "x");
    return h;
}

LaurentPoly specialize(const RingElement& x, const Homomorphism& h) {
    LaurentPoly out(h.var);
    for (const auto& [m, c] : x.terms()) {
        LaurentPoly t = LaurentPoly::constant(c, h.var);
        for (int i = 0; i < kGenCount; ++i)
            if (m.exp[i] != 0) t *= h.image(static_cast<Gen>(i)).pow(m.exp[i]);
        if (m.n > 0) t *= h.v(m.n);
        out += t;
    }
    return out;
}

bool HomCheckReport::pass() const { return failures() == 0; }

int HomCheckReport::failures() const {
    int k = 0;
    for (const auto& e : entries)
        if (!e.residual.is_zero()) ++k;
    return k;
}

HomCheckReport check_hom(const Homomorphism& h, Presentation p, int n_max) {
    HomCheckReport r;
    bool writhe_b2 = h.b2prime && p == Presentation::B2;
    for (const auto& rel : relations(p, n_max)) {
        if (writhe_b2 && rel.level == 3) continue;
        r.entries.push_back({rel.name, rel.n, specialize(rel.lhs, h) - specialize(rel.rhs, h)});
    }
    if (writhe_b2) {
        const LaurentPoly& a = h.image(Gen::a);
        const LaurentPoly& b = h.image(Gen::b);
        const LaurentPoly& ap = h.image(Gen::ap);
        const LaurentPoly& bp = h.image(Gen::bp);
        const LaurentPoly& A = h.image(Gen::A);
        LaurentPoly Ainv = A.pow(-1);
        for (int n = 1; n <= n_max; ++n) {
            r.entries.push_back({"A(av_{n+1}+bv_n)=v_n", n, A * (a * h.v(n + 1) + b * h.v(n)) - h.v(n)});
            r.entries.push_back({"A^-1(bv_{n+1}+av_n)=v_n", n, Ainv * (b * h.v(n + 1) + a * h.v(n)) - h.v(n)});
            // v_0 is undefined, so the third family starts at n = 2.
            if (n >= 2)
                r.entries.push_back({"a'(av_{n-1}+bv_n)+b'(a'v_n+b'v_{n-1})=v_n", n,
                                     ap * (a * h.v(n - 1) + b * h.v(n)) + bp * (ap * h.v(n) + bp * h.v(n - 1)) - h.v(n)});
        }
    }
    return r;
}

Homomorphism homomorphism_from_json(std::string_view json) {
    Homomorphism h;
    try {
        auto j = nlohmann::json::parse(json);
        h.name = j.value("name", std::string("custom"));
        h.var = j.value("var", std::string("x"));
        h.source = parse_presentation(j.value("presentation", std::string("B1")));
        h.b2prime = j.value("b2prime", false);
        for (const auto& [g, s] : j.at("images").items()) {
            int idx = -1;
            for (int i = 0; i < kGenCount; ++i)
                if (to_string(static_cast<Gen>(i)) == g) idx = i;
            if (idx < 0) throw RingError("unknown generator " + g);
            h.images[static_cast<Gen>(idx)] = LaurentPoly::parse(s.get<std::string>(), h.var);
        }
        h.v1 = LaurentPoly::parse(j.value("v1", std::string("1")), h.var);
        h.delta = LaurentPoly::parse(j.at("delta").get<std::string>(), h.var);
    } catch (const nlohmann::json::exception& e) {
        throw RingError(std::string("bad homomorphism JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw RingError(std::string("bad homomorphism JSON: ") + e.what());
    }
    return h;
}

}  // namespace ulink
