#include "ulink/ring.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace ulink {

namespace {

constexpr std::array<const char*, kGenCount> kGenNames{"e", "e'", "a", "a'", "b", "b'", "A"};

bool allowed(Presentation p, Gen g) {
    switch (p) {
        case Presentation::B1: return g == Gen::e || g == Gen::ep || g == Gen::a || g == Gen::ap;
        case Presentation::B1A: return g == Gen::e || g == Gen::ep || g == Gen::a || g == Gen::ap || g == Gen::A;
        case Presentation::B2: return g == Gen::a || g == Gen::ap || g == Gen::b || g == Gen::bp;
    }
    return false;
}

std::string render_monomial(const Monomial& m) {
    std::string s;
    for (int i = 0; i < kGenCount; ++i) {
        int k = m.exp[i];
        if (k == 0) continue;
        if (!s.empty()) s += '*';
        s += kGenNames[i];
        if (k != 1) s += "^" + std::to_string(k);
    }
    if (m.n > 0) {
        if (!s.empty()) s += '*';
        s += "v_" + std::to_string(m.n);
    }
    return s;
}

}  // namespace

std::string to_string(Presentation p) {
    switch (p) {
        case Presentation::B1: return "B1";
        case Presentation::B1A: return "B1A";
        case Presentation::B2: return "B2";
    }
    return "?";
}

Presentation parse_presentation(std::string_view s) {
    if (s == "B1" || s == "b1") return Presentation::B1;
    if (s == "B1A" || s == "b1a" || s == "B1'") return Presentation::B1A;
    if (s == "B2" || s == "b2") return Presentation::B2;
    throw RingError("unknown presentation: " + std::string(s));
}

std::string to_string(Gen g) { return kGenNames[static_cast<int>(g)]; }

int Monomial::degree() const {
    int d = 0;
    for (int i = 0; i < kGenCount; ++i) d += exp[i] < 0 ? -exp[i] : exp[i];
    return d;
}

bool MonomialOrder::operator()(const Monomial& x, const Monomial& y) const {
    int dx = x.degree(), dy = y.degree();
    if (dx != dy) return dx < dy;
    if (x.exp != y.exp) return x.exp > y.exp;
    return x.n < y.n;
}

// ---------------------------------------------------------------- element

RingElement RingElement::constant(Presentation p, const mpz_class& c) {
    RingElement r(p);
    r.add(Monomial{}, c);
    return r;
}

RingElement RingElement::v(Presentation p, int n) {
    if (n < 1) throw RingError("v_n needs n >= 1");
    Monomial m;
    m.n = n;
    RingElement r(p);
    r.add(m, 1);
    return r;
}

RingElement RingElement::gen(Presentation p, Gen g, int power) {
    if (p != Presentation::B2 && (g == Gen::b || g == Gen::bp)) {
        Monomial m;
        m[g == Gen::b ? Gen::e : Gen::ep] = power;
        m[g == Gen::b ? Gen::a : Gen::ap] = power;
        return term(p, m);
    }
    Monomial m;
    m[g] = power;
    return term(p, m);
}

RingElement RingElement::term(Presentation p, const Monomial& m, const mpz_class& c) {
    RingElement r(p);
    r.add(m, c);
    return r;
}

int RingElement::max_n() const {
    int n = 0;
    for (const auto& [m, c] : terms_) n = std::max(n, m.n);
    return n;
}

void RingElement::validate(const Monomial& m) const {
    for (int i = 0; i < kGenCount; ++i) {
        Gen g = static_cast<Gen>(i);
        if (m.exp[i] == 0) continue;
        if (!allowed(pres_, g))
            throw RingError("generator " + ulink::to_string(g) + " is not part of " + ulink::to_string(pres_));
        if (m.exp[i] < 0 && g != Gen::A) throw RingError("negative exponent on " + ulink::to_string(g));
    }
    if (m.n < 0) throw RingError("negative unlink index");
}

void RingElement::add(const Monomial& m, const mpz_class& c) {
    if (c == 0) return;
    validate(m);
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void RingElement::check(const RingElement& o) const {
    if (pres_ != o.pres_) throw RingError("presentation mismatch: " + ulink::to_string(pres_) + " vs " + ulink::to_string(o.pres_));
}

RingElement RingElement::operator-() const {
    RingElement r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

RingElement& RingElement::operator+=(const RingElement& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

RingElement& RingElement::operator*=(const RingElement& o) {
    check(o);
    Terms out;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            if (m1.n > 0 && m2.n > 0) throw RingError("product of two unlink symbols");
            Monomial m;
            for (int i = 0; i < kGenCount; ++i) m.exp[i] = m1.exp[i] + m2.exp[i];
            m.n = m1.n + m2.n;
            auto [it, fresh] = out.try_emplace(m, c1 * c2);
            if (!fresh) it->second += c1 * c2;
        }
    }
    terms_.clear();
    for (auto& [m, c] : out)
        if (c != 0) terms_.emplace(m, std::move(c));
    return *this;
}

RingElement& RingElement::operator*=(const mpz_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, k] : terms_) k *= c;
    return *this;
}

std::string RingElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            if (c < 0) os << "- ";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        mpz_class mag = abs(c);
        std::string body = render_monomial(m);
        if (body.empty()) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << '*';
            os << body;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- parsing

RingElement parse_element(std::string_view text, Presentation p) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    auto fail = [&]() -> void { throw RingError("cannot parse ring element '" + std::string(text) + "'"); };
    if (s.empty()) fail();
    RingElement out(p);
    if (s == "0") return out;
    std::size_t i = 0;
    auto read_int = [&]() {
        std::size_t k = i;
        if (k < s.size() && s[k] == '-') ++k;
        std::size_t d = k;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == d) fail();
        std::string num = s.substr(i, k - i);
        i = k;
        return num;
    };
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            fail();
        }
        RingElement term = RingElement::constant(p, sign);
        bool any = false;
        while (i < s.size() && s[i] != '+' && s[i] != '-') {
            if (any) {
                if (s[i] != '*') fail();
                ++i;
            }
            any = true;
            if (std::isdigit(static_cast<unsigned char>(s[i]))) {
                term *= mpz_class(read_int());
                continue;
            }
            if (s.compare(i, 2, "v_") == 0) {
                i += 2;
                int n = std::stoi(read_int());
                term *= RingElement::v(p, n);
                continue;
            }
            int g = -1;
            for (int j = 0; j < kGenCount; ++j) {
                std::string name = kGenNames[j];
                if (s.compare(i, name.size(), name) == 0 && (g < 0 || name.size() > std::string(kGenNames[g]).size()))
                    g = j;
            }
            if (g < 0) fail();
            i += std::string(kGenNames[g]).size();
            int power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                power = std::stoi(read_int());
            }
            term *= RingElement::gen(p, static_cast<Gen>(g), power);
        }
        if (!any) fail();
        out += term;
    }
    return out;
}

std::string to_json(const RingElement& x) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : x.terms()) {
        nlohmann::json t;
        if (c.fits_slong_p()) {
            t["coeff"] = static_cast<std::int64_t>(c.get_si());
        } else {
            t["coeff"] = c.get_str();
        }
        nlohmann::json ex = nlohmann::json::object();
        for (int i = 0; i < kGenCount; ++i)
            if (allowed(x.presentation(), static_cast<Gen>(i))) ex[kGenNames[i]] = m.exp[i];
        t["exponents"] = ex;
        t["n"] = m.n;
        arr.push_back(t);
    }
    return arr.dump();
}

RingElement element_from_json(std::string_view json, Presentation p) {
    RingElement out(p);
    try {
        auto arr = nlohmann::json::parse(json);
        if (!arr.is_array()) throw RingError("ring element JSON must be an array");
        for (const auto& t : arr) {
            Monomial m;
            for (const auto& [name, v] : t.at("exponents").items()) {
                int g = -1;
                for (int j = 0; j < kGenCount; ++j)
                    if (name == kGenNames[j]) g = j;
                if (g < 0) throw RingError("unknown generator " + name);
                m.exp[g] = v.get<int>();
            }
            m.n = t.at("n").get<int>();
            const auto& c = t.at("coeff");
            mpz_class coeff = c.is_string() ? mpz_class(c.get<std::string>()) : mpz_class(std::to_string(c.get<std::int64_t>()));
            out.add(m, coeff);
        }
    } catch (const nlohmann::json::exception& e) {
        throw RingError(std::string("bad ring element JSON: ") + e.what());
    }
    return out;
}

}  // namespace ulink
