#include "ulink/laurent.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <vector>

namespace ulink {

LaurentPoly LaurentPoly::constant(const mpz_class& c, std::string var) {
    LaurentPoly p(std::move(var));
    p.add_term(0, c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const mpz_class& c, int exp, std::string var) {
    LaurentPoly p(std::move(var));
    p.add_term(exp, c);
    return p;
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

mpz_class LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::add_term(int exp, const mpz_class& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(exp, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::adopt_var(const LaurentPoly& o) {
    if (o.var_.empty() || o.var_ == var_) return;
    if (var_.empty()) {
        var_ = o.var_;
        return;
    }
    bool this_const = terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    bool other_const = o.terms_.empty() || (o.terms_.size() == 1 && o.terms_.begin()->first == 0);
    if (this_const) {
        var_ = o.var_;
    } else if (!other_const) {
        throw std::invalid_argument("variable mismatch: " + var_ + " vs " + o.var_);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    adopt_var(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    adopt_var(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    adopt_var(o);
    std::map<int, mpz_class> out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) out[e1 + e2] += c1 * c2;
    terms_.clear();
    for (auto& [e, c] : out)
        if (c != 0) terms_.emplace(e, std::move(c));
    return *this;
}

LaurentPoly LaurentPoly::pow(int n) const {
    if (n < 0) {
        if (!is_monomial() || abs(terms_.begin()->second) != 1)
            throw std::domain_error("negative power of a non-unit");
        auto [e, c] = *terms_.begin();
        return monomial((-n) % 2 ? c : mpz_class(1), e * n, var_);
    }
    LaurentPoly result = constant(1, var_);
    LaurentPoly base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::scale_exponents(int k) const {
    LaurentPoly r(var_);
    for (const auto& [e, c] : terms_) r.add_term(e * k, c);
    return r;
}

namespace {

std::string render(const std::map<int, mpz_class>& terms, const auto& power) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::string p = power(e);
        if (p.empty()) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << '*';
            os << p;
        }
    }
    return os.str();
}

}  // namespace

std::string LaurentPoly::to_string() const {
    const std::string v = var_.empty() ? "x" : var_;
    return render(terms_, [&](int e) -> std::string {
        if (e == 0) return "";
        if (e == 1) return v;
        return v + "^" + std::to_string(e);
    });
}

std::string LaurentPoly::to_string_quarters(const std::string& t) const {
    std::map<int, mpz_class> flipped;
    for (const auto& [e, c] : terms_) flipped[-e] = c;
    return render(flipped, [&](int q) -> std::string {
        if (q == 0) return "";
        int g = std::gcd(std::abs(q), 4);
        int num = q / g, den = 4 / g;
        if (den == 1) return num == 1 ? t : t + "^" + std::to_string(num);
        return t + "^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
    });
}

LaurentPoly LaurentPoly::parse(std::string_view text, const std::string& var) {
    LaurentPoly out(var);
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty polynomial");
    if (s == "0") return out;
    std::size_t i = 0;
    auto fail = [&]() { throw std::invalid_argument("cannot parse polynomial '" + std::string(text) + "'"); };
    auto read_int = [&](std::size_t& j) {
        std::size_t k = j;
        if (k < s.size() && (s[k] == '-' || s[k] == '+')) ++k;
        std::size_t d = k;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == d) fail();
        std::string num = s.substr(j, k - j);
        j = k;
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
        mpz_class c = 1;
        bool have_coeff = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            c = mpz_class(read_int(i));
            have_coeff = true;
            if (i < s.size() && s[i] == '*') ++i;
        }
        int exp = 0;
        if (s.compare(i, var.size(), var) == 0 && !var.empty()) {
            i += var.size();
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                bool paren = i < s.size() && s[i] == '(';
                if (paren) ++i;
                exp = std::stoi(read_int(i));
                if (paren) {
                    if (i >= s.size() || s[i] != ')') fail();
                    ++i;
                }
            }
        } else if (!have_coeff) {
            fail();
        }
        out.add_term(exp, sign * c);
    }
    return out;
}

}  // namespace ulink
