#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ulink {

// Integer Laurent polynomial in one named variable.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(std::string var) : var_(std::move(var)) {}

    static LaurentPoly constant(const mpz_class& c, std::string var = {});
    static LaurentPoly monomial(const mpz_class& c, int exp, std::string var);

    const std::map<int, mpz_class>& terms() const { return terms_; }
    const std::string& var() const { return var_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    int min_exp() const;
    int max_exp() const;
    mpz_class coeff(int exp) const;

    void add_term(int exp, const mpz_class& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    // Negative powers need a unit monomial (±x^k).
    LaurentPoly pow(int n) const;
    // Substitutes var -> var^k.
    LaurentPoly scale_exponents(int k) const;

    // Descending exponents, e.g. "2*x^2 + 2*x - 3".
    std::string to_string() const;
    // Renders exponent e of this variable as t^(-e/4).
    std::string to_string_quarters(const std::string& t = "t") const;

    static LaurentPoly parse(std::string_view text, const std::string& var);

private:
    void adopt_var(const LaurentPoly& o);

    std::string var_;
    std::map<int, mpz_class> terms_;
};

}  // namespace ulink
