#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ulink {

enum class Presentation { B1, B1A, B2 };
std::string to_string(Presentation p);
Presentation parse_presentation(std::string_view s);

enum class Gen { e, ep, a, ap, b, bp, A };
inline constexpr int kGenCount = 7;
std::string to_string(Gen g);

class RingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exponents of e, e', a, a', b, b', A and the unlink index n (0: no v factor).
struct Monomial {
    std::array<int, kGenCount> exp{};
    int n = 0;

    int& operator[](Gen g) { return exp[static_cast<int>(g)]; }
    int operator[](Gen g) const { return exp[static_cast<int>(g)]; }
    int degree() const;
    bool operator==(const Monomial&) const = default;
};

// Rendering order: ascending degree, then descending exponents, then n.
struct MonomialOrder {
    bool operator()(const Monomial& x, const Monomial& y) const;
};

class RingElement {
public:
    using Terms = std::map<Monomial, mpz_class, MonomialOrder>;

    explicit RingElement(Presentation p = Presentation::B1) : pres_(p) {}

    static RingElement constant(Presentation p, const mpz_class& c);
    static RingElement v(Presentation p, int n);
    // In B1 and B1A, b and b' stand for e*a and e'*a'.
    static RingElement gen(Presentation p, Gen g, int power = 1);
    static RingElement term(Presentation p, const Monomial& m, const mpz_class& c = 1);

    Presentation presentation() const { return pres_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_n() const;

    void add(const Monomial& m, const mpz_class& c);

    RingElement operator-() const;
    RingElement& operator+=(const RingElement& o);
    RingElement& operator-=(const RingElement& o);
    RingElement& operator*=(const RingElement& o);
    RingElement& operator*=(const mpz_class& c);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
    friend RingElement operator*(RingElement a, const mpz_class& c) { return a *= c; }
    // Structural equality of stored terms; use equal() for equality in the ring.
    bool operator==(const RingElement& o) const { return pres_ == o.pres_ && terms_ == o.terms_; }

    std::string to_string() const;

private:
    void check(const RingElement& o) const;
    void validate(const Monomial& m) const;

    Presentation pres_;
    Terms terms_;
};

RingElement parse_element(std::string_view text, Presentation p);

// JSON text: [{"coeff": .., "exponents": {..}, "n": ..}, ...]
std::string to_json(const RingElement& x);
RingElement element_from_json(std::string_view json, Presentation p);

// ---------------------------------------------------------------- rewriting

struct RewriteRule {
    std::string name;
    bool (*matches)(const Monomial&);
    // Replacement for a matching monomial with coefficient 1.
    RingElement (*apply)(Presentation, const Monomial&);
};

const std::vector<RewriteRule>& rules(Presentation p);

RingElement normalize(const RingElement& x);
// One rule application at a time, choosing uniformly among all (term, rule)
// pairs that match.
RingElement normalize_random(const RingElement& x, std::mt19937_64& rng);
bool is_normal(const RingElement& x);
bool equal(const RingElement& x, const RingElement& y);

struct Relation {
    std::string name;
    int n = 0;
    RingElement lhs;
    RingElement rhs;
    int level = 2;  // index of the relation set R_0..R_3 it belongs to
};

// The defining relations, with v-indexed families instantiated for n <= n_max.
std::vector<Relation> relations(Presentation p, int n_max);

RingElement random_element(Presentation p, std::mt19937_64& rng, int max_degree, int max_n, int max_terms);

struct RewriteHealth {
    int samples = 0;
    int non_confluent = 0;
    int non_idempotent = 0;
    int relation_failures = 0;
    std::string witness;
    bool pass() const { return non_confluent == 0 && non_idempotent == 0 && relation_failures == 0; }
};

// Random elements of degree <= 6 and n <= 6, each reduced in `orders` random
// rule orders, plus every relation up to n_max. Sample i uses its own seed,
// so the result does not depend on the thread count.
RewriteHealth check_rewriting(Presentation p, int samples, int orders, std::uint64_t seed, int n_max = 6);

}  // namespace ulink
