#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ulink/laurent.hpp"
#include "ulink/ring.hpp"

namespace ulink {

// A ring map into Z[var, var^-1]. v_n maps to v1 * delta^(n-1).
struct Homomorphism {
    std::string name;
    std::string var;
    Presentation source = Presentation::B1;
    std::map<Gen, LaurentPoly> images;
    LaurentPoly v1;
    LaurentPoly delta;
    // Check the writhe-modified B2 relations (g = A^w) instead of R_3 of B2.
    bool b2prime = false;

    LaurentPoly v(int n) const;
    const LaurentPoly& image(Gen g) const;
};

// a, a' -> q; b, b' -> q^-1; A -> -q^-3; delta = -q^2 - q^-2, with q = t^(-1/4).
Homomorphism jones_hom();
// Same map named in the bracket variable A.
Homomorphism bracket_hom();
// e, e' -> 1; a, a' -> -x; delta = 2x^-1 - 1.
Homomorphism q_hom();

LaurentPoly specialize(const RingElement& x, const Homomorphism& h);

struct HomCheckEntry {
    std::string relation;
    int n = 0;
    LaurentPoly residual;
};

struct HomCheckReport {
    std::vector<HomCheckEntry> entries;
    bool pass() const;
    int failures() const;
};

HomCheckReport check_hom(const Homomorphism& h, Presentation p, int n_max);

// JSON definition:
// {"name": .., "var": "x", "presentation": "B1", "b2prime": false,
//  "images": {"a": "-x", ...}, "v1": "1", "delta": "2*x^-1 - 1"}
Homomorphism homomorphism_from_json(std::string_view json);

}  // namespace ulink
