#pragma once

#include "ulink/diagram.hpp"
#include "ulink/laurent.hpp"

namespace ulink {

inline constexpr int kOracleCap = 16;

// Sum over all 2^c states of A^(#I - #II) (-A^2 - A^-2)^(loops - 1), in variable A.
LaurentPoly bracket_state_sum(const LinkDiagram& d, int cap = kOracleCap);
// Single-threaded reference for the OpenMP version above.
LaurentPoly bracket_state_sum_serial(const LinkDiagram& d, int cap = kOracleCap);

// (-A^3)^-w <D>, returned in q = A (so t = q^-4).
LaurentPoly jones_from_bracket(const LinkDiagram& d, int cap = kOracleCap);

// Q-polynomial in x: L+ + L- = x (L0 + Linf), unknot 1.
LaurentPoly q_oracle(const LinkDiagram& d, int cap = kOracleCap);

}  // namespace ulink
