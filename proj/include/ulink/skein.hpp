#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ulink/diagram.hpp"
#include "ulink/homomorphism.hpp"
#include "ulink/laurent.hpp"
#include "ulink/ring.hpp"

namespace ulink {

class CapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SkeinOptions {
    bool memo = true;
    int max_crossings = 24;
};

struct DiagramStats {
    int c = 0;
    int d = 0;
    int mu = 0;
    int w = 0;
};

struct InvariantValue {
    RingElement element;
    DiagramStats stats;
};

// f in B1A (base case A^w v_mu) and F = A^-w f.
struct WritheInvariant {
    RingElement f;
    RingElement F;
    DiagramStats stats;
};

// Without ctx the canonical context is used. Stats are taken under that context.
InvariantValue invariant_b1(const LinkDiagram& d, const std::optional<TraversalContext>& ctx = {},
                            const SkeinOptions& opt = {});
WritheInvariant invariant_b1_writhe(const LinkDiagram& d, const std::optional<TraversalContext>& ctx = {},
                                    const SkeinOptions& opt = {});
// first_site forces the crossing resolved at the top level.
InvariantValue invariant_b2(const LinkDiagram& d, std::optional<int> first_site = {}, const SkeinOptions& opt = {});
// A(image)^w times the B2 resolution evaluated directly in the target ring.
LaurentPoly invariant_b2_writhe(const LinkDiagram& d, const Homomorphism& h, const SkeinOptions& opt = {},
                                std::optional<int> first_site = {});
// In q = t^(-1/4); render with to_string_quarters().
LaurentPoly jones(const LinkDiagram& d, const SkeinOptions& opt = {});

DiagramStats stats(const LinkDiagram& d, const TraversalContext& ctx);

struct OrderReport {
    bool pass = true;
    int b2_sites = 0;
    int b1_contexts = 0;
    std::string witness;  // first disagreement, empty on pass
};

OrderReport check_order_independence(const LinkDiagram& d, int b1_contexts = 20, std::uint64_t seed = 1);

struct MoveOutcome {
    MoveKind kind = MoveKind::R1Plus;
    int c_before = 0;
    int c_after = 0;
    bool b1 = true;
    bool b2 = true;
    bool b1w_F = true;
    bool b1w_f = true;  // unchanged under R2/R3, one A-power under R1
    bool jones = true;
    bool ok() const { return b1 && b2 && b1w_F && b1w_f && jones; }
};

struct ReidemeisterReport {
    std::vector<MoveOutcome> moves;
    int failures() const;
    bool pass() const { return failures() == 0; }
};

// Applies `trials` random moves in sequence, comparing each diagram with the previous one.
ReidemeisterReport check_reidemeister(const LinkDiagram& d, int trials, std::uint64_t seed, int max_crossings = 10);

}  // namespace ulink
