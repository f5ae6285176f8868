#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ulink {

class DiagramError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Ends are listed counterclockwise. ends[0] is the incoming under end and
// ends[2] the outgoing one; the over strand enters at ends[1] or ends[3].
struct Crossing {
    std::array<int, 4> ends{};
    bool over_enters_e1 = false;

    int sign() const { return over_enters_e1 ? -1 : 1; }
    bool operator==(const Crossing&) const = default;
    auto operator<=>(const Crossing&) const = default;
};

enum class Smoothing { I, II };

struct TraversalContext {
    std::vector<int> order;     // component indices in visiting order
    std::vector<int> base_arc;  // indexed by component
    std::vector<bool> forward;  // indexed by component
};

enum class Status { Good, Bad };
enum class Locality { Self, Inter };

struct CrossingInfo {
    Status status = Status::Good;
    Locality locality = Locality::Self;
    int sign = 1;
};

struct CrossingReport {
    std::vector<CrossingInfo> crossings;
    std::optional<int> first_bad;
    int bad_count = 0;
    int writhe = 0;
};

enum class MoveKind { R1Plus, R1Minus, R2Plus, R2Minus, R3 };

// An edge side is an arc traversed with the face of interest on its left.
// Free loops are addressed by negative ids: -1 is the first free loop.
struct EdgeSide {
    int arc = 0;
    bool forward = true;
    bool operator==(const EdgeSide&) const = default;
};

// side: the face the move happens in (R1+, R2-, R3) or the first strand (R2+).
struct MoveSpec {
    MoveKind kind = MoveKind::R1Plus;
    EdgeSide side;
    EdgeSide other;       // R2+: second strand
    int crossing = -1;    // R1-: the kink crossing
    bool over = false;    // R1+: first passage over; R2+: first strand over at both
};

class LinkDiagram {
public:
    LinkDiagram() = default;
    // Arc numbering is taken as given; components are the ranges
    // [first, last] listed in `components`.
    LinkDiagram(std::vector<Crossing> crossings, std::vector<std::pair<int, int>> components,
                int free_loops);

    static LinkDiagram unlink(int n);

    const std::vector<Crossing>& crossings() const { return crossings_; }
    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int arc_count() const { return arc_count_; }
    int free_loops() const { return free_loops_; }
    const std::vector<std::pair<int, int>>& components() const { return components_; }
    int component_count() const { return static_cast<int>(components_.size()) + free_loops_; }

    int component_of(int arc) const { return arc_comp_[arc]; }
    int next_arc(int arc) const;
    int prev_arc(int arc) const;
    // Slot (crossing, position) where the arc ends and where it starts.
    std::pair<int, int> head(int arc) const { return head_[arc]; }
    std::pair<int, int> tail(int arc) const { return tail_[arc]; }
    bool slot_incoming(int x, int pos) const;

    bool is_self(int x) const;
    int writhe() const;

    std::string to_string() const;
    // Exact numbered encoding: equal strings mean equal numbered diagrams.
    std::string exact_code() const;

    bool operator==(const LinkDiagram& o) const {
        return crossings_ == o.crossings_ && components_ == o.components_ &&
               free_loops_ == o.free_loops_;
    }

private:
    void index();

    std::vector<Crossing> crossings_;
    std::vector<std::pair<int, int>> components_;
    int arc_count_ = 0;
    int free_loops_ = 0;
    std::vector<int> arc_comp_;
    std::vector<std::pair<int, int>> head_, tail_;
};

LinkDiagram parse_diagram(std::string_view text);

struct ComponentTable {
    std::vector<int> arc_component;  // index 0 unused
    int mu = 0;
};
ComponentTable trace_components(const LinkDiagram& d);

TraversalContext canonical_context(const LinkDiagram& d);
TraversalContext random_context(const LinkDiagram& d, std::mt19937_64& rng);
CrossingReport classify(const LinkDiagram& d, const TraversalContext& ctx);

// The result is relabeled canonically; orientation is discarded.
LinkDiagram smooth(const LinkDiagram& d, int x, Smoothing kind);
// Keeps the arc numbering.
LinkDiagram switch_crossing(const LinkDiagram& d, int x);
LinkDiagram mirror(const LinkDiagram& d);

// Canonical relabeling. `oriented` keeps component orientations; otherwise
// each component may be reversed to reach the minimal code.
LinkDiagram canonical(const LinkDiagram& d, bool oriented);
std::string canonical_code(const LinkDiagram& d, bool oriented);

std::vector<MoveSpec> enumerate_moves(const LinkDiagram& d, MoveKind kind);
LinkDiagram apply_move(const LinkDiagram& d, const MoveSpec& m);
std::string to_string(MoveKind k);

// Faces as cyclic lists of edge sides; free loops are not included.
std::vector<std::vector<EdgeSide>> faces(const LinkDiagram& d);
// Euler characteristic check on every connected piece.
bool is_planar(const LinkDiagram& d);

// Picks a kind uniformly among those with sites, then a site uniformly.
// Moves that would exceed max_crossings are not offered.
std::optional<MoveSpec> random_move(const LinkDiagram& d, std::mt19937_64& rng, int max_crossings);

LinkDiagram random_diagram(std::uint64_t seed, int c_max);

}  // namespace ulink
