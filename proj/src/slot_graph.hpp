#pragma once

#include <array>
#include <string>
#include <vector>

#include "ulink/diagram.hpp"

namespace ulink::detail {

// Slots are numbered 4 * node + position, positions counterclockwise.
inline int node_of(int s) { return s >> 2; }
inline int pos_of(int s) { return s & 3; }
inline int rot(int s, int k) { return (s & ~3) | ((s + k) & 3); }
inline int through(int s) { return rot(s, 2); }

struct Node {
    std::array<int, 4> peer{-1, -1, -1, -1};
    // 1 incoming, 0 outgoing, -1 unknown
    std::array<signed char, 4> in{-1, -1, -1, -1};
    bool under_even = true;  // under strand on positions 0 and 2
};

struct SlotGraph {
    std::vector<Node> nodes;
    int free_loops = 0;

    int peer(int s) const { return nodes[node_of(s)].peer[pos_of(s)]; }
    signed char in(int s) const { return nodes[node_of(s)].in[pos_of(s)]; }
    int add_node(bool under_even);
    void connect(int s, int t);
};

SlotGraph to_graph(const LinkDiagram& d);

// Slot id of the given end of an arc in the graph produced by to_graph.
inline int slot_id(std::pair<int, int> xp) { return 4 * xp.first + xp.second; }

// Removes nodes; pairing[s] is the slot a strand entering at s leaves by.
struct Removal {
    int node;
    std::array<int, 4> pairing;
};
SlotGraph splice(const SlotGraph& g, const std::vector<Removal>& removals);

inline constexpr std::array<int, 4> kStraight{2, 3, 0, 1};
inline constexpr std::array<int, 4> kPairI{1, 0, 3, 2};
inline constexpr std::array<int, 4> kPairII{3, 2, 1, 0};

LinkDiagram rebuild(const SlotGraph& g, bool oriented);

}  // namespace ulink::detail
