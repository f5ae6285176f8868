#include "slot_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace ulink::detail {

int SlotGraph::add_node(bool under_even) {
    Node n;
    n.under_even = under_even;
    nodes.push_back(n);
    return static_cast<int>(nodes.size()) - 1;
}

void SlotGraph::connect(int s, int t) {
    nodes[node_of(s)].peer[pos_of(s)] = t;
    nodes[node_of(t)].peer[pos_of(t)] = s;
}

SlotGraph to_graph(const LinkDiagram& d) {
    SlotGraph g;
    g.free_loops = d.free_loops();
    g.nodes.resize(d.crossings().size());
    for (int k = 1; k <= d.arc_count(); ++k) {
        int t = slot_id(d.tail(k));
        int h = slot_id(d.head(k));
        g.connect(t, h);
        g.nodes[node_of(t)].in[pos_of(t)] = 0;
        g.nodes[node_of(h)].in[pos_of(h)] = 1;
    }
    return g;
}

SlotGraph splice(const SlotGraph& g, const std::vector<Removal>& removals) {
    const int n = static_cast<int>(g.nodes.size());
    std::vector<int> pairing_of(n, -1);
    for (std::size_t i = 0; i < removals.size(); ++i) pairing_of[removals[i].node] = static_cast<int>(i);
    auto removed = [&](int s) { return pairing_of[node_of(s)] >= 0; };
    auto pair = [&](int s) { return 4 * node_of(s) + removals[pairing_of[node_of(s)]].pairing[pos_of(s)]; };

    std::vector<int> new_index(n, -1);
    SlotGraph out;
    out.free_loops = g.free_loops;
    for (int i = 0; i < n; ++i) {
        if (pairing_of[i] >= 0) continue;
        new_index[i] = static_cast<int>(out.nodes.size());
        Node copy = g.nodes[i];
        out.nodes.push_back(copy);
    }
    auto remap = [&](int s) { return 4 * new_index[node_of(s)] + pos_of(s); };

    std::vector<char> seen(4 * n, 0);
    for (int i = 0; i < n; ++i) {
        if (pairing_of[i] >= 0) continue;
        for (int p = 0; p < 4; ++p) {
            int s = 4 * i + p;
            int t = g.peer(s);
            while (removed(t)) {
                seen[t] = 1;
                int u = pair(t);
                seen[u] = 1;
                t = g.peer(u);
            }
            out.nodes[new_index[i]].peer[p] = remap(t);
        }
    }
    for (const auto& r : removals) {
        for (int p = 0; p < 4; ++p) {
            int s = 4 * r.node + p;
            if (seen[s]) continue;
            int t = s;
            do {
                seen[t] = 1;
                int u = pair(t);
                seen[u] = 1;
                t = g.peer(u);
            } while (t != s);
            ++out.free_loops;
        }
    }
    return out;
}

namespace {

struct PieceCode {
    std::vector<int> lengths;
    std::vector<Crossing> xs;
    auto operator<=>(const PieceCode&) const = default;
};

// Fills unknown in-flags so that every strand cycle is consistently oriented.
std::vector<signed char> orient(const SlotGraph& g) {
    const int m = 4 * static_cast<int>(g.nodes.size());
    std::vector<signed char> in(m);
    for (int s = 0; s < m; ++s) in[s] = g.in(s);
    std::vector<char> done(m, 0);
    std::vector<int> seq;
    for (int s = 0; s < m; ++s) {
        if (done[s]) continue;
        seq.clear();
        int o = s;
        do {
            seq.push_back(o);
            seq.push_back(g.peer(o));
            o = through(g.peer(o));
        } while (o != s);
        // seq alternates outgoing, incoming when walked from s as outgoing
        int flip = -1;
        for (std::size_t i = 0; i < seq.size() && flip < 0; ++i) {
            signed char want = (i % 2 == 0) ? 0 : 1;
            if (in[seq[i]] >= 0) flip = (in[seq[i]] == want) ? 0 : 1;
        }
        if (flip < 0) flip = 0;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            signed char v = static_cast<signed char>(((i % 2) ^ static_cast<std::size_t>(flip)) ? 1 : 0);
            if (in[seq[i]] >= 0 && in[seq[i]] != v) throw std::logic_error("inconsistent strand orientation");
            in[seq[i]] = v;
            done[seq[i]] = 1;
        }
    }
    return in;
}

class Labeler {
public:
    Labeler(const SlotGraph& g, const std::vector<signed char>& in, bool oriented)
        : g_(g), in_(in), oriented_(oriented), lab_(in.size(), 0), dir_(in.size(), 0) {}

    PieceCode run(const std::vector<int>& piece_nodes, int start) {
        for (int x : piece_nodes)
            for (int p = 0; p < 4; ++p) lab_[4 * x + p] = 0;
        heads_.clear();
        PieceCode code;
        int next = 1;
        std::size_t scan = 0;
        int o = start;
        while (true) {
            int first = next;
            int s0 = o;
            do {
                int h = g_.peer(o);
                lab_[o] = lab_[h] = next++;
                dir_[o] = 0;
                dir_[h] = 1;
                heads_.push_back(h);
                o = through(h);
            } while (o != s0);
            code.lengths.push_back(next - first);
            int found = -1;
            while (scan < heads_.size() && found < 0) {
                int h = heads_[scan];
                for (int j = 1; j <= 3 && found < 0; ++j) {
                    int s = rot(h, j);
                    if (lab_[s] == 0) found = s;
                }
                if (found < 0) ++scan;
            }
            if (found < 0) break;
            o = (!oriented_ || in_[found] == 0) ? found : g_.peer(found);
        }
        for (int x : piece_nodes) {
            const Node& n = g_.nodes[x];
            int u = n.under_even ? 0 : 1;
            if (dir_[4 * x + u] != 1) u += 2;
            Crossing c;
            for (int j = 0; j < 4; ++j) c.ends[j] = lab_[4 * x + ((u + j) & 3)];
            c.over_enters_e1 = dir_[4 * x + ((u + 1) & 3)] == 1;
            code.xs.push_back(c);
        }
        std::sort(code.xs.begin(), code.xs.end());
        return code;
    }

private:
    const SlotGraph& g_;
    const std::vector<signed char>& in_;
    bool oriented_;
    std::vector<int> lab_;
    std::vector<signed char> dir_;
    std::vector<int> heads_;
};

}  // namespace

LinkDiagram rebuild(const SlotGraph& g, bool oriented) {
    const int n = static_cast<int>(g.nodes.size());
    std::vector<signed char> in;
    if (oriented) {
        in = orient(g);
    } else {
        in.assign(4 * n, -1);
    }

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int s = 0; s < 4 * n; ++s) parent[find(node_of(s))] = find(node_of(g.peer(s)));
    std::vector<std::vector<int>> pieces;
    std::vector<int> piece_of(n, -1);
    for (int x = 0; x < n; ++x) {
        int r = find(x);
        if (piece_of[r] < 0) {
            piece_of[r] = static_cast<int>(pieces.size());
            pieces.emplace_back();
        }
        pieces[piece_of[r]].push_back(x);
    }

    Labeler labeler(g, in, oriented);
    std::vector<PieceCode> codes;
    for (const auto& piece : pieces) {
        PieceCode best;
        bool have = false;
        for (int x : piece) {
            for (int p = 0; p < 4; ++p) {
                int s = 4 * x + p;
                if (oriented && in[s] != 0) continue;
                PieceCode c = labeler.run(piece, s);
                if (!have || c < best) {
                    best = std::move(c);
                    have = true;
                }
            }
        }
        codes.push_back(std::move(best));
    }
    std::sort(codes.begin(), codes.end());

    std::vector<Crossing> xs;
    std::vector<std::pair<int, int>> comps;
    int offset = 0;
    for (const auto& c : codes) {
        for (Crossing x : c.xs) {
            for (int& e : x.ends) e += offset;
            xs.push_back(x);
        }
        for (int len : c.lengths) {
            comps.emplace_back(offset + 1, offset + len);
            offset += len;
        }
    }
    return LinkDiagram(std::move(xs), std::move(comps), g.free_loops);
}

}  // namespace ulink::detail
