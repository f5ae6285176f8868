#include <algorithm>
#include <map>
#include <numeric>

#include "slot_graph.hpp"
#include "ulink/diagram.hpp"

namespace ulink {

using detail::slot_id;
using detail::SlotGraph;

std::string to_string(MoveKind k) {
    switch (k) {
        case MoveKind::R1Plus: return "R1+";
        case MoveKind::R1Minus: return "R1-";
        case MoveKind::R2Plus: return "R2+";
        case MoveKind::R2Minus: return "R2-";
        case MoveKind::R3: return "R3";
    }
    return "?";
}

namespace {

[[noreturn]] void not_found(const char* what) { throw DiagramError(std::string("pattern not found: ") + what); }

// Slot where traversal of the side starts and where it arrives.
int start_slot(const LinkDiagram& d, EdgeSide e) { return slot_id(e.forward ? d.tail(e.arc) : d.head(e.arc)); }
int end_slot(const LinkDiagram& d, EdgeSide e) { return slot_id(e.forward ? d.head(e.arc) : d.tail(e.arc)); }

std::vector<EdgeSide> face_from(const LinkDiagram& d, EdgeSide e) {
    if (e.arc < 1 || e.arc > d.arc_count()) not_found("no such arc");
    std::vector<EdgeSide> face;
    EdgeSide cur = e;
    do {
        face.push_back(cur);
        auto [x, p] = cur.forward ? d.head(cur.arc) : d.tail(cur.arc);
        int q = (p + 3) & 3;
        cur = EdgeSide{d.crossings()[x].ends[q], !d.slot_incoming(x, q)};
    } while (!(cur == e));
    return face;
}

SlotGraph compact(const SlotGraph& g, const std::vector<int>& dead_nodes) {
    const int n = static_cast<int>(g.nodes.size());
    std::vector<int> idx(n, 0);
    for (int x : dead_nodes) idx[x] = -1;
    int m = 0;
    for (int x = 0; x < n; ++x)
        if (idx[x] >= 0) idx[x] = m++;
    SlotGraph out;
    out.free_loops = g.free_loops;
    for (int x = 0; x < n; ++x) {
        if (idx[x] < 0) continue;
        detail::Node node = g.nodes[x];
        for (int& s : node.peer) {
            if (idx[detail::node_of(s)] < 0) throw std::logic_error("dangling slot after move");
            s = 4 * idx[detail::node_of(s)] + detail::pos_of(s);
        }
        out.nodes.push_back(node);
    }
    return out;
}

std::vector<int> piece_of_arcs(const LinkDiagram& d) {
    const int nx = d.crossing_count();
    std::vector<int> parent(nx);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int k = 1; k <= d.arc_count(); ++k) parent[find(d.head(k).first)] = find(d.tail(k).first);
    std::vector<int> out(d.arc_count() + 1, -1);
    for (int k = 1; k <= d.arc_count(); ++k) out[k] = find(d.head(k).first);
    return out;
}

bool is_monogon(const LinkDiagram& d, int x) {
    for (int p = 0; p < 4; ++p) {
        int k = d.crossings()[x].ends[p];
        auto h = d.head(k), t = d.tail(k);
        if (h.first == x && t.first == x && ((h.second - t.second) & 1)) return true;
    }
    return false;
}

bool r2_minus_ok(const LinkDiagram& d, const std::vector<EdgeSide>& f) {
    if (f.size() != 2) return false;
    int s = start_slot(d, f[0]), e = end_slot(d, f[0]);
    if (detail::node_of(s) == detail::node_of(e)) return false;
    return (s & 1) == (e & 1);
}

struct Triangle {
    int v[3];
    int j[3];
};

std::optional<Triangle> triangle(const LinkDiagram& d, const std::vector<EdgeSide>& f) {
    if (f.size() != 3) return std::nullopt;
    Triangle t;
    for (int i = 0; i < 3; ++i) {
        int a = end_slot(d, f[(i + 2) % 3]);
        t.v[i] = detail::node_of(a);
        t.j[i] = detail::pos_of(a);
    }
    if (t.v[0] == t.v[1] || t.v[1] == t.v[2] || t.v[0] == t.v[2]) return std::nullopt;
    auto odd = [](int s) { return (s & 1) ? 1 : 0; };
    int over_a = odd(t.j[0] + 1) + odd(t.j[1] + 2);
    int over_b = odd(t.j[0] + 2) + odd(t.j[2] + 1);
    int over_c = odd(t.j[1] + 1) + odd(t.j[2] + 2);
    int counts[3] = {over_a, over_b, over_c};
    std::sort(counts, counts + 3);
    if (counts[0] != 0 || counts[1] != 1 || counts[2] != 2) return std::nullopt;
    return t;
}

LinkDiagram do_r1_plus(const LinkDiagram& d, const MoveSpec& m) {
    SlotGraph g = detail::to_graph(d);
    int x = g.add_node(!m.over);
    auto X = [&](int p) { return 4 * x + p; };
    // strand enters at 0, leaves at 2, loops back on its left into 3 and leaves at 1
    g.connect(X(2), X(3));
    if (m.side.arc < 0) {
        if (-m.side.arc > d.free_loops()) not_found("no such free loop");
        --g.free_loops;
        g.connect(X(1), X(0));
    } else {
        if (m.side.arc == 0 || m.side.arc > d.arc_count()) not_found("no such arc");
        int t = slot_id(d.tail(m.side.arc)), h = slot_id(d.head(m.side.arc));
        g.connect(m.side.forward ? t : h, X(0));
        g.connect(X(1), m.side.forward ? h : t);
    }
    return detail::rebuild(g, true);
}

LinkDiagram do_r1_minus(const LinkDiagram& d, int x) {
    if (x < 0 || x >= d.crossing_count() || !is_monogon(d, x)) not_found("R1- needs a kink");
    auto g = detail::splice(detail::to_graph(d), {{x, detail::kStraight}});
    return detail::rebuild(g, true);
}

LinkDiagram do_r2_plus(const LinkDiagram& d, const MoveSpec& m) {
    const EdgeSide d1 = m.side, d2 = m.other;
    auto check = [&](EdgeSide e) {
        if (e.arc < 0 ? -e.arc > d.free_loops() : (e.arc == 0 || e.arc > d.arc_count())) not_found("no such strand");
    };
    check(d1);
    check(d2);
    if (d1.arc > 0 && d2.arc > 0 && !(d1 == d2)) {
        auto pieces = piece_of_arcs(d);
        if (pieces[d1.arc] == pieces[d2.arc]) {
            auto f = face_from(d, d1);
            if (std::find(f.begin(), f.end(), d2) == f.end()) not_found("R2+ strands do not share a face");
        }
    }
    if (d1.arc < 0 && d1 == d2 && !d1.forward) not_found("free loop side");

    SlotGraph g = detail::to_graph(d);
    // first strand passes X bottom to top and Y top to bottom
    int x = g.add_node(!m.over);
    int y = g.add_node(!m.over);
    enum { S = 0, E = 1, N = 2, W = 3 };
    auto X = [&](int p) { return 4 * x + p; };
    auto Y = [&](int p) { return 4 * y + p; };
    auto ends = [&](EdgeSide e, int& from, int& to) {
        int t = slot_id(d.tail(e.arc)), h = slot_id(d.head(e.arc));
        from = e.forward ? t : h;
        to = e.forward ? h : t;
    };
    int loops_used = 0;
    g.connect(X(N), Y(N));
    g.connect(Y(W), X(E));
    if (d1 == d2) {
        g.connect(Y(S), Y(E));
        if (d1.arc < 0) {
            g.connect(X(W), X(S));
            loops_used = 1;
        } else {
            int from, to;
            ends(d1, from, to);
            g.connect(from, X(S));
            g.connect(X(W), to);
        }
    } else {
        if (d1.arc < 0) {
            g.connect(Y(S), X(S));
            ++loops_used;
        } else {
            int from, to;
            ends(d1, from, to);
            g.connect(from, X(S));
            g.connect(Y(S), to);
        }
        if (d2.arc < 0) {
            g.connect(X(W), Y(E));
            ++loops_used;
        } else {
            int from, to;
            ends(d2, from, to);
            g.connect(from, Y(E));
            g.connect(X(W), to);
        }
    }
    g.free_loops -= loops_used;
    return detail::rebuild(g, true);
}

LinkDiagram do_r2_minus(const LinkDiagram& d, EdgeSide side) {
    auto f = face_from(d, side);
    if (!r2_minus_ok(d, f)) not_found("R2- needs a bigon with one strand over at both ends");
    int x = detail::node_of(start_slot(d, f[0]));
    int y = detail::node_of(end_slot(d, f[0]));
    auto g = detail::splice(detail::to_graph(d), {{x, detail::kStraight}, {y, detail::kStraight}});
    return detail::rebuild(g, true);
}

LinkDiagram do_r3(const LinkDiagram& d, EdgeSide side) {
    auto f = face_from(d, side);
    auto tri = triangle(d, f);
    if (!tri) not_found("R3 needs a triangle with strands at three levels");
    const Triangle& t = *tri;
    SlotGraph g = detail::to_graph(d);
    int pos[6];
    for (int i = 0; i < 3; ++i) {
        pos[2 * i] = 4 * t.v[i] + ((t.j[i] + 1) & 3);
        pos[2 * i + 1] = 4 * t.v[i] + ((t.j[i] + 2) & 3);
    }
    auto odd = [](int s) { return (s & 1) != 0; };
    // W12 carries B and C (as V2), W34 carries A and B (as V0), W50 carries C and A (as V1)
    int w12 = g.add_node(!odd(pos[4]));
    int w34 = g.add_node(!odd(pos[0]));
    int w50 = g.add_node(!odd(pos[2]));
    int fresh[6] = {4 * w50 + 1, 4 * w12 + 0, 4 * w12 + 1, 4 * w34 + 0, 4 * w34 + 1, 4 * w50 + 0};
    std::map<int, int> to_new;
    for (int i = 0; i < 6; ++i) to_new[pos[i]] = fresh[i];
    std::vector<int> outer(6);
    for (int i = 0; i < 6; ++i) outer[i] = g.peer(pos[i]);
    for (int i = 0; i < 6; ++i) {
        auto it = to_new.find(outer[i]);
        g.connect(fresh[i], it == to_new.end() ? outer[i] : it->second);
    }
    g.connect(4 * w12 + 2, 4 * w34 + 3);
    g.connect(4 * w12 + 3, 4 * w50 + 2);
    g.connect(4 * w34 + 2, 4 * w50 + 3);
    // A component running only through the triangle would otherwise lose its direction.
    for (int i = 0; i < 6; ++i) {
        signed char f = g.in(pos[i]);
        if (f < 0) continue;
        g.nodes[detail::node_of(fresh[i])].in[detail::pos_of(fresh[i])] = f;
        int t = detail::through(fresh[i]);
        g.nodes[detail::node_of(t)].in[detail::pos_of(t)] = static_cast<signed char>(!f);
    }
    return detail::rebuild(compact(g, {t.v[0], t.v[1], t.v[2]}), true);
}

}  // namespace

std::vector<MoveSpec> enumerate_moves(const LinkDiagram& d, MoveKind kind) {
    std::vector<MoveSpec> out;
    const int n = d.arc_count();
    switch (kind) {
        case MoveKind::R1Plus:
            for (int k = 1; k <= n; ++k)
                for (bool f : {true, false})
                    for (bool o : {false, true}) out.push_back({kind, {k, f}, {}, -1, o});
            if (d.free_loops() > 0)
                for (bool o : {false, true}) out.push_back({kind, {-1, true}, {}, -1, o});
            break;
        case MoveKind::R1Minus:
            for (int x = 0; x < d.crossing_count(); ++x)
                if (is_monogon(d, x)) out.push_back({kind, {}, {}, x, false});
            break;
        case MoveKind::R2Plus: {
            auto fs = faces(d);
            auto piece = piece_of_arcs(d);
            std::vector<EdgeSide> all;
            for (int k = 1; k <= n; ++k) {
                all.push_back({k, true});
                all.push_back({k, false});
            }
            for (const auto& f : fs) {
                for (auto a : f) {
                    for (auto b : f)
                        for (bool o : {false, true}) out.push_back({kind, a, b, -1, o});
                    for (auto b : all)
                        if (piece[b.arc] != piece[a.arc])
                            for (bool o : {false, true}) out.push_back({kind, a, b, -1, o});
                }
            }
            if (d.free_loops() > 0) {
                EdgeSide loop{-1, true};
                for (auto a : all)
                    for (bool o : {false, true}) {
                        out.push_back({kind, a, loop, -1, o});
                        out.push_back({kind, loop, a, -1, o});
                    }
                for (bool o : {false, true}) out.push_back({kind, loop, loop, -1, o});
                if (d.free_loops() > 1)
                    for (bool o : {false, true}) out.push_back({kind, loop, EdgeSide{-2, true}, -1, o});
            }
            break;
        }
        case MoveKind::R2Minus:
            for (const auto& f : faces(d))
                if (r2_minus_ok(d, f)) out.push_back({kind, f[0], {}, -1, false});
            break;
        case MoveKind::R3:
            for (const auto& f : faces(d))
                if (triangle(d, f)) out.push_back({kind, f[0], {}, -1, false});
            break;
    }
    return out;
}

LinkDiagram apply_move(const LinkDiagram& d, const MoveSpec& m) {
    switch (m.kind) {
        case MoveKind::R1Plus: return do_r1_plus(d, m);
        case MoveKind::R1Minus: return do_r1_minus(d, m.crossing);
        case MoveKind::R2Plus: return do_r2_plus(d, m);
        case MoveKind::R2Minus: return do_r2_minus(d, m.side);
        case MoveKind::R3: return do_r3(d, m.side);
    }
    not_found("unknown move");
}

std::optional<MoveSpec> random_move(const LinkDiagram& d, std::mt19937_64& rng, int max_crossings) {
    const int c = d.crossing_count();
    std::vector<std::vector<MoveSpec>> options;
    for (MoveKind k : {MoveKind::R1Plus, MoveKind::R1Minus, MoveKind::R2Plus, MoveKind::R2Minus, MoveKind::R3}) {
        if (k == MoveKind::R1Plus && c + 1 > max_crossings) continue;
        if (k == MoveKind::R2Plus && c + 2 > max_crossings) continue;
        auto sites = enumerate_moves(d, k);
        if (!sites.empty()) options.push_back(std::move(sites));
    }
    if (options.empty()) return std::nullopt;
    const auto& pick = options[rng() % options.size()];
    return pick[rng() % pick.size()];
}

LinkDiagram random_diagram(std::uint64_t seed, int c_max) {
    std::mt19937_64 rng(seed);
    LinkDiagram d = LinkDiagram::unlink(1 + static_cast<int>(rng() % 2));
    if (c_max <= 0) return d;
    const int target = static_cast<int>(rng() % static_cast<unsigned>(c_max + 1));
    for (int guard = 0; d.crossing_count() < target && guard < 64; ++guard) {
        std::vector<MoveKind> kinds;
        if (d.crossing_count() + 1 <= c_max) kinds.push_back(MoveKind::R1Plus);
        if (d.crossing_count() + 2 <= c_max) kinds.push_back(MoveKind::R2Plus);
        kinds.push_back(MoveKind::R3);
        MoveKind k = kinds[rng() % kinds.size()];
        auto sites = enumerate_moves(d, k);
        if (sites.empty()) continue;
        d = apply_move(d, sites[rng() % sites.size()]);
    }
    for (int x = 0; x < d.crossing_count(); ++x)
        if (rng() & 1) d = switch_crossing(d, x);
    return d;
}

}  // namespace ulink
