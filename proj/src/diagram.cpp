#include "ulink/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "slot_graph.hpp"

namespace ulink {

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, std::vector<std::pair<int, int>> components,
                         int free_loops)
    : crossings_(std::move(crossings)), components_(std::move(components)), free_loops_(free_loops) {
    if (free_loops_ < 0) throw DiagramError("negative free loop count");
    index();
}

LinkDiagram LinkDiagram::unlink(int n) {
    if (n < 1) throw DiagramError("unlink needs at least one component");
    return LinkDiagram({}, {}, n);
}

void LinkDiagram::index() {
    arc_count_ = 0;
    for (auto [a, b] : components_) {
        if (a != arc_count_ + 1 || b < a) throw DiagramError("component ranges must tile 1..n in order");
        arc_count_ = b;
    }
    if (crossings_.empty() != (arc_count_ == 0)) throw DiagramError("arcs without crossings");
    if (crossings_.empty() && free_loops_ == 0) throw DiagramError("empty diagram");
    if (2 * static_cast<int>(crossings_.size()) != arc_count_)
        throw DiagramError("arc count must be twice the crossing count");

    arc_comp_.assign(arc_count_ + 1, -1);
    for (int c = 0; c < static_cast<int>(components_.size()); ++c)
        for (int k = components_[c].first; k <= components_[c].second; ++k) arc_comp_[k] = c;

    head_.assign(arc_count_ + 1, {-1, -1});
    tail_.assign(arc_count_ + 1, {-1, -1});
    for (int x = 0; x < crossing_count(); ++x) {
        for (int p = 0; p < 4; ++p) {
            int k = crossings_[x].ends[p];
            if (k < 1 || k > arc_count_) throw DiagramError("arc id out of range: " + std::to_string(k));
            auto& slot = slot_incoming(x, p) ? head_[k] : tail_[k];
            if (slot.first >= 0) throw DiagramError("arc " + std::to_string(k) + " has a repeated end");
            slot = {x, p};
        }
    }
    for (int k = 1; k <= arc_count_; ++k) {
        auto [x, p] = head_[k];
        auto [y, q] = tail_[next_arc(k)];
        if (x != y || q != ((p + 2) & 3))
            throw DiagramError("arc " + std::to_string(k) + " is not followed by arc " + std::to_string(next_arc(k)));
    }
}

int LinkDiagram::next_arc(int arc) const {
    auto [a, b] = components_[arc_comp_[arc]];
    return arc == b ? a : arc + 1;
}

int LinkDiagram::prev_arc(int arc) const {
    auto [a, b] = components_[arc_comp_[arc]];
    return arc == a ? b : arc - 1;
}

bool LinkDiagram::slot_incoming(int x, int pos) const {
    const Crossing& c = crossings_[x];
    switch (pos) {
        case 0: return true;
        case 2: return false;
        case 1: return c.over_enters_e1;
        default: return !c.over_enters_e1;
    }
}

bool LinkDiagram::is_self(int x) const {
    const Crossing& c = crossings_[x];
    return arc_comp_[c.ends[0]] == arc_comp_[c.ends[1]];
}

int LinkDiagram::writhe() const {
    int w = 0;
    for (const auto& c : crossings_) w += c.sign();
    return w;
}

std::string LinkDiagram::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& c : crossings_) {
        if (!first) os << ' ';
        first = false;
        os << "C(" << c.ends[0] << ',' << c.ends[1] << ',' << c.ends[2] << ',' << c.ends[3] << ')';
    }
    if (free_loops_ > 0) {
        if (!first) os << ' ';
        os << "O " << free_loops_;
    }
    return os.str();
}

std::string LinkDiagram::exact_code() const {
    std::vector<Crossing> xs = crossings_;
    std::sort(xs.begin(), xs.end());
    std::string s;
    s.reserve(16 * xs.size() + 16);
    for (const auto& c : xs) {
        for (int e : c.ends) {
            s += std::to_string(e);
            s += ',';
        }
        s += c.over_enters_e1 ? '+' : '-';
    }
    s += '|';
    for (auto [a, b] : components_) {
        s += std::to_string(b);
        s += ',';
    }
    s += '|';
    s += std::to_string(free_loops_);
    return s;
}

// ---------------------------------------------------------------- parsing

namespace {

struct RawCrossing {
    std::array<int, 4> ends;
    bool pd;  // X(...) token: ends[0] must be incoming
};

class Scanner {
public:
    explicit Scanner(std::string_view t) : t_(t) {}

    bool done() {
        skip();
        return i_ >= t_.size();
    }
    char peek() { return t_[i_]; }
    char get() { return t_[i_++]; }
    void skip() {
        while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
    }
    void expect(char ch) {
        skip();
        if (i_ >= t_.size() || t_[i_] != ch) fail();
        ++i_;
    }
    int integer() {
        skip();
        std::size_t j = i_;
        if (j < t_.size() && t_[j] == '-') ++j;
        std::size_t k = j;
        while (k < t_.size() && std::isdigit(static_cast<unsigned char>(t_[k]))) ++k;
        if (k == j || k - j > 9) fail();
        int v = std::stoi(std::string(t_.substr(i_, k - i_)));
        i_ = k;
        return v;
    }
    [[noreturn]] void fail() {
        std::size_t a = i_ < t_.size() ? i_ : t_.size();
        std::size_t e = a;
        while (e < t_.size() && !std::isspace(static_cast<unsigned char>(t_[e]))) ++e;
        throw DiagramError("malformed token near '" + std::string(t_.substr(a, e - a)) + "'");
    }

private:
    std::string_view t_;
    std::size_t i_ = 0;
};

}  // namespace

LinkDiagram parse_diagram(std::string_view text) {
    Scanner sc(text);
    std::vector<RawCrossing> raw;
    int loops = 0;
    bool any = false;
    while (!sc.done()) {
        any = true;
        char ch = sc.get();
        if (ch == 'C' || ch == 'X') {
            RawCrossing r{{}, ch == 'X'};
            sc.expect('(');
            for (int j = 0; j < 4; ++j) {
                r.ends[j] = sc.integer();
                sc.expect(j < 3 ? ',' : ')');
            }
            raw.push_back(r);
        } else if (ch == 'O') {
            int n = sc.integer();
            if (n < 1) throw DiagramError("free loop count must be positive");
            loops += n;
        } else {
            sc.fail();
        }
    }
    if (!any) throw DiagramError("empty input");

    const int nx = static_cast<int>(raw.size());
    std::map<int, std::vector<int>> occ;  // arc -> slots 4x+p
    for (int x = 0; x < nx; ++x)
        for (int p = 0; p < 4; ++p) occ[raw[x].ends[p]].push_back(4 * x + p);
    for (const auto& [k, v] : occ)
        if (v.size() != 2)
            throw DiagramError("arc " + std::to_string(k) + " appears " + std::to_string(v.size()) + " times");
    const int n = 2 * nx;
    for (int k = 1; k <= n; ++k)
        if (!occ.count(k)) throw DiagramError("arc count: arcs must be numbered 1.." + std::to_string(n));

    auto arc_at = [&](int s) { return raw[s >> 2].ends[s & 3]; };
    auto other_end = [&](int s) {
        const auto& v = occ[arc_at(s)];
        return v[0] == s ? v[1] : v[0];
    };

    // in[s]: whether slot s is an incoming end
    std::vector<signed char> in(4 * nx, -1);
    std::vector<char> seen(4 * nx, 0);
    std::vector<std::pair<int, int>> comps;
    for (int s0 = 0; s0 < 4 * nx; ++s0) {
        if (seen[s0]) continue;
        // walk treating s0 as incoming: cycle of (in, out) slot pairs
        std::vector<int> seq;
        std::vector<int> arcs;
        int s = s0;
        do {
            seq.push_back(s);
            int o = detail::through(s);
            seq.push_back(o);
            arcs.push_back(arc_at(o));
            s = other_end(o);
        } while (s != s0);
        for (int t : seq) seen[t] = 1;
        const int len = static_cast<int>(arcs.size());
        int lo = *std::min_element(arcs.begin(), arcs.end());
        int hi = *std::max_element(arcs.begin(), arcs.end());
        if (hi - lo + 1 != len) throw DiagramError("inconsistent arc numbering: component arcs are not consecutive");
        auto succ = [&](int k) { return k == hi ? lo : k + 1; };
        bool up = true, down = true;
        for (int i = 0; i < len; ++i) {
            int a = arcs[i], b = arcs[(i + 1) % len];
            if (b != succ(a)) up = false;
            if (a != succ(b)) down = false;
        }
        if (!up && !down) throw DiagramError("inconsistent arc numbering along a component");
        bool keep;  // keep the walk direction (s0 incoming)
        if (up != down) {
            keep = up;
        } else {
            // both directions fit: prefer the first under passage entering at
            // its written e0, else the first occurrence entering
            int pick = -1;
            for (int t : seq)
                if ((t & 3) % 2 == 0 && (pick < 0 || (t >> 2) < (pick >> 2))) pick = t;
            if (pick >= 0) {
                pick = 4 * (pick >> 2);
            } else {
                pick = *std::min_element(seq.begin(), seq.end());
            }
            auto it = std::find(seq.begin(), seq.end(), pick);
            keep = ((it - seq.begin()) % 2) == 0;
        }
        for (std::size_t i = 0; i < seq.size(); ++i) in[seq[i]] = ((i % 2 == 0) == keep) ? 1 : 0;
        comps.emplace_back(lo, hi);
    }
    std::sort(comps.begin(), comps.end());

    std::vector<Crossing> xs;
    for (int x = 0; x < nx; ++x) {
        Crossing c;
        int u = in[4 * x] == 1 ? 0 : 2;
        if (raw[x].pd && u != 0) throw DiagramError("inconsistent arc numbering: X entry does not start incoming");
        for (int j = 0; j < 4; ++j) c.ends[j] = raw[x].ends[(u + j) & 3];
        c.over_enters_e1 = in[4 * x + ((u + 1) & 3)] == 1;
        xs.push_back(c);
    }
    return LinkDiagram(std::move(xs), std::move(comps), loops);
}

// -------------------------------------------------------------- traversal

ComponentTable trace_components(const LinkDiagram& d) {
    ComponentTable t;
    t.arc_component.assign(d.arc_count() + 1, -1);
    int c = 0;
    for (int k = 1; k <= d.arc_count(); ++k) {
        if (t.arc_component[k] >= 0) continue;
        int a = k;
        do {
            t.arc_component[a] = c;
            auto [x, p] = d.head(a);
            a = d.crossings()[x].ends[(p + 2) & 3];
        } while (a != k);
        ++c;
    }
    t.mu = c + d.free_loops();
    return t;
}

TraversalContext canonical_context(const LinkDiagram& d) {
    TraversalContext ctx;
    const int m = static_cast<int>(d.components().size());
    for (int c = 0; c < m; ++c) {
        ctx.order.push_back(c);
        ctx.base_arc.push_back(d.components()[c].first);
        ctx.forward.push_back(true);
    }
    return ctx;
}

TraversalContext random_context(const LinkDiagram& d, std::mt19937_64& rng) {
    TraversalContext ctx = canonical_context(d);
    const int m = static_cast<int>(ctx.order.size());
    for (int i = m - 1; i > 0; --i) std::swap(ctx.order[i], ctx.order[rng() % (i + 1)]);
    for (int c = 0; c < m; ++c) {
        auto [a, b] = d.components()[c];
        ctx.base_arc[c] = a + static_cast<int>(rng() % static_cast<unsigned>(b - a + 1));
        ctx.forward[c] = (rng() & 1) != 0;
    }
    return ctx;
}

CrossingReport classify(const LinkDiagram& d, const TraversalContext& ctx) {
    const int nx = d.crossing_count();
    CrossingReport r;
    r.crossings.resize(nx);
    std::vector<char> visited(nx, 0);
    for (int comp : ctx.order) {
        const int start = ctx.base_arc[comp];
        const bool fwd = ctx.forward[comp];
        int arc = start;
        do {
            auto [x, p] = fwd ? d.head(arc) : d.tail(arc);
            if (!visited[x]) {
                visited[x] = 1;
                if (p % 2 == 1) {
                    r.crossings[x].status = Status::Bad;
                    ++r.bad_count;
                    if (!r.first_bad) r.first_bad = x;
                }
            }
            arc = fwd ? d.next_arc(arc) : d.prev_arc(arc);
        } while (arc != start);
    }
    for (int x = 0; x < nx; ++x) {
        const Crossing& c = d.crossings()[x];
        int cu = d.component_of(c.ends[0]);
        int co = d.component_of(c.ends[1]);
        auto& info = r.crossings[x];
        info.locality = cu == co ? Locality::Self : Locality::Inter;
        info.sign = c.sign() * (ctx.forward[cu] ? 1 : -1) * (ctx.forward[co] ? 1 : -1);
        r.writhe += info.sign;
    }
    return r;
}

// ---------------------------------------------------------------- surgery

LinkDiagram smooth(const LinkDiagram& d, int x, Smoothing kind) {
    if (x < 0 || x >= d.crossing_count()) throw DiagramError("invalid crossing index");
    auto g = detail::to_graph(d);
    auto out = detail::splice(g, {{x, kind == Smoothing::I ? detail::kPairI : detail::kPairII}});
    return detail::rebuild(out, false);
}

namespace {
Crossing switched(const Crossing& c) {
    Crossing s;
    const auto& e = c.ends;
    if (c.over_enters_e1) {
        s.ends = {e[1], e[2], e[3], e[0]};
        s.over_enters_e1 = false;
    } else {
        s.ends = {e[3], e[0], e[1], e[2]};
        s.over_enters_e1 = true;
    }
    return s;
}
}  // namespace

LinkDiagram switch_crossing(const LinkDiagram& d, int x) {
    if (x < 0 || x >= d.crossing_count()) throw DiagramError("invalid crossing index");
    auto xs = d.crossings();
    xs[x] = switched(xs[x]);
    return LinkDiagram(std::move(xs), d.components(), d.free_loops());
}

LinkDiagram mirror(const LinkDiagram& d) {
    auto xs = d.crossings();
    for (auto& c : xs) c = switched(c);
    return LinkDiagram(std::move(xs), d.components(), d.free_loops());
}

LinkDiagram canonical(const LinkDiagram& d, bool oriented) {
    return detail::rebuild(detail::to_graph(d), oriented);
}

std::string canonical_code(const LinkDiagram& d, bool oriented) { return canonical(d, oriented).exact_code(); }

// ------------------------------------------------------------------ faces

std::vector<std::vector<EdgeSide>> faces(const LinkDiagram& d) {
    const int n = d.arc_count();
    std::vector<char> seen(2 * (n + 1), 0);
    auto id = [](EdgeSide e) { return 2 * e.arc + (e.forward ? 1 : 0); };
    std::vector<std::vector<EdgeSide>> out;
    for (int k = 1; k <= n; ++k) {
        for (bool f : {true, false}) {
            EdgeSide e{k, f};
            if (seen[id(e)]) continue;
            std::vector<EdgeSide> face;
            EdgeSide cur = e;
            do {
                seen[id(cur)] = 1;
                face.push_back(cur);
                auto [x, p] = cur.forward ? d.head(cur.arc) : d.tail(cur.arc);
                int q = (p + 3) & 3;
                int a = d.crossings()[x].ends[q];
                cur = EdgeSide{a, !d.slot_incoming(x, q)};
            } while (!(cur == e));
            out.push_back(std::move(face));
        }
    }
    return out;
}

bool is_planar(const LinkDiagram& d) {
    const int nx = d.crossing_count();
    std::vector<int> parent(nx);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int k = 1; k <= d.arc_count(); ++k) parent[find(d.head(k).first)] = find(d.tail(k).first);
    std::map<int, int> vertices, face_count;
    for (int x = 0; x < nx; ++x) ++vertices[find(x)];
    for (const auto& f : faces(d)) ++face_count[find(d.head(f[0].arc).first)];
    for (auto [root, v] : vertices)
        if (face_count[root] != v + 2) return false;
    return true;
}

}  // namespace ulink
