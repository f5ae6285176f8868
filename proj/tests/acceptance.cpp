#include <chrono>
#include <cstdio>
#include <string>

#include "ulink/census.hpp"
#include "ulink/homomorphism.hpp"
#include "ulink/oracle.hpp"
#include "ulink/skein.hpp"

using namespace ulink;

namespace {

int failed = 0;

void report(int id, const char* what, bool ok, const std::string& detail, double secs) {
    std::printf("%s %d %s: %s (%.2fs)\n", ok ? "PASS" : "FAIL", id, what, detail.c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++failed;
}

template <class F>
void criterion(int id, const char* what, F body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(id, what, ok, detail, secs);
}

const char* kHopf = "C(1,3,2,4) C(3,1,4,2)";
const char* kTrefoil = "C(1,5,2,4) C(3,1,4,6) C(5,3,6,2)";

}  // namespace

int main() {
    const auto census = load_census(default_census_path());

    criterion(1, "jones equals bracket oracle on census", [&](std::string& detail) {
        int bad = 0;
        for (const auto& e : census)
            if (jones(e.diagram) != jones_from_bracket(e.diagram)) {
                ++bad;
                detail += e.name + " ";
            }
        detail += std::to_string(census.size()) + " diagrams, " + std::to_string(bad) + " mismatches";
        return bad == 0 && census.size() >= 12;
    });

    criterion(2, "Q specialization equals Q oracle (c<=6)", [&](std::string& detail) {
        auto h = q_hom();
        int n = 0, bad = 0;
        for (const auto& e : census) {
            if (e.diagram.crossing_count() > 6) continue;
            ++n;
            if (specialize(invariant_b1(e.diagram).element, h) != q_oracle(e.diagram)) {
                ++bad;
                detail += e.name + " ";
            }
        }
        auto t = q_oracle(parse_diagram(kTrefoil)).to_string();
        detail += std::to_string(n) + " diagrams, " + std::to_string(bad) + " mismatches, trefoil " + t;
        return bad == 0 && n > 0 && t == "2*x^2 + 2*x - 3";
    });

    criterion(3, "Reidemeister suite, 200 diagrams", [&](std::string& detail) {
        int bad = 0, r1 = 0, r2 = 0, r3 = 0;
        for (std::uint64_t s = 1; s <= 200; ++s) {
            auto d = random_diagram(s, 8);
            auto r = check_reidemeister(d, 1, 1000 + s, 10);
            if (r.moves.size() != 1) {
                ++bad;
                continue;
            }
            const auto& m = r.moves.front();
            if (!m.ok()) ++bad;
            if (m.kind == MoveKind::R3) ++r3;
            else if (m.kind == MoveKind::R2Plus || m.kind == MoveKind::R2Minus) ++r2;
            else ++r1;
        }
        detail = "R1 " + std::to_string(r1) + ", R2 " + std::to_string(r2) + ", R3 " + std::to_string(r3) +
                 ", failures " + std::to_string(bad);
        return bad == 0;
    });

    criterion(4, "order and context independence (c<=6)", [&](std::string& detail) {
        int n = 0, bad = 0;
        for (const auto& e : census) {
            if (e.diagram.crossing_count() > 6) continue;
            ++n;
            auto r = check_order_independence(e.diagram, 20, 1);
            if (!r.pass || r.b1_contexts < 20) {
                ++bad;
                detail += e.name + " ";
            }
        }
        detail += std::to_string(n) + " diagrams, " + std::to_string(bad) + " failures";
        return bad == 0;
    });

    criterion(5, "kink diagrams evaluate to v_1", [&](std::string& detail) {
        bool ok = true;
        for (const char* code : {"C(1,1,2,2)", "C(1,2,2,1)"}) {
            auto d = parse_diagram(code);
            auto x = invariant_b1(d).element.to_string();
            auto y = invariant_b2(d).element.to_string();
            detail += std::string(code) + " b1=" + x + " b2=" + y + "; ";
            ok = ok && x == "v_1" && y == "v_1";
        }
        return ok;
    });

    criterion(6, "rewriting health", [&](std::string& detail) {
        bool ok = true;
        for (auto p : {Presentation::B1, Presentation::B1A, Presentation::B2}) {
            auto h = check_rewriting(p, 1000, 10, 5);
            detail += to_string(p) + " samples=" + std::to_string(h.samples) + " bad=" +
                      std::to_string(h.non_confluent + h.non_idempotent + h.relation_failures) + "; ";
            ok = ok && h.pass() && h.samples == 1000;
        }
        return ok;
    });

    criterion(7, "specialization maps kill all relations", [&](std::string& detail) {
        auto j = check_hom(jones_hom(), Presentation::B2, 10);
        auto q = check_hom(q_hom(), Presentation::B1, 10);
        detail = "jones " + std::to_string(j.entries.size()) + " relations, " + std::to_string(j.failures()) +
                 " nonzero; q " + std::to_string(q.entries.size()) + " relations, " + std::to_string(q.failures()) +
                 " nonzero";
        return j.pass() && q.pass();
    });

    criterion(8, "B1 separates Hopf link from 2-unlink", [&](std::string& detail) {
        auto hopf = invariant_b1(parse_diagram(kHopf)).element;
        auto unlink = invariant_b1(parse_diagram("O 2")).element;
        detail = "hopf " + hopf.to_string() + " vs " + unlink.to_string();
        auto expected = parse_element("-e'*v_2 - a'*v_1 - e*a'*v_1", Presentation::B1);
        return !equal(hopf, unlink) && equal(hopf, expected);
    });

    return failed == 0 ? 0 : 1;
}
