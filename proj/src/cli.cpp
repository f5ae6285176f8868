#include "ulink/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ulink/census.hpp"
#include "ulink/homomorphism.hpp"
#include "ulink/oracle.hpp"
#include "ulink/skein.hpp"

namespace ulink {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::vector<std::string> kInvariants{"b1", "b1w", "b2", "b2w", "jones", "q"};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string census_path(const std::string& name) {
    if (name.empty()) return default_census_path();
    if (std::filesystem::exists(name)) return name;
    std::string bundled = std::string(ULINK_CENSUS_DIR) + "/" + name;
    if (std::filesystem::exists(bundled)) return bundled;
    throw UsageError("census file not found: " + name);
}

std::vector<CensusEntry> load_inputs(const RunConfig& cfg, bool default_census) {
    if (!cfg.code.empty()) return {{"input", cfg.code, parse_diagram(cfg.code)}};
    if (!cfg.file.empty()) {
        std::string text = read_file(cfg.file);
        return {{cfg.file, text, parse_diagram(text)}};
    }
    if (!cfg.census.empty() || default_census) {
        std::string path = census_path(cfg.census);
        try {
            return load_census(path);
        } catch (const std::ios_base::failure& e) {
            throw UsageError(e.what());
        }
    }
    throw UsageError("no input: give --code, --file or --census");
}

std::optional<Homomorphism> load_spec(const std::string& spec) {
    if (spec.empty()) return std::nullopt;
    if (spec == "jones") return jones_hom();
    if (spec == "bracket") return bracket_hom();
    if (spec == "q") return q_hom();
    return homomorphism_from_json(read_file(spec));
}

void check_cap(const LinkDiagram& d, int cap) {
    if (d.crossing_count() > cap)
        throw CapError("diagram has " + std::to_string(d.crossing_count()) + " crossings, cap is " + std::to_string(cap));
}

json stats_json(const DiagramStats& s) { return {{"c", s.c}, {"d", s.d}, {"mu", s.mu}, {"w", s.w}}; }

std::string stats_text(const DiagramStats& s) {
    return "c=" + std::to_string(s.c) + " d=" + std::to_string(s.d) + " mu=" + std::to_string(s.mu) +
           " w=" + std::to_string(s.w);
}

// One computed invariant: the rendered value, its JSON form and extra lines.
struct Computed {
    std::string text;
    json value;
    DiagramStats stats;
    std::vector<std::pair<std::string, std::string>> extra;
};

json ring_json(const RingElement& x) { return json::parse(to_json(x)); }

Computed compute_one(const LinkDiagram& d, const std::string& inv, const std::optional<Homomorphism>& spec,
                     const RunConfig& cfg, int cap) {
    check_cap(d, cap);
    SkeinOptions opt;
    opt.max_crossings = cap;
    Computed c;
    c.stats = stats(d, canonical_context(d));
    auto add_specialized = [&](const RingElement& x) {
        if (!spec) return;
        if (spec->source != x.presentation())
            throw UsageError("specialization " + spec->name + " is defined on " + to_string(spec->source));
        int n = std::max(cfg.n_max, x.max_n() + 1);
        if (!check_hom(*spec, x.presentation(), n).pass())
            throw std::runtime_error("specialization " + spec->name + " fails its relation check");
        c.extra.emplace_back("specialized", specialize(x, *spec).to_string());
    };
    if (inv == "b1") {
        RingElement x = invariant_b1(d, std::nullopt, opt).element;
        c.text = x.to_string();
        c.value = ring_json(x);
        add_specialized(x);
    } else if (inv == "b1w") {
        WritheInvariant v = invariant_b1_writhe(d, std::nullopt, opt);
        c.text = v.F.to_string();
        c.value = ring_json(v.F);
        c.extra.emplace_back("f", v.f.to_string());
    } else if (inv == "b2") {
        RingElement x = invariant_b2(d, std::nullopt, opt).element;
        c.text = x.to_string();
        c.value = ring_json(x);
        add_specialized(x);
    } else if (inv == "b2w") {
        if (!spec) throw UsageError("b2w needs --spec");
        int n = std::max(cfg.n_max, d.component_count() + 1);
        if (!spec->b2prime || !check_hom(*spec, Presentation::B2, n).pass())
            throw std::runtime_error("specialization " + spec->name + " fails the writhe-modified B2 relations");
        LaurentPoly p = invariant_b2_writhe(d, *spec, opt);
        c.text = p.to_string();
        c.value = c.text;
    } else if (inv == "jones") {
        LaurentPoly p = jones(d, opt);
        c.text = p.to_string_quarters("t");
        c.value = c.text;
        c.extra.emplace_back("q", p.to_string());
    } else if (inv == "q") {
        static const Homomorphism h = q_hom();
        LaurentPoly p = specialize(invariant_b1(d, std::nullopt, opt).element, h);
        c.text = p.to_string();
        c.value = c.text;
    } else {
        throw UsageError("unknown invariant " + inv);
    }
    return c;
}

int cmd_compute(const RunConfig& cfg, std::ostream& out) {
    auto inputs = load_inputs(cfg, false);
    auto spec = load_spec(cfg.spec);
    const int cap = cfg.max_crossings > 0 ? cfg.max_crossings : 16;
    const LinkDiagram& d = inputs.front().diagram;
    Computed c = compute_one(d, cfg.invariant, spec, cfg, cap);
    if (cfg.format == "json") {
        json j{{"command", "compute"}, {"invariant", cfg.invariant}, {"value", c.value}, {"text", c.text}};
        j.update(stats_json(c.stats));
        for (const auto& [k, v] : c.extra) j[k] = v;
        out << j.dump(2) << "\n";
    } else {
        out << c.text << "\n";
        for (const auto& [k, v] : c.extra) out << k << ": " << v << "\n";
        out << stats_text(c.stats) << "\n";
    }
    return kExitOk;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
    auto inputs = load_inputs(cfg, true);
    auto spec = load_spec(cfg.spec);
    const int cap = cfg.max_crossings > 0 ? cfg.max_crossings : 16;
    auto invs = split_list(cfg.invariant);
    for (const auto& inv : invs)
        if (std::find(kInvariants.begin(), kInvariants.end(), inv) == kInvariants.end())
            throw UsageError("unknown invariant " + inv);
    const int n = static_cast<int>(inputs.size());
    const int m = static_cast<int>(invs.size());
    std::vector<std::optional<Computed>> cells(static_cast<std::size_t>(n) * m);
    std::vector<std::string> errors(cells.size());
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < n * m; ++k) {
        try {
            cells[k] = compute_one(inputs[k / m].diagram, invs[k % m], spec, cfg, cap);
        } catch (const CapError& e) {
            errors[k] = e.what();
        }
    }
    bool capped = false;
    json rows = json::array();
    if (cfg.format != "json") out << "name,invariant,c,mu,value\n";
    for (int k = 0; k < n * m; ++k) {
        const auto& e = inputs[k / m];
        const std::string& inv = invs[k % m];
        if (!cells[k]) capped = true;
        if (cfg.format == "json") {
            json r{{"name", e.name}, {"invariant", inv}, {"c", e.diagram.crossing_count()}, {"mu", e.diagram.component_count()}};
            if (cells[k]) {
                r["value"] = cells[k]->value;
                r["text"] = cells[k]->text;
            } else {
                r["error"] = errors[k];
            }
            rows.push_back(r);
        } else {
            out << csv_field(e.name) << ',' << inv << ',' << e.diagram.crossing_count() << ','
                << e.diagram.component_count() << ',' << csv_field(cells[k] ? cells[k]->text : "cap exceeded") << "\n";
        }
    }
    if (cfg.format == "json") out << rows.dump(2) << "\n";
    return capped ? kExitCap : kExitOk;
}

struct DiagramVerdict {
    bool skipped = false;
    OrderReport order;
    ReidemeisterReport moves;
    bool jones_ok = true;
    bool q_ok = true;
    int failures() const {
        return (order.pass ? 0 : 1) + moves.failures() + (jones_ok ? 0 : 1) + (q_ok ? 0 : 1);
    }
};

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    auto inputs = load_inputs(cfg, true);
    auto spec = load_spec(cfg.spec);
    const int cap = cfg.max_crossings > 0 ? cfg.max_crossings : 9;
    int failures = 0;
    json report{{"command", "verify"}, {"seed", cfg.seed}, {"trials", cfg.trials}, {"max_crossings", cap}};
    std::ostringstream text;

    std::vector<std::pair<Homomorphism, Presentation>> homs{{jones_hom(), Presentation::B2}, {q_hom(), Presentation::B1}};
    if (spec) homs.emplace_back(*spec, spec->source);
    json hj = json::array();
    for (const auto& [h, p] : homs) {
        HomCheckReport r = check_hom(h, p, cfg.n_max);
        failures += r.failures();
        json fails = json::array();
        for (const auto& e : r.entries)
            if (!e.residual.is_zero()) fails.push_back({{"relation", e.relation}, {"n", e.n}, {"residual", e.residual.to_string()}});
        hj.push_back({{"homomorphism", h.name}, {"presentation", to_string(p)}, {"b2prime", h.b2prime},
                      {"relations", r.entries.size()}, {"failures", fails}});
        text << "check_hom " << h.name << " on " << to_string(p) << (h.b2prime ? "'" : "") << " n_max=" << cfg.n_max
             << ": " << (r.pass() ? "pass" : "FAIL") << " (" << r.entries.size() << " relations)\n";
        for (const auto& f : fails) text << "  residual " << f["relation"].get<std::string>() << " n=" << f["n"] << ": "
                                         << f["residual"].get<std::string>() << "\n";
    }
    report["hom_checks"] = hj;

    json rw = json::array();
    for (Presentation p : {Presentation::B1, Presentation::B1A, Presentation::B2}) {
        RewriteHealth h = check_rewriting(p, 1000, 10, cfg.seed);
        int f = h.non_confluent + h.non_idempotent + h.relation_failures;
        failures += f;
        rw.push_back({{"presentation", to_string(p)}, {"samples", h.samples}, {"non_confluent", h.non_confluent},
                      {"non_idempotent", h.non_idempotent}, {"relation_failures", h.relation_failures},
                      {"witness", h.witness}});
        text << "rewriting " << to_string(p) << ": " << h.samples << " samples, " << h.non_confluent
             << " non-confluent, " << h.non_idempotent << " non-idempotent, " << h.relation_failures
             << " relation failures" << (h.witness.empty() ? "" : " (" + h.witness + ")") << "\n";
    }
    report["rewriting"] = rw;

    const int n = static_cast<int>(inputs.size());
    std::vector<DiagramVerdict> verdicts(n);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        const LinkDiagram& d = inputs[i].diagram;
        DiagramVerdict& v = verdicts[i];
        if (d.crossing_count() > cap) {
            v.skipped = true;
            continue;
        }
        v.order = check_order_independence(d, 20, cfg.seed + i);
        v.moves = check_reidemeister(d, cfg.trials, cfg.seed + i, cap);
        v.jones_ok = jones(d) == jones_from_bracket(d);
        v.q_ok = specialize(invariant_b1(d).element, q_hom()) == q_oracle(d);
    }
    json dj = json::array();
    bool capped = false;
    for (int i = 0; i < n; ++i) {
        const auto& e = inputs[i];
        const auto& v = verdicts[i];
        json r{{"name", e.name}, {"c", e.diagram.crossing_count()}};
        if (v.skipped) {
            capped = true;
            r["skipped"] = "cap exceeded";
            text << e.name << ": skipped, " << e.diagram.crossing_count() << " crossings over cap " << cap << "\n";
            dj.push_back(r);
            continue;
        }
        failures += v.failures();
        r["order"] = {{"pass", v.order.pass}, {"b2_sites", v.order.b2_sites}, {"b1_contexts", v.order.b1_contexts},
                      {"witness", v.order.witness}};
        json moves = json::array();
        for (const auto& m : v.moves.moves)
            if (!m.ok())
                moves.push_back({{"kind", to_string(m.kind)}, {"b1", m.b1}, {"b2", m.b2}, {"b1w_F", m.b1w_F},
                                 {"b1w_f", m.b1w_f}, {"jones", m.jones}});
        r["reidemeister"] = {{"moves", v.moves.moves.size()}, {"failures", moves}};
        r["jones_oracle"] = v.jones_ok;
        r["q_oracle"] = v.q_ok;
        dj.push_back(r);
        text << e.name << " c=" << e.diagram.crossing_count() << ": order " << (v.order.pass ? "pass" : "FAIL") << " ("
             << v.order.b2_sites << " sites, " << v.order.b1_contexts << " contexts); moves "
             << v.moves.moves.size() - v.moves.failures() << "/" << v.moves.moves.size() << "; jones oracle "
             << (v.jones_ok ? "ok" : "FAIL") << "; q oracle " << (v.q_ok ? "ok" : "FAIL") << "\n";
        if (!v.order.pass) text << "  " << v.order.witness << "\n";
    }
    report["diagrams"] = dj;
    report["failures"] = failures;
    text << "failures: " << failures << "\n";
    if (cfg.format == "json")
        out << report.dump(2) << "\n";
    else
        out << text.str();
    if (failures > 0) return kExitVerifyFailed;
    return capped ? kExitCap : kExitOk;
}

void add_flags(CLI::App* sub, RunConfig& cfg, bool list_invariants) {
    auto* inv = sub->add_option("--invariant", cfg.invariant, list_invariants ? "comma-separated list of b1,b1w,b2,b2w,jones,q" : "b1|b1w|b2|b2w|jones|q");
    if (!list_invariants) inv->check(CLI::IsMember(kInvariants));
    sub->add_option("--code", cfg.code, "diagram code, e.g. \"C(1,2,2,1)\" or \"O 2\"");
    sub->add_option("--file", cfg.file, "file holding one diagram code");
    sub->add_option("--census", cfg.census, "census CSV (name,code); bare names resolve to the bundled directory");
    sub->add_option("--spec", cfg.spec, "specialization: jones, bracket, q or a JSON definition file");
    sub->add_option("--format", cfg.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--trials", cfg.trials, "random Reidemeister moves per diagram")->check(CLI::PositiveNumber);
    sub->add_option("--max-crossings", cfg.max_crossings, "crossing cap")->check(CLI::PositiveNumber);
    sub->add_option("--n-max", cfg.n_max, "largest v_n index for relation checks")->check(CLI::Range(2, 64));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Unoriented link invariants in presented rings", "ulink"};
    app.require_subcommand(1, 1);
    auto* compute = app.add_subcommand("compute", "compute one invariant of one diagram");
    auto* verify = app.add_subcommand("verify", "run the verification suites");
    auto* table = app.add_subcommand("table", "tabulate invariants over a census file");
    add_flags(compute, cfg, false);
    add_flags(verify, cfg, false);
    add_flags(table, cfg, true);
    table->get_option("--invariant")->default_str("b1,b2,jones,q");

    std::vector<std::string> argv_store{"ulink"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }
    if (table->parsed() && table->get_option("--invariant")->count() == 0) cfg.invariant = "b1,b2,jones,q";

    try {
        if (compute->parsed()) return cmd_compute(cfg, out);
        if (table->parsed()) return cmd_table(cfg, out);
        return cmd_verify(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DiagramError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const RingError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapError& e) {
        err << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
}

}  // namespace ulink
