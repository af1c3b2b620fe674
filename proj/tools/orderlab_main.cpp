// Command line front end: construct runs priority constructions and dumps
// their transcripts, verify re-checks dumped structures, reduce walks the
// coloring pipeline end to end, oracle cross-checks core routines against
// independent brute-force implementations kept local to this tool.
//
// Exit codes are total: 0 success, 2 malformed input or usage, 3 violated
// invariant or failed semantic check, 4 oracle mismatch.

#include "orderlab/coloring.hpp"
#include "orderlab/forcing.hpp"
#include "orderlab/immunity.hpp"
#include "orderlab/instances.hpp"
#include "orderlab/json_io.hpp"
#include "orderlab/opponent_script.hpp"
#include "orderlab/pairing.hpp"
#include "orderlab/partial_order.hpp"
#include "orderlab/priority.hpp"
#include "orderlab/reductions.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using json = nlohmann::json;
using namespace orderlab;

// ---------------------------------------------------------------------------
// Envelope plumbing. Every file this tool writes is wrapped as
//   {schemaVersion, pairing, kind, config, payload}
// where config repeats the invocation flags except the output location, so a
// rerun with the same flags and seed is byte-identical wherever it lands.

json envelope(const std::string& kind, json config, json payload) {
    json e;
    e["schemaVersion"] = io::schema_version;
    e["pairing"] = Pairing::name;
    e["kind"] = kind;
    e["config"] = std::move(config);
    e["payload"] = std::move(payload);
    return e;
}

// Readers accept either the envelope or the bare payload codec. Returns the
// payload and the declared kind, empty when the file is bare.
const json& unwrap(const json& j, std::string& kind) {
    kind.clear();
    if (j.is_object() && j.contains("payload") && j.contains("kind")) {
        if (!j.at("kind").is_string()) throw std::invalid_argument("field is not a string: kind");
        kind = j.at("kind").get<std::string>();
        return j.at("payload");
    }
    return j;
}

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("missing field: ") + key);
    return j.at(key);
}

int need_int(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_number_integer())
        throw std::invalid_argument(std::string("field is not an integer: ") + key);
    return v.get<int>();
}

std::string need_str(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_string())
        throw std::invalid_argument(std::string("field is not a string: ") + key);
    return v.get<std::string>();
}

std::vector<std::int64_t> int_list(const json& v, const char* label) {
    if (!v.is_array()) throw std::invalid_argument(std::string(label) + " is not an array");
    std::vector<std::int64_t> out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if (!x.is_number_integer())
            throw std::invalid_argument(std::string(label) + " holds a non-integer");
        out.push_back(x.get<std::int64_t>());
    }
    return out;
}

std::vector<std::string> str_list(const json& v, const char* label) {
    if (!v.is_array()) throw std::invalid_argument(std::string(label) + " is not an array");
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if (!x.is_string())
            throw std::invalid_argument(std::string(label) + " holds a non-string");
        out.push_back(x.get<std::string>());
    }
    return out;
}

// The io layer only serializes transcripts, so the reverse direction lives
// here with the same field conventions.
priority::ConstructionTranscript transcript_from_json(const json& j) {
    priority::ConstructionTranscript t;
    t.kind = need_str(j, "kind");
    t.pairing = need_str(j, "pairing");
    t.maxStage = need_int(j, "maxStage");
    t.setNames = str_list(need(j, "setNames"), "setNames");
    t.strategyNames = str_list(need(j, "strategyNames"), "strategyNames");
    const json& stages = need(j, "stages");
    if (!stages.is_array()) throw std::invalid_argument("stages is not an array");
    for (const auto& rj : stages) {
        priority::StageRecord r;
        r.stage = need_int(rj, "stage");
        for (std::int64_t a : int_list(need(rj, "attention"), "attention"))
            r.attention.push_back(static_cast<int>(a));
        r.acted = need_int(rj, "acted");
        if (r.acted >= 0) r.witness = io::event_from_json(need(rj, "witness"));
        for (std::int64_t m : int_list(need(rj, "markers"), "markers"))
            r.markers.push_back(static_cast<int>(m));
        for (std::int64_t s : int_list(need(rj, "satisfied"), "satisfied"))
            r.satisfied.push_back(s != 0 ? 1 : 0);
        const json& sets = need(rj, "sets");
        if (!sets.is_array()) throw std::invalid_argument("sets is not an array");
        for (const auto& sj : sets) r.sets.push_back(int_list(sj, "sets"));
        t.stages.push_back(std::move(r));
    }
    return t;
}

// Raw relation matrix with the codec's field conventions, axioms not yet
// applied: verify classifies axiom violations as failed checks, not as
// malformed files.
RelationMatrix relation_from_json(const json& j) {
    int n = need_int(j, "size");
    if (n < 0) throw std::invalid_argument("size must be nonnegative");
    const json& rows = need(j, "leq");
    if (!rows.is_array()) throw std::invalid_argument("leq is not an array");
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("leq row count does not match size");
    RelationMatrix leq;
    for (const auto& rj : rows) {
        if (!rj.is_array() || static_cast<int>(rj.size()) != n)
            throw std::invalid_argument("leq row length does not match size");
        std::vector<std::uint8_t> row;
        for (const auto& e : rj) {
            if (!e.is_number_integer() || (e.get<int>() != 0 && e.get<int>() != 1))
                throw std::invalid_argument("leq entries must be 0 or 1");
            row.push_back(static_cast<std::uint8_t>(e.get<int>()));
        }
        leq.push_back(std::move(row));
    }
    return leq;
}

void write_file(const std::string& path, const json& j) {
    io::save_json_file(path, j);
    std::cout << "wrote " << path << "\n";
}

std::string join_path(const std::string& dir, const char* name) {
    return (std::filesystem::path(dir) / name).string();
}

// ---------------------------------------------------------------------------
// construct

std::vector<OpponentScript> scripts_from_file(const std::string& path) {
    if (path == "none") return {};
    json j = io::load_json_file(path);
    std::string kind;
    const json& payload = unwrap(j, kind);
    const json* list = &payload;
    if (payload.is_object() && payload.contains("scripts")) list = &payload.at("scripts");
    if (!list->is_array()) throw std::invalid_argument("scripts is not an array");
    std::vector<OpponentScript> out;
    for (const auto& sj : *list) out.push_back(io::script_from_json(sj));
    return out;
}

priority::OrderOpponents order_opponents_from_file(const std::string& path) {
    if (path == "none") return {};
    json j = io::load_json_file(path);
    std::string kind;
    return io::order_opponents_from_json(unwrap(j, kind));
}

struct ConstructArgs {
    std::string kind;
    int stages = 0;
    std::string opponents = "none";
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "json";
};

void check_column_budgets(const std::vector<std::int64_t>& W) {
    std::map<std::int64_t, int> perColumn;
    for (std::int64_t w : W) {
        std::int64_t col = Pairing::column_of(w);
        if (++perColumn[col] > col)
            throw std::logic_error("construct: column " + std::to_string(col) +
                                   " exceeds its budget");
    }
}

int run_construct(const ConstructArgs& a) {
    if (a.stages <= 0) throw std::invalid_argument("construct: --stages must be positive");
    if (a.format != "json" && a.format != "dot")
        throw std::invalid_argument("construct: unknown format " + a.format);
    if (a.format == "dot" && a.kind != "weakly-stable-order")
        throw std::invalid_argument("construct: dot output needs an order construction");
    json config = {{"command", "construct"}, {"kind", a.kind},        {"stages", a.stages},
                   {"opponents", a.opponents}, {"seed", a.seed},       {"format", a.format}};
    std::filesystem::create_directories(a.out);

    if (a.kind == "stable-semitransitive") {
        auto scripts = scripts_from_file(a.opponents);
        auto run = priority::build_stable_semitransitive(scripts, a.stages);
        run.transcript.check_partitions();
        if (auto v = check_semi_transitive(run.coloring))
            throw std::logic_error("construct: coloring not semi-transitive at (" +
                                   std::to_string(v->x) + "," + std::to_string(v->y) + "," +
                                   std::to_string(v->z) + ")");
        write_file(join_path(a.out, "transcript.json"),
                   envelope("transcript", config, io::to_json(run.transcript)));
        write_file(join_path(a.out, "coloring.json"),
                   envelope("coloring", config, io::to_json(run.coloring)));
        return 0;
    }
    if (a.kind == "weakly-stable-order") {
        auto opponents = order_opponents_from_file(a.opponents);
        auto run = priority::build_weakly_stable_order(opponents, a.stages);
        run.transcript.check_partitions();
        write_file(join_path(a.out, "transcript.json"),
                   envelope("transcript", config, io::to_json(run.transcript)));
        write_file(join_path(a.out, "order.json"),
                   envelope("order", config, io::to_json(run.order)));
        if (a.format == "dot") {
            std::ofstream dot(join_path(a.out, "order.dot"));
            if (!dot) throw std::invalid_argument("cannot open " +
                                                  join_path(a.out, "order.dot") +
                                                  " for writing");
            dot << to_dot(run.order);
            std::cout << "wrote " << join_path(a.out, "order.dot") << "\n";
        }
        return 0;
    }
    if (a.kind == "ce-W") {
        auto scripts = scripts_from_file(a.opponents);
        auto run = priority::build_ce_set(scripts, a.stages);
        run.transcript.check_partitions();
        check_column_budgets(run.W);
        write_file(join_path(a.out, "transcript.json"),
                   envelope("transcript", config, io::to_json(run.transcript)));
        json payload = {{"maxStage", a.stages},
                        {"W", run.W},
                        {"enumeratedAt", run.enumeratedAt},
                        {"codes", run.codes},
                        {"columnFloor", run.columnFloor}};
        write_file(join_path(a.out, "ce-set.json"), envelope("ce-set", config, payload));
        return 0;
    }
    throw std::invalid_argument("construct: unknown kind " + a.kind);
}

// ---------------------------------------------------------------------------
// verify

struct CheckList {
    json checks = json::array();
    std::string firstFailure;

    void add(const std::string& name, bool ok, const std::string& detail = "") {
        checks.push_back({{"name", name}, {"ok", ok}, {"detail", detail}});
        if (!ok && firstFailure.empty())
            firstFailure = name + (detail.empty() ? "" : ": " + detail);
    }
    bool all_passed() const { return firstFailure.empty(); }
};

void verify_coloring(const json& payload, CheckList& cl) {
    ColoringPrefix f = io::coloring_from_json(payload);
    cl.add("coloring-codec", true);
    if (f.arity() != 2 || f.colors() != 2) {
        cl.add("semi-transitive", false, "check needs an arity-2 two-coloring");
        return;
    }
    auto v = check_semi_transitive(f);
    cl.add("semi-transitive", !v,
           v ? "violated at (" + std::to_string(v->x) + "," + std::to_string(v->y) + "," +
                   std::to_string(v->z) + ")"
             : "");
}

void verify_order(const json& payload, int horizon, bool total, CheckList& cl) {
    RelationMatrix leq = relation_from_json(payload);
    auto v = check_order_axioms(leq);
    cl.add("order-axioms", !v, v ? v->to_string() : "");
    if (v) return;
    auto p = PartialOrderPrefix::from_relation(std::move(leq));
    if (total) {
        std::string bad;
        for (int x = 0; x < p.size() && bad.empty(); ++x)
            for (int y = x + 1; y < p.size(); ++y)
                if (p.incomparable(x, y)) {
                    bad = "incomparable pair (" + std::to_string(x) + "," + std::to_string(y) + ")";
                    break;
                }
        cl.add("totality", bad.empty(), bad);
    }
    if (horizon >= 1) {
        auto cls = classify_elements(p, horizon);
        int unstable = -1;
        for (int x = 0; x < static_cast<int>(cls.kind.size()); ++x)
            if (cls.kind[x] == ElementKind::Unstable) {
                unstable = x;
                break;
            }
        cl.add("stable-at-horizon", unstable < 0,
               unstable < 0 ? std::string(to_string(stability_kind(cls)))
                            : "element " + std::to_string(unstable) + " unstable");
    }
}

void verify_transcript(const json& payload, CheckList& cl) {
    auto t = transcript_from_json(payload);
    cl.add("transcript-codec", true);
    cl.add("pairing-tag", t.pairing == Pairing::name,
           t.pairing == Pairing::name ? "" : "unknown pairing " + t.pairing);
    bool numbered = static_cast<int>(t.stages.size()) == t.maxStage;
    for (int i = 0; numbered && i < t.maxStage; ++i)
        if (t.stages[static_cast<std::size_t>(i)].stage != i + 1) numbered = false;
    cl.add("stage-numbering", numbered,
           numbered ? "" : "records are not the consecutive stages 1.." +
                               std::to_string(t.maxStage));
    try {
        t.check_partitions();
        cl.add("partitions", true);
    } catch (const std::logic_error& e) {
        cl.add("partitions", false, e.what());
    }
}

void verify_ce_set(const json& payload, CheckList& cl) {
    auto W = int_list(need(payload, "W"), "W");
    cl.add("ce-set-codec", true);
    bool sorted = std::is_sorted(W.begin(), W.end()) &&
                  std::adjacent_find(W.begin(), W.end()) == W.end() &&
                  (W.empty() || W.front() >= 0);
    cl.add("members-sorted-unique", sorted, sorted ? "" : "W is not a sorted set of codes");
    if (!sorted) return;
    std::map<std::int64_t, int> perColumn;
    std::string bad;
    for (std::int64_t w : W) {
        std::int64_t col = Pairing::column_of(w);
        if (++perColumn[col] > col && bad.empty())
            bad = "column " + std::to_string(col) + " holds more than " + std::to_string(col) +
                  " members";
    }
    cl.add("column-budgets", bad.empty(), bad);
    if (payload.contains("codes") && payload.contains("columnFloor")) {
        auto codes = int_list(payload.at("codes"), "codes");
        auto floors = int_list(payload.at("columnFloor"), "columnFloor");
        bool ok = codes.size() == floors.size();
        std::string detail = ok ? "" : "codes and columnFloor disagree in length";
        for (std::size_t i = 0; ok && i < codes.size(); ++i)
            if (floors[i] != priority::column_floor(codes[i])) {
                ok = false;
                detail = "floor of code " + std::to_string(codes[i]) + " is " +
                         std::to_string(priority::column_floor(codes[i])) + ", file says " +
                         std::to_string(floors[i]);
            }
        cl.add("column-floors", ok, detail);
    }
}

struct VerifyArgs {
    std::string input;
    int horizon = 0;
    std::string out;
};

int run_verify(const VerifyArgs& a) {
    json j = io::load_json_file(a.input);
    std::string kind;
    const json& payload = unwrap(j, kind);
    if (kind.empty()) {
        // Bare codecs are sniffed by their distinguishing field.
        if (payload.contains("upper")) kind = "coloring";
        else if (payload.contains("setNames") && payload.contains("stages")) kind = "transcript";
        else if (payload.contains("W")) kind = "ce-set";
        else if (payload.contains("leq")) kind = "order";
        else throw std::invalid_argument("verify: unrecognized input shape");
    }

    CheckList cl;
    if (kind == "coloring") verify_coloring(payload, cl);
    else if (kind == "order") verify_order(payload, a.horizon, false, cl);
    else if (kind == "linear-order") verify_order(payload, a.horizon, true, cl);
    else if (kind == "transcript") verify_transcript(payload, cl);
    else if (kind == "ce-set") verify_ce_set(payload, cl);
    else throw std::invalid_argument("verify: no checks defined for kind " + kind);

    json config = {{"command", "verify"}, {"input", a.input}, {"horizon", a.horizon}};
    json report = envelope("verify-report", config,
                           {{"inputKind", kind},
                            {"checks", cl.checks},
                            {"allPassed", cl.all_passed()}});
    if (!a.out.empty()) write_file(a.out, report);
    else std::cout << io::dump_stable(report);
    if (!cl.all_passed()) throw std::logic_error("verify: " + cl.firstFailure);
    return 0;
}

// ---------------------------------------------------------------------------
// reduce

struct ReduceArgs {
    std::string input;
    int stages = 40;
    std::uint64_t seed = 0;
    int horizon = 1; // tail window for the stable classification
    std::string out;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error(what);
}

int run_reduce(const ReduceArgs& a) {
    if (a.stages <= 0) throw std::invalid_argument("reduce: --stages must be positive");
    if (a.horizon < 1) throw std::invalid_argument("reduce: --horizon must be positive");
    json config = {{"command", "reduce"}, {"stages", a.stages},   {"seed", a.seed},
                   {"horizon", a.horizon}, {"input", a.input}};
    std::filesystem::create_directories(a.out);

    ColoringPrefix f;
    if (!a.input.empty()) {
        json j = io::load_json_file(a.input);
        std::string kind;
        f = io::coloring_from_json(unwrap(j, kind));
    } else {
        f = instances::random_coloring(a.seed, a.stages, 2);
    }
    if (f.arity() != 2 || f.colors() != 2)
        throw std::invalid_argument("reduce: input must be an arity-2 two-coloring");
    write_file(join_path(a.out, "f.json"), envelope("coloring", config, io::to_json(f)));
    CheckList cl;

    ColoringPrefix g = reductions::close_semitransitive(f);
    require(!check_semi_transitive(g), "reduce: closure is not semi-transitive");
    for (int x = 0; x < f.size(); ++x)
        for (int y = x + 1; y < f.size(); ++y)
            require(f.pair(x, y) <= g.pair(x, y), "reduce: closure dropped an edge");
    cl.add("closure-semi-transitive", true);
    write_file(join_path(a.out, "g.json"), envelope("coloring", config, io::to_json(g)));

    ColoringPrefix h = reductions::linearize(g);
    require(!check_semi_transitive(h), "reduce: linearization is not semi-transitive");
    for (int x = 0; x < h.size(); ++x)
        for (int y = x + 1; y < h.size(); ++y)
            for (int z = y + 1; z < h.size(); ++z)
                require(h.pair(x, y) != 0 || h.pair(y, z) != 0 || h.pair(x, z) == 0,
                        "reduce: color 0 of the linearization is not transitive");
    cl.add("linearization-transitive", true);
    write_file(join_path(a.out, "h.json"), envelope("coloring", config, io::to_json(h)));

    LinearOrderPrefix L = reductions::induced_linear_order(h);
    require(!check_order_axioms(L.as_partial().relation()), "reduce: induced order broke an axiom");
    for (int x = 0; x < L.size(); ++x)
        for (int y = x + 1; y < L.size(); ++y)
            require(!L.as_partial().incomparable(x, y), "reduce: induced order is not total");
    cl.add("induced-order-linear", true);
    write_file(join_path(a.out, "linear.json"),
               envelope("linear-order", config, io::to_json(L.as_partial())));

    auto cls = classify_elements(L.as_partial(), a.horizon);
    reductions::MonotoneSolution sol;
    try {
        sol = reductions::solve_stable_linear(L, cls);
    } catch (const std::invalid_argument& e) {
        // Valid inputs that defeat the solver are a pipeline failure, not a
        // malformed invocation.
        throw std::logic_error(std::string("reduce: ") + e.what());
    }
    auto dir = sol.ascending ? check_ascending(sol.elements, L) : check_descending(sol.elements, L);
    require(dir.ok, "reduce: candidate is not monotone: " + dir.detail);
    auto ph = check_pseudo_homogeneous(sol.elements, h);
    require(ph.ok, "reduce: candidate not pseudo-homogeneous for h: " + ph.detail);
    if (sol.elements.size() >= 2)
        require(h.pair(sol.elements[0], sol.elements[1]) == (sol.ascending ? 1 : 0),
                "reduce: candidate color disagrees with its direction");
    cl.add("candidate-monotone", true);
    write_file(join_path(a.out, "candidate.json"), envelope("candidate", config, io::to_json(sol)));

    auto pg = reductions::pullback_h_to_g(sol.elements, g, h);
    auto pgCheck = check_pseudo_homogeneous(pg, g);
    require(pgCheck.ok, "reduce: pullback to g failed: " + pgCheck.detail);
    auto pf = reductions::pullback_g_to_f(pg, f, g);
    auto pfCheck = check_pseudo_homogeneous(pf, f);
    require(pfCheck.ok, "reduce: pullback to f failed: " + pfCheck.detail);
    cl.add("pullbacks-pseudo-homogeneous", true);

    json payload = {{"size", f.size()},
                    {"ascending", sol.ascending},
                    {"candidate", sol.elements},
                    {"pullbackG", pg},
                    {"pullbackF", pf},
                    {"checks", cl.checks},
                    {"allPassed", true}};
    write_file(join_path(a.out, "report.json"), envelope("reduction-report", config, payload));
    std::cout << "reduction complete: candidate size " << sol.elements.size() << " ("
              << (sol.ascending ? "ascending" : "descending") << ")\n";
    return 0;
}

// ---------------------------------------------------------------------------
// oracle: brute-force twins of the core routines, kept deliberately naive.

// Increasing color-c path reachability by depth-first search.
bool reaches(const ColoringPrefix& f, int x, int y, int color) {
    if (f.pair(x, y) == color) return true;
    for (int m = x + 1; m < y; ++m)
        if (f.pair(x, m) == color && reaches(f, m, y, color)) return true;
    return false;
}

ColoringPrefix oracle_closure(const ColoringPrefix& f) {
    ColoringPrefix g = f;
    for (int x = 0; x < f.size(); ++x)
        for (int y = x + 1; y < f.size(); ++y)
            g.set_pair(x, y, reaches(f, x, y, 1) ? 1 : 0);
    return g;
}

ColoringPrefix oracle_linearize(const ColoringPrefix& g) {
    ColoringPrefix h = g;
    for (int x = 0; x < g.size(); ++x)
        for (int y = x + 1; y < g.size(); ++y)
            h.set_pair(x, y, reaches(g, x, y, 0) ? 0 : 1);
    return h;
}

// Shortlex split-pair enumeration mirroring the documented search order:
// total size, then |E0|, then E0 and E1 as lexicographic index combinations.
std::optional<forcing::SplitExtension> oracle_split(const forcing::OrderCondition& c,
                                                    const PartialOrderPrefix& p, int horizon,
                                                    int sizeBound) {
    auto X = forcing::X_of(c, p, horizon).members;
    int n = static_cast<int>(X.size());
    auto ascending = [&](std::vector<int> S) {
        std::sort(S.begin(), S.end());
        for (std::size_t i = 0; i < S.size(); ++i)
            for (std::size_t j = i + 1; j < S.size(); ++j)
                if (!p.leq(S[i], S[j])) return false;
        return true;
    };
    auto antichain = [&](const std::vector<int>& S) {
        for (std::size_t i = 0; i < S.size(); ++i)
            for (std::size_t j = i + 1; j < S.size(); ++j)
                if (!p.incomparable(S[i], S[j])) return false;
        return true;
    };
    auto next_combination = [](std::vector<int>& idx, int limit) {
        int k = static_cast<int>(idx.size());
        for (int i = k - 1; i >= 0; --i) {
            if (idx[static_cast<std::size_t>(i)] < limit - (k - i)) {
                ++idx[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < k; ++j)
                    idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
                return true;
            }
        }
        return false;
    };
    for (int total = 1; total <= 2 * sizeBound; ++total) {
        for (int e0 = std::max(0, total - sizeBound); e0 <= std::min(total, sizeBound); ++e0) {
            int e1 = total - e0;
            if (e0 > n || e1 > n) continue;
            std::vector<int> i0(static_cast<std::size_t>(e0));
            for (int i = 0; i < e0; ++i) i0[static_cast<std::size_t>(i)] = i;
            do {
                std::vector<int> E0;
                for (int i : i0) E0.push_back(X[static_cast<std::size_t>(i)]);
                std::vector<int> i1(static_cast<std::size_t>(e1));
                for (int i = 0; i < e1; ++i) i1[static_cast<std::size_t>(i)] = i;
                do {
                    std::vector<int> E1;
                    for (int i : i1) E1.push_back(X[static_cast<std::size_t>(i)]);
                    bool disjoint = true;
                    for (int u : E0)
                        for (int v : E1)
                            if (u == v) disjoint = false;
                    if (!disjoint) continue;
                    std::vector<int> F0 = c.F0;
                    F0.insert(F0.end(), E0.begin(), E0.end());
                    std::vector<int> F1 = c.F1;
                    F1.insert(F1.end(), E1.begin(), E1.end());
                    if (!ascending(F0) || !antichain(F1)) continue;
                    bool below = true;
                    if (!E0.empty())
                        for (int v : E1)
                            if (!p.leq(E0.back(), v)) below = false;
                    if (!below) continue;
                    return forcing::SplitExtension{E0, E1};
                } while (next_combination(i1, n));
            } while (e0 > 0 && next_combination(i0, n));
        }
    }
    return std::nullopt;
}

// Pair-formula essentiality as the literal two-level quantifier.
immunity::EssentialReport oracle_essential(const OpponentScript& sc, int xBound, int yBound) {
    for (int x = 0; x < xBound; ++x) {
        bool found = false;
        for (const auto& a : sc.events) {
            if (a.R.front() <= x) continue;
            for (const auto& b : sc.events)
                if (b.R == a.R && b.S.front() >= yBound) {
                    found = true;
                    break;
                }
            if (found) break;
        }
        if (!found) return {false, x, "no witnessed group above x=" + std::to_string(x)};
    }
    return {true, -1, ""};
}

struct OracleArgs {
    std::string kind;
    int stages = 0;
    int threshold = 0;
    std::uint64_t seed = 1;
    bool injectBug = false;
    std::string out;
};

struct Mismatch {
    bool hit = false;
    json detail;
};

// Flips the first 1-pair of the closure, an intentionally planted defect the
// oracle must catch on the least coloring owning any edge.
ColoringPrefix plant_bug(ColoringPrefix g) {
    for (int y = 0; y < g.size(); ++y)
        for (int x = 0; x < y; ++x)
            if (g.pair(x, y) == 1) {
                g.set_pair(x, y, 0);
                return g;
            }
    return g;
}

void compare_colorings(const ColoringPrefix& impl, const ColoringPrefix& want,
                       const std::string& instance, Mismatch& mm) {
    for (int x = 0; x < impl.size() && !mm.hit; ++x)
        for (int y = x + 1; y < impl.size(); ++y)
            if (impl.pair(x, y) != want.pair(x, y)) {
                mm.hit = true;
                mm.detail = {{"instance", instance},
                             {"pair", {x, y}},
                             {"impl", impl.pair(x, y)},
                             {"oracle", want.pair(x, y)},
                             {"upper", impl.size() <= 8 ? json(want.upper()) : json(nullptr)}};
                break;
            }
}

int run_oracle(const OracleArgs& a0) {
    OracleArgs a = a0;
    if (a.injectBug && a.kind != "closure")
        throw std::invalid_argument("oracle: --inject-bug only applies to the closure oracle");
    Mismatch mm;
    int instances = 0;

    if (a.kind == "closure") {
        if (a.stages <= 0) a.stages = 7;
        if (a.threshold <= 0) a.threshold = 200;
        // Exhaustive sweep over every 2-coloring of size at most 5, smallest
        // first, so a defect is reported on its least instance.
        for (int n = 0; n <= 5 && !mm.hit; ++n) {
            int pairs = n * (n - 1) / 2;
            for (long mask = 0; mask < (1L << pairs) && !mm.hit; ++mask) {
                std::vector<int> upper(static_cast<std::size_t>(pairs));
                for (int b = 0; b < pairs; ++b) upper[static_cast<std::size_t>(b)] = (mask >> b) & 1;
                ColoringPrefix f(n, 2, 2, upper);
                ColoringPrefix impl = reductions::close_semitransitive(f);
                if (a.injectBug) impl = plant_bug(impl);
                compare_colorings(impl, oracle_closure(f),
                                  "exhaustive n=" + std::to_string(n) + " mask=" +
                                      std::to_string(mask),
                                  mm);
                ++instances;
            }
        }
        for (int i = 0; i < a.threshold && !mm.hit; ++i) {
            ColoringPrefix f = instances::random_coloring(a.seed + static_cast<std::uint64_t>(i),
                                                          a.stages, 2);
            ColoringPrefix impl = reductions::close_semitransitive(f);
            if (a.injectBug) impl = plant_bug(impl);
            compare_colorings(impl, oracle_closure(f), "seeded i=" + std::to_string(i), mm);
            if (!mm.hit && check_semi_transitive(impl)) {
                mm.hit = true;
                mm.detail = {{"instance", "seeded i=" + std::to_string(i)},
                             {"reason", "closure not semi-transitive"}};
            }
            ++instances;
        }
    } else if (a.kind == "linearize") {
        if (a.stages <= 0) a.stages = 12;
        if (a.threshold <= 0) a.threshold = 50;
        for (int i = 0; i < a.threshold && !mm.hit; ++i) {
            ColoringPrefix g = reductions::close_semitransitive(instances::random_coloring(
                a.seed + static_cast<std::uint64_t>(i), a.stages, 2));
            ColoringPrefix impl = reductions::linearize(g);
            compare_colorings(impl, oracle_linearize(g), "seeded i=" + std::to_string(i), mm);
            if (!mm.hit) {
                auto L = reductions::induced_linear_order(impl);
                if (check_order_axioms(L.as_partial().relation())) {
                    mm.hit = true;
                    mm.detail = {{"instance", "seeded i=" + std::to_string(i)},
                                 {"reason", "induced order broke an axiom"}};
                }
            }
            ++instances;
        }
    } else if (a.kind == "split") {
        if (a.stages <= 0) a.stages = 14;
        if (a.threshold <= 0) a.threshold = 20;
        for (int i = 0; i < a.threshold && !mm.hit; ++i) {
            std::uint64_t s = a.seed + static_cast<std::uint64_t>(i);
            auto p = instances::layered_order(s, a.stages, 50);
            instances::Rng rng(s * 2 + 1);
            auto cls = classify_elements(p, std::max(1, a.stages / 5));
            forcing::OrderCondition c;
            for (int x = 0; x < p.size(); ++x) {
                if (cls.kind[static_cast<std::size_t>(x)] == ElementKind::Small &&
                    rng.chance(1, 4)) {
                    bool fits = true;
                    for (int u : c.F0) fits = fits && p.leq(u, x);
                    if (fits && c.F0.size() < 2) c.F0.push_back(x);
                }
                if (cls.kind[static_cast<std::size_t>(x)] == ElementKind::Isolated &&
                    rng.chance(1, 4)) {
                    bool fits = true;
                    for (int u : c.F1) fits = fits && p.incomparable(u, x);
                    if (fits && c.F1.size() < 2) c.F1.push_back(x);
                }
            }
            for (int bound = 1; bound <= 2 && !mm.hit; ++bound) {
                auto impl = forcing::split_pair_search(c, p, p.size(), bound);
                auto want = oracle_split(c, p, p.size(), bound);
                bool same = impl.has_value() == want.has_value() &&
                            (!impl || (impl->E0 == want->E0 && impl->E1 == want->E1));
                if (!same) {
                    mm.hit = true;
                    mm.detail = {{"instance", "seeded i=" + std::to_string(i)},
                                 {"sizeBound", bound},
                                 {"implFound", impl.has_value()},
                                 {"oracleFound", want.has_value()}};
                }
                ++instances;
            }
        }
    } else if (a.kind == "essential") {
        if (a.stages <= 0) a.stages = 30;
        if (a.threshold <= 0) a.threshold = 60;
        for (int i = 0; i < a.threshold && !mm.hit; ++i) {
            instances::Rng rng(a.seed + static_cast<std::uint64_t>(i));
            OpponentScript sc;
            sc.kind = ScriptKind::PairFormula;
            sc.budget = a.stages;
            int events = rng.below(6);
            for (int e = 0; e < events; ++e) {
                ScriptEvent ev;
                ev.stage = rng.below(a.stages + 1);
                int r = 1 + rng.below(12);
                ev.R = {r};
                if (rng.chance(1, 3)) ev.R.push_back(r + 1 + rng.below(3));
                int s = ev.R.back() + 1 + rng.below(16);
                ev.S = {s};
                sc.events.push_back(ev);
            }
            std::sort(sc.events.begin(), sc.events.end(),
                      [](const ScriptEvent& x, const ScriptEvent& y) { return x.stage < y.stage; });
            sc.validate();
            int xB = 1 + static_cast<int>(rng.below(9));
            int yB = 2 + static_cast<int>(rng.below(14));
            auto impl = immunity::essential_check(sc, xB, yB);
            auto want = oracle_essential(sc, xB, yB);
            if (impl.ok != want.ok || (!impl.ok && impl.failX != want.failX)) {
                mm.hit = true;
                mm.detail = {{"instance", "seeded i=" + std::to_string(i)},
                             {"xBound", xB},
                             {"yBound", yB},
                             {"implOk", impl.ok},
                             {"oracleOk", want.ok}};
            }
            ++instances;
        }
    } else {
        throw std::invalid_argument("oracle: unknown kind " + a.kind);
    }

    json config = {{"command", "oracle"},     {"kind", a.kind}, {"stages", a.stages},
                   {"threshold", a.threshold}, {"seed", a.seed}, {"injectBug", a.injectBug}};
    json report = envelope("oracle-report", config,
                           {{"kind", a.kind},
                            {"instances", instances},
                            {"mismatch", mm.hit ? mm.detail : json(nullptr)}});
    if (!a.out.empty()) write_file(a.out, report);
    else std::cout << io::dump_stable(report);
    if (mm.hit) {
        std::cout << "oracle mismatch: " << io::dump_stable(mm.detail);
        return 4;
    }
    std::cout << "oracle agreement over " << instances << " instances\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for semi-transitive colorings, stable orders and budgeted enumerations"};
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "run a priority construction and dump it");
    construct->add_option("--kind", ca.kind,
                          "stable-semitransitive | weakly-stable-order | ce-W")
        ->required();
    construct->add_option("--stages", ca.stages, "stage horizon")->required();
    construct->add_option("--opponents", ca.opponents, "opponent script file, or none");
    construct->add_option("--seed", ca.seed, "recorded in the envelope config");
    construct->add_option("--out", ca.out, "output directory")->required();
    construct->add_option("--format", ca.format, "json, or dot for order constructions");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "re-check a dumped structure");
    verify->add_option("input", va.input, "file to check")->required();
    verify->add_option("--horizon", va.horizon, "tail window for order classification");
    verify->add_option("--out", va.out, "report path, stdout when omitted");

    ReduceArgs ra;
    auto* reduce = app.add_subcommand("reduce",
                                      "closure, linearization and a monotone candidate with pullbacks");
    reduce->add_option("input", ra.input, "coloring file, random when omitted");
    reduce->add_option("--stages", ra.stages, "size of the seeded coloring");
    reduce->add_option("--seed", ra.seed, "seed for the random coloring");
    reduce->add_option("--horizon", ra.horizon, "tail window for the stable classification");
    reduce->add_option("--out", ra.out, "output directory")->required();

    OracleArgs oa;
    auto* oracle = app.add_subcommand("oracle", "cross-check a routine against brute force");
    oracle->add_option("--kind", oa.kind, "closure | linearize | split | essential")->required();
    oracle->add_option("--stages", oa.stages, "instance size, 0 for the per-kind default");
    oracle->add_option("--threshold", oa.threshold, "batch size, 0 for the per-kind default");
    oracle->add_option("--seed", oa.seed, "base seed for the batch");
    oracle->add_option("--out", oa.out, "report path, stdout when omitted");
    oracle->add_flag("--inject-bug", oa.injectBug, "plant a closure defect the sweep must catch");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (construct->parsed()) return run_construct(ca);
        if (verify->parsed()) return run_verify(va);
        if (reduce->parsed()) return run_reduce(ra);
        if (oracle->parsed()) return run_oracle(oa);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
