#include "orderlab/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace orderlab::io {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("missing field: ") + key);
    return j.at(key);
}

int int_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer())
        throw std::invalid_argument(std::string("field is not an integer: ") + key);
    return v.get<int>();
}

int int_field_or(const json& j, const char* key, int fallback) {
    if (!j.is_object() || !j.contains(key)) return fallback;
    const json& v = j.at(key);
    if (!v.is_number_integer())
        throw std::invalid_argument(std::string("field is not an integer: ") + key);
    return v.get<int>();
}

std::string string_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_string())
        throw std::invalid_argument(std::string("field is not a string: ") + key);
    return v.get<std::string>();
}

template <typename T>
std::vector<T> list_of(const json& v, const char* what) {
    if (!v.is_array()) throw std::invalid_argument(std::string(what) + " is not an array");
    std::vector<T> out;
    for (const auto& e : v) {
        if (!e.is_number_integer())
            throw std::invalid_argument(std::string(what) + " holds a non-integer");
        out.push_back(e.get<T>());
    }
    return out;
}

template <typename T>
std::vector<std::vector<T>> nested_list(const json& v, const char* what) {
    if (!v.is_array()) throw std::invalid_argument(std::string(what) + " is not an array");
    std::vector<std::vector<T>> out;
    for (const auto& row : v) out.push_back(list_of<T>(row, what));
    return out;
}

ScriptKind kind_from_string(const std::string& s) {
    if (s == "set-formula") return ScriptKind::SetFormula;
    if (s == "pair-formula") return ScriptKind::PairFormula;
    if (s == "element-formula") return ScriptKind::ElementFormula;
    if (s == "functional") return ScriptKind::Functional;
    throw std::invalid_argument("unknown script kind: " + s);
}

} // namespace

json to_json(const ColoringPrefix& f) {
    return {{"size", f.size()}, {"arity", f.arity()}, {"colors", f.colors()}, {"upper", f.upper()}};
}

ColoringPrefix coloring_from_json(const json& j) {
    return ColoringPrefix(int_field(j, "size"), int_field(j, "arity"), int_field(j, "colors"),
                          list_of<int>(field(j, "upper"), "upper"));
}

json to_json(const PartialOrderPrefix& p) {
    json rows = json::array();
    for (const auto& row : p.relation()) {
        json r = json::array();
        for (auto b : row) r.push_back(static_cast<int>(b));
        rows.push_back(std::move(r));
    }
    return {{"size", p.size()}, {"leq", std::move(rows)}};
}

namespace {

RelationMatrix relation_from_json(const json& j) {
    const int n = int_field(j, "size");
    const auto rows = nested_list<int>(field(j, "leq"), "leq");
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("leq row count does not match size");
    RelationMatrix leq;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("leq row length does not match size");
        std::vector<std::uint8_t> r;
        for (int b : row) {
            if (b != 0 && b != 1) throw std::invalid_argument("leq entries must be 0 or 1");
            r.push_back(static_cast<std::uint8_t>(b));
        }
        leq.push_back(std::move(r));
    }
    return leq;
}

} // namespace

PartialOrderPrefix order_from_json(const json& j) {
    return PartialOrderPrefix::from_relation(relation_from_json(j));
}

LinearOrderPrefix linear_order_from_json(const json& j) {
    return LinearOrderPrefix::from_relation(relation_from_json(j));
}

json to_json(const ScriptEvent& ev) {
    json j{{"stage", ev.stage}};
    if (!ev.R.empty()) j["R"] = ev.R;
    if (!ev.S.empty()) j["S"] = ev.S;
    if (ev.u >= 0) j["u"] = ev.u;
    if (ev.v >= 0) j["v"] = ev.v;
    if (ev.x >= 0) {
        j["x"] = ev.x;
        j["value"] = ev.value;
    }
    return j;
}

ScriptEvent event_from_json(const json& j) {
    ScriptEvent ev;
    ev.stage = int_field(j, "stage");
    if (j.contains("R")) ev.R = list_of<int>(j.at("R"), "R");
    if (j.contains("S")) ev.S = list_of<int>(j.at("S"), "S");
    ev.u = int_field_or(j, "u", -1);
    ev.v = int_field_or(j, "v", -1);
    ev.x = int_field_or(j, "x", -1);
    if (j.contains("value")) ev.value = list_of<std::int64_t>(j.at("value"), "value");
    return ev;
}

json to_json(const OpponentScript& s) {
    json events = json::array();
    for (const auto& ev : s.events) events.push_back(to_json(ev));
    json j{{"kind", to_string(s.kind)}, {"budget", s.budget}, {"events", std::move(events)}};
    if (s.kind == ScriptKind::Functional) {
        j["e"] = s.e;
        j["k"] = s.k;
    }
    return j;
}

OpponentScript script_from_json(const json& j) {
    OpponentScript s;
    s.kind = kind_from_string(string_field(j, "kind"));
    s.budget = int_field(j, "budget");
    const json& evs = field(j, "events");
    if (!evs.is_array()) throw std::invalid_argument("events is not an array");
    for (const auto& e : evs) s.events.push_back(event_from_json(e));
    s.e = int_field_or(j, "e", -1);
    s.k = int_field_or(j, "k", -1);
    s.validate();
    return s;
}

json to_json(const priority::OrderOpponents& o) {
    json small = json::array(), isolated = json::array(), split = json::array();
    for (const auto& s : o.small) small.push_back(to_json(s));
    for (const auto& s : o.isolated) isolated.push_back(to_json(s));
    for (const auto& s : o.split) split.push_back(to_json(s));
    return {{"small", std::move(small)},
            {"isolated", std::move(isolated)},
            {"split", std::move(split)}};
}

priority::OrderOpponents order_opponents_from_json(const json& j) {
    priority::OrderOpponents o;
    auto read = [&](const char* key, std::vector<OpponentScript>& out) {
        const json& v = field(j, key);
        if (!v.is_array()) throw std::invalid_argument(std::string(key) + " is not an array");
        for (const auto& e : v) out.push_back(script_from_json(e));
    };
    read("small", o.small);
    read("isolated", o.isolated);
    read("split", o.split);
    o.validate();
    return o;
}

json to_json(const priority::StageRecord& r) {
    json sets = json::array();
    for (const auto& s : r.sets) sets.push_back(s);
    json satisfied = json::array();
    for (auto b : r.satisfied) satisfied.push_back(static_cast<int>(b));
    json j{{"stage", r.stage},       {"attention", r.attention}, {"acted", r.acted},
           {"markers", r.markers},   {"satisfied", std::move(satisfied)},
           {"sets", std::move(sets)}};
    if (r.acted >= 0) j["witness"] = to_json(r.witness);
    return j;
}

json to_json(const priority::ConstructionTranscript& t) {
    json stages = json::array();
    for (const auto& r : t.stages) stages.push_back(to_json(r));
    return {{"schemaVersion", schema_version},
            {"pairing", t.pairing},
            {"kind", t.kind},
            {"maxStage", t.maxStage},
            {"setNames", t.setNames},
            {"strategyNames", t.strategyNames},
            {"stages", std::move(stages)}};
}

json to_json(const priority::RequirementReport& r) {
    return {{"index", r.index},         {"scheme", r.scheme}, {"applicable", r.applicable},
            {"satisfied", r.satisfied}, {"stage", r.stage},   {"detail", r.detail}};
}

json to_json(const immunity::EssentialReport& r) {
    return {{"ok", r.ok}, {"failX", r.failX}, {"detail", r.detail}};
}

json to_json(const immunity::ArrayOfSets& a) {
    return {{"kind", immunity::to_string(a.kind)}, {"k", a.k}, {"blocks", a.blocks}};
}

immunity::ArrayOfSets array_from_json(const json& j) {
    immunity::ArrayOfSets a;
    a.kind = immunity::array_kind_from_string(string_field(j, "kind"));
    a.k = int_field_or(j, "k", 0);
    a.blocks = nested_list<std::int64_t>(field(j, "blocks"), "blocks");
    a.validate();
    return a;
}

json to_json(const immunity::CoCeApprox& a) {
    return {{"domain", a.domain}, {"stages", a.stages}};
}

immunity::CoCeApprox approx_from_json(const json& j) {
    immunity::CoCeApprox a;
    a.domain = int_field(j, "domain");
    a.stages = nested_list<std::int64_t>(field(j, "stages"), "stages");
    a.validate();
    return a;
}

json to_json(const immunity::StringBlockEnum& e) {
    return {{"blocks", e.blocks}};
}

immunity::StringBlockEnum string_blocks_from_json(const json& j) {
    immunity::StringBlockEnum e;
    const json& v = field(j, "blocks");
    if (!v.is_array()) throw std::invalid_argument("blocks is not an array");
    for (const auto& row : v) {
        if (!row.is_array()) throw std::invalid_argument("blocks holds a non-array");
        std::vector<std::string> b;
        for (const auto& s : row) {
            if (!s.is_string()) throw std::invalid_argument("blocks holds a non-string");
            b.push_back(s.get<std::string>());
        }
        e.blocks.push_back(std::move(b));
    }
    e.validate();
    return e;
}

json to_json(const forcing::PartedCondition& c) {
    return {{"parts", c.parts}, {"horizon", c.horizon()}, {"reservoir", c.reservoir_members()}};
}

forcing::PartedCondition parted_condition_from_json(const json& j) {
    forcing::PartedCondition c;
    c.parts = nested_list<int>(field(j, "parts"), "parts");
    const int horizon = int_field(j, "horizon");
    if (horizon < 0) throw std::invalid_argument("horizon must be nonnegative");
    c.reservoir.assign(static_cast<std::size_t>(horizon), 0);
    for (int m : list_of<int>(field(j, "reservoir"), "reservoir")) {
        if (m < 0 || m >= horizon)
            throw std::invalid_argument("reservoir member outside the horizon");
        c.reservoir[static_cast<std::size_t>(m)] = 1;
    }
    return c;
}

json to_json(const forcing::OrderCondition& c) {
    return {{"F0", c.F0}, {"F1", c.F1}};
}

forcing::OrderCondition order_condition_from_json(const json& j) {
    forcing::OrderCondition c;
    c.F0 = list_of<int>(field(j, "F0"), "F0");
    c.F1 = list_of<int>(field(j, "F1"), "F1");
    return c;
}

json to_json(const ElementClassification& cls) {
    json kinds = json::array();
    for (auto k : cls.kind) kinds.push_back(to_string(k));
    json stab = json::array();
    for (const auto& s : cls.stabilizationStage) {
        if (s)
            stab.push_back(*s);
        else
            stab.push_back(nullptr);
    }
    return {{"tailWindow", cls.tailWindow}, {"kinds", std::move(kinds)},
            {"stabilizationStage", std::move(stab)}};
}

json to_json(const reductions::MonotoneSolution& s) {
    return {{"ascending", s.ascending}, {"elements", s.elements}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    out << dump_stable(j);
}

std::string dump_stable(const json& j) {
    return j.dump(2) + "\n";
}

} // namespace orderlab::io
