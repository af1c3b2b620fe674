#pragma once

#include "orderlab/coloring.hpp"
#include "orderlab/forcing.hpp"
#include "orderlab/immunity.hpp"
#include "orderlab/opponent_script.hpp"
#include "orderlab/partial_order.hpp"
#include "orderlab/priority.hpp"
#include "orderlab/reductions.hpp"

#include "json.hpp"

#include <string>

namespace orderlab::io {

using nlohmann::json;

inline constexpr int schema_version = 1;

// Object codecs. Readers throw std::invalid_argument on missing or mistyped
// fields and run the structural validators, so a file rejected here is a
// caller input problem, never an internal invariant break.

json to_json(const ColoringPrefix& f);
ColoringPrefix coloring_from_json(const json& j);

json to_json(const PartialOrderPrefix& p);
PartialOrderPrefix order_from_json(const json& j);
LinearOrderPrefix linear_order_from_json(const json& j);

json to_json(const ScriptEvent& ev);
ScriptEvent event_from_json(const json& j);

json to_json(const OpponentScript& s);
OpponentScript script_from_json(const json& j);

json to_json(const priority::OrderOpponents& o);
priority::OrderOpponents order_opponents_from_json(const json& j);

json to_json(const priority::StageRecord& r);
json to_json(const priority::ConstructionTranscript& t);

json to_json(const priority::RequirementReport& r);
json to_json(const immunity::EssentialReport& r);

json to_json(const immunity::ArrayOfSets& a);
immunity::ArrayOfSets array_from_json(const json& j);

json to_json(const immunity::CoCeApprox& a);
immunity::CoCeApprox approx_from_json(const json& j);

json to_json(const immunity::StringBlockEnum& e);
immunity::StringBlockEnum string_blocks_from_json(const json& j);

json to_json(const forcing::PartedCondition& c);
forcing::PartedCondition parted_condition_from_json(const json& j);

json to_json(const forcing::OrderCondition& c);
forcing::OrderCondition order_condition_from_json(const json& j);

json to_json(const ElementClassification& cls);
json to_json(const reductions::MonotoneSolution& s);

/// Reads and parses a file; parse failures surface as std::invalid_argument.
json load_json_file(const std::string& path);

/// Writes with the stable layout (sorted keys, two-space indent, trailing
/// newline) so identical data gives byte-identical files.
void save_json_file(const std::string& path, const json& j);

std::string dump_stable(const json& j);

} // namespace orderlab::io
