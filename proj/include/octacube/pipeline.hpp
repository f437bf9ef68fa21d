#pragma once
// Per-stage results for the CLI. Every stage is an object with "status": "ok" or "skipped" (+ "reason").

#include <string>
#include <vector>

#include "octacube/serialize.hpp"

namespace octacube {

inline constexpr const char* kToolVersion = "0.1.0";

struct PipelineOptions {
  int max_curve_length = -1;  // -1: default_max_curve_length
};

std::string input_digest(const std::string& text);  // fnv1a64 hex

Json diagram_stage(const SurfaceDiagram& d, const PipelineOptions& opt);
Json representativity_value(const Representativity& r);  // int, or the sentinel name
Json decomposition_stage(const SurfaceDiagram& d, bool full);
Json cubes_stage(const SurfaceDiagram& d, bool full);
Json npc_stage(const SurfaceDiagram& d);
Json dehn_stage(const SurfaceDiagram& d);
Json triangulation_stage(const SurfaceDiagram& d);
Json homology_stage(const SurfaceDiagram& d);
Json cover_stage(const SurfaceDiagram& d, bool full);

Json pipeline_report(const SurfaceDiagram& d, const std::string& input_text, const std::string& input_name,
                     const PipelineOptions& opt);

// mathematical checks that failed in a stage or report (used by --strict)
std::vector<std::string> failed_checks(const Json& stage_or_report);

// "a.b.c: value" lines, keys in document order
std::string render_text(const Json& j);

}  // namespace octacube
