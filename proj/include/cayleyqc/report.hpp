#pragma once

#include <string>

#include <json.hpp>

#include "cayleyqc/border.hpp"
#include "cayleyqc/bounds.hpp"
#include "cayleyqc/cayley.hpp"
#include "cayleyqc/css_code.hpp"
#include "cayleyqc/hypercube.hpp"

namespace cayleyqc {

using Json = nlohmann::ordered_json;

/// Sorted vertex ids and sorted edge pairs.
Json to_json(const BallView& view);
/// Sorted list of vertex ids.
Json to_json(const VertexSet& set);
/// List of 1-based element lists in ball order, e.g. [[],[1,2],[3,4]].
Json to_json(const SetFamily& family);
Json to_json(const BoundReport& report);
/// {r, n, N, K, d, d_perp, D, D_status, bound, witness, ...}
Json to_json(const QuantumParams& params, const DegeneracyReport* degeneracy = nullptr);

enum class OutputFormat { json, csv, table };

OutputFormat parse_output_format(const std::string& name);

/// Renders a report object. CSV and table are projections of the JSON:
/// scalar fields print as-is, nested values as compact JSON. The output
/// always ends with a newline.
std::string render(const Json& report, OutputFormat format);

/// Multi-row projection of an array of flat objects sharing their keys:
/// CSV gets one header line, the table gets aligned columns.
std::string render_rows(const Json& rows, OutputFormat format);

}  // namespace cayleyqc
