#include "cayleyqc/report.hpp"

#include <algorithm>
#include <vector>

#include "cayleyqc/errors.hpp"

namespace cayleyqc {

Json to_json(const BallView& view) {
  Json vertices = Json::array();
  for (const auto& [v, depth] : view.vertices) vertices.push_back({{"id", v}, {"depth", depth}});
  Json edges = Json::array();
  for (const auto& [u, v] : view.edges) edges.push_back({u, v});
  return {{"center", view.center}, {"radius", view.radius}, {"vertices", vertices}, {"edges", edges}};
}

Json to_json(const VertexSet& set) {
  Json out = Json::array();
  for (Vertex v : set.vertices()) out.push_back(v);
  return out;
}

Json to_json(const SetFamily& family) {
  Json out = Json::array();
  for (const auto& list : family.to_lists()) out.push_back(list);
  return out;
}

Json to_json(const BoundReport& report) {
  Json j;
  j["formula_id"] = formula_id(report.formula);
  j["n"] = report.n;
  j["t_or_d"] = report.t_or_d;
  j["M"] = report.M;
  if (report.value && report.value->is_rational()) {
    const auto& a = report.value->rational_part();
    j["value_numerator"] = boost::multiprecision::numerator(a).str();
    j["value_denominator_or_precision"] = boost::multiprecision::denominator(a).str();
  } else if (report.value) {
    j["value_numerator"] = report.value->scaled_floor(BoundReport::decimal_digits).str();
    j["value_denominator_or_precision"] = "1e-" + std::to_string(BoundReport::decimal_digits) + " rounded down";
  } else {
    j["value_numerator"] = nullptr;
    j["value_denominator_or_precision"] = "1e-" + std::to_string(BoundReport::decimal_digits) + " rounded down";
  }
  j["exact"] = report.value ? Json(report.value->exact_form()) : Json(nullptr);
  j["decimal"] = report.decimal;
  j["validity_note"] = report.validity_note;
  if (report.reaches_exponential) j["reaches_e_sqrt_half_n"] = *report.reaches_exponential;
  return j;
}

Json to_json(const QuantumParams& p, const DegeneracyReport* degeneracy) {
  Json j;
  j["r"] = p.r;
  j["n"] = p.n;
  j["N"] = p.N;
  j["K"] = p.K;
  j["rank_A"] = p.rank_a;
  j["d"] = p.d.weight ? Json(*p.d.weight) : Json(nullptr);
  j["d_status"] = to_string(p.d.status);
  if (degeneracy) {
    j["d_perp"] = degeneracy->d_perp ? Json(*degeneracy->d_perp) : Json(nullptr);
  }
  j["D"] = p.D ? Json(*p.D) : Json(nullptr);
  j["D_status"] = to_string(p.D_status);
  if (p.D_status == DistanceStatus::lower_bounded_by_cap) j["D_greater_than"] = p.D_ruled_out_below_or_at;
  j["cap"] = p.cap;
  if (degeneracy) {
    j["degenerate"] = degeneracy->degenerate ? Json(*degeneracy->degenerate) : Json(nullptr);
  }
  j["bound"] = p.bound ? to_json(*p.bound) : Json(nullptr);
  j["bound_satisfied"] = p.bound_satisfied ? Json(*p.bound_satisfied) : Json(nullptr);
  j["witness"] = p.witness ? to_json(*p.witness) : Json(nullptr);
  return j;
}

OutputFormat parse_output_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "table") return OutputFormat::table;
  throw ValidationError("unknown format '" + name + "' (expected json, csv or table)");
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render(const Json& report, OutputFormat format) {
  if (format == OutputFormat::json || !report.is_object()) return report.dump(2) + "\n";

  std::string out;
  if (format == OutputFormat::csv) {
    std::string header;
    std::string row;
    bool first = true;
    for (const auto& [key, value] : report.items()) {
      header += (first ? "" : ",") + csv_field(key);
      row += (first ? "" : ",") + csv_field(scalar_text(value));
      first = false;
    }
    return header + "\n" + row + "\n";
  }

  std::size_t width = 0;
  for (const auto& [key, value] : report.items()) {
    (void)value;
    width = std::max(width, key.size());
  }
  for (const auto& [key, value] : report.items()) {
    out += key + std::string(width - key.size() + 2, ' ') + scalar_text(value) + "\n";
  }
  return out;
}

std::string render_rows(const Json& rows, OutputFormat format) {
  if (format == OutputFormat::json || !rows.is_array() || rows.empty()) return rows.dump(2) + "\n";

  std::vector<std::string> keys;
  for (const auto& [key, value] : rows.front().items()) {
    (void)value;
    keys.push_back(key);
  }
  std::vector<std::vector<std::string>> cells;
  cells.push_back(keys);
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (const auto& key : keys) line.push_back(row.contains(key) ? scalar_text(row.at(key)) : "");
    cells.push_back(std::move(line));
  }

  std::string out;
  if (format == OutputFormat::csv) {
    for (const auto& line : cells) {
      for (std::size_t i = 0; i < line.size(); ++i) out += (i ? "," : "") + csv_field(line[i]);
      out += "\n";
    }
    return out;
  }

  std::vector<std::size_t> widths(keys.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) widths[i] = std::max(widths[i], line[i].size());
  }
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      text += line[i];
      if (i + 1 < line.size()) text += std::string(widths[i] - line[i].size() + 2, ' ');
    }
    out += text + "\n";
  }
  return out;
}

}  // namespace cayleyqc
