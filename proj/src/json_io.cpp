#include "ncg/json_io.hpp"

namespace ncg {

namespace {

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return rat_parse(j.get<std::string>());
  throw std::invalid_argument("rational expected as \"p/q\" string, got " + j.dump());
}

}  // namespace

json partition_to_json(const Partition& p) {
  json j = json::array();
  for (const auto& b : p.blocks()) j.push_back(b);
  return j;
}

Partition partition_from_json(const json& j, int n) {
  if (!j.is_array()) throw std::invalid_argument("partition must be an array of arrays");
  std::vector<std::vector<int>> blocks;
  for (const auto& jb : j) {
    if (!jb.is_array()) throw std::invalid_argument("partition block must be an array");
    blocks.push_back(jb.get<std::vector<int>>());
  }
  int size = 0;
  for (const auto& b : blocks)
    for (int x : b) size = std::max(size, x);
  if (n >= 0 && n != size)
    throw std::invalid_argument("partition ground-set size mismatch");
  return Partition(size, std::move(blocks));
}

json matrix_to_json(const RationalMatrix& m) {
  json entries = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
    entries.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

RationalMatrix matrix_from_json(const json& j) {
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw std::invalid_argument("matrix JSON needs rows, cols, entries");
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  const auto& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != rows)
    throw std::invalid_argument("matrix entries row count mismatch");
  RationalMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(entries[r].size()) != cols)
      throw std::invalid_argument("matrix entries column count mismatch");
    for (int c = 0; c < cols; ++c) m.at(r, c) = rat_from_json(entries[r][c]);
  }
  return m;
}

std::vector<Rat> vector_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector must be an array");
  std::vector<Rat> v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

json vector_to_json(const std::vector<Rat>& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(rat_str(x));
  return j;
}

LatticeFamily calculus_parse(const std::string& name) {
  if (name == "classical") return LatticeFamily::All;
  if (name == "free") return LatticeFamily::NonCrossing;
  if (name == "boolean") return LatticeFamily::Interval;
  throw std::invalid_argument("unknown calculus: \"" + name +
                              "\" (expected classical, free or boolean)");
}

std::string calculus_name(LatticeFamily f) {
  switch (f) {
    case LatticeFamily::All: return "classical";
    case LatticeFamily::NonCrossing: return "free";
    case LatticeFamily::Interval: return "boolean";
    default:
      throw std::invalid_argument("family " + family_name(f) + " is not a calculus");
  }
}

json spec_to_json(const CumulantSpec& spec) {
  json entries = json::array();
  for (const auto& [args, value] : spec.entries)
    entries.push_back(json{{"args", args}, {"value", rat_str(value)}});
  json j{{"family", calculus_name(spec.family)}, {"entries", std::move(entries)}};
  if (spec.declared_independent) j["independent"] = true;
  if (spec.declared_nondegenerate) j["nondegenerate"] = true;
  return j;
}

CumulantSpec spec_from_json(const json& j) {
  CumulantSpec spec;
  spec.family = calculus_parse(j.at("family").get<std::string>());
  for (const auto& entry : j.at("entries")) {
    const Tuple args = entry.at("args").get<Tuple>();
    spec.set(args, rat_from_json(entry.at("value")));
  }
  if (j.contains("labels"))
    for (const auto& l : j.at("labels")) spec.labels.insert(l.get<std::string>());
  spec.declared_independent = j.value("independent", false);
  spec.declared_nondegenerate = j.value("nondegenerate", false);
  spec.validate();
  return spec;
}

json report_to_json(const CheckReport& report) {
  json params = json::object();
  for (const auto& [key, value] : report.params) params[key] = value;
  json witnesses = json::array();
  for (const auto& [desc, value] : report.witnesses)
    witnesses.push_back(json{{"desc", desc}, {"value", rat_str(value)}});
  return json{{"check", report.check},
              {"params", std::move(params)},
              {"max_order", report.max_order},
              {"verdict", report.pass ? "pass" : "fail"},
              {"witnesses", std::move(witnesses)}};
}

}  // namespace ncg
