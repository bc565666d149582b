#pragma once

#include <nlohmann/json.hpp>

#include "ncg/checks.hpp"
#include "ncg/cumulant.hpp"
#include "ncg/matrix.hpp"
#include "ncg/partition.hpp"

namespace ncg {

using json = nlohmann::json;

// Rationals always serialize as "p/q" strings.

// Partition <-> [[1,3],[2]]
json partition_to_json(const Partition& p);
Partition partition_from_json(const json& j, int n = -1);

// Matrix <-> {"rows":2,"cols":2,"entries":[["3/5","4/5"],["-4/5","3/5"]]}
json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const json& j);

std::vector<Rat> vector_from_json(const json& j);
json vector_to_json(const std::vector<Rat>& v);

// CumulantSpec <-> {"family":"classical","entries":[{"args":["X","X"],"value":"1/1"}]}
// with optional booleans "independent" and "nondegenerate".
// Family names: classical = all, free = noncrossing, boolean = interval.
json spec_to_json(const CumulantSpec& spec);
CumulantSpec spec_from_json(const json& j);

LatticeFamily calculus_parse(const std::string& name);
std::string calculus_name(LatticeFamily f);

json report_to_json(const CheckReport& report);

}  // namespace ncg
