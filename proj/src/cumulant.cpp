#include "ncg/cumulant.hpp"

#include <algorithm>

namespace ncg {

namespace {

void require_calculus(LatticeFamily f) {
  if (f != LatticeFamily::All && f != LatticeFamily::NonCrossing &&
      f != LatticeFamily::Interval)
    throw std::invalid_argument(
        "cumulant calculus requires family all, noncrossing or interval");
}

// Full-lattice enumeration hurts beyond Bell(9); pair-type sublattices are
// fine up to 14.
void check_arity_cap(LatticeFamily f, int arity, int cap) {
  if (arity > cap)
    throw std::invalid_argument("degree " + std::to_string(arity) +
                                " exceeds cap " + std::to_string(cap));
  if (f == LatticeFamily::All && arity > 9)
    throw std::invalid_argument("classical family capped at degree 9");
}

}  // namespace

void CumulantSpec::set(const Tuple& args, const Rat& value) {
  for (const auto& l : args) labels.insert(l);
  if (value == 0)
    entries.erase(args);
  else
    entries[args] = value;
}

Rat CumulantSpec::entry(const Tuple& args) const {
  auto it = entries.find(args);
  return it == entries.end() ? Rat(0) : it->second;
}

std::map<int, Rat> CumulantSpec::diagonal(const std::string& label) const {
  std::map<int, Rat> out;
  for (const auto& [args, value] : entries) {
    if (std::all_of(args.begin(), args.end(),
                    [&](const std::string& l) { return l == label; }))
      out[static_cast<int>(args.size())] = value;
  }
  return out;
}

void CumulantSpec::validate() const {
  require_calculus(family);
  for (const auto& [args, value] : entries) {
    if (args.empty()) throw std::invalid_argument("empty cumulant tuple");
    for (const auto& l : args)
      if (!labels.count(l))
        throw std::invalid_argument("cumulant entry uses undeclared label \"" + l + "\"");
    if (declared_independent && value != 0) {
      const bool mixed = std::any_of(args.begin(), args.end(),
                                     [&](const std::string& l) { return l != args[0]; });
      if (mixed)
        throw std::invalid_argument(
            "independent spec has nonzero mixed cumulant at tuple starting \"" +
            args[0] + "\"");
    }
  }
  if (declared_nondegenerate) {
    for (const auto& l : labels) {
      if (entry({l, l}) <= 0)
        throw std::invalid_argument("nondegenerate spec needs K_2(" + l + "," + l + ") > 0");
    }
  }
}

Rat partitioned_cumulant(const CumulantSpec& spec, const Partition& p,
                         const Tuple& args) {
  if (static_cast<int>(args.size()) != p.n())
    throw std::invalid_argument("partitioned_cumulant: tuple length != ground-set size");
  for (const auto& l : args)
    if (!spec.labels.count(l))
      throw std::invalid_argument("unknown label \"" + l + "\"");
  Rat prod = 1;
  for (const auto& block : p.blocks()) {
    Tuple restricted;
    restricted.reserve(block.size());
    for (int pos : block) restricted.push_back(args[pos - 1]);
    prod *= spec.entry(restricted);
    if (prod == 0) return prod;
  }
  return prod;
}

Rat moments_from_cumulants(const CumulantSpec& spec, const Tuple& args) {
  require_calculus(spec.family);
  if (args.empty()) return 1;
  check_arity_cap(spec.family, static_cast<int>(args.size()), kDefaultDegreeCap);
  Rat sum = 0;
  for (const auto& p : enumerate_partitions(spec.family, static_cast<int>(args.size())))
    sum += partitioned_cumulant(spec, p, args);
  return sum;
}

CumulantExtractor::CumulantExtractor(std::function<Rat(const Tuple&)> phi,
                                     LatticeFamily family)
    : phi_(std::move(phi)), family_(family) {
  require_calculus(family);
}

Rat CumulantExtractor::cumulant(const Tuple& args) {
  if (args.empty()) throw std::invalid_argument("cumulant of empty tuple");
  if (auto it = memo_.find(args); it != memo_.end()) return it->second;
  const int n = static_cast<int>(args.size());
  Rat value = phi_(args);
  for (const auto& p : enumerate_partitions(family_, n)) {
    if (p.block_count() == 1) continue;  // top
    Rat prod = 1;
    for (const auto& block : p.blocks()) {
      Tuple restricted;
      restricted.reserve(block.size());
      for (int pos : block) restricted.push_back(args[pos - 1]);
      prod *= cumulant(restricted);
      if (prod == 0) break;
    }
    value -= prod;
  }
  memo_[args] = value;
  return value;
}

CumulantSpec cumulants_from_moments(const MomentFunction& m, LatticeFamily family,
                                    int degree_cap) {
  require_calculus(family);
  check_arity_cap(family, m.max_degree, degree_cap);
  CumulantExtractor extractor(m.phi, family);
  CumulantSpec spec;
  spec.family = family;
  spec.labels = m.labels;
  const std::vector<std::string> labels(m.labels.begin(), m.labels.end());
  Tuple tuple;
  std::function<void(void)> visit = [&]() {
    if (!tuple.empty()) {
      const Rat k = extractor.cumulant(tuple);
      if (k != 0) spec.entries[tuple] = k;
    }
    if (static_cast<int>(tuple.size()) == m.max_degree) return;
    for (const auto& l : labels) {
      tuple.push_back(l);
      visit();
      tuple.pop_back();
    }
  };
  visit();
  return spec;
}

Rat linear_form_cumulants(const RationalMatrix& C,
                          const std::vector<std::map<int, Rat>>& xdiag,
                          const std::vector<int>& args) {
  if (args.empty()) throw std::invalid_argument("empty argument tuple");
  if (static_cast<int>(xdiag.size()) != C.cols())
    throw std::invalid_argument("one diagonal cumulant table per column expected");
  for (int row : args)
    if (row < 0 || row >= C.rows())
      throw std::invalid_argument("row index out of range");
  const int n = static_cast<int>(args.size());
  Rat sum = 0;
  for (int i = 0; i < C.cols(); ++i) {
    auto it = xdiag[i].find(n);
    if (it == xdiag[i].end() || it->second == 0) continue;
    Rat coeff = 1;
    for (int row : args) {
      coeff *= C.at(row, i);
      if (coeff == 0) break;
    }
    sum += coeff * it->second;
  }
  return sum;
}

}  // namespace ncg
