#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ncg/matrix.hpp"
#include "ncg/partition.hpp"
#include "ncg/rational.hpp"

namespace ncg {

// Ordered tuple of variable labels.
using Tuple = std::vector<std::string>;

constexpr int kDefaultDegreeCap = 14;

// Cumulant data of a family of variables: entries keyed by ordered label
// tuples (the free calculus is not symmetric in general), absent tuples
// mean zero. The lattice family selects the calculus: All = classical,
// NonCrossing = free, Interval = boolean.
struct CumulantSpec {
  LatticeFamily family = LatticeFamily::All;
  std::set<std::string> labels;
  std::map<Tuple, Rat> entries;
  bool declared_independent = false;   // mixed tuples must vanish
  bool declared_nondegenerate = false; // K_2(X,X) > 0 per label

  void set(const Tuple& args, const Rat& value);
  Rat entry(const Tuple& args) const;  // 0 if absent
  // Diagonal cumulants K_n(X,...,X) of one label, by arity.
  std::map<int, Rat> diagonal(const std::string& label) const;

  // Throws std::invalid_argument on violated declarations or an entry
  // whose labels are not in `labels`.
  void validate() const;
};

// Moment data phi on label tuples up to a maximal degree.
struct MomentFunction {
  std::set<std::string> labels;
  int max_degree = 0;
  std::function<Rat(const Tuple&)> phi;
};

// Product over blocks B of p of entries[args restricted to B].
Rat partitioned_cumulant(const CumulantSpec& spec, const Partition& p,
                         const Tuple& args);

// Sum of partitioned cumulants over the spec's lattice family.
Rat moments_from_cumulants(const CumulantSpec& spec, const Tuple& args);

// Moebius-style inversion by the triangular recursion
//   K(t) = phi(t) - sum over p != top in family of prod_B K(t|_B),
// uniform for All / NonCrossing / Interval.
CumulantSpec cumulants_from_moments(const MomentFunction& m, LatticeFamily family,
                                    int degree_cap = kDefaultDegreeCap);

// Call-local memoized extractor behind cumulants_from_moments; also used
// directly where only a single joint cumulant is needed.
class CumulantExtractor {
 public:
  CumulantExtractor(std::function<Rat(const Tuple&)> phi, LatticeFamily family);
  Rat cumulant(const Tuple& args);

 private:
  std::function<Rat(const Tuple&)> phi_;
  LatticeFamily family_;
  std::map<Tuple, Rat> memo_;
};

// Cumulants of linear forms Y_j = sum_i C[j][i] X_i in independent
// variables:  K_n(Y_{args(1)},...,Y_{args(n)})
//           = sum_i ( prod_k C[args(k)][i] ) K_n(X_i).
// xdiag[i] holds the diagonal cumulants of X_i by arity; args are
// 0-based row indices of C.
Rat linear_form_cumulants(const RationalMatrix& C,
                          const std::vector<std::map<int, Rat>>& xdiag,
                          const std::vector<int>& args);

}  // namespace ncg
