#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ncg/cumulant.hpp"
#include "ncg/partition.hpp"
#include "ncg/rational.hpp"

namespace ncg {

// Word over generator labels; the empty word is the scalar unit.
using Word = std::vector<std::string>;

// Weight nu on pair partitions. Classical: nu = 1; Free: noncrossing
// indicator; Boolean: interval indicator; QDeformed: q^crossings;
// Custom: explicit table keyed by canonical partition strings.
struct PairWeight {
  enum class Kind { Classical, Free, Boolean, QDeformed, Custom };

  Kind kind = Kind::Classical;
  Rat q = 0;
  std::map<std::string, Rat> table;

  static PairWeight classical() { return {Kind::Classical, 0, {}}; }
  static PairWeight free_weight() { return {Kind::Free, 0, {}}; }
  static PairWeight boolean() { return {Kind::Boolean, 0, {}}; }
  static PairWeight q_deformed(const Rat& q) { return {Kind::QDeformed, q, {}}; }
  static PairWeight custom(std::map<std::string, Rat> table) {
    return {Kind::Custom, 0, std::move(table)};
  }

  // "classical" | "free" | "boolean" | "q:<p/q>". Custom weights are built
  // via custom(); the CLI loads their tables from JSON.
  static PairWeight parse(const std::string& text);
  std::string str() const;

  Rat nu(const Partition& pair_partition) const;

  // The calculus this weight's joint cumulants live in: All for Classical
  // and QDeformed, NonCrossing for Free, Interval for Boolean.
  LatticeFamily natural_family() const;
};

// Formal linear combination of words with rational coefficients.
// Normalized: unique words, no zero coefficients.
class NCPolynomial {
 public:
  NCPolynomial() = default;

  static NCPolynomial scalar(const Rat& c);
  static NCPolynomial generator(const std::string& label);

  const std::map<Word, Rat>& terms() const { return terms_; }
  int degree() const;

  NCPolynomial operator+(const NCPolynomial& o) const;
  NCPolynomial operator-(const NCPolynomial& o) const;
  NCPolynomial operator*(const NCPolynomial& o) const;  // word concatenation
  NCPolynomial operator*(const Rat& s) const;
  bool operator==(const NCPolynomial& o) const = default;

 private:
  std::map<Word, Rat> terms_;
};

// Eq.-style pair-partition sum: 0 for odd length, otherwise
// sum over pair partitions pi <= ker(word) of nu(pi).
Rat wick_moment(const PairWeight& w, const Word& word);

// Linear extension to polynomials; the scalar unit has moment 1.
Rat phi(const PairWeight& w, const NCPolynomial& p);

// Moment evaluator on words; the indirection lets theorem checks run the
// same cumulant machinery against either a pair weight or a CumulantSpec.
using MomentOracle = std::function<Rat(const Word&)>;

// Memoizing oracle wrapping wick_moment.
MomentOracle oracle_from_weight(const PairWeight& w);

// Oracle from a spec via moments_from_cumulants (labels of the word must
// be declared in the spec).
MomentOracle oracle_from_spec(const CumulantSpec& spec);

// Joint cumulant K_m(ps[0], ..., ps[m-1]) over the given family, built by
// the triangular recursion on the moments of products of the ps.
Rat joint_cumulant_of_polynomials(const MomentOracle& oracle, LatticeFamily family,
                                  const std::vector<NCPolynomial>& ps,
                                  int degree_cap = kDefaultDegreeCap);

// Same, with the family/weight pairing enforced (Classical<->All,
// Free<->NonCrossing, Boolean<->Interval, QDeformed<->All) unless
// allow_family_mismatch is set.
Rat joint_cumulant_of_polynomials(const PairWeight& w, LatticeFamily family,
                                  const std::vector<NCPolynomial>& ps,
                                  int degree_cap = kDefaultDegreeCap,
                                  bool allow_family_mismatch = false);

// Exact moment of S_N = N^{-1/2} (X_1 + ... + X_N):
//   phi(S_N^n) = N^{-n/2} sum over p in Pi_n of count_kernel_maps(p, N) phi_table(p).
// For even n the value is `coefficient`; for odd n the value is
// coefficient * N^{-1/2} (half_power set), keeping everything rational.
struct CltMoment {
  Rat coefficient;
  bool half_power = false;
};
CltMoment clt_moment(long N, int n, const std::function<Rat(const Partition&)>& phi_table);

// N -> infinity limit: sum of phi_table over pair partitions (0 for odd n).
Rat clt_limit(int n, const std::function<Rat(const Partition&)>& phi_table);

// phi_table of an i.i.d. sequence whose blocks factorize:
// phi(p) = prod over blocks of single_moments[|B|] (index 0 unused);
// with singleton_vanish, any singleton block gives 0.
std::function<Rat(const Partition&)> iid_phi_table(std::vector<Rat> single_moments,
                                                   bool singleton_vanish = true);

}  // namespace ncg
