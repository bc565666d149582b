#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncg/cumulant.hpp"
#include "ncg/forms.hpp"
#include "ncg/matrix.hpp"
#include "ncg/wick.hpp"

namespace ncg {

// Structured pass/fail result of a theorem check. Reports are pure
// functions of their parameters and reproduce bit-exactly.
struct CheckReport {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;
  bool pass = false;
  std::vector<std::pair<std::string, Rat>> witnesses;
  int max_order = 0;

  void param(const std::string& key, const std::string& value) {
    params.emplace_back(key, value);
  }
  void witness(const std::string& desc, Rat value) {
    witnesses.emplace_back(desc, std::move(value));
  }
};

// Fixed-point test of the cumulant scaling K_m(sum a_i X_i) = (sum a_i^m) K_m(X)
// for an i.i.d.-style single-variable spec; requires sum a_i^2 = 1 exactly.
CheckReport check_stability(const std::vector<Rat>& a, const std::map<int, Rat>& kx,
                            int max_order);

// Forward spherical symmetry: every Y-word moment (Y = U X) equals the
// corresponding X-word moment, words up to the given degree. U must be
// exactly orthogonal.
CheckReport check_maxwell_forward(const PairWeight& w, const RationalMatrix& U,
                                  int degree);

// Two orthogonal-column linear forms in independent X_1, X_2: reports the
// mixed cumulants and, per order, the 2x2 system determinant that forces
// higher cumulants to vanish.
CheckReport check_bernstein(const Rat& alpha, const Rat& beta, const Rat& gamma,
                            const Rat& delta, const std::map<int, Rat>& kx1,
                            const std::map<int, Rat>& kx2, int max_order);

// The free counterexample to the Skitovic-Darmois theorem: three free,
// non-semicircular variables whose linear statistics Y_1 = 2X_1 - X_2 + 2X_3
// and Y_2 = 2X_1 + 2X_2 - X_3 have all mixed cumulants zero.
CheckReport check_skitovic_failure(const Rat& eps, int max_order);

// Hankel-positivity desk check of the free moment sequence with
// K_2 = 1, K_3 = eps, all other free cumulants zero.
CheckReport check_cramer_failure(const Rat& eps, int hankel_size);

// The two cumulant expansions of K_m(alpha Y_1 + beta Y_2) with Y_1 = sum X_j,
// Y_2 = sum b_j X_j; also reports Vandermonde regularity of [b_j^k].
CheckReport check_sd_identity(const std::vector<Rat>& b,
                              const std::vector<std::map<int, Rat>>& xk,
                              const Rat& alpha, const Rat& beta, int max_order);

// Independence of sample mean S_1 and sample variation T: all mixed
// cumulants K(S_1,...,S_1,T) vanish for Gaussian input.
CheckReport check_lukacs(int n_vars, const PairWeight& w, int max_order);

// Same check driven by an i.i.d. spec with the given single-variable
// diagonal cumulants (nonzero K_m for m >= 3 produces a nonzero witness).
CheckReport check_lukacs(int n_vars, LatticeFamily family,
                         const std::map<int, Rat>& k_single, int max_order);

}  // namespace ncg
