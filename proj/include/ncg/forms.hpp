#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ncg/matrix.hpp"
#include "ncg/wick.hpp"

namespace ncg {

// Labels X1..Xn used by the form expansions.
std::string form_label(int i);  // 1-based

// Q = sum a_ij X_i X_j as a word polynomial.
NCPolynomial quadratic_form_polynomial(const RationalMatrix& A);
// L = sum b_i X_i.
NCPolynomial linear_form_polynomial(const std::vector<Rat>& b);

// K_n(Q) = tr(A^n) K_n(X^2) for symmetric A.
Rat qform_cumulant(const RationalMatrix& A, const std::function<Rat(int)>& ksq, int n);

// Diagonal cumulants n -> K_n(X^2) of the squared Gaussian of a weight,
// computed through the polynomial machinery (memoized).
std::function<Rat(int)> ksq_from_weight(const PairWeight& w,
                                        int degree_cap = kDefaultDegreeCap);

// nu as pair-partition cumulant weights K_rho(X) of the Gaussian family.
std::function<Rat(const Partition&)> kpair_from_weight(const PairWeight& w);

// Joint cumulant K_m(Q_1,...,Q_m) of quadratic forms via the connecting
// pair-partition sum: one summation index per block of rho, product of
// matrix entries, weighted by K_rho(X). Matrices need not be symmetric.
Rat qform_joint_cumulants(const std::vector<RationalMatrix>& As,
                          const std::function<Rat(const Partition&)>& kpair);

// Independence diagnostics for symmetric Q, Q'.
struct QformIndependenceVerdict {
  bool ab_zero = false;
  Rat trace_identity;  // tr((AB+BA)^2) + 2 tr(B A^2 B)
  // mixed joint cumulants of (Q, Q') by argument pattern, e.g. "QQ'Q"
  std::vector<std::pair<std::string, Rat>> mixed;
  bool all_mixed_zero = false;
};
QformIndependenceVerdict qform_independence_check(const RationalMatrix& A,
                                                  const RationalMatrix& B,
                                                  const PairWeight& w, int max_order);

// Linear-vs-quadratic form report: Ab, b^t A, the diagnostic scalars
// sum_i b_i^m a_ii, and the mixed cumulants K(L,...,L,Q).
struct LQReport {
  std::vector<Rat> Ab, btA;
  bool ab_zero = false;                       // Ab = 0 and b^t A = 0
  std::vector<Rat> diagonal_sums;             // index m-1: sum_i b_i^m a_ii, m = 1..d
  std::vector<std::pair<std::string, Rat>> mixed;
  bool all_mixed_zero = false;
};
LQReport lq_independence_data(const RationalMatrix& A, const std::vector<Rat>& b,
                              const PairWeight& w, int max_order);

// K_m(Y) for Y = sum (X_i + a_i)^2, by direct polynomial expansion.
Rat shifted_squares_cumulant(const std::vector<Rat>& a, const PairWeight& w,
                             LatticeFamily family, int m,
                             int degree_cap = kDefaultDegreeCap);

}  // namespace ncg
