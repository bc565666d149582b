#include "ncg/forms.hpp"

#include <memory>
#include <mutex>

namespace ncg {

std::string form_label(int i) { return "X" + std::to_string(i); }

NCPolynomial quadratic_form_polynomial(const RationalMatrix& A) {
  if (A.rows() != A.cols())
    throw std::invalid_argument("quadratic form needs a square matrix");
  NCPolynomial q;
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) {
      if (A.at(i, j) == 0) continue;
      q = q + NCPolynomial::generator(form_label(i + 1)) *
                  NCPolynomial::generator(form_label(j + 1)) * A.at(i, j);
    }
  return q;
}

NCPolynomial linear_form_polynomial(const std::vector<Rat>& b) {
  NCPolynomial l;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] == 0) continue;
    l = l + NCPolynomial::generator(form_label(static_cast<int>(i) + 1)) * b[i];
  }
  return l;
}

Rat qform_cumulant(const RationalMatrix& A, const std::function<Rat(int)>& ksq, int n) {
  if (!A.is_symmetric())
    throw std::invalid_argument("qform_cumulant requires a symmetric matrix");
  if (n < 1) throw std::invalid_argument("order must be positive");
  return A.pow(n).trace() * ksq(n);
}

std::function<Rat(int)> ksq_from_weight(const PairWeight& w, int degree_cap) {
  auto memo = std::make_shared<std::map<int, Rat>>();
  auto mutex = std::make_shared<std::mutex>();
  const NCPolynomial xsq = NCPolynomial::generator("X") * NCPolynomial::generator("X");
  return [w, memo, mutex, xsq, degree_cap](int n) -> Rat {
    if (n < 1) throw std::invalid_argument("order must be positive");
    {
      std::lock_guard<std::mutex> lock(*mutex);
      if (auto it = memo->find(n); it != memo->end()) return it->second;
    }
    const std::vector<NCPolynomial> ps(static_cast<std::size_t>(n), xsq);
    Rat value = joint_cumulant_of_polynomials(w, w.natural_family(), ps, degree_cap);
    std::lock_guard<std::mutex> lock(*mutex);
    return memo->emplace(n, std::move(value)).first->second;
  };
}

std::function<Rat(const Partition&)> kpair_from_weight(const PairWeight& w) {
  return [w](const Partition& rho) { return w.nu(rho); };
}

Rat qform_joint_cumulants(const std::vector<RationalMatrix>& As,
                          const std::function<Rat(const Partition&)>& kpair) {
  if (As.empty()) throw std::invalid_argument("empty quadratic-form tuple");
  const int m = static_cast<int>(As.size());
  const int size = As[0].rows();
  for (const auto& A : As)
    if (A.rows() != size || A.cols() != size)
      throw std::invalid_argument("quadratic-form matrices must be square, same size");

  const Partition base = consecutive_pairs(m);
  Rat sum = 0;
  for (const auto& rho : connecting_partitions(base, LatticeFamily::Pair)) {
    const Rat weight = kpair(rho);
    if (weight == 0) continue;
    const int blocks = rho.block_count();
    // one summation index per block of rho, each ranging over the matrix size
    std::vector<int> idx(blocks, 0);
    Rat contraction = 0;
    for (;;) {
      Rat prod = 1;
      for (int k = 0; k < m; ++k) {
        const int r = idx[rho.block_of(2 * k + 1)];
        const int c = idx[rho.block_of(2 * k + 2)];
        prod *= As[k].at(r, c);
        if (prod == 0) break;
      }
      contraction += prod;
      int pos = blocks - 1;
      while (pos >= 0 && ++idx[pos] == size) idx[pos--] = 0;
      if (pos < 0) break;
    }
    sum += weight * contraction;
  }
  return sum;
}

namespace {

// All non-constant patterns over two symbols, by length then binary order.
std::vector<std::vector<int>> mixed_patterns(int max_len) {
  std::vector<std::vector<int>> out;
  for (int len = 2; len <= max_len; ++len)
    for (int mask = 1; mask < (1 << len) - 1; ++mask) {
      std::vector<int> pattern(len);
      for (int k = 0; k < len; ++k) pattern[k] = (mask >> (len - 1 - k)) & 1;
      out.push_back(std::move(pattern));
    }
  return out;
}

std::string pattern_string(const std::vector<int>& pattern,
                           const std::vector<std::string>& names) {
  std::string s;
  for (int p : pattern) s += names[p];
  return s;
}

}  // namespace

QformIndependenceVerdict qform_independence_check(const RationalMatrix& A,
                                                  const RationalMatrix& B,
                                                  const PairWeight& w, int max_order) {
  if (!A.is_symmetric() || !B.is_symmetric())
    throw std::invalid_argument("independence check requires symmetric matrices");
  if (max_order < 2) throw std::invalid_argument("max order must be >= 2");

  QformIndependenceVerdict v;
  const RationalMatrix AB = A * B, BA = B * A;
  v.ab_zero = AB.is_zero();
  v.trace_identity = ((AB + BA).pow(2)).trace() + Rat(2) * (B * A * A * B).trace();

  const auto kpair = kpair_from_weight(w);
  v.all_mixed_zero = true;
  for (const auto& pattern : mixed_patterns(max_order)) {
    std::vector<RationalMatrix> As;
    for (int p : pattern) As.push_back(p == 0 ? A : B);
    Rat value = qform_joint_cumulants(As, kpair);
    if (value != 0) v.all_mixed_zero = false;
    v.mixed.emplace_back(pattern_string(pattern, {"Q", "Q'"}), std::move(value));
  }
  return v;
}

LQReport lq_independence_data(const RationalMatrix& A, const std::vector<Rat>& b,
                              const PairWeight& w, int max_order) {
  if (A.rows() != A.cols() || A.rows() != static_cast<int>(b.size()))
    throw std::invalid_argument("matrix and vector sizes disagree");
  if (max_order < 2) throw std::invalid_argument("max order must be >= 2");

  LQReport report;
  report.Ab = A.apply(b);
  report.btA = A.apply_left(b);
  report.ab_zero = true;
  for (const auto& x : report.Ab)
    if (x != 0) report.ab_zero = false;
  for (const auto& x : report.btA)
    if (x != 0) report.ab_zero = false;

  for (int m = 1; m <= max_order; ++m) {
    Rat s = 0;
    for (int i = 0; i < A.rows(); ++i)
      s += rat_pow(b[i], static_cast<unsigned long>(m)) * A.at(i, i);
    report.diagonal_sums.push_back(std::move(s));
  }

  const NCPolynomial L = linear_form_polynomial(b);
  const NCPolynomial Q = quadratic_form_polynomial(A);
  const auto oracle = oracle_from_weight(w);
  report.all_mixed_zero = true;
  for (int m = 2; m <= max_order; ++m) {
    std::vector<NCPolynomial> ps(static_cast<std::size_t>(m) - 1, L);
    ps.push_back(Q);
    Rat value = joint_cumulant_of_polynomials(oracle, w.natural_family(), ps);
    if (value != 0) report.all_mixed_zero = false;
    std::string desc = "K(";
    for (int k = 0; k < m - 1; ++k) desc += "L,";
    desc += "Q)";
    report.mixed.emplace_back(std::move(desc), std::move(value));
  }
  return report;
}

Rat shifted_squares_cumulant(const std::vector<Rat>& a, const PairWeight& w,
                             LatticeFamily family, int m, int degree_cap) {
  if (a.empty()) throw std::invalid_argument("empty shift vector");
  if (m < 1) throw std::invalid_argument("order must be positive");
  NCPolynomial y;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const NCPolynomial shifted =
        NCPolynomial::generator(form_label(static_cast<int>(i) + 1)) +
        NCPolynomial::scalar(a[i]);
    y = y + shifted * shifted;
  }
  const std::vector<NCPolynomial> ps(static_cast<std::size_t>(m), y);
  return joint_cumulant_of_polynomials(w, family, ps, degree_cap);
}

}  // namespace ncg
