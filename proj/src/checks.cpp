#include "ncg/checks.hpp"

#include <algorithm>

namespace ncg {

namespace {

Rat diag_entry(const std::map<int, Rat>& k, int m) {
  auto it = k.find(m);
  return it == k.end() ? Rat(0) : it->second;
}

std::vector<std::vector<int>> mixed_row_patterns(int rows, int max_len) {
  std::vector<std::vector<int>> out;
  std::vector<int> pattern;
  std::function<void(void)> rec = [&]() {
    if (pattern.size() >= 2 &&
        std::any_of(pattern.begin(), pattern.end(),
                    [&](int r) { return r != pattern[0]; }))
      out.push_back(pattern);
    if (static_cast<int>(pattern.size()) == max_len) return;
    for (int r = 0; r < rows; ++r) {
      pattern.push_back(r);
      rec();
      pattern.pop_back();
    }
  };
  rec();
  return out;
}

std::string y_tuple_desc(const std::vector<int>& pattern) {
  std::string s = "K(";
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (i) s += ",";
    s += "Y" + std::to_string(pattern[i] + 1);
  }
  return s + ")";
}

}  // namespace

CheckReport check_stability(const std::vector<Rat>& a, const std::map<int, Rat>& kx,
                            int max_order) {
  Rat norm = 0;
  for (const auto& ai : a) norm += ai * ai;
  if (norm != 1)
    throw std::invalid_argument("stability check requires sum a_i^2 = 1, got " +
                                rat_str(norm));
  CheckReport report;
  report.check = "stability";
  report.max_order = max_order;
  {
    std::string coeffs;
    for (const auto& ai : a) coeffs += (coeffs.empty() ? "" : ",") + rat_str(ai);
    report.param("a", coeffs);
  }
  report.pass = true;
  bool gaussian_forced = true;
  for (int m = 1; m <= max_order; ++m) {
    Rat scale = 0;
    for (const auto& ai : a) scale += rat_pow(ai, static_cast<unsigned long>(m));
    const Rat km = diag_entry(kx, m);
    const Rat diff = (scale - 1) * km;  // K_m(sum a_i X_i) - K_m(X)
    report.witness("sum a_i^" + std::to_string(m), scale);
    report.witness("K" + std::to_string(m) + "(sum a_i X_i) - K" + std::to_string(m) + "(X)",
                   diff);
    if (diff != 0) report.pass = false;
    if (m != 2 && km != 0 && scale == 1) gaussian_forced = false;
  }
  report.param("gaussian_forced", gaussian_forced ? "true" : "false");
  return report;
}

CheckReport check_maxwell_forward(const PairWeight& w, const RationalMatrix& U,
                                  int degree) {
  if (!U.is_orthogonal())
    throw std::invalid_argument("maxwell check requires an exactly orthogonal matrix");
  const int n = U.rows();
  CheckReport report;
  report.check = "maxwell-forward";
  report.max_order = degree;
  report.param("weight", w.str());
  report.param("n", std::to_string(n));
  report.pass = true;

  const auto oracle = oracle_from_weight(w);
  long words_checked = 0;
  std::vector<int> g;
  Word xword;
  std::function<void(void)> visit = [&]() {
    const int m = static_cast<int>(g.size());
    if (m >= 1) {
      // rhs: phi(X_{g(1)} ... X_{g(m)})
      xword.resize(m);
      for (int k = 0; k < m; ++k) xword[k] = form_label(g[k] + 1);
      const Rat rhs = oracle(xword);
      // lhs: expand Y_{g(k)} = sum_j U_{g(k),j} X_j multilinearly
      Rat lhs = 0;
      std::vector<int> h(m, 0);
      Word hword(m);
      for (;;) {
        Rat coeff = 1;
        for (int k = 0; k < m; ++k) {
          coeff *= U.at(g[k], h[k]);
          if (coeff == 0) break;
        }
        if (coeff != 0) {
          for (int k = 0; k < m; ++k) hword[k] = form_label(h[k] + 1);
          lhs += coeff * oracle(hword);
        }
        int pos = m - 1;
        while (pos >= 0 && ++h[pos] == n) h[pos--] = 0;
        if (pos < 0) break;
      }
      ++words_checked;
      if (lhs != rhs) {
        report.pass = false;
        std::string desc = "phi(Y-word) - phi(X-word) at g=";
        for (int k = 0; k < m; ++k) desc += std::to_string(g[k] + 1);
        report.witness(desc, lhs - rhs);
      }
    }
    if (m == degree) return;
    for (int i = 0; i < n; ++i) {
      g.push_back(i);
      visit();
      g.pop_back();
    }
  };
  visit();
  report.witness("words_checked", Rat(words_checked));
  return report;
}

CheckReport check_bernstein(const Rat& alpha, const Rat& beta, const Rat& gamma,
                            const Rat& delta, const std::map<int, Rat>& kx1,
                            const std::map<int, Rat>& kx2, int max_order) {
  if (alpha == 0 || beta == 0 || gamma == 0 || delta == 0)
    throw std::invalid_argument("bernstein check requires nonzero coefficients");
  if (alpha * gamma + beta * delta != 0)
    throw std::invalid_argument("bernstein check requires orthogonal columns");
  CheckReport report;
  report.check = "bernstein";
  report.max_order = max_order;
  report.param("coefficients", rat_str(alpha) + "," + rat_str(beta) + "," +
                                   rat_str(gamma) + "," + rat_str(delta));

  const RationalMatrix C =
      RationalMatrix::from_rows({{alpha, beta}, {gamma, delta}});
  const std::vector<std::map<int, Rat>> xdiag{kx1, kx2};

  report.witness("K(Y1,Y2)", alpha * gamma * (diag_entry(kx1, 2) - diag_entry(kx2, 2)));
  bool mixed_zero = true;
  for (const auto& pattern : mixed_row_patterns(2, max_order)) {
    const Rat value = linear_form_cumulants(C, xdiag, pattern);
    if (value != 0) mixed_zero = false;
    report.witness(y_tuple_desc(pattern), value);
  }
  report.param("mixed_cumulants_vanish", mixed_zero ? "true" : "false");

  report.pass = true;
  const Rat col_det = alpha * delta - beta * gamma;
  for (int m = 3; m <= max_order; ++m) {
    const Rat system_det = col_det *
                           rat_pow(alpha, static_cast<unsigned long>(m - 2)) * gamma *
                           rat_pow(beta, static_cast<unsigned long>(m - 2)) * delta;
    report.witness("system_det_order_" + std::to_string(m), system_det);
    if (system_det == 0) report.pass = false;
  }
  return report;
}

CheckReport check_skitovic_failure(const Rat& eps, int max_order) {
  if (eps == 0)
    throw std::invalid_argument(
        "eps = 0 is degenerate: the X_i are semicircular, no counterexample");
  CheckReport report;
  report.check = "skitovic";
  report.max_order = max_order;
  report.param("eps", rat_str(eps));

  // Y_1 = 2 X_1 - X_2 + 2 X_3,  Y_2 = 2 X_1 + 2 X_2 - X_3
  const RationalMatrix C = RationalMatrix::from_rows(
      {{Rat(2), Rat(-1), Rat(2)}, {Rat(2), Rat(2), Rat(-1)}});
  std::vector<std::map<int, Rat>> xdiag(3);
  for (int i = 0; i < 3; ++i) xdiag[i][2] = 1;
  xdiag[0][3] = eps / 4;
  xdiag[1][3] = eps;
  xdiag[2][3] = eps;

  // per-variable contributions at orders 2 and 3, before cancellation
  for (int i = 0; i < 3; ++i)
    report.witness("K2(Y1,Y2) term X" + std::to_string(i + 1),
                   C.at(0, i) * C.at(1, i) * xdiag[i][2]);
  for (int i = 0; i < 3; ++i)
    report.witness("K3(Y1,Y1,Y2) term X" + std::to_string(i + 1),
                   C.at(0, i) * C.at(0, i) * C.at(1, i) * xdiag[i][3]);
  for (int i = 0; i < 3; ++i)
    report.witness("K3(Y1,Y2,Y2) term X" + std::to_string(i + 1),
                   C.at(0, i) * C.at(1, i) * C.at(1, i) * xdiag[i][3]);

  bool mixed_zero = true;
  for (const auto& pattern : mixed_row_patterns(2, max_order)) {
    const Rat value = linear_form_cumulants(C, xdiag, pattern);
    if (value != 0) mixed_zero = false;
    report.witness(y_tuple_desc(pattern), value);
  }
  bool non_semicircular = true;
  for (int i = 0; i < 3; ++i) {
    report.witness("K3(X" + std::to_string(i + 1) + ")", xdiag[i][3]);
    if (xdiag[i][3] == 0) non_semicircular = false;
  }
  report.param("mixed_cumulants_vanish", mixed_zero ? "true" : "false");
  report.pass = mixed_zero && non_semicircular;
  return report;
}

CheckReport check_cramer_failure(const Rat& eps, int hankel_size) {
  if (hankel_size < 1) throw std::invalid_argument("hankel size must be >= 1");
  CheckReport report;
  report.check = "cramer";
  report.max_order = 2 * hankel_size;
  report.param("eps", rat_str(eps));
  report.param("hankel_size", std::to_string(hankel_size));

  CumulantSpec spec;
  spec.family = LatticeFamily::NonCrossing;
  spec.labels.insert("X");
  spec.set({"X", "X"}, 1);
  spec.set({"X", "X", "X"}, eps);

  std::vector<Rat> moments{Rat(1)};  // m_0
  for (int n = 1; n <= 2 * hankel_size; ++n)
    moments.push_back(moments_from_cumulants(spec, Tuple(n, "X")));

  report.pass = true;
  for (int k = 1; k <= hankel_size + 1; ++k) {
    RationalMatrix H(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) H.at(i, j) = moments[i + j];
    Rat minor = H.det();
    if (minor <= 0) report.pass = false;
    report.witness("hankel_minor_" + std::to_string(k), std::move(minor));
  }
  return report;
}

CheckReport check_sd_identity(const std::vector<Rat>& b,
                              const std::vector<std::map<int, Rat>>& xk,
                              const Rat& alpha, const Rat& beta, int max_order) {
  if (b.size() != xk.size())
    throw std::invalid_argument("one cumulant table per coefficient expected");
  CheckReport report;
  report.check = "sd-identity";
  report.max_order = max_order;
  {
    std::string coeffs;
    for (const auto& bi : b) coeffs += (coeffs.empty() ? "" : ",") + rat_str(bi);
    report.param("b", coeffs);
  }
  report.param("alpha", rat_str(alpha));
  report.param("beta", rat_str(beta));

  const int n = static_cast<int>(b.size());
  bool distinct = true;
  for (int i = 0; i < n && distinct; ++i)
    for (int j = i + 1; j < n; ++j)
      if (b[i] == b[j]) { distinct = false; break; }
  report.param("vandermonde_regular", distinct ? "true" : "false");

  // mixed (Y1, Y2) cumulants, Y1 = sum X_j, Y2 = sum b_j X_j
  std::vector<std::vector<Rat>> rows(2, std::vector<Rat>(n));
  for (int j = 0; j < n; ++j) {
    rows[0][j] = 1;
    rows[1][j] = b[j];
  }
  const RationalMatrix C = RationalMatrix::from_rows(rows);
  bool mixed_zero = true;
  for (const auto& pattern : mixed_row_patterns(2, max_order)) {
    const Rat value = linear_form_cumulants(C, xk, pattern);
    if (value != 0) mixed_zero = false;
    report.witness(y_tuple_desc(pattern), value);
  }
  report.param("mixed_cumulants_vanish", mixed_zero ? "true" : "false");

  bool identity_holds = true;
  for (int m = 1; m <= max_order; ++m) {
    Rat lhs = 0, rhs = 0;
    for (int j = 0; j < n; ++j) {
      const Rat km = diag_entry(xk[j], m);
      if (km == 0) continue;
      lhs += (rat_pow(alpha, static_cast<unsigned long>(m)) +
              rat_pow(beta, static_cast<unsigned long>(m)) *
                  rat_pow(b[j], static_cast<unsigned long>(m))) *
             km;
      rhs += rat_pow(alpha + beta * b[j], static_cast<unsigned long>(m)) * km;
    }
    const Rat diff = lhs - rhs;
    report.witness("identity_gap_order_" + std::to_string(m), diff);
    if (diff != 0) identity_holds = false;
  }
  report.param("identity_holds", identity_holds ? "true" : "false");
  report.pass = !mixed_zero || identity_holds;
  return report;
}

namespace {

CheckReport lukacs_core(int n_vars, const MomentOracle& oracle, LatticeFamily family,
                        int max_order, std::string source) {
  if (n_vars < 2) throw std::invalid_argument("lukacs check needs at least 2 variables");
  if (max_order < 3) throw std::invalid_argument("lukacs check needs max order >= 3");
  CheckReport report;
  report.check = "lukacs";
  report.max_order = max_order;
  report.param("n_vars", std::to_string(n_vars));
  report.param("input", std::move(source));

  NCPolynomial s1, s2;
  for (int i = 1; i <= n_vars; ++i) {
    const auto x = NCPolynomial::generator(form_label(i));
    s1 = s1 + x;
    s2 = s2 + x * x;
  }
  const NCPolynomial t = s2 - s1 * s1 * Rat(1, n_vars);

  report.pass = true;
  for (int c = 2; c <= max_order; ++c) {
    std::vector<NCPolynomial> ps(static_cast<std::size_t>(c) - 1, s1);
    ps.push_back(t);
    const Rat value = joint_cumulant_of_polynomials(oracle, family, ps);
    if (value != 0) report.pass = false;
    std::string desc = "K(";
    for (int k = 0; k < c - 1; ++k) desc += "S1,";
    desc += "T)";
    report.witness(desc, value);
  }
  return report;
}

}  // namespace

CheckReport check_lukacs(int n_vars, const PairWeight& w, int max_order) {
  return lukacs_core(n_vars, oracle_from_weight(w), w.natural_family(), max_order,
                     w.str());
}

CheckReport check_lukacs(int n_vars, LatticeFamily family,
                         const std::map<int, Rat>& k_single, int max_order) {
  CumulantSpec spec;
  spec.family = family;
  spec.declared_independent = true;
  for (int i = 1; i <= n_vars; ++i) {
    const std::string label = form_label(i);
    spec.labels.insert(label);
    for (const auto& [arity, value] : k_single)
      spec.set(Tuple(static_cast<std::size_t>(arity), label), value);
  }
  spec.validate();
  return lukacs_core(n_vars, oracle_from_spec(spec), family, max_order, "spec");
}

}  // namespace ncg
