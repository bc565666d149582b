// Command-line front end: every library operation behind one subcommand,
// JSON in/out, rationals as "p/q". Exit codes: 0 success or passing check,
// 1 failing check, 2 invalid input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ncg/checks.hpp"
#include "ncg/cumulant.hpp"
#include "ncg/forms.hpp"
#include "ncg/json_io.hpp"
#include "ncg/matrix.hpp"
#include "ncg/partition.hpp"
#include "ncg/rational.hpp"
#include "ncg/wick.hpp"

namespace {

using ncg::json;
using ncg::Rat;

bool g_pretty = false;
int g_exit = 0;

void emit(const json& j) {
  if (g_pretty)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

// Accepts inline JSON (starts with '{' or '[') or a file path.
json load_json(const std::string& arg) {
  std::string text = arg;
  if (arg.empty() || (arg[0] != '{' && arg[0] != '[')) {
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open file: " + arg);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return json::parse(text);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream stream(s);
  std::string item;
  while (std::getline(stream, item, ',')) out.push_back(item);
  return out;
}

std::vector<Rat> parse_rat_list(const std::string& s) {
  std::vector<Rat> out;
  for (const auto& item : split_commas(s)) out.push_back(ncg::rat_parse(item));
  return out;
}

std::map<int, Rat> diag_from_json(const json& j) {
  std::map<int, Rat> out;
  for (const auto& [key, value] : j.items())
    out[std::stoi(key)] = ncg::rat_parse(value.get<std::string>());
  return out;
}

std::vector<std::map<int, Rat>> diag_list_from_json(const json& j) {
  std::vector<std::map<int, Rat>> out;
  for (const auto& item : j) out.push_back(diag_from_json(item));
  return out;
}

ncg::PairWeight weight_from_arg(const std::string& arg) {
  if (arg.rfind("custom:", 0) == 0) {
    const json j = load_json(arg.substr(7));
    std::map<std::string, Rat> table;
    for (const auto& [key, value] : j.items())
      table[key] = ncg::rat_parse(value.get<std::string>());
    return ncg::PairWeight::custom(std::move(table));
  }
  return ncg::PairWeight::parse(arg);
}

void emit_report(const ncg::CheckReport& report) {
  emit(ncg::report_to_json(report));
  g_exit = report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cumulant calculus over partition lattices"};
  app.require_subcommand(1);
  app.add_flag("--pretty", g_pretty, "indent JSON output");
  app.fallthrough();

  // shared option storage
  std::string family_arg = "all", weight_arg = "classical", word_arg, p_arg;
  std::string grouping_arg, spec_arg, matrix_arg, matrices_arg, b_arg, a_arg;
  std::string json_arg, kx_arg, k1_arg, k2_arg, xk_arg, args_arg, moments_arg;
  std::string calculus_arg, vec_arg;
  std::string alpha_arg = "1", beta_arg = "1", eps_arg = "1";
  int n_arg = 0, order_arg = 4, nvars_arg = 2, hankel_arg = 5;
  long bigN_arg = 2;
  bool count_only = false, limit_flag = false;

  // ---- partitions ----
  auto* partitions = app.add_subcommand("partitions", "partition lattice operations");
  partitions->require_subcommand(1);

  auto* penum = partitions->add_subcommand("enum", "enumerate a lattice family");
  penum->add_option("--family", family_arg);
  penum->add_option("--n", n_arg)->required();
  penum->add_flag("--count-only", count_only);
  penum->callback([&] {
    const auto list = ncg::enumerate_partitions(ncg::family_parse(family_arg), n_arg);
    if (count_only) {
      emit(json{{"count", list.size()}});
    } else {
      json parts = json::array();
      for (const auto& p : list) parts.push_back(p.str());
      emit(json{{"count", list.size()}, {"partitions", std::move(parts)}});
    }
  });

  auto* pmob = partitions->add_subcommand("mobius", "Moebius function to the top");
  pmob->add_option("--p", p_arg)->required();
  pmob->callback([&] {
    emit(json{{"mobius", ncg::rat_str(ncg::mobius_to_top(ncg::Partition::parse(p_arg)))}});
  });

  auto* pker = partitions->add_subcommand("kernel", "kernel partition of a label tuple");
  pker->add_option("--word", word_arg)->required();
  pker->callback([&] {
    emit(json{{"kernel", ncg::kernel_of(split_commas(word_arg)).str()}});
  });

  auto* pcon = partitions->add_subcommand("connect",
                                          "family members joining the grouping to the top");
  pcon->add_option("--grouping", grouping_arg)->required();
  pcon->add_option("--family", family_arg);
  pcon->callback([&] {
    const auto list = ncg::connecting_partitions(ncg::Partition::parse(grouping_arg),
                                                 ncg::family_parse(family_arg));
    json parts = json::array();
    for (const auto& p : list) parts.push_back(p.str());
    emit(json{{"count", list.size()}, {"partitions", std::move(parts)}});
  });

  // ---- cumulants ----
  auto* cumulants = app.add_subcommand("cumulants", "moment/cumulant transforms");
  cumulants->require_subcommand(1);

  auto* c2m = cumulants->add_subcommand("to-moments", "moment of a label tuple from a spec");
  c2m->add_option("--spec", spec_arg)->required();
  c2m->add_option("--word", word_arg)->required();
  c2m->callback([&] {
    const auto spec = ncg::spec_from_json(load_json(spec_arg));
    emit(json{{"value",
               ncg::rat_str(ncg::moments_from_cumulants(spec, split_commas(word_arg)))}});
  });

  auto* m2c = cumulants->add_subcommand("from-moments", "invert a moment table to a spec");
  m2c->add_option("--json", json_arg)->required();
  m2c->callback([&] {
    const json j = load_json(json_arg);
    std::map<ncg::Tuple, Rat> table;
    ncg::MomentFunction m;
    m.max_degree = j.at("max_degree").get<int>();
    for (const auto& l : j.at("labels")) m.labels.insert(l.get<std::string>());
    for (const auto& entry : j.at("moments"))
      table[entry.at("args").get<ncg::Tuple>()] =
          ncg::rat_parse(entry.at("value").get<std::string>());
    m.phi = [table](const ncg::Tuple& t) -> Rat {
      auto it = table.find(t);
      return it == table.end() ? Rat(0) : it->second;
    };
    emit(ncg::spec_to_json(
        ncg::cumulants_from_moments(m, ncg::calculus_parse(j.at("family").get<std::string>()))));
  });

  auto* clf = cumulants->add_subcommand("linear-form",
                                        "cumulant of linear forms in independent variables");
  clf->add_option("--matrix", matrix_arg)->required();
  clf->add_option("--xdiag", xk_arg)->required();
  clf->add_option("--args", args_arg)->required();
  clf->callback([&] {
    const auto C = ncg::matrix_from_json(load_json(matrix_arg));
    const auto xdiag = diag_list_from_json(load_json(xk_arg));
    std::vector<int> rows;
    for (const auto& s : split_commas(args_arg)) rows.push_back(std::stoi(s) - 1);
    emit(json{{"value", ncg::rat_str(ncg::linear_form_cumulants(C, xdiag, rows))}});
  });

  // ---- wick ----
  auto* wick = app.add_subcommand("wick", "pair-partition moment of a word or polynomial");
  wick->add_option("--weight", weight_arg);
  wick->add_option("--word", word_arg);
  wick->add_option("--poly", json_arg);
  wick->callback([&] {
    const auto w = weight_from_arg(weight_arg);
    if (!word_arg.empty()) {
      emit(json{{"value", ncg::rat_str(ncg::wick_moment(w, split_commas(word_arg)))}});
    } else if (!json_arg.empty()) {
      ncg::NCPolynomial poly;
      for (const auto& term : load_json(json_arg)) {
        ncg::NCPolynomial t = ncg::NCPolynomial::scalar(
            ncg::rat_parse(term.at("coeff").get<std::string>()));
        for (const auto& l : term.at("word"))
          t = t * ncg::NCPolynomial::generator(l.get<std::string>());
        poly = poly + t;
      }
      emit(json{{"value", ncg::rat_str(ncg::phi(w, poly))}});
    } else {
      throw std::invalid_argument("wick needs --word or --poly");
    }
  });

  // ---- clt ----
  auto* clt = app.add_subcommand("clt", "exact finite-N central-limit moment");
  clt->add_option("--N", bigN_arg);
  clt->add_option("--n", n_arg)->required();
  clt->add_option("--moments", moments_arg)->required();
  clt->add_flag("--limit", limit_flag);
  clt->callback([&] {
    std::vector<Rat> single{Rat(0)};  // index by block size, 0 unused
    for (const auto& m : parse_rat_list(moments_arg)) single.push_back(m);
    const auto table = ncg::iid_phi_table(single);
    if (limit_flag) {
      emit(json{{"value", ncg::rat_str(ncg::clt_limit(n_arg, table))}});
    } else {
      const auto moment = ncg::clt_moment(bigN_arg, n_arg, table);
      emit(json{{"coefficient", ncg::rat_str(moment.coefficient)},
                {"half_power", moment.half_power}});
    }
  });

  // ---- qform ----
  auto* qform = app.add_subcommand("qform", "quadratic forms in Gaussian variables");
  qform->require_subcommand(1);

  auto* qsingle = qform->add_subcommand("single", "K_n(Q) = tr(A^n) K_n(X^2)");
  qsingle->add_option("--matrix", matrix_arg)->required();
  qsingle->add_option("--weight", weight_arg);
  qsingle->add_option("--order", order_arg);
  qsingle->callback([&] {
    const auto A = ncg::matrix_from_json(load_json(matrix_arg));
    const auto w = weight_from_arg(weight_arg);
    emit(json{{"value",
               ncg::rat_str(ncg::qform_cumulant(A, ncg::ksq_from_weight(w), order_arg))}});
  });

  auto* qjoint = qform->add_subcommand("joint", "joint cumulant of quadratic forms");
  qjoint->add_option("--matrices", matrices_arg)->required();
  qjoint->add_option("--weight", weight_arg);
  qjoint->callback([&] {
    std::vector<ncg::RationalMatrix> As;
    for (const auto& j : load_json(matrices_arg)) As.push_back(ncg::matrix_from_json(j));
    const auto w = weight_from_arg(weight_arg);
    emit(json{{"value",
               ncg::rat_str(ncg::qform_joint_cumulants(As, ncg::kpair_from_weight(w)))}});
  });

  auto* qind = qform->add_subcommand("independence", "AB = 0 criterion diagnostics");
  qind->add_option("--a", a_arg)->required();
  qind->add_option("--b", b_arg)->required();
  qind->add_option("--weight", weight_arg);
  qind->add_option("--max-order", order_arg);
  qind->callback([&] {
    const auto v = ncg::qform_independence_check(
        ncg::matrix_from_json(load_json(a_arg)), ncg::matrix_from_json(load_json(b_arg)),
        weight_from_arg(weight_arg), order_arg);
    json mixed = json::array();
    for (const auto& [pattern, value] : v.mixed)
      mixed.push_back(json{{"pattern", pattern}, {"value", ncg::rat_str(value)}});
    emit(json{{"ab_zero", v.ab_zero},
              {"trace_identity", ncg::rat_str(v.trace_identity)},
              {"all_mixed_zero", v.all_mixed_zero},
              {"mixed", std::move(mixed)}});
  });

  auto* qlq = qform->add_subcommand("lq", "linear vs quadratic form independence data");
  qlq->add_option("--matrix", matrix_arg)->required();
  qlq->add_option("--vec", vec_arg)->required();
  qlq->add_option("--weight", weight_arg);
  qlq->add_option("--max-order", order_arg);
  qlq->callback([&] {
    const auto report = ncg::lq_independence_data(
        ncg::matrix_from_json(load_json(matrix_arg)), parse_rat_list(vec_arg),
        weight_from_arg(weight_arg), order_arg);
    json mixed = json::array();
    for (const auto& [desc, value] : report.mixed)
      mixed.push_back(json{{"desc", desc}, {"value", ncg::rat_str(value)}});
    emit(json{{"Ab", ncg::vector_to_json(report.Ab)},
              {"btA", ncg::vector_to_json(report.btA)},
              {"ab_zero", report.ab_zero},
              {"diagonal_sums", ncg::vector_to_json(report.diagonal_sums)},
              {"all_mixed_zero", report.all_mixed_zero},
              {"mixed", std::move(mixed)}});
  });

  auto* qshift = qform->add_subcommand("shifted", "cumulants of sum (X_i + a_i)^2");
  qshift->add_option("--vec", vec_arg)->required();
  qshift->add_option("--weight", weight_arg);
  qshift->add_option("--order", order_arg);
  qshift->callback([&] {
    const auto w = weight_from_arg(weight_arg);
    emit(json{{"value", ncg::rat_str(ncg::shifted_squares_cumulant(
                            parse_rat_list(vec_arg), w, w.natural_family(), order_arg))}});
  });

  // ---- check ----
  auto* check = app.add_subcommand("check", "theorem verifications");
  check->require_subcommand(1);

  auto* cstab = check->add_subcommand("stability", "fixed point of sum a_i X_i");
  cstab->add_option("--a", a_arg)->required();
  cstab->add_option("--kx", kx_arg)->required();
  cstab->add_option("--max-order", order_arg);
  cstab->callback([&] {
    emit_report(ncg::check_stability(parse_rat_list(a_arg),
                                     diag_from_json(load_json(kx_arg)), order_arg));
  });

  auto* cmax = check->add_subcommand("maxwell", "forward spherical symmetry");
  cmax->add_option("--matrix", matrix_arg)->required();
  cmax->add_option("--weight", weight_arg);
  cmax->add_option("--max-order", order_arg);
  cmax->callback([&] {
    emit_report(ncg::check_maxwell_forward(weight_from_arg(weight_arg),
                                           ncg::matrix_from_json(load_json(matrix_arg)),
                                           order_arg));
  });

  auto* cbern = check->add_subcommand("bernstein", "orthogonal-column linear forms");
  cbern->add_option("--coeffs", args_arg)->required();
  cbern->add_option("--k1", k1_arg)->required();
  cbern->add_option("--k2", k2_arg)->required();
  cbern->add_option("--max-order", order_arg);
  cbern->callback([&] {
    const auto c = parse_rat_list(args_arg);
    if (c.size() != 4)
      throw std::invalid_argument("--coeffs expects alpha,beta,gamma,delta");
    emit_report(ncg::check_bernstein(c[0], c[1], c[2], c[3],
                                     diag_from_json(load_json(k1_arg)),
                                     diag_from_json(load_json(k2_arg)), order_arg));
  });

  auto* cskit = check->add_subcommand("skitovic", "free Skitovic-Darmois counterexample");
  cskit->add_option("--eps", eps_arg);
  cskit->add_option("--max-order", order_arg);
  cskit->callback([&] {
    emit_report(ncg::check_skitovic_failure(ncg::rat_parse(eps_arg), order_arg));
  });

  auto* ccram = check->add_subcommand("cramer", "Hankel desk check of the eps-spec");
  ccram->add_option("--eps", eps_arg);
  ccram->add_option("--hankel-size", hankel_arg);
  ccram->callback([&] {
    emit_report(ncg::check_cramer_failure(ncg::rat_parse(eps_arg), hankel_arg));
  });

  auto* csd = check->add_subcommand("sd-identity", "two cumulant expansions of aY1+bY2");
  csd->add_option("--b", b_arg)->required();
  csd->add_option("--xk", xk_arg)->required();
  csd->add_option("--alpha", alpha_arg);
  csd->add_option("--beta", beta_arg);
  csd->add_option("--max-order", order_arg);
  csd->callback([&] {
    emit_report(ncg::check_sd_identity(parse_rat_list(b_arg),
                                       diag_list_from_json(load_json(xk_arg)),
                                       ncg::rat_parse(alpha_arg),
                                       ncg::rat_parse(beta_arg), order_arg));
  });

  auto* cluk = check->add_subcommand("lukacs", "sample mean vs sample variation");
  cluk->add_option("--n-vars", nvars_arg);
  cluk->add_option("--weight", weight_arg);
  cluk->add_option("--kx", kx_arg);
  cluk->add_option("--family", calculus_arg);
  cluk->add_option("--max-order", order_arg);
  cluk->callback([&] {
    if (!kx_arg.empty()) {
      const auto family =
          calculus_arg.empty() ? ncg::LatticeFamily::All : ncg::calculus_parse(calculus_arg);
      emit_report(ncg::check_lukacs(nvars_arg, family,
                                    diag_from_json(load_json(kx_arg)), order_arg));
    } else {
      emit_report(ncg::check_lukacs(nvars_arg, weight_from_arg(weight_arg), order_arg));
    }
  });

  // ---- matrix ----
  auto* matrix = app.add_subcommand("matrix", "exact matrix predicates");
  matrix->require_subcommand(1);

  auto* morth = matrix->add_subcommand("orthogonal", "U^t U = I");
  morth->add_option("--matrix", matrix_arg)->required();
  morth->callback([&] {
    emit(json{{"orthogonal", ncg::matrix_from_json(load_json(matrix_arg)).is_orthogonal()}});
  });

  auto* mirr = matrix->add_subcommand("irreducible", "bipartite pattern connectivity");
  mirr->add_option("--matrix", matrix_arg)->required();
  mirr->callback([&] {
    emit(json{{"irreducible", ncg::matrix_from_json(load_json(matrix_arg)).is_irreducible()}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return g_exit;
}
