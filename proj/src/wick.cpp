#include "ncg/wick.hpp"

#include <mutex>

namespace ncg {

PairWeight PairWeight::parse(const std::string& text) {
  if (text == "classical") return classical();
  if (text == "free") return free_weight();
  if (text == "boolean") return boolean();
  if (text.rfind("q:", 0) == 0) return q_deformed(rat_parse(text.substr(2)));
  throw std::invalid_argument("unknown pair weight: \"" + text + "\"");
}

std::string PairWeight::str() const {
  switch (kind) {
    case Kind::Classical: return "classical";
    case Kind::Free: return "free";
    case Kind::Boolean: return "boolean";
    case Kind::QDeformed: return "q:" + rat_str(q);
    case Kind::Custom: return "custom";
  }
  throw std::logic_error("bad weight kind");
}

Rat PairWeight::nu(const Partition& p) const {
  if (!is_pair_partition(p))
    throw std::invalid_argument("pair weight evaluated on a non-pair partition");
  switch (kind) {
    case Kind::Classical:
      return 1;
    case Kind::Free:
      return is_noncrossing(p) ? 1 : 0;
    case Kind::Boolean:
      return is_interval_partition(p) ? 1 : 0;
    case Kind::QDeformed:
      return rat_pow(q, static_cast<unsigned long>(crossing_number(p)));
    case Kind::Custom: {
      auto it = table.find(p.str());
      if (it == table.end())
        throw std::invalid_argument("custom weight table missing entry for " + p.str());
      return it->second;
    }
  }
  throw std::logic_error("bad weight kind");
}

LatticeFamily PairWeight::natural_family() const {
  switch (kind) {
    case Kind::Free: return LatticeFamily::NonCrossing;
    case Kind::Boolean: return LatticeFamily::Interval;
    default: return LatticeFamily::All;
  }
}

NCPolynomial NCPolynomial::scalar(const Rat& c) {
  NCPolynomial p;
  if (c != 0) p.terms_[Word{}] = c;
  return p;
}

NCPolynomial NCPolynomial::generator(const std::string& label) {
  NCPolynomial p;
  p.terms_[Word{label}] = 1;
  return p;
}

int NCPolynomial::degree() const {
  int d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

NCPolynomial NCPolynomial::operator+(const NCPolynomial& o) const {
  NCPolynomial out = *this;
  for (const auto& [w, c] : o.terms_) {
    auto it = out.terms_.find(w);
    if (it == out.terms_.end()) {
      out.terms_[w] = c;
    } else {
      it->second += c;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

NCPolynomial NCPolynomial::operator-(const NCPolynomial& o) const {
  return *this + o * Rat(-1);
}

NCPolynomial NCPolynomial::operator*(const NCPolynomial& o) const {
  NCPolynomial out;
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      auto it = out.terms_.find(w);
      if (it == out.terms_.end()) {
        out.terms_[std::move(w)] = c1 * c2;
      } else {
        it->second += c1 * c2;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  return out;
}

NCPolynomial NCPolynomial::operator*(const Rat& s) const {
  NCPolynomial out;
  if (s == 0) return out;
  for (const auto& [w, c] : terms_) out.terms_[w] = c * s;
  return out;
}

Rat wick_moment(const PairWeight& w, const Word& word) {
  const int n = static_cast<int>(word.size());
  if (n % 2 != 0) return 0;
  if (n == 0) return 1;
  Rat sum = 0;
  for (const auto& p : enumerate_partitions_cached(LatticeFamily::Pair, n)) {
    bool admissible = true;  // p <= ker(word)
    for (const auto& block : p.blocks())
      if (word[block[0] - 1] != word[block[1] - 1]) {
        admissible = false;
        break;
      }
    if (admissible) sum += w.nu(p);
  }
  return sum;
}

Rat phi(const PairWeight& w, const NCPolynomial& p) {
  Rat sum = 0;
  for (const auto& [word, coeff] : p.terms()) sum += coeff * wick_moment(w, word);
  return sum;
}

MomentOracle oracle_from_weight(const PairWeight& w) {
  auto memo = std::make_shared<std::map<Word, Rat>>();
  auto mutex = std::make_shared<std::mutex>();
  return [w, memo, mutex](const Word& word) -> Rat {
    {
      std::lock_guard<std::mutex> lock(*mutex);
      if (auto it = memo->find(word); it != memo->end()) return it->second;
    }
    Rat value = wick_moment(w, word);
    std::lock_guard<std::mutex> lock(*mutex);
    return memo->emplace(word, std::move(value)).first->second;
  };
}

MomentOracle oracle_from_spec(const CumulantSpec& spec) {
  return [spec](const Word& word) { return moments_from_cumulants(spec, word); };
}

Rat joint_cumulant_of_polynomials(const MomentOracle& oracle, LatticeFamily family,
                                  const std::vector<NCPolynomial>& ps,
                                  int degree_cap) {
  if (ps.empty()) throw std::invalid_argument("empty polynomial tuple");
  auto tuple_phi = [&oracle, &ps, degree_cap](const Tuple& t) -> Rat {
    NCPolynomial product = NCPolynomial::scalar(1);
    for (const auto& label : t) product = product * ps[std::stoul(label)];
    if (product.degree() > degree_cap)
      throw std::invalid_argument("expanded word length " +
                                  std::to_string(product.degree()) +
                                  " exceeds degree cap " + std::to_string(degree_cap));
    Rat sum = 0;
    for (const auto& [word, coeff] : product.terms()) sum += coeff * oracle(word);
    return sum;
  };
  CumulantExtractor extractor(tuple_phi, family);
  Tuple top(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) top[i] = std::to_string(i);
  return extractor.cumulant(top);
}

Rat joint_cumulant_of_polynomials(const PairWeight& w, LatticeFamily family,
                                  const std::vector<NCPolynomial>& ps,
                                  int degree_cap, bool allow_family_mismatch) {
  if (!allow_family_mismatch && family != w.natural_family())
    throw std::invalid_argument("family " + family_name(family) +
                                " does not match weight " + w.str() +
                                " (natural family " +
                                family_name(w.natural_family()) + ")");
  return joint_cumulant_of_polynomials(oracle_from_weight(w), family, ps, degree_cap);
}

CltMoment clt_moment(long N, int n,
                     const std::function<Rat(const Partition&)>& phi_table) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  if (n < 0) throw std::invalid_argument("negative degree");
  Rat sum = 0;
  for (const auto& p : enumerate_partitions_cached(LatticeFamily::All, n))
    sum += Rat(count_kernel_maps(p, N)) * phi_table(p);
  CltMoment out;
  out.half_power = (n % 2 != 0);
  Rat scale = rat_pow(Rat(N), static_cast<unsigned long>(n / 2));
  out.coefficient = sum / scale;
  return out;
}

Rat clt_limit(int n, const std::function<Rat(const Partition&)>& phi_table) {
  if (n % 2 != 0) return 0;
  Rat sum = 0;
  for (const auto& p : enumerate_partitions_cached(LatticeFamily::Pair, n))
    sum += phi_table(p);
  return sum;
}

std::function<Rat(const Partition&)> iid_phi_table(std::vector<Rat> single_moments,
                                                   bool singleton_vanish) {
  return [moments = std::move(single_moments), singleton_vanish](const Partition& p) -> Rat {
    Rat prod = 1;
    for (const auto& block : p.blocks()) {
      const std::size_t size = block.size();
      if (singleton_vanish && size == 1) return 0;
      if (size >= moments.size())
        throw std::invalid_argument("phi table missing moment of order " +
                                    std::to_string(size));
      prod *= moments[size];
      if (prod == 0) return prod;
    }
    return prod;
  };
}

}  // namespace ncg
