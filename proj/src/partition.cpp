#include "ncg/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

namespace ncg {

Partition::Partition(int n, std::vector<std::vector<int>> blocks) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative ground-set size");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("empty block");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1 || x > n) throw std::invalid_argument("element out of range");
      if (seen[x]) throw std::invalid_argument("blocks not disjoint");
      seen[x] = 1;
    }
  }
  for (int x = 1; x <= n; ++x)
    if (!seen[x]) throw std::invalid_argument("blocks do not cover {1..n}");
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  blocks_ = std::move(blocks);
  code_.assign(n, 0);
  for (int k = 0; k < static_cast<int>(blocks_.size()); ++k)
    for (int x : blocks_[k]) code_[x - 1] = k;
}

Partition Partition::from_code(const std::vector<int>& code) {
  const int n = static_cast<int>(code.size());
  std::vector<std::vector<int>> blocks;
  std::vector<int> renumber;  // original block id -> canonical id
  for (int i = 0; i < n; ++i) {
    int id = code[i];
    if (id < 0) throw std::invalid_argument("negative block id");
    int found = -1;
    for (std::size_t k = 0; k < renumber.size(); ++k)
      if (renumber[k] == id) { found = static_cast<int>(k); break; }
    if (found < 0) {
      renumber.push_back(id);
      blocks.emplace_back();
      found = static_cast<int>(blocks.size()) - 1;
    }
    blocks[found].push_back(i + 1);
  }
  return Partition(n, std::move(blocks));
}

Partition Partition::singletons(int n) {
  std::vector<int> code(n);
  std::iota(code.begin(), code.end(), 0);
  return from_code(code);
}

Partition Partition::one_block(int n) {
  return from_code(std::vector<int>(n, 0));
}

Partition Partition::parse(const std::string& text, int n) {
  std::vector<std::vector<int>> blocks;
  if (!text.empty()) {
    std::stringstream blk_stream(text);
    std::string blk;
    while (std::getline(blk_stream, blk, '|')) {
      std::vector<int> block;
      std::stringstream el_stream(blk);
      std::string el;
      while (std::getline(el_stream, el, ',')) {
        std::size_t pos = 0;
        int v;
        try {
          v = std::stoi(el, &pos);
        } catch (const std::exception&) {
          throw std::invalid_argument("bad partition element: \"" + el + "\"");
        }
        if (pos != el.size())
          throw std::invalid_argument("bad partition element: \"" + el + "\"");
        block.push_back(v);
      }
      if (block.empty()) throw std::invalid_argument("empty block in \"" + text + "\"");
      blocks.push_back(std::move(block));
    }
  }
  int size = 0;
  for (const auto& b : blocks)
    for (int x : b) size = std::max(size, x);
  if (n >= 0 && n != size)
    throw std::invalid_argument("partition \"" + text + "\" is not on {1.." +
                                std::to_string(n) + "}");
  Partition p(size, blocks);
  if (p.blocks() != blocks)
    throw std::invalid_argument("partition \"" + text + "\" not in canonical order");
  return p;
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (k) out += '|';
    for (std::size_t i = 0; i < blocks_[k].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(blocks_[k][i]);
    }
  }
  return out;
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
  if (auto c = n_ <=> o.n_; c != 0) return c;
  return code_ <=> o.code_;
}

LatticeFamily family_parse(const std::string& name) {
  if (name == "all") return LatticeFamily::All;
  if (name == "pair") return LatticeFamily::Pair;
  if (name == "noncrossing") return LatticeFamily::NonCrossing;
  if (name == "interval") return LatticeFamily::Interval;
  if (name == "noncrossing-pair") return LatticeFamily::NonCrossingPair;
  if (name == "interval-pair") return LatticeFamily::IntervalPair;
  throw std::invalid_argument("unknown lattice family: \"" + name + "\"");
}

std::string family_name(LatticeFamily f) {
  switch (f) {
    case LatticeFamily::All: return "all";
    case LatticeFamily::Pair: return "pair";
    case LatticeFamily::NonCrossing: return "noncrossing";
    case LatticeFamily::Interval: return "interval";
    case LatticeFamily::NonCrossingPair: return "noncrossing-pair";
    case LatticeFamily::IntervalPair: return "interval-pair";
  }
  throw std::logic_error("bad family tag");
}

bool is_pair_partition(const Partition& p) {
  for (const auto& b : p.blocks())
    if (b.size() != 2) return false;
  return true;
}

bool is_noncrossing(const Partition& p) {
  // a < b < c < d with {a,c}, {b,d} in distinct blocks
  const auto& code = p.code();
  const int n = p.n();
  for (int a = 1; a <= n; ++a)
    for (int c = a + 2; c <= n; ++c) {
      if (code[a - 1] != code[c - 1]) continue;
      for (int b = a + 1; b < c; ++b) {
        if (code[b - 1] == code[a - 1]) continue;
        for (int d = c + 1; d <= n; ++d)
          if (code[d - 1] == code[b - 1]) return false;
      }
    }
  return true;
}

bool is_interval_partition(const Partition& p) {
  for (const auto& b : p.blocks())
    if (b.back() - b.front() + 1 != static_cast<int>(b.size())) return false;
  return true;
}

bool family_member(LatticeFamily f, const Partition& p) {
  switch (f) {
    case LatticeFamily::All: return true;
    case LatticeFamily::Pair: return is_pair_partition(p);
    case LatticeFamily::NonCrossing: return is_noncrossing(p);
    case LatticeFamily::Interval: return is_interval_partition(p);
    case LatticeFamily::NonCrossingPair:
      return is_pair_partition(p) && is_noncrossing(p);
    case LatticeFamily::IntervalPair:
      return is_pair_partition(p) && is_interval_partition(p);
  }
  throw std::logic_error("bad family tag");
}

namespace {

// Iterative restricted-growth-string odometer, lexicographic order.
std::vector<Partition> enumerate_all(int n) {
  std::vector<Partition> out;
  if (n == 0) {
    out.push_back(Partition());
    return out;
  }
  std::vector<int> a(n, 0);  // a[0] = 0, a[i] <= max(a[0..i-1]) + 1
  for (;;) {
    out.push_back(Partition::from_code(a));
    int i = n - 1;
    for (; i >= 1; --i) {
      int cap = 0;
      for (int j = 0; j < i; ++j) cap = std::max(cap, a[j]);
      if (a[i] <= cap) break;
    }
    if (i < 1) return out;
    ++a[i];
    std::fill(a.begin() + i + 1, a.end(), 0);
  }
}

void pairings_rec(std::vector<int>& avail, std::vector<std::vector<int>>& blocks,
                  int n, std::vector<Partition>& out) {
  if (avail.empty()) {
    out.push_back(Partition(n, blocks));
    return;
  }
  const int a = avail.front();
  for (std::size_t j = 1; j < avail.size(); ++j) {
    std::vector<int> rest;
    rest.reserve(avail.size() - 2);
    for (std::size_t k = 1; k < avail.size(); ++k)
      if (k != j) rest.push_back(avail[k]);
    blocks.push_back({a, avail[j]});
    pairings_rec(rest, blocks, n, out);
    blocks.pop_back();
  }
}

std::vector<Partition> enumerate_pairings(int n) {
  std::vector<Partition> out;
  if (n % 2 != 0) return out;
  if (n == 0) {
    out.push_back(Partition());
    return out;
  }
  std::vector<int> avail(n);
  std::iota(avail.begin(), avail.end(), 1);
  std::vector<std::vector<int>> blocks;
  pairings_rec(avail, blocks, n, out);
  return out;
}

// Noncrossing partitions by interval splitting: the block of the smallest
// element of a segment cuts the segment into independent sub-segments.
void noncrossing_rec(std::vector<std::pair<int, int>>& segments,
                     std::vector<std::vector<int>>& blocks, int n,
                     std::vector<Partition>& out) {
  while (!segments.empty() && segments.back().first > segments.back().second)
    segments.pop_back();
  if (segments.empty()) {
    out.push_back(Partition(n, blocks));
    return;
  }
  auto [l, r] = segments.back();
  auto saved = segments;
  segments.pop_back();
  std::vector<int> block{l};
  std::vector<std::pair<int, int>> gaps;
  std::function<void(int)> extend = [&](int last) {
    // close the block at `last`
    {
      auto segs2 = segments;
      for (auto g : gaps) segs2.push_back(g);
      if (last < r) segs2.push_back({last + 1, r});
      blocks.push_back(block);
      noncrossing_rec(segs2, blocks, n, out);
      blocks.pop_back();
    }
    // or pick the next block element c > last
    for (int c = last + 1; c <= r; ++c) {
      block.push_back(c);
      gaps.push_back({last + 1, c - 1});
      extend(c);
      gaps.pop_back();
      block.pop_back();
    }
  };
  extend(l);
  segments = saved;
}

std::vector<Partition> enumerate_noncrossing(int n) {
  std::vector<Partition> out;
  if (n == 0) {
    out.push_back(Partition());
    return out;
  }
  std::vector<std::pair<int, int>> segments{{1, n}};
  std::vector<std::vector<int>> blocks;
  noncrossing_rec(segments, blocks, n, out);
  return out;
}

std::vector<Partition> enumerate_interval(int n) {
  std::vector<Partition> out;
  if (n == 0) {
    out.push_back(Partition());
    return out;
  }
  std::vector<int> code(n);
  std::function<void(int, int)> rec = [&](int start, int id) {
    if (start > n) {
      out.push_back(Partition::from_code(code));
      return;
    }
    for (int len = 1; start + len - 1 <= n; ++len) {
      for (int i = 0; i < len; ++i) code[start - 1 + i] = id;
      rec(start + len, id + 1);
    }
  };
  rec(1, 0);
  return out;
}

}  // namespace

std::vector<Partition> enumerate_partitions(LatticeFamily f, int n) {
  if (n < 0) throw std::invalid_argument("negative ground-set size");
  std::vector<Partition> out;
  switch (f) {
    case LatticeFamily::All:
      return enumerate_all(n);  // already lexicographic
    case LatticeFamily::Pair:
      out = enumerate_pairings(n);
      break;
    case LatticeFamily::NonCrossing:
      out = enumerate_noncrossing(n);
      break;
    case LatticeFamily::Interval:
      out = enumerate_interval(n);
      break;
    case LatticeFamily::NonCrossingPair:
      for (auto& p : enumerate_pairings(n))
        if (is_noncrossing(p)) out.push_back(std::move(p));
      break;
    case LatticeFamily::IntervalPair:
      for (auto& p : enumerate_pairings(n))
        if (is_interval_partition(p)) out.push_back(std::move(p));
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<Partition>& enumerate_partitions_cached(LatticeFamily f, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<Partition>> cache;
  const auto key = std::make_pair(static_cast<int>(f), n);
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, enumerate_partitions(f, n)).first;
  return it->second;
}

Partition join(const Partition& p, const Partition& q) {
  if (p.n() != q.n())
    throw std::invalid_argument("join: ground-set size mismatch");
  const int n = p.n();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const auto* part : {&p, &q})
    for (const auto& b : part->blocks())
      for (std::size_t i = 1; i < b.size(); ++i)
        unite(b[0] - 1, b[i] - 1);
  std::vector<int> code(n);
  for (int i = 0; i < n; ++i) code[i] = find(i);
  return Partition::from_code(code);
}

bool leq(const Partition& p, const Partition& q) {
  if (p.n() != q.n())
    throw std::invalid_argument("leq: ground-set size mismatch");
  for (const auto& b : p.blocks())
    for (std::size_t i = 1; i < b.size(); ++i)
      if (q.block_of(b[i]) != q.block_of(b[0])) return false;
  return true;
}

int crossing_number(const Partition& p) {
  if (!is_pair_partition(p))
    throw std::invalid_argument("crossing_number: not a pair partition");
  int crossings = 0;
  const auto& blocks = p.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      const int a = blocks[i][0], c = blocks[i][1];
      const int b = blocks[j][0], d = blocks[j][1];
      if (a < b && b < c && c < d) ++crossings;
    }
  return crossings;
}

Rat mobius_to_top(const Partition& p) {
  const int b = p.block_count();
  if (b == 0) return 1;
  Rat m(factorial(static_cast<unsigned>(b - 1)));
  return (b % 2 == 1) ? m : -m;
}

Int count_kernel_maps(const Partition& p, long pool) {
  if (pool < 0) throw std::invalid_argument("negative label-pool size");
  Int count = 1;
  for (int k = 0; k < p.block_count(); ++k) {
    if (pool - k <= 0) return 0;
    count *= (pool - k);
  }
  return count;
}

std::vector<Partition> connecting_partitions(const Partition& grouping,
                                             LatticeFamily f) {
  const Partition top = Partition::one_block(grouping.n());
  std::vector<Partition> out;
  for (auto& rho : enumerate_partitions(f, grouping.n()))
    if (join(rho, grouping) == top) out.push_back(std::move(rho));
  return out;
}

Partition consecutive_pairs(int m) {
  std::vector<int> code(static_cast<std::size_t>(2) * m);
  for (int i = 0; i < 2 * m; ++i) code[i] = i / 2;
  return Partition::from_code(code);
}

}  // namespace ncg
