#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ncg/rational.hpp"

namespace ncg {

// Set partition of {1..n} in canonical block form: each block sorted
// ascending, blocks ordered by their minima. Immutable after construction.
class Partition {
 public:
  Partition() = default;  // empty partition of the empty set

  // Validates disjointness / cover and sorts into canonical form.
  Partition(int n, std::vector<std::vector<int>> blocks);

  // From a block-index sequence: code[i] is the block of position i+1.
  // Block numbering need not be a restricted growth string; it is
  // renumbered canonically.
  static Partition from_code(const std::vector<int>& code);

  static Partition singletons(int n);
  static Partition one_block(int n);

  // Text syntax "1,3|2"; canonical order is required on input.
  // If n >= 0, the ground-set size is checked against it.
  static Partition parse(const std::string& text, int n = -1);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  // 0-based block id of position p in 1..n.
  int block_of(int p) const { return code_[p - 1]; }
  const std::vector<int>& code() const { return code_; }

  std::string str() const;

  bool operator==(const Partition& o) const = default;
  // Lexicographic on the canonical block-index sequence (the enumeration
  // order of enumerate()).
  std::strong_ordering operator<=>(const Partition& o) const;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> code_;
};

enum class LatticeFamily {
  All,
  Pair,
  NonCrossing,
  Interval,
  NonCrossingPair,
  IntervalPair,
};

LatticeFamily family_parse(const std::string& name);
std::string family_name(LatticeFamily f);

bool is_pair_partition(const Partition& p);
bool is_noncrossing(const Partition& p);
bool is_interval_partition(const Partition& p);
bool family_member(LatticeFamily f, const Partition& p);

// Duplicate-free, ordered lexicographically on the canonical form.
// Pair/NonCrossing/Interval are generated directly, not by filtering;
// agreement with filter(enumerate(All), member) is a test.
std::vector<Partition> enumerate_partitions(LatticeFamily f, int n);

// Same list, memoized behind a mutex. The reference stays valid for the
// lifetime of the process.
const std::vector<Partition>& enumerate_partitions_cached(LatticeFamily f, int n);

// Positions i, j share a block iff labels[i-1] == labels[j-1].
template <class Label>
Partition kernel_of(const std::vector<Label>& labels);

Partition join(const Partition& p, const Partition& q);
bool leq(const Partition& p, const Partition& q);  // refinement order

// Number of crossings a<b<c<d with {a,c}, {b,d} in distinct blocks;
// requires all blocks of size 2.
int crossing_number(const Partition& p);

// Moebius function mu(p, top) of the partition lattice:
// (-1)^(b-1) (b-1)! for b blocks.
Rat mobius_to_top(const Partition& p);

// Number of maps h:[n]->[N] with kernel exactly p: the falling factorial
// N (N-1) ... (N-b+1).
Int count_kernel_maps(const Partition& p, long pool);

// All members rho of the family on [n] with join(rho, grouping) = top.
std::vector<Partition> connecting_partitions(const Partition& grouping,
                                             LatticeFamily f);

// Base partition {1,2 | 3,4 | ... | 2m-1,2m} of the product formula.
Partition consecutive_pairs(int m);

template <class Label>
Partition kernel_of(const std::vector<Label>& labels) {
  const int n = static_cast<int>(labels.size());
  std::vector<int> code(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (code[i] >= 0) continue;
    code[i] = next;
    for (int j = i + 1; j < n; ++j)
      if (labels[j] == labels[i]) code[j] = next;
    ++next;
  }
  return Partition::from_code(code);
}

}  // namespace ncg
