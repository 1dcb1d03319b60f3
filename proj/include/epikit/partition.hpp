#pragma once

#include <set>
#include <utility>
#include <vector>

namespace epikit {

// A partition of {0, ..., n-1} into equivalence classes. Blocks are numbered
// 0..block_count()-1 in order of first occurrence, so two partitions are equal
// iff their block vectors are identical.
class Partition {
public:
  Partition() = default;

  static Partition identity(int n);
  static Partition single_block(int n);
  // Reflexive-symmetric-transitive closure of the given pairs.
  static Partition from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);
  // Normalizes an arbitrary block assignment.
  static Partition from_block_of(std::vector<int> raw);

  int size() const { return static_cast<int>(block_of_.size()); }
  int block_count() const { return block_count_; }
  int block(int i) const { return block_of_[i]; }
  bool same_block(int i, int j) const { return block_of_[i] == block_of_[j]; }
  std::vector<std::vector<int>> blocks() const;

  bool operator==(const Partition&) const = default;

private:
  std::vector<int> block_of_;
  int block_count_ = 0;

  void normalize();
};

// Partition induced by the equivalence closure of an arbitrary relation on
// {0..n-1}. Sets *was_equivalence to whether the relation already was one
// (reflexive, symmetric, transitive).
Partition closure_of_relation(int n, const std::set<std::pair<int, int>>& rel,
                              bool* was_equivalence);

}  // namespace epikit
