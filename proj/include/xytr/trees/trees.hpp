#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace xytr {

// Bit i-1 stands for label i.
using LabelMask = std::uint32_t;

struct DoubleSet {
  LabelMask I = 0;
  LabelMask J = 0;
  auto operator<=>(const DoubleSet&) const = default;
  int valence() const;
};

// Canonical form: blacks sorted and pairwise distinct.
struct Tree {
  int n = 0;
  int m = 0;
  std::vector<DoubleSet> blacks;

  auto operator<=>(const Tree&) const = default;
  static Tree make(int n, int m, std::vector<DoubleSet> blacks);
};

using TreeSet = std::set<Tree>;

struct TreeStats {
  std::vector<int> r;
  long aut = 1;
};

bool is_valid(const Tree& t);
std::vector<int> valences(const Tree& t);
long aut(const Tree& t);
TreeStats stats(const Tree& t);

TreeSet enumerate_trees(int n, int m);
// Generators: complete G_{n,m} to G_{n+1,m} and G_{n,m+1}.
TreeSet grow_box(const TreeSet& trees, int n, int m);
TreeSet grow_circle(const TreeSet& trees, int n, int m);

// e.g. "({1,2},{}) ({3},{1})"
std::string to_string(const Tree& t);
std::string mask_string(LabelMask s);

// Set partitions of {0..k-1} as block-index vectors (restricted growth strings).
void for_each_set_partition(int k, const std::function<void(const std::vector<int>&, int)>& f);
// Ordered set partitions of a mask into nonempty blocks.
void for_each_ordered_partition(LabelMask s, const std::function<void(const std::vector<LabelMask>&)>& f);

}  // namespace xytr
