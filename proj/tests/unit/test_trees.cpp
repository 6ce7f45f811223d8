#include "doctest.h"

#include <functional>

#include "xytr/errors.hpp"
#include "xytr/trees/trees.hpp"

using namespace xytr;

namespace {

// Set partitions counted by inserting elements one at a time.
long count_partitions(int n) {
  std::vector<int> sizes;
  std::function<long(int)> rec = [&](int i) -> long {
    if (i == n) return 1;
    long total = 0;
    for (std::size_t b = 0; b < sizes.size(); ++b) {
      ++sizes[b];
      total += rec(i + 1);
      --sizes[b];
    }
    sizes.push_back(1);
    total += rec(i + 1);
    sizes.pop_back();
    return total;
  };
  return rec(0);
}

}  // namespace

TEST_CASE("tree counts") {
  CHECK(enumerate_trees(2, 1).size() == 2);
  CHECK(enumerate_trees(1, 2).size() == 3);
  CHECK(enumerate_trees(3, 1).size() == 5);
  CHECK(enumerate_trees(0, 3).size() == 4);
  CHECK(enumerate_trees(0, 4).size() == 29);
  for (int n = 2; n <= 6; ++n) CHECK(enumerate_trees(n, 0).size() == 1);
  for (int n = 1; n <= 6; ++n) CHECK(static_cast<long>(enumerate_trees(n, 1).size()) == count_partitions(n));
  CHECK(count_partitions(6) == 203);
  CHECK_THROWS_AS(enumerate_trees(0, 1), EmptyFamily);
  CHECK_THROWS_AS(enumerate_trees(1, 0), EmptyFamily);
}

TEST_CASE("all enumerated trees are valid with trivial automorphisms") {
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; n + m <= 6; ++m) {
      if (n + m < 2 || (m == 0 && n < 2)) continue;
      for (const auto& t : enumerate_trees(n, m)) {
        CHECK(is_valid(t));
        CHECK(aut(t) == 1);
      }
    }
  Tree bad = Tree::make(2, 1, {{1, 1}, {1, 1}});
  CHECK_FALSE(is_valid(bad));
  CHECK(aut(bad) == 2);
  CHECK_FALSE(is_valid(Tree::make(0, 3, {{0, 3}, {0, 6}, {0, 5}})));
}

TEST_CASE("box and circle generators agree with direct enumeration") {
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; n + m <= 6; ++m) {
      auto nonempty = [](int a, int b) { return a + b >= 1 && !(b == 0 && a < 2) && !(a == 0 && b == 1); };
      if (!nonempty(n, m)) continue;
      TreeSet here = enumerate_trees(n, m);
      if (n >= 1 && nonempty(n - 1, m)) CHECK(grow_box(enumerate_trees(n - 1, m), n - 1, m) == here);
      if (m >= 1 && nonempty(n, m - 1)) CHECK(grow_circle(enumerate_trees(n, m - 1), n, m - 1) == here);
    }
  CHECK(grow_box(enumerate_trees(1, 1), 1, 1).size() == 2);
  CHECK(grow_circle(enumerate_trees(0, 3), 0, 3).size() == 29);
}

TEST_CASE("valences and the ordered-partition form of 1/Aut") {
  Tree t = Tree::make(0, 3, {{0, 3}, {0, 5}});
  CHECK(valences(t) == std::vector<int>{2, 1, 1});
  for (int n = 1; n <= 5; ++n) {
    double lhs = 0;
    for (const auto& tr : enumerate_trees(n, 1)) lhs += 1.0 / static_cast<double>(aut(tr));
    std::vector<long> byk(n + 1, 0);
    for_each_ordered_partition((1u << n) - 1, [&](const std::vector<LabelMask>& b) { ++byk[b.size()]; });
    double rhs = 0, fact = 1;
    for (int k = 1; k <= n; ++k) {
      fact *= k;
      rhs += static_cast<double>(byk[k]) / fact;
    }
    CHECK(lhs == rhs);
  }
  CHECK(to_string(t) == "({},{1,2}) ({},{1,3})");
}
