#include "xytr/trees/trees.hpp"

#include <algorithm>
#include <numeric>

#include "xytr/errors.hpp"

namespace xytr {

namespace {

LabelMask bit(int label) { return LabelMask(1) << (label - 1); }
LabelMask all(int k) { return k == 0 ? 0 : (LabelMask(1) << k) - 1; }

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int k) : p(k) { std::iota(p.begin(), p.end(), 0); }
  int find(int a) { return p[a] == a ? a : p[a] = find(p[a]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

// J-structures with every block of size >= 2 forming a hypertree on 1..m.
void hypertrees(int m, LabelMask from, int budget, std::vector<LabelMask>& cur, std::vector<std::vector<LabelMask>>& out) {
  if (budget == 0) {
    UnionFind uf(m);
    for (LabelMask j : cur) {
      int first = __builtin_ctz(j);
      for (int b = first + 1; b < m; ++b)
        if (j & (LabelMask(1) << b)) uf.unite(first, b);
    }
    for (int b = 1; b < m; ++b)
      if (uf.find(b) != uf.find(0)) return;
    out.push_back(cur);
    return;
  }
  for (LabelMask j = from; j <= all(m); ++j) {
    int size = __builtin_popcount(j);
    if (size < 2 || size - 1 > budget) continue;
    cur.push_back(j);
    hypertrees(m, j + 1, budget - (size - 1), cur, out);
    cur.pop_back();
  }
}

void assign_boxes(int label, int n, int m, std::vector<DoubleSet>& blacks, TreeSet& out) {
  if (label > n) {
    if (!blacks.empty()) out.insert(Tree::make(n, m, blacks));
    return;
  }
  for (std::size_t i = 0; i < blacks.size(); ++i) {
    blacks[i].I |= bit(label);
    assign_boxes(label + 1, n, m, blacks, out);
    blacks[i].I &= ~bit(label);
  }
  // a fresh valence-two black at circle j
  for (int j = 1; j <= m; ++j) {
    blacks.push_back({bit(label), bit(j)});
    assign_boxes(label + 1, n, m, blacks, out);
    blacks.pop_back();
  }
}

}  // namespace

int DoubleSet::valence() const { return __builtin_popcount(I) + __builtin_popcount(J); }

Tree Tree::make(int n, int m, std::vector<DoubleSet> blacks) {
  std::sort(blacks.begin(), blacks.end());
  return Tree{n, m, std::move(blacks)};
}

bool is_valid(const Tree& t) {
  if (t.blacks.empty()) return false;
  LabelMask seen = 0;
  int edges = 0;
  for (std::size_t i = 0; i < t.blacks.size(); ++i) {
    const auto& b = t.blacks[i];
    if (b.valence() < 2) return false;
    if ((b.I & ~all(t.n)) || (b.J & ~all(t.m))) return false;
    if (b.I & seen) return false;
    seen |= b.I;
    if (t.m >= 1 && b.J == 0) return false;
    if (i > 0 && !(t.blacks[i - 1] < b)) return false;
    edges += b.valence();
  }
  if (seen != all(t.n)) return false;
  if (t.m == 0 && t.blacks.size() != 1) return false;
  const int whites = t.n + t.m;
  const int nb = static_cast<int>(t.blacks.size());
  if (edges != whites + nb - 1) return false;
  UnionFind uf(whites + nb);
  for (int i = 0; i < nb; ++i) {
    for (int a = 1; a <= t.n; ++a)
      if (t.blacks[i].I & bit(a)) uf.unite(whites + i, a - 1);
    for (int j = 1; j <= t.m; ++j)
      if (t.blacks[i].J & bit(j)) uf.unite(whites + i, t.n + j - 1);
  }
  for (int v = 1; v < whites + nb; ++v)
    if (uf.find(v) != uf.find(0)) return false;
  return true;
}

std::vector<int> valences(const Tree& t) {
  std::vector<int> r(t.m, 0);
  for (const auto& b : t.blacks)
    for (int j = 1; j <= t.m; ++j)
      if (b.J & bit(j)) ++r[j - 1];
  return r;
}

long aut(const Tree& t) {
  const std::size_t nb = t.blacks.size();
  if (nb > 9) {
    long count = 1;
    for (std::size_t i = 0, run = 1; i < nb; ++i, ++run) {
      if (i + 1 == nb || t.blacks[i + 1] != t.blacks[i]) {
        for (std::size_t k = 2; k <= run; ++k) count *= static_cast<long>(k);
        run = 0;
      }
    }
    return count;
  }
  std::vector<std::size_t> perm(nb);
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < nb && ok; ++i) ok = t.blacks[perm[i]] == t.blacks[i];
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

TreeStats stats(const Tree& t) { return TreeStats{valences(t), aut(t)}; }

TreeSet enumerate_trees(int n, int m) {
  if (n < 0 || m < 0 || n + m < 1) throw EmptyFamily("G_{n,m} needs n + m >= 1");
  TreeSet out;
  if (m == 0) {
    if (n < 2) throw EmptyFamily("G_{n,0} is empty for n < 2");
    out.insert(Tree::make(n, 0, {{all(n), 0}}));
    return out;
  }
  std::vector<std::vector<LabelMask>> structures;
  std::vector<LabelMask> cur;
  hypertrees(m, 1, m - 1, cur, structures);
  for (const auto& s : structures) {
    std::vector<DoubleSet> blacks;
    for (LabelMask j : s) blacks.push_back({0, j});
    assign_boxes(1, n, m, blacks, out);
  }
  if (out.empty()) throw EmptyFamily("no tree in G_{" + std::to_string(n) + "," + std::to_string(m) + "}");
  return out;
}

TreeSet grow_box(const TreeSet& trees, int n, int m) {
  TreeSet out;
  const LabelMask nb = bit(n + 1);
  for (const auto& t : trees) {
    for (int j = 1; j <= m; ++j) {
      auto blacks = t.blacks;
      blacks.push_back({nb, bit(j)});
      out.insert(Tree::make(n + 1, m, blacks));
    }
    for (std::size_t i = 0; i < t.blacks.size(); ++i) {
      auto blacks = t.blacks;
      blacks[i].I |= nb;
      out.insert(Tree::make(n + 1, m, blacks));
    }
  }
  return out;
}

TreeSet grow_circle(const TreeSet& trees, int n, int m) {
  TreeSet out;
  const LabelMask nc = bit(m + 1);
  for (const auto& t : trees) {
    for (int j = 1; j <= m; ++j) {
      auto blacks = t.blacks;
      blacks.push_back({0, bit(j) | nc});
      out.insert(Tree::make(n, m + 1, blacks));
    }
    for (std::size_t i = 0; i < t.blacks.size(); ++i) {
      // the black's neighbours play the role of the boxes of a tree in G_{k,1}
      std::vector<DoubleSet> elems;
      for (int a = 1; a <= t.n; ++a)
        if (t.blacks[i].I & bit(a)) elems.push_back({bit(a), 0});
      for (int j = 1; j <= t.m; ++j)
        if (t.blacks[i].J & bit(j)) elems.push_back({0, bit(j)});
      for_each_set_partition(static_cast<int>(elems.size()), [&](const std::vector<int>& block, int k) {
        std::vector<DoubleSet> parts(k, DoubleSet{0, nc});
        for (std::size_t e = 0; e < elems.size(); ++e) {
          parts[block[e]].I |= elems[e].I;
          parts[block[e]].J |= elems[e].J;
        }
        auto blacks = t.blacks;
        blacks.erase(blacks.begin() + static_cast<long>(i));
        blacks.insert(blacks.end(), parts.begin(), parts.end());
        out.insert(Tree::make(n, m + 1, blacks));
      });
    }
  }
  return out;
}

std::string mask_string(LabelMask s) {
  std::string r = "{";
  bool first = true;
  for (int i = 1; s; ++i, s >>= 1) {
    if (!(s & 1)) continue;
    if (!first) r += ",";
    r += std::to_string(i);
    first = false;
  }
  return r + "}";
}

std::string to_string(const Tree& t) {
  std::string r;
  for (const auto& b : t.blacks) {
    if (!r.empty()) r += " ";
    r += "(" + mask_string(b.I) + "," + mask_string(b.J) + ")";
  }
  return r;
}

void for_each_set_partition(int k, const std::function<void(const std::vector<int>&, int)>& f) {
  if (k == 0) {
    f({}, 0);
    return;
  }
  std::vector<int> a(k, 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == k) {
      f(a, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      a[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  a[0] = 0;
  rec(1, 1);
}

void for_each_ordered_partition(LabelMask s, const std::function<void(const std::vector<LabelMask>&)>& f) {
  std::vector<LabelMask> blocks;
  std::function<void(LabelMask)> rec = [&](LabelMask rest) {
    if (rest == 0) {
      f(blocks);
      return;
    }
    for (LabelMask sub = rest; sub; sub = (sub - 1) & rest) {
      blocks.push_back(sub);
      rec(rest & ~sub);
      blocks.pop_back();
    }
  };
  if (s != 0) rec(s);
}

}  // namespace xytr
