#pragma once
// Disjoint sets and the tensor-over-a-middle-monoid quotient used by the
// monoidal constraints, the coproducts and the smash product.

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace smm {

struct UnionFind {
  std::vector<int> parent;
  std::vector<int> size;

  explicit UnionFind(std::size_t n);
  int find(int a);
  bool unite(int a, int b);  // false if already joined
  std::size_t classCount() const;
};

// Pairs (l, r) with 0 <= l < nl, 0 <= r < nr modulo the relation
// (l <- l.m, r) ~ (l, m.r -> r) for every m in the middle set. Class ids are
// dense and ordered by the least flat index l*nr + r in the class.
struct PairQuotient {
  int nl = 0;
  int nr = 0;
  int classes = 0;
  std::vector<int> classIdx;               // flat nl*nr -> class id
  std::vector<std::pair<int, int>> reps;   // least pair of each class

  int classOf(int l, int r) const { return classIdx[static_cast<std::size_t>(l) * nr + r]; }
};

PairQuotient tensorOverMiddle(int nl, int nm, int nr,
                              const std::function<int(int, int)>& actL,   // (l, m) -> l.m
                              const std::function<int(int, int)>& actR);  // (m, r) -> m.r

}  // namespace smm
