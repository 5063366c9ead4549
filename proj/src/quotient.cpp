#include "smm/quotient.hpp"

#include <cassert>
#include <numeric>

namespace smm {

UnionFind::UnionFind(std::size_t n) : parent(n), size(n, 1) {
  std::iota(parent.begin(), parent.end(), 0);
}

int UnionFind::find(int a) {
  while (parent[a] != a) {
    parent[a] = parent[parent[a]];
    a = parent[a];
  }
  return a;
}

bool UnionFind::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size[a] < size[b]) std::swap(a, b);
  parent[b] = a;
  size[a] += size[b];
  return true;
}

std::size_t UnionFind::classCount() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (parent[i] == static_cast<int>(i)) ++n;
  return n;
}

PairQuotient tensorOverMiddle(int nl, int nm, int nr,
                              const std::function<int(int, int)>& actL,
                              const std::function<int(int, int)>& actR) {
  assert(nl >= 0 && nm >= 0 && nr >= 0);
  PairQuotient q;
  q.nl = nl;
  q.nr = nr;
  UnionFind uf(static_cast<std::size_t>(nl) * nr);
  for (int l = 0; l < nl; ++l)
    for (int m = 0; m < nm; ++m) {
      const int lm = actL(l, m);
      assert(0 <= lm && lm < nl);
      for (int r = 0; r < nr; ++r) {
        const int mr = actR(m, r);
        assert(0 <= mr && mr < nr);
        uf.unite(lm * nr + r, l * nr + mr);
      }
    }
  q.classIdx.assign(static_cast<std::size_t>(nl) * nr, -1);
  for (int l = 0; l < nl; ++l)
    for (int r = 0; r < nr; ++r) {
      const int root = uf.find(l * nr + r);
      if (q.classIdx[root] < 0) {
        q.classIdx[root] = q.classes++;
        q.reps.emplace_back(l, r);  // flat order => first visit is the least pair
      }
      q.classIdx[l * nr + r] = q.classIdx[root];
    }
  return q;
}

}  // namespace smm
