#include "smm/finmon.hpp"

#include <algorithm>
#include <numeric>

namespace smm {

FiniteMonoid FiniteMonoid::fromTable(std::vector<std::vector<Elem>> table, Elem unit) {
  const int n = static_cast<int>(table.size());
  if (n <= 0) throw InvalidInput("monoid table must be non-empty");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw InvalidInput("monoid table row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < n; ++b)
      if (table[a][b] < 0 || table[a][b] >= n)
        throw InvalidInput("monoid table entry (" + std::to_string(a) + "," +
                           std::to_string(b) + ") out of range");
  }
  if (unit < 0 || unit >= n) throw InvalidInput("unit index out of range");
  for (int a = 0; a < n; ++a)
    if (table[unit][a] != a || table[a][unit] != a)
      throw InvalidInput("element " + std::to_string(unit) + " is not a two-sided unit at " +
                         std::to_string(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw InvalidInput("table is not associative at (" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + ")");
  FiniteMonoid m;
  m.table_ = std::move(table);
  m.unit_ = unit;
  return m;
}

bool FiniteMonoid::commutative() const {
  const int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

bool FiniteMonoid::cancellative() const {
  const int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (b == c) continue;
        if (table_[a][b] == table_[a][c]) return false;
        if (table_[b][a] == table_[c][a]) return false;
      }
  return true;
}

std::optional<Elem> FiniteMonoid::inverseOf(Elem x) const {
  for (Elem y = 0; y < size(); ++y)
    if (table_[x][y] == unit_ && table_[y][x] == unit_) return y;
  return std::nullopt;
}

EndoMap identityEndo(int n) {
  EndoMap f;
  f.images.resize(n);
  std::iota(f.images.begin(), f.images.end(), 0);
  return f;
}

bool isIdentityMap(const EndoMap& f) {
  for (std::size_t i = 0; i < f.images.size(); ++i)
    if (f.images[i] != static_cast<Elem>(i)) return false;
  return true;
}

bool isBijective(const EndoMap& f) {
  std::vector<bool> hit(f.images.size(), false);
  for (Elem y : f.images) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

bool isEndomorphism(const FiniteMonoid& m, const EndoMap& f) {
  const int n = m.size();
  if (static_cast<int>(f.images.size()) != n) return false;
  if (f(m.unit()) != m.unit()) return false;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (f(m.mul(a, b)) != m.mul(f(a), f(b))) return false;
  return true;
}

std::vector<EndoMap> enumerateEndomorphisms(const FiniteMonoid& m) {
  const int n = m.size();
  std::vector<EndoMap> out;
  EndoMap f;
  f.images.assign(n, 0);
  while (true) {
    if (isEndomorphism(m, f)) out.push_back(f);
    int i = n - 1;
    while (i >= 0 && f.images[i] == n - 1) f.images[i--] = 0;
    if (i < 0) break;
    ++f.images[i];
  }
  std::sort(out.begin(), out.end(),
            [](const EndoMap& a, const EndoMap& b) { return a.images < b.images; });
  return out;
}

Elem SmmInstance::s(Elem a) const {
  return monoid.mul(mu, T(monoid.mul(Q(a), eta)));
}

Elem SmmInstance::piOf(Elem a) const {
  return monoid.mul(monoid.mul(eps, a), eta);
}

bool instanceLess(const SmmInstance& a, const SmmInstance& b) {
  if (a.T.images != b.T.images) return a.T.images < b.T.images;
  if (a.Q.images != b.Q.images) return a.Q.images < b.Q.images;
  if (a.mu != b.mu) return a.mu < b.mu;
  if (a.eta != b.eta) return a.eta < b.eta;
  if (a.delta != b.delta) return a.delta < b.delta;
  return a.eps < b.eps;
}

Elem evalWord(const Word& w, const SmmInstance& inst,
              const std::map<std::string, Elem>& assignment) {
  Elem acc = inst.monoid.unit();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter& l = w.at(i);
    Elem v;
    switch (l.atom.kind) {
      case AtomKind::Mu: v = inst.mu; break;
      case AtomKind::Eta: v = inst.eta; break;
      case AtomKind::Delta: v = inst.delta; break;
      case AtomKind::Eps: v = inst.eps; break;
      default: {
        auto it = assignment.find(l.atom.name);
        if (it == assignment.end()) throw UnassignedGenerator(l.atom.name);
        v = it->second;
      }
    }
    for (auto c = l.wrapper.rbegin(); c != l.wrapper.rend(); ++c)
      v = (*c == 'T') ? inst.T(v) : inst.Q(v);
    acc = inst.monoid.mul(acc, v);
  }
  return acc;
}

namespace {

std::vector<std::string> ruleVars(const RuleSchema& r) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < r.lhs.size(); ++i) {
    const Letter& l = r.lhs.at(i);
    if (l.atom.kind == AtomKind::Var &&
        std::find(vars.begin(), vars.end(), l.atom.name) == vars.end())
      vars.push_back(l.atom.name);
  }
  return vars;
}

// axiom ids in evaluation order: unit equations, ground equations, quantified
// families, and the most expensive equation last
std::vector<const RuleSchema*> orderedRules(Presentation p) {
  std::vector<std::string> order;
  if (p == Presentation::Gamma)
    order = {"G10", "G11", "G8", "G9", "G1", "G2", "G3", "G4", "G5", "G6", "G7"};
  else if (p == Presentation::Product)
    order = {"P10", "P11", "P8", "P9", "P1", "P2", "P3", "P4", "P5", "P6", "P12", "P7"};
  else
    order = {"SMM10", "SMM11", "SMM13", "SMM14", "SMM18", "SMM9", "SMM12",
             "SMM16", "SMM17", "SMM1",  "SMM2",  "SMM3",  "SMM4", "SMM5",
             "SMM6",  "SMM7",  "SMM8",  "SMM15"};
  std::vector<const RuleSchema*> out;
  for (const std::string& id : order) out.push_back(findRule(id));
  return out;
}

}  // namespace

std::vector<AxiomViolation> checkAxioms(const SmmInstance& inst, Presentation presentation) {
  std::vector<AxiomViolation> violations;
  const int n = inst.monoid.size();
  for (const RuleSchema* rule : orderedRules(presentation)) {
    const std::vector<std::string> vars = ruleVars(*rule);
    std::map<std::string, Elem> assign;
    for (const std::string& v : vars) assign[v] = 0;
    bool reported = false;
    while (!reported) {
      const Elem lv = evalWord(rule->lhs, inst, assign);
      const Elem rv = evalWord(rule->rhs, inst, assign);
      if (lv != rv) {
        AxiomViolation v;
        v.axiom = rule->id;
        v.witness = assign;
        v.detail = rule->lhs.str() + " = " + std::to_string(lv) + " but " +
                   rule->rhs.str() + " = " + std::to_string(rv);
        violations.push_back(std::move(v));
        reported = true;
        break;
      }
      // odometer over the variable assignment
      std::size_t i = 0;
      for (; i < vars.size(); ++i) {
        if (assign[vars[i]] + 1 < n) {
          ++assign[vars[i]];
          break;
        }
        assign[vars[i]] = 0;
      }
      if (i == vars.size()) break;
    }
  }
  return violations;
}

std::vector<SmmInstance> enumerateSmm(const FiniteMonoid& m) {
  const int n = m.size();
  const Elem u = m.unit();
  const std::vector<EndoMap> endos = enumerateEndomorphisms(m);
  std::vector<SmmInstance> out;
  for (const EndoMap& T : endos) {
    for (const EndoMap& Q : endos) {
      for (Elem eps = 0; eps < n; ++eps) {
        for (Elem eta = 0; eta < n; ++eta) {
          if (m.mul(eps, eta) != u) continue;  // unit equation first
          for (Elem mu = 0; mu < n; ++mu) {
            if (m.mul(mu, eta) != u) continue;
            if (m.mul(mu, T(eta)) != u) continue;
            for (Elem delta = 0; delta < n; ++delta) {
              if (m.mul(eps, delta) != u) continue;
              if (m.mul(Q(eps), delta) != u) continue;
              SmmInstance cand{m, T, Q, mu, eta, delta, eps};
              if (checkAxioms(cand).empty()) out.push_back(std::move(cand));
            }
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), instanceLess);
  return out;
}

namespace {

std::vector<Elem> flatten(const std::vector<std::vector<Elem>>& t) {
  std::vector<Elem> flat;
  for (const auto& row : t) flat.insert(flat.end(), row.begin(), row.end());
  return flat;
}

// relabel by a permutation with perm[0] = 0
std::vector<std::vector<Elem>> relabel(const std::vector<std::vector<Elem>>& t,
                                       const std::vector<Elem>& perm) {
  const int n = static_cast<int>(t.size());
  std::vector<std::vector<Elem>> out(n, std::vector<Elem>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out[perm[a]][perm[b]] = perm[t[a][b]];
  return out;
}

template <typename Fn>
void forEachUnitFixingPerm(int n, Fn&& fn) {
  std::vector<Elem> rest(n > 0 ? n - 1 : 0);
  std::iota(rest.begin(), rest.end(), 1);
  do {
    std::vector<Elem> perm(n);
    for (int i = 1; i < n; ++i) perm[i] = rest[i - 1];
    fn(perm);
  } while (std::next_permutation(rest.begin(), rest.end()));
}

std::vector<Elem> canonicalFlatTable(const std::vector<std::vector<Elem>>& t) {
  std::vector<Elem> best = flatten(t);
  forEachUnitFixingPerm(static_cast<int>(t.size()), [&](const std::vector<Elem>& perm) {
    std::vector<Elem> cand = flatten(relabel(t, perm));
    if (cand < best) best = std::move(cand);
  });
  return best;
}

bool associativeTable(const std::vector<std::vector<Elem>>& t) {
  const int n = static_cast<int>(t.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  return true;
}

}  // namespace

std::vector<FiniteMonoid> enumerateMonoids(int n, bool uptoIso, int bound) {
  if (n <= 0) throw InvalidInput("monoid size must be positive");
  if (n > bound)
    throw BoundExceeded("monoid enumeration limited to size " + std::to_string(bound));
  std::vector<FiniteMonoid> out;
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (int a = 0; a < n; ++a) t[0][a] = t[a][0] = a;  // unit row and column
  const int cells = (n - 1) * (n - 1);
  std::vector<Elem> free(cells, 0);
  while (true) {
    for (int i = 0; i < cells; ++i) t[1 + i / (n - 1)][1 + i % (n - 1)] = free[i];
    if (associativeTable(t)) {
      if (!uptoIso || flatten(t) == canonicalFlatTable(t))
        out.push_back(FiniteMonoid::fromTable(t));
    }
    int i = cells - 1;
    while (i >= 0 && free[i] == n - 1) free[i--] = 0;
    if (i < 0) break;
    ++free[i];
  }
  return out;
}

std::size_t isomorphismOrbitSize(const FiniteMonoid& m) {
  std::vector<std::vector<Elem>> seen;
  forEachUnitFixingPerm(m.size(), [&](const std::vector<Elem>& perm) {
    std::vector<Elem> flat = flatten(relabel(m.table(), perm));
    if (std::find(seen.begin(), seen.end(), flat) == seen.end())
      seen.push_back(std::move(flat));
  });
  return seen.size();
}

bool isTrivial(const SmmInstance& inst) {
  if (!inst.monoid.commutative()) return false;
  if (!isIdentityMap(inst.T) || !isIdentityMap(inst.Q)) return false;
  const std::optional<Elem> inv = inst.monoid.inverseOf(inst.eps);
  if (!inv) return false;
  return inst.mu == inst.eps && inst.delta == *inv && inst.eta == *inv;
}

}  // namespace smm
