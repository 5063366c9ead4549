#include "smm/bgd.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

namespace smm {

namespace {

std::string el(Elem a) { return std::to_string(a); }

std::vector<Elem> sortedUnique(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Elem mul3(const FiniteMonoid& m, Elem x, Elem y, Elem z) { return m.mul(m.mul(x, y), z); }

Elem pairRaw(const SmmInstance& inst, Elem f, Elem g) {
  return inst.mul(inst.mul(inst.mul(inst.eps, f), g), inst.eta);
}

}  // namespace

int Bialgebroid::idx(Elem g) const {
  const auto it = std::lower_bound(carrier.begin(), carrier.end(), g);
  if (it == carrier.end() || *it != g) return -1;
  return static_cast<int>(it - carrier.begin());
}

Elem Bialgebroid::lact(Elem a, Elem g) const {
  return side == BgdSide::Right ? base.mul(g, target[a]) : base.mul(source[a], g);
}

Elem Bialgebroid::ract(Elem g, Elem a) const {
  return side == BgdSide::Right ? base.mul(g, source[a]) : base.mul(target[a], g);
}

int Bialgebroid::classOf(Elem x, Elem y) const {
  const int i = idx(x);
  const int j = idx(y);
  assert(i >= 0 && j >= 0);
  return tensor.classOf(i, j);
}

std::vector<std::pair<Elem, Elem>> Bialgebroid::classPairs(int cls) const {
  std::vector<std::pair<Elem, Elem>> out;
  const int nc = static_cast<int>(carrier.size());
  for (int i = 0; i < nc; ++i)
    for (int j = 0; j < nc; ++j)
      if (tensor.classOf(i, j) == cls) out.emplace_back(carrier[i], carrier[j]);
  return out;
}

namespace {

Bialgebroid buildSide(const SmmInstance& inst, BgdSide side) {
  Bialgebroid b;
  b.side = side;
  b.base = inst.monoid;
  const int n = inst.monoid.size();

  std::vector<Elem> car;
  car.reserve(n);
  for (Elem a = 0; a < n; ++a)
    car.push_back(side == BgdSide::Right ? inst.mul(inst.mu, inst.t(a))
                                         : inst.mul(inst.q(a), inst.delta));
  b.carrier = sortedUnique(std::move(car));

  b.source.resize(n);
  b.target.resize(n);
  for (Elem a = 0; a < n; ++a) {
    b.source[a] = side == BgdSide::Right ? inst.t(a) : inst.q(a);
    b.target[a] = inst.s(a);
    assert(b.idx(b.source[a]) >= 0);
    assert(b.idx(b.target[a]) >= 0);
  }

  const int nc = static_cast<int>(b.carrier.size());
  b.tensor = tensorOverMiddle(
      nc, n, nc,
      [&](int i, int a) {
        const int j = b.idx(b.ract(b.carrier[i], a));
        assert(j >= 0);
        return j;
      },
      [&](int a, int j) {
        const int i = b.idx(b.lact(a, b.carrier[j]));
        assert(i >= 0);
        return i;
      });

  b.counit.resize(nc);
  b.coproduct.resize(nc);
  for (int i = 0; i < nc; ++i) {
    const Elem g = b.carrier[i];
    b.counit[i] = inst.piOf(g);
    Elem l, r;
    if (side == BgdSide::Right) {
      l = inst.mu;
      r = inst.mul(inst.mu, inst.t(mul3(inst.monoid, inst.delta, g, inst.eta)));
    } else {
      l = inst.mul(inst.q(mul3(inst.monoid, inst.eps, g, inst.mu)), inst.delta);
      r = inst.delta;
    }
    b.coproduct[i] = b.classOf(l, r);
  }
  return b;
}

// triples over the carrier modulo the middle relation on both adjacent slots
struct TripleQuotient {
  int nc = 0;
  std::vector<int> cls;
  int classOf(int i, int j, int k) const { return cls[(i * nc + j) * nc + k]; }
};

TripleQuotient tripleTensor(const Bialgebroid& b) {
  const int nc = static_cast<int>(b.carrier.size());
  const int n = b.base.size();
  auto flat = [&](int i, int j, int k) { return (i * nc + j) * nc + k; };
  auto pos = [&](Elem g) {
    const int i = b.idx(g);
    assert(i >= 0);
    return i;
  };
  UnionFind uf(static_cast<std::size_t>(nc) * nc * nc);
  for (int i = 0; i < nc; ++i)
    for (int j = 0; j < nc; ++j)
      for (int k = 0; k < nc; ++k)
        for (Elem a = 0; a < n; ++a) {
          uf.unite(flat(pos(b.ract(b.carrier[i], a)), j, k),
                   flat(i, pos(b.lact(a, b.carrier[j])), k));
          uf.unite(flat(i, pos(b.ract(b.carrier[j], a)), k),
                   flat(i, j, pos(b.lact(a, b.carrier[k]))));
        }
  TripleQuotient t;
  t.nc = nc;
  t.cls.assign(static_cast<std::size_t>(nc) * nc * nc, -1);
  int next = 0;
  for (std::size_t f = 0; f < t.cls.size(); ++f) {
    const int root = uf.find(static_cast<int>(f));
    if (t.cls[root] < 0) t.cls[root] = next++;
    t.cls[f] = t.cls[root];
  }
  return t;
}

}  // namespace

Bialgebroid buildG(const SmmInstance& inst) { return buildSide(inst, BgdSide::Right); }

Bialgebroid buildF(const SmmInstance& inst) { return buildSide(inst, BgdSide::Left); }

CheckReport checkBialgebroid(const Bialgebroid& b) {
  CheckReport rep;
  const int n = b.base.size();
  const int nc = static_cast<int>(b.carrier.size());
  const Elem one = b.base.unit();

  bool pass = b.idx(one) >= 0;
  std::string detail = pass ? "" : "unit missing";
  for (Elem g : b.carrier)
    for (Elem h : b.carrier)
      if (pass && b.idx(b.base.mul(g, h)) < 0) {
        pass = false;
        detail = "g=" + el(g) + " h=" + el(h);
      }
  rep.add("carrier-closed", pass, detail);
  if (!pass) return rep;  // the remaining checks index products

  pass = b.source[one] == one;
  detail = pass ? "" : "source(1)=" + el(b.source[one]);
  for (Elem x = 0; x < n && pass; ++x)
    for (Elem y = 0; y < n && pass; ++y)
      if (b.source[b.base.mul(x, y)] != b.base.mul(b.source[x], b.source[y])) {
        pass = false;
        detail = "x=" + el(x) + " y=" + el(y);
      }
  rep.add("source-homomorphism", pass, detail);

  pass = b.target[one] == one;
  detail = pass ? "" : "target(1)=" + el(b.target[one]);
  for (Elem x = 0; x < n && pass; ++x)
    for (Elem y = 0; y < n && pass; ++y)
      if (b.target[b.base.mul(x, y)] != b.base.mul(b.target[y], b.target[x])) {
        pass = false;
        detail = "x=" + el(x) + " y=" + el(y);
      }
  rep.add("target-antihomomorphism", pass, detail);

  pass = true;
  detail.clear();
  for (Elem x = 0; x < n && pass; ++x)
    for (Elem y = 0; y < n && pass; ++y)
      if (b.base.mul(b.source[x], b.target[y]) != b.base.mul(b.target[y], b.source[x])) {
        pass = false;
        detail = "x=" + el(x) + " y=" + el(y);
      }
  rep.add("source-target-commute", pass, detail);

  rep.add("counit-of-unit", b.counit[b.idx(one)] == one,
          "counit(1)=" + el(b.counit[b.idx(one)]));
  rep.add("coproduct-of-unit", b.coproduct[b.idx(one)] == b.classOf(one, one), "");

  pass = true;
  detail.clear();
  for (Elem a1 = 0; a1 < n && pass; ++a1)
    for (Elem a2 = 0; a2 < n && pass; ++a2)
      for (int i = 0; i < nc && pass; ++i) {
        const Elem g = b.carrier[i];
        const int want = b.coproduct[b.idx(b.lact(a1, b.ract(g, a2)))];
        for (const auto& [x, y] : b.classPairs(b.coproduct[i]))
          if (b.classOf(b.lact(a1, x), b.ract(y, a2)) != want) {
            pass = false;
            detail = "a1=" + el(a1) + " a2=" + el(a2) + " g=" + el(g);
            break;
          }
      }
  rep.add("coproduct-bimodule-map", pass, detail);

  // the legs commute with the opposite multiplications, which is what makes
  // the factorwise product below independent of the representatives
  pass = true;
  detail.clear();
  for (int i = 0; i < nc && pass; ++i)
    for (Elem a = 0; a < n && pass; ++a)
      for (const auto& [x, y] : b.classPairs(b.coproduct[i])) {
        int lhs, rhs;
        if (b.side == BgdSide::Right) {
          lhs = b.classOf(b.base.mul(b.source[a], x), y);
          rhs = b.classOf(x, b.base.mul(b.target[a], y));
        } else {
          lhs = b.classOf(b.base.mul(x, b.target[a]), y);
          rhs = b.classOf(x, b.base.mul(y, b.source[a]));
        }
        if (lhs != rhs) {
          pass = false;
          detail = "g=" + el(b.carrier[i]) + " a=" + el(a);
          break;
        }
      }
  rep.add("takeuchi-compatibility", pass, detail);

  const TripleQuotient t3 = tripleTensor(b);
  pass = true;
  detail.clear();
  for (int i = 0; i < nc && pass; ++i) {
    int seen = -1;
    for (const auto& [x, y] : b.classPairs(b.coproduct[i])) {
      for (const auto& [u, v] : b.classPairs(b.coproduct[b.idx(x)])) {
        const int c = t3.classOf(b.idx(u), b.idx(v), b.idx(y));
        if (seen < 0) seen = c;
        if (c != seen) pass = false;
      }
      for (const auto& [u, v] : b.classPairs(b.coproduct[b.idx(y)])) {
        const int c = t3.classOf(b.idx(x), b.idx(u), b.idx(v));
        if (seen < 0) seen = c;
        if (c != seen) pass = false;
      }
      if (!pass) {
        detail = "g=" + el(b.carrier[i]);
        break;
      }
    }
  }
  rep.add("coassociativity", pass, detail);

  pass = true;
  detail.clear();
  for (int i = 0; i < nc && pass; ++i)
    for (const auto& [x, y] : b.classPairs(b.coproduct[i])) {
      const Elem g = b.carrier[i];
      if (b.lact(b.counit[b.idx(x)], y) != g || b.ract(x, b.counit[b.idx(y)]) != g) {
        pass = false;
        detail = "g=" + el(g) + " x=" + el(x) + " y=" + el(y);
        break;
      }
    }
  rep.add("counit-laws", pass, detail);

  pass = true;
  detail.clear();
  for (Elem a = 0; a < n && pass; ++a)
    for (int i = 0; i < nc && pass; ++i) {
      const Elem g = b.carrier[i];
      if (b.counit[b.idx(b.lact(a, g))] != b.base.mul(a, b.counit[i]) ||
          b.counit[b.idx(b.ract(g, a))] != b.base.mul(b.counit[i], a)) {
        pass = false;
        detail = "a=" + el(a) + " g=" + el(g);
      }
    }
  rep.add("counit-bimodule-map", pass, detail);

  pass = true;
  detail.clear();
  for (int i = 0; i < nc && pass; ++i)
    for (int j = 0; j < nc && pass; ++j) {
      const Elem g = b.carrier[i];
      const Elem h = b.carrier[j];
      const Elem lhs = b.counit[b.idx(b.base.mul(g, h))];
      Elem viaSource, viaTarget;
      if (b.side == BgdSide::Right) {
        viaSource = b.counit[b.idx(b.base.mul(b.source[b.counit[i]], h))];
        viaTarget = b.counit[b.idx(b.base.mul(b.target[b.counit[i]], h))];
      } else {
        viaSource = b.counit[b.idx(b.base.mul(g, b.source[b.counit[j]]))];
        viaTarget = b.counit[b.idx(b.base.mul(g, b.target[b.counit[j]]))];
      }
      if (lhs != viaSource || lhs != viaTarget) {
        pass = false;
        detail = "g=" + el(g) + " h=" + el(h);
      }
    }
  rep.add("counit-composition", pass, detail);

  pass = true;
  detail.clear();
  for (int i = 0; i < nc && pass; ++i)
    for (int j = 0; j < nc && pass; ++j) {
      const Elem g = b.carrier[i];
      const Elem h = b.carrier[j];
      const int want = b.coproduct[b.idx(b.base.mul(g, h))];
      for (const auto& [x, y] : b.classPairs(b.coproduct[i])) {
        for (const auto& [u, v] : b.classPairs(b.coproduct[j]))
          if (b.classOf(b.base.mul(x, u), b.base.mul(y, v)) != want) {
            pass = false;
            detail = "g=" + el(g) + " h=" + el(h);
            break;
          }
        if (!pass) break;
      }
    }
  rep.add("coproduct-multiplicative", pass, detail);

  return rep;
}

Elem pairing(const SmmInstance& inst, Elem f, Elem g) {
  const Bialgebroid F = buildF(inst);
  const Bialgebroid G = buildG(inst);
  if (F.idx(f) < 0) throw ElementNotInCarrier("pairing: " + el(f) + " is not in F");
  if (G.idx(g) < 0) throw ElementNotInCarrier("pairing: " + el(g) + " is not in G");
  return pairRaw(inst, f, g);
}

CheckReport pairingPropertyCheck(const SmmInstance& inst) {
  CheckReport rep;
  const Bialgebroid F = buildF(inst);
  const Bialgebroid G = buildG(inst);
  const int n = inst.monoid.size();

  bool pass = true;
  std::string detail;
  for (Elem f : F.carrier)
    for (Elem g : G.carrier)
      for (Elem a1 = 0; a1 < n && pass; ++a1)
        for (Elem a2 = 0; a2 < n; ++a2)
          if (pairRaw(inst, f, G.lact(a1, G.ract(g, a2))) !=
              inst.mul(pairRaw(inst, inst.mul(f, inst.q(a1)), g), a2)) {
            pass = false;
            detail = "f=" + el(f) + " g=" + el(g) + " a1=" + el(a1) + " a2=" + el(a2);
            break;
          }
  rep.add("g-module-compatibility", pass, detail);

  pass = true;
  detail.clear();
  for (Elem f : F.carrier)
    for (Elem g : G.carrier)
      for (Elem a1 = 0; a1 < n && pass; ++a1)
        for (Elem a2 = 0; a2 < n; ++a2)
          if (pairRaw(inst, F.lact(a1, F.ract(f, a2)), g) !=
              inst.mul(a1, pairRaw(inst, f, inst.mul(inst.t(a2), g)))) {
            pass = false;
            detail = "f=" + el(f) + " g=" + el(g) + " a1=" + el(a1) + " a2=" + el(a2);
            break;
          }
  rep.add("f-module-compatibility", pass, detail);

  pass = true;
  detail.clear();
  for (Elem f : F.carrier)
    for (Elem g : G.carrier)
      for (Elem h : G.carrier) {
        const Elem lhs = pairRaw(inst, f, inst.mul(g, h));
        for (const auto& [f1, f2] : F.classPairs(F.coproduct[F.idx(f)]))
          if (lhs != pairRaw(inst, F.ract(f1, pairRaw(inst, f2, g)), h) && pass) {
            pass = false;
            detail = "f=" + el(f) + " g=" + el(g) + " h=" + el(h);
          }
      }
  rep.add("multiplication-in-g", pass, detail);

  pass = true;
  detail.clear();
  for (Elem f : F.carrier)
    for (Elem fp : F.carrier)
      for (Elem g : G.carrier) {
        const Elem lhs = pairRaw(inst, inst.mul(f, fp), g);
        for (const auto& [g1, g2] : G.classPairs(G.coproduct[G.idx(g)]))
          if (lhs != pairRaw(inst, f, G.lact(pairRaw(inst, fp, g1), g2)) && pass) {
            pass = false;
            detail = "f=" + el(f) + " f'=" + el(fp) + " g=" + el(g);
          }
      }
  rep.add("multiplication-in-f", pass, detail);

  const Elem one = inst.monoid.unit();
  pass = true;
  detail.clear();
  for (Elem f : F.carrier)
    if (pairRaw(inst, f, one) != inst.piOf(f) && pass) {
      pass = false;
      detail = "f=" + el(f);
    }
  rep.add("pairing-with-unit-of-g", pass, detail);

  pass = true;
  detail.clear();
  for (Elem g : G.carrier)
    if (pairRaw(inst, one, g) != inst.piOf(g) && pass) {
      pass = false;
      detail = "g=" + el(g);
    }
  rep.add("pairing-with-unit-of-f", pass, detail);

  pass = true;
  detail.clear();
  for (Elem f : F.carrier)
    for (Elem fp : F.carrier) {
      if (f == fp) continue;
      bool separated = false;
      for (Elem g : G.carrier)
        if (pairRaw(inst, f, g) != pairRaw(inst, fp, g)) separated = true;
      if (!separated && pass) {
        pass = false;
        detail = "f=" + el(f) + " f'=" + el(fp);
      }
    }
  rep.add("non-degenerate-on-f", pass, detail);

  pass = true;
  detail.clear();
  for (Elem g : G.carrier)
    for (Elem gp : G.carrier) {
      if (g == gp) continue;
      bool separated = false;
      for (Elem f : F.carrier)
        if (pairRaw(inst, f, g) != pairRaw(inst, f, gp)) separated = true;
      if (!separated && pass) {
        pass = false;
        detail = "g=" + el(g) + " g'=" + el(gp);
      }
    }
  rep.add("non-degenerate-on-g", pass, detail);

  return rep;
}

namespace {

// f.g through the canonical representative of the coproduct of g
Elem actionRaw(const SmmInstance& inst, const Bialgebroid& G, Elem f, Elem g) {
  const auto [i, j] = G.tensor.reps[G.coproduct[G.idx(g)]];
  const Elem g1 = G.carrier[i];
  const Elem g2 = G.carrier[j];
  return inst.mul(g2, inst.s(pairRaw(inst, f, g1)));
}

}  // namespace

Elem moduleAlgebraAction(const SmmInstance& inst, Elem f, Elem g) {
  const Bialgebroid F = buildF(inst);
  const Bialgebroid G = buildG(inst);
  if (F.idx(f) < 0) throw ElementNotInCarrier("action: " + el(f) + " is not in F");
  if (G.idx(g) < 0) throw ElementNotInCarrier("action: " + el(g) + " is not in G");
  return actionRaw(inst, G, f, g);
}

SmashProduct smashProduct(const SmmInstance& inst) {
  const Bialgebroid G = buildG(inst);
  const Bialgebroid F = buildF(inst);
  const int n = inst.monoid.size();

  SmashProduct sp;
  sp.gCarrier = G.carrier;
  sp.fCarrier = F.carrier;
  std::vector<Elem> s;
  s.reserve(n);
  for (Elem a = 0; a < n; ++a) s.push_back(inst.s(a));
  sp.common = sortedUnique(std::move(s));

  const int ng = static_cast<int>(sp.gCarrier.size());
  const int nf = static_cast<int>(sp.fCarrier.size());
  const int ns = static_cast<int>(sp.common.size());
  sp.classes = tensorOverMiddle(
      ng, ns, nf,
      [&](int i, int k) {
        const int j = G.idx(inst.mul(sp.gCarrier[i], sp.common[k]));
        assert(j >= 0);
        return j;
      },
      [&](int k, int j) {
        const int i = F.idx(inst.mul(sp.common[k], sp.fCarrier[j]));
        assert(i >= 0);
        return i;
      });

  const Elem one = inst.monoid.unit();
  sp.unit = sp.classes.classOf(G.idx(one), F.idx(one));

  sp.table.assign(sp.classes.classes, std::vector<int>(sp.classes.classes, 0));
  for (int c1 = 0; c1 < sp.classes.classes; ++c1)
    for (int c2 = 0; c2 < sp.classes.classes; ++c2) {
      const auto [gi, fi] = sp.classes.reps[c1];
      const auto [gj, fj] = sp.classes.reps[c2];
      const Elem g = sp.gCarrier[gi];
      const Elem f = sp.fCarrier[fi];
      const Elem gp = sp.gCarrier[gj];
      const Elem fp = sp.fCarrier[fj];
      const auto [l1, l2] = F.tensor.reps[F.coproduct[F.idx(f)]];
      const Elem f1 = F.carrier[l1];
      const Elem f2 = F.carrier[l2];
      const Elem gOut = inst.mul(g, actionRaw(inst, G, f2, gp));
      const Elem fOut = inst.mul(f1, fp);
      sp.table[c1][c2] = sp.classes.classOf(G.idx(gOut), F.idx(fOut));
    }
  return sp;
}

CheckReport smashCheck(const SmmInstance& inst) {
  CheckReport rep;
  const Bialgebroid G = buildG(inst);
  const Bialgebroid F = buildF(inst);
  const int n = inst.monoid.size();
  const Elem one = inst.monoid.unit();

  std::vector<Elem> sImage;
  sImage.reserve(n);
  for (Elem a = 0; a < n; ++a) sImage.push_back(inst.s(a));
  sImage = sortedUnique(std::move(sImage));

  std::vector<Elem> meet;
  std::set_intersection(F.carrier.begin(), F.carrier.end(), G.carrier.begin(), G.carrier.end(),
                        std::back_inserter(meet));
  bool pass = sImage == meet;
  std::string detail = pass ? "" : "s-image and intersection differ";
  if (pass && std::find(sImage.begin(), sImage.end(), one) == sImage.end()) {
    pass = false;
    detail = "unit missing";
  }
  for (Elem x : sImage)
    for (Elem y : sImage)
      if (pass && !std::binary_search(sImage.begin(), sImage.end(), inst.mul(x, y))) {
        pass = false;
        detail = "x=" + el(x) + " y=" + el(y);
      }
  rep.add("common-submonoid", pass, detail);

  // the action of f on g is independent of the coproduct representative
  const int ng = static_cast<int>(G.carrier.size());
  const int nf = static_cast<int>(F.carrier.size());
  std::vector<std::vector<Elem>> act(nf, std::vector<Elem>(ng, 0));
  pass = true;
  detail.clear();
  for (int fi = 0; fi < nf; ++fi)
    for (int gi = 0; gi < ng; ++gi) {
      const Elem f = F.carrier[fi];
      const Elem g = G.carrier[gi];
      std::set<Elem> vals;
      for (const auto& [g1, g2] : G.classPairs(G.coproduct[gi]))
        vals.insert(inst.mul(g2, inst.s(pairRaw(inst, f, g1))));
      act[fi][gi] = *vals.begin();
      if ((vals.size() != 1 || G.idx(act[fi][gi]) < 0) && pass) {
        pass = false;
        detail = "f=" + el(f) + " g=" + el(g);
      }
    }
  rep.add("action-well-defined", pass, detail);
  if (!pass) return rep;

  pass = true;
  detail.clear();
  for (int fi = 0; fi < nf && pass; ++fi)
    for (int gi = 0; gi < ng; ++gi) {
      const Elem f = F.carrier[fi];
      const Elem g = G.carrier[gi];
      const Elem prod = inst.mul(f, g);
      for (const auto& [f1, f2] : F.classPairs(F.coproduct[fi]))
        if (inst.mul(act[F.idx(f2)][gi], f1) != prod) {
          pass = false;
          detail = "f=" + el(f) + " g=" + el(g);
          break;
        }
    }
  rep.add("product-factorisation", pass, detail);

  std::vector<Elem> tImage;
  tImage.reserve(n);
  for (Elem a = 0; a < n; ++a) tImage.push_back(inst.t(a));
  tImage = sortedUnique(std::move(tImage));
  std::vector<Elem> invariant;
  for (int gi = 0; gi < ng; ++gi) {
    bool fixedByAll = true;
    for (int fi = 0; fi < nf; ++fi)
      if (act[fi][gi] != G.lact(inst.piOf(F.carrier[fi]), G.carrier[gi])) fixedByAll = false;
    if (fixedByAll) invariant.push_back(G.carrier[gi]);
  }
  rep.add("invariants-are-t-image", invariant == tImage, "invariant submonoid differs");

  const SmashProduct sp = smashProduct(inst);
  pass = true;
  detail.clear();
  for (int c1 = 0; c1 < sp.classes.classes && pass; ++c1)
    for (int c2 = 0; c2 < sp.classes.classes && pass; ++c2) {
      std::set<int> prods;
      for (int gi = 0; gi < ng; ++gi)
        for (int fi = 0; fi < nf; ++fi) {
          if (sp.classes.classOf(gi, fi) != c1) continue;
          for (int gj = 0; gj < ng; ++gj)
            for (int fj = 0; fj < nf; ++fj) {
              if (sp.classes.classOf(gj, fj) != c2) continue;
              for (const auto& [f1, f2] : F.classPairs(F.coproduct[fi])) {
                const Elem gOut = inst.mul(G.carrier[gi], act[F.idx(f2)][gj]);
                const Elem fOut = inst.mul(f1, F.carrier[fj]);
                prods.insert(sp.classes.classOf(G.idx(gOut), F.idx(fOut)));
              }
            }
        }
      if (prods.size() != 1 || *prods.begin() != sp.table[c1][c2]) {
        pass = false;
        detail = "classes " + std::to_string(c1) + ", " + std::to_string(c2);
      }
    }
  rep.add("multiplication-well-defined", pass, detail);

  pass = true;
  detail.clear();
  for (int c1 = 0; c1 < sp.classes.classes && pass; ++c1)
    for (int c2 = 0; c2 < sp.classes.classes && pass; ++c2)
      for (int c3 = 0; c3 < sp.classes.classes; ++c3)
        if (sp.table[sp.table[c1][c2]][c3] != sp.table[c1][sp.table[c2][c3]]) {
          pass = false;
          detail = "classes " + std::to_string(c1) + ", " + std::to_string(c2) + ", " +
                   std::to_string(c3);
          break;
        }
  rep.add("associativity", pass, detail);

  pass = true;
  detail.clear();
  for (int c = 0; c < sp.classes.classes; ++c)
    if ((sp.table[sp.unit][c] != c || sp.table[c][sp.unit] != c) && pass) {
      pass = false;
      detail = "class " + std::to_string(c);
    }
  rep.add("unit-laws", pass, detail);

  return rep;
}

std::vector<Elem> grouplikes(const Bialgebroid& b) {
  std::vector<Elem> out;
  const int nc = static_cast<int>(b.carrier.size());
  for (int i = 0; i < nc; ++i)
    if (b.coproduct[i] == b.classOf(b.carrier[i], b.carrier[i]) &&
        b.counit[i] == b.base.unit())
      out.push_back(b.carrier[i]);
  return out;
}

CheckReport grouplikeBijectionCheck(const SmmInstance& inst) {
  CheckReport rep;
  const Bialgebroid G = buildG(inst);
  const Bialgebroid F = buildF(inst);
  const Elem one = inst.monoid.unit();

  const std::vector<Elem> qObjs = enumQCoalgebras(inst);
  std::vector<Elem> image;
  image.reserve(qObjs.size());
  for (Elem u : qObjs) image.push_back(inst.mul(inst.mu, inst.t(u)));
  const std::vector<Elem> uniq = sortedUnique(image);
  rep.add("g-image-is-grouplikes", uniq.size() == image.size() && uniq == grouplikes(G),
          "images of the coalgebra objects and grouplikes differ");
  rep.add("g-map-sends-unit-object-to-unit", inst.mul(inst.mu, inst.t(inst.eta)) == one, "");
  bool pass = true;
  std::string detail;
  for (Elem u : qObjs)
    for (Elem v : qObjs) {
      const Elem lhs = inst.mul(inst.mu, inst.t(vTensorObj(inst, u, v)));
      const Elem rhs = inst.mul(inst.mul(inst.mu, inst.t(v)), inst.mul(inst.mu, inst.t(u)));
      if (lhs != rhs && pass) {
        pass = false;
        detail = "u=" + el(u) + " v=" + el(v);
      }
    }
  rep.add("g-map-reverses-multiplication", pass, detail);

  const std::vector<Elem> tObjs = enumTAlgebras(inst);
  std::vector<Elem> fImage;
  fImage.reserve(tObjs.size());
  for (Elem x : tObjs) fImage.push_back(inst.mul(inst.q(x), inst.delta));
  const std::vector<Elem> fUniq = sortedUnique(fImage);
  rep.add("f-image-is-grouplikes", fUniq.size() == fImage.size() && fUniq == grouplikes(F),
          "images of the algebra objects and grouplikes differ");
  rep.add("f-map-sends-unit-object-to-unit", inst.mul(inst.q(inst.eps), inst.delta) == one, "");
  pass = true;
  detail.clear();
  for (Elem x : tObjs)
    for (Elem y : tObjs) {
      const Elem lhs = inst.mul(inst.q(hTensorObj(inst, x, y)), inst.delta);
      const Elem rhs = inst.mul(inst.mul(inst.q(y), inst.delta), inst.mul(inst.q(x), inst.delta));
      if (lhs != rhs && pass) {
        pass = false;
        detail = "x=" + el(x) + " y=" + el(y);
      }
    }
  rep.add("f-map-reverses-multiplication", pass, detail);

  return rep;
}

CheckReport smmIsoCheck(const SmmInstance& a, const SmmInstance& b, const SmmIso& iso) {
  CheckReport rep;
  const int n = a.monoid.size();
  const int m = b.monoid.size();

  bool pass = static_cast<int>(iso.phi.size()) == n && n == m;
  std::string detail = pass ? "" : "size mismatch";
  for (Elem x = 0; pass && x < n; ++x)
    if (iso.phi[x] < 0 || iso.phi[x] >= m) {
      pass = false;
      detail = "phi(" + el(x) + ") out of range";
    }
  if (pass && sortedUnique(iso.phi).size() != static_cast<std::size_t>(n)) {
    pass = false;
    detail = "not injective";
  }
  rep.add("base-map-bijective", pass, detail);
  if (!pass) return rep;

  pass = iso.phi[a.monoid.unit()] == b.monoid.unit();
  detail = pass ? "" : "unit not preserved";
  for (Elem x = 0; x < n && pass; ++x)
    for (Elem y = 0; y < n && pass; ++y)
      if (iso.phi[a.mul(x, y)] != b.mul(iso.phi[x], iso.phi[y])) {
        pass = false;
        detail = "x=" + el(x) + " y=" + el(y);
      }
  rep.add("base-map-homomorphism", pass, detail);

  const bool phi2InRange = iso.phi2 >= 0 && iso.phi2 < m;
  const bool phi0InRange = iso.phi0 >= 0 && iso.phi0 < m;
  rep.add("tensor-comparison-invertible",
          phi2InRange && b.monoid.inverseOf(iso.phi2).has_value(), "phi2=" + el(iso.phi2));
  rep.add("unit-comparison-invertible",
          phi0InRange && b.monoid.inverseOf(iso.phi0).has_value(), "phi0=" + el(iso.phi0));
  if (!phi2InRange || !phi0InRange) return rep;

  pass = true;
  detail.clear();
  for (Elem x = 0; x < n; ++x)
    if (b.mul(iso.phi2, b.q(iso.phi[x])) != b.mul(iso.phi[a.q(x)], iso.phi2) && pass) {
      pass = false;
      detail = "x=" + el(x);
    }
  rep.add("comparison-intertwines-q", pass, detail);

  pass = true;
  detail.clear();
  for (Elem x = 0; x < n; ++x)
    if (b.mul(iso.phi2, b.t(iso.phi[x])) != b.mul(iso.phi[a.t(x)], iso.phi2) && pass) {
      pass = false;
      detail = "x=" + el(x);
    }
  rep.add("comparison-intertwines-t", pass, detail);

  rep.add("tensor-axiom",
          mul3(b.monoid, iso.phi[a.gamma()], iso.phi2, b.t(iso.phi2)) ==
              mul3(b.monoid, iso.phi2, b.q(iso.phi2), b.gamma()),
          "");
  rep.add("unit-axiom",
          mul3(b.monoid, iso.phi2, b.q(iso.phi0), b.eta) == iso.phi[a.eta], "");
  rep.add("counit-axiom",
          mul3(b.monoid, iso.phi[a.eps], iso.phi2, b.t(iso.phi0)) == b.eps, "");

  return rep;
}

std::vector<SmmIso> searchSmmIsos(const SmmInstance& a, const SmmInstance& b) {
  std::vector<SmmIso> out;
  const int n = a.monoid.size();
  if (n != b.monoid.size()) return out;

  std::vector<Elem> invertible;
  for (Elem x = 0; x < n; ++x)
    if (b.monoid.inverseOf(x).has_value()) invertible.push_back(x);

  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm[a.monoid.unit()] != b.monoid.unit()) continue;
    bool hom = true;
    for (Elem x = 0; x < n && hom; ++x)
      for (Elem y = 0; y < n && hom; ++y)
        if (perm[a.mul(x, y)] != b.mul(perm[x], perm[y])) hom = false;
    if (!hom) continue;
    for (Elem phi2 : invertible)
      for (Elem phi0 : invertible) {
        SmmIso iso{perm, phi2, phi0};
        if (smmIsoCheck(a, b, iso).ok()) out.push_back(iso);
      }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

BgdMorphism applySmmIso(const SmmIso& iso, const SmmInstance& a, const SmmInstance& b) {
  const CheckReport pre = smmIsoCheck(a, b, iso);
  if (!pre.ok()) {
    std::string bad = "iso invariants fail:";
    for (const CheckItem& c : pre.items)
      if (!c.pass) bad += " " + c.name;
    throw InvalidIso(bad);
  }
  const Elem phi0Inv = *b.monoid.inverseOf(iso.phi0);
  const Elem phi2Inv = *b.monoid.inverseOf(iso.phi2);
  const Elem sigma = b.mul(iso.phi2, b.q(iso.phi0));
  const Elem tau = b.mul(b.t(phi0Inv), phi2Inv);
  const auto tauInv = b.monoid.inverseOf(tau);
  if (!tauInv) throw InvalidIso("comparison 2-cell is not invertible");

  BgdMorphism m;
  m.report.add("monad-comparison-multiplication",
               b.mul(sigma, b.mu) == mul3(b.monoid, iso.phi[a.mu], sigma, b.t(sigma)), "");
  m.report.add("monad-comparison-unit", b.mul(sigma, b.eta) == iso.phi[a.eta], "");
  m.report.add("comonad-comparison-comultiplication",
               b.mul(b.delta, tau) == mul3(b.monoid, b.q(tau), tau, iso.phi[a.delta]), "");
  m.report.add("comonad-comparison-counit", b.mul(b.eps, tau) == iso.phi[a.eps], "");

  const Bialgebroid GA = buildG(a);
  const Bialgebroid GB = buildG(b);
  const int n = a.monoid.size();
  const int nc = static_cast<int>(GA.carrier.size());
  m.gMap.resize(nc);
  for (int i = 0; i < nc; ++i)
    m.gMap[i] = mul3(b.monoid, tau, iso.phi[GA.carrier[i]], *tauInv);
  m.baseMap.resize(n);
  for (Elem x = 0; x < n; ++x) m.baseMap[x] = mul3(b.monoid, phi0Inv, iso.phi[x], iso.phi0);

  bool pass = sortedUnique(m.gMap) == GB.carrier;
  m.report.add("carrier-map-bijective", pass, "image differs from the codomain carrier");
  if (!pass) return m;
  auto mOf = [&](Elem g) { return m.gMap[GA.idx(g)]; };

  pass = mOf(a.monoid.unit()) == b.monoid.unit();
  std::string detail = pass ? "" : "unit not preserved";
  for (int i = 0; i < nc && pass; ++i)
    for (int j = 0; j < nc && pass; ++j) {
      const Elem g = GA.carrier[i];
      const Elem h = GA.carrier[j];
      if (mOf(a.mul(g, h)) != b.mul(mOf(g), mOf(h))) {
        pass = false;
        detail = "g=" + el(g) + " h=" + el(h);
      }
    }
  m.report.add("carrier-map-multiplicative", pass, detail);

  pass = true;
  detail.clear();
  for (Elem x = 0; x < n; ++x)
    if (mOf(GA.source[x]) != GB.source[m.baseMap[x]] && pass) {
      pass = false;
      detail = "x=" + el(x);
    }
  m.report.add("maps-source-to-source", pass, detail);

  pass = true;
  detail.clear();
  for (Elem x = 0; x < n; ++x)
    if (mOf(GA.target[x]) != GB.target[m.baseMap[x]] && pass) {
      pass = false;
      detail = "x=" + el(x);
    }
  m.report.add("maps-target-to-target", pass, detail);

  pass = true;
  detail.clear();
  for (int i = 0; i < nc; ++i)
    if (GB.counit[GB.idx(m.gMap[i])] != m.baseMap[GA.counit[i]] && pass) {
      pass = false;
      detail = "g=" + el(GA.carrier[i]);
    }
  m.report.add("maps-counit-to-counit", pass, detail);

  pass = true;
  detail.clear();
  for (int i = 0; i < nc && pass; ++i) {
    const int want = GB.coproduct[GB.idx(m.gMap[i])];
    for (const auto& [x, y] : GA.classPairs(GA.coproduct[i]))
      if (GB.classOf(mOf(x), mOf(y)) != want) {
        pass = false;
        detail = "g=" + el(GA.carrier[i]);
        break;
      }
  }
  m.report.add("maps-coproduct-to-coproduct", pass, detail);

  return m;
}

CheckReport adjunctionCheck(const Bialgebroid& g, const AdjunctionData& adj) {
  CheckReport rep;
  const int n = g.base.size();
  const int nc = static_cast<int>(g.carrier.size());
  const Elem one = g.base.unit();

  bool pass = static_cast<int>(adj.sG.size()) == nc && g.idx(adj.mu) >= 0 && adj.eta >= 0 &&
              adj.eta < n;
  for (Elem x : adj.sG)
    if (x < 0 || x >= n) pass = false;
  rep.add("data-shape", pass, "carrier map, counit or unit out of range");
  if (!pass) return rep;

  auto sg = [&](Elem x) { return adj.sG[g.idx(x)]; };

  pass = sg(one) == one;
  std::string detail = pass ? "" : "unit not preserved";
  for (Elem x : g.carrier)
    for (Elem y : g.carrier)
      if (pass && sg(g.base.mul(x, y)) != g.base.mul(sg(x), sg(y))) {
        pass = false;
        detail = "x=" + el(x) + " y=" + el(y);
      }
  rep.add("adjoint-homomorphism", pass, detail);

  pass = true;
  detail.clear();
  for (Elem a = 0; a < n; ++a)
    if (g.base.mul(adj.eta, a) != g.base.mul(sg(g.source[a]), adj.eta) && pass) {
      pass = false;
      detail = "a=" + el(a);
    }
  rep.add("unit-naturality", pass, detail);

  pass = true;
  detail.clear();
  for (Elem x : g.carrier)
    if (g.base.mul(adj.mu, g.source[sg(x)]) != g.base.mul(x, adj.mu) && pass) {
      pass = false;
      detail = "g=" + el(x);
    }
  rep.add("counit-naturality", pass, detail);

  std::vector<Elem> image;
  image.reserve(n);
  for (Elem a = 0; a < n; ++a) image.push_back(g.base.mul(adj.mu, g.source[a]));
  const std::vector<Elem> uniq = sortedUnique(image);
  rep.add("source-free-rank-one", uniq.size() == static_cast<std::size_t>(n) && uniq == g.carrier,
          "a -> mu*source(a) is not a bijection onto the carrier");

  rep.add("triangle-base", g.base.mul(sg(adj.mu), adj.eta) == one, "");
  rep.add("triangle-carrier", g.base.mul(adj.mu, g.source[adj.eta]) == one, "");

  pass = true;
  detail.clear();
  for (Elem a = 0; a < n; ++a) {
    const Elem img = g.base.mul(adj.mu, g.source[a]);
    if (g.idx(img) < 0 || g.base.mul(sg(img), adj.eta) != a) {
      if (pass) detail = "a=" + el(a);
      pass = false;
    }
  }
  rep.add("inverse-formula", pass, detail);

  return rep;
}

AdjunctionData inclusionAdjunction(const SmmInstance& inst) {
  AdjunctionData adj;
  adj.sG = buildG(inst).carrier;
  adj.mu = inst.mu;
  adj.eta = inst.eta;
  return adj;
}

std::vector<AdjunctionData> searchAdjunctions(const Bialgebroid& g) {
  std::vector<AdjunctionData> out;
  const int n = g.base.size();
  const int nc = static_cast<int>(g.carrier.size());
  std::vector<Elem> sG(nc, 0);
  while (true) {
    for (Elem mu : g.carrier)
      for (Elem eta = 0; eta < n; ++eta) {
        AdjunctionData adj{sG, mu, eta};
        if (adjunctionCheck(g, adj).ok()) out.push_back(adj);
      }
    int pos = nc - 1;
    while (pos >= 0 && sG[pos] == n - 1) sG[pos--] = 0;
    if (pos < 0) break;
    ++sG[pos];
  }
  return out;
}

SmmInstance reconstructSmm(const Bialgebroid& g, const AdjunctionData& adj) {
  if (g.side != BgdSide::Right)
    throw AdjunctionInvalid("reconstruction expects the right-handed side");
  const CheckReport rep = adjunctionCheck(g, adj);
  for (const CheckItem& c : rep.items)
    if (!c.pass) {
      const std::string msg = c.name + (c.detail.empty() ? "" : ": " + c.detail);
      if (c.name == "source-free-rank-one" || c.name == "inverse-formula")
        throw NotSourceRegular(msg);
      throw AdjunctionInvalid(msg);
    }

  const FiniteMonoid& A = g.base;
  const int n = A.size();
  auto sg = [&](Elem x) {
    const int i = g.idx(x);
    if (i < 0) throw AdjunctionInvalid("carrier is not closed under multiplication");
    return adj.sG[i];
  };
  // the value of a dual element on a carrier element, and the dual product
  // routed through the legs of the coproduct of the counit
  auto value = [&](Elem c, Elem x) { return A.mul(c, A.mul(sg(x), adj.eta)); };
  const auto muLegs = g.classPairs(g.coproduct[g.idx(adj.mu)]);
  auto dualMul = [&](Elem c, Elem cp) {
    Elem out = -1;
    for (const auto& [u, v] : muLegs) {
      const Elem w = value(cp, u);
      const Elem cand = value(c, A.mul(v, g.target[w]));
      if (out < 0) out = cand;
      if (cand != out)
        throw AdjunctionInvalid("coproduct legs give an inconsistent dual product");
    }
    return out;
  };

  SmmInstance out;
  out.monoid = A;
  out.eps = g.counit[g.idx(adj.mu)];
  out.T.images.resize(n);
  out.Q.images.resize(n);
  for (Elem a = 0; a < n; ++a) {
    out.T.images[a] = sg(g.source[a]);
    out.Q.images[a] = dualMul(A.unit(), A.mul(a, out.eps));
  }
  out.mu = sg(adj.mu);
  out.eta = adj.eta;
  out.delta = dualMul(A.unit(), A.unit());

  if (!isEndomorphism(A, out.T) || !isEndomorphism(A, out.Q))
    throw AdjunctionInvalid("reconstructed maps are not endomorphisms");
  const auto bad = checkAxioms(out);
  if (!bad.empty()) throw AdjunctionInvalid("reconstructed instance fails " + bad.front().axiom);
  return out;
}

CheckReport reconstructionCheck(const SmmInstance& inst) {
  CheckReport rep;
  const Bialgebroid G = buildG(inst);
  const int n = inst.monoid.size();

  bool pass = true;
  std::string detail;
  try {
    pass = reconstructSmm(G, inclusionAdjunction(inst)) == inst;
    if (!pass) detail = "tuple differs";
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  rep.add("inclusion-data-reproduces-instance", pass, detail);

  const std::vector<AdjunctionData> adjs = searchAdjunctions(G);
  const AdjunctionData incl = inclusionAdjunction(inst);
  pass = false;
  for (const AdjunctionData& adj : adjs)
    if (adj.sG == incl.sG && adj.mu == incl.mu && adj.eta == incl.eta) pass = true;
  rep.add("inclusion-data-found", pass, "search missed the inclusion data");

  int k = 0;
  for (const AdjunctionData& adj : adjs) {
    const std::string at = " at choice " + std::to_string(k);
    ++k;
    SmmInstance rec;
    pass = true;
    detail.clear();
    try {
      rec = reconstructSmm(G, adj);
    } catch (const std::exception& e) {
      pass = false;
      detail = e.what();
    }
    rep.add("reconstructs-valid-instance" + at, pass, detail);
    if (!pass) continue;

    // an invertible comparison element relating the chosen adjoint to the
    // inclusion conjugates the reconstruction back onto the instance
    auto sg = [&](Elem x) { return adj.sG[G.idx(x)]; };
    pass = false;
    detail = "no comparison element";
    for (Elem z = 0; z < n && !pass; ++z) {
      const auto zInv = inst.monoid.inverseOf(z);
      if (!zInv) continue;
      if (inst.mul(inst.mu, inst.t(z)) != adj.mu) continue;
      if (inst.mul(z, adj.eta) != inst.eta) continue;
      bool natural = true;
      for (Elem x : G.carrier)
        if (inst.mul(z, sg(x)) != inst.mul(x, z)) natural = false;
      if (!natural) continue;
      SmmIso iso;
      iso.phi.resize(n);
      for (Elem x = 0; x < n; ++x) iso.phi[x] = mul3(inst.monoid, z, x, *zInv);
      iso.phi2 = inst.mul(inst.q(*zInv), inst.t(*zInv));
      iso.phi0 = z;
      if (smmIsoCheck(rec, inst, iso).ok()) pass = true;
    }
    rep.add("conjugation-isomorphism" + at, pass, detail);

    // the chosen adjoint restricted to the carrier is an isomorphism onto the
    // bialgebroid rebuilt from the reconstruction
    const Bialgebroid G2 = buildG(rec);
    auto mOf = [&](Elem x) { return sg(x); };
    std::vector<Elem> image;
    for (Elem x : G.carrier) image.push_back(mOf(x));
    pass = sortedUnique(image).size() == G.carrier.size() && sortedUnique(image) == G2.carrier;
    detail = pass ? "" : "image differs from the rebuilt carrier";
    for (Elem x : G.carrier)
      for (Elem y : G.carrier)
        if (pass && mOf(inst.mul(x, y)) != rec.mul(mOf(x), mOf(y))) {
          pass = false;
          detail = "not multiplicative at g=" + el(x) + " h=" + el(y);
        }
    for (Elem a = 0; a < n && pass; ++a) {
      if (mOf(G.source[a]) != G2.source[a]) {
        pass = false;
        detail = "source image differs at a=" + el(a);
      } else if (mOf(G.target[a]) != G2.target[a]) {
        pass = false;
        detail = "target image differs at a=" + el(a);
      }
    }
    for (int i = 0; i < static_cast<int>(G.carrier.size()) && pass; ++i) {
      if (G2.counit[G2.idx(mOf(G.carrier[i]))] != G.counit[i]) {
        pass = false;
        detail = "counit differs at g=" + el(G.carrier[i]);
        break;
      }
      const int want = G2.coproduct[G2.idx(mOf(G.carrier[i]))];
      for (const auto& [x, y] : G.classPairs(G.coproduct[i]))
        if (G2.classOf(mOf(x), mOf(y)) != want) {
          pass = false;
          detail = "coproduct differs at g=" + el(G.carrier[i]);
          break;
        }
    }
    rep.add("carrier-image-rebuilds" + at, pass, detail);
  }
  return rep;
}

CheckReport sourceRegularModuleCheck(const SmmInstance& inst) {
  const int n = inst.monoid.size();
  if (n > 3) throw InvalidInput("module census asks for at most 3 elements");
  CheckReport rep;
  const Bialgebroid G = buildG(inst);
  const int nc = static_cast<int>(G.carrier.size());
  const int oneIdx = G.idx(inst.monoid.unit());

  // the represented modules x*T(A) under right multiplication, as tables over
  // carrier positions
  struct Table {
    std::vector<Elem> carrier;
    std::vector<std::vector<int>> act;  // [member][carrier position of G]
  };
  std::vector<Table> represented;
  bool pass = true;
  std::string detail;
  for (Elem x : enumTAlgebras(inst)) {
    Table tb;
    tb.carrier = forgetfulBimodule(inst, x).carrier;
    const int sz = static_cast<int>(tb.carrier.size());
    auto member = [&](Elem v) {
      const auto it = std::lower_bound(tb.carrier.begin(), tb.carrier.end(), v);
      return it != tb.carrier.end() && *it == v ? static_cast<int>(it - tb.carrier.begin()) : -1;
    };
    tb.act.assign(sz, std::vector<int>(nc, -1));
    bool good = true;
    for (int m = 0; m < sz; ++m)
      for (int i = 0; i < nc; ++i) {
        tb.act[m][i] = member(inst.mul(tb.carrier[m], G.carrier[i]));
        if (tb.act[m][i] < 0) good = false;
      }
    for (int m = 0; m < sz && good; ++m) {
      if (tb.act[m][oneIdx] != m) good = false;
      for (int i = 0; i < nc && good; ++i)
        for (int j = 0; j < nc; ++j)
          if (tb.act[tb.act[m][i]][j] != tb.act[m][G.idx(inst.mul(G.carrier[i], G.carrier[j]))]) {
            good = false;
            break;
          }
    }
    bool regular = false;
    for (int m0 = 0; m0 < sz && !regular; ++m0) {
      std::set<int> hit;
      for (Elem a = 0; a < n; ++a) hit.insert(tb.act[m0][G.idx(G.source[a])]);
      regular = static_cast<int>(hit.size()) == n && sz == n;
    }
    if (!(good && regular) && pass) {
      pass = false;
      detail = "x=" + el(x);
    }
    if (good) represented.push_back(std::move(tb));
  }
  rep.add("represented-modules-are-source-regular", pass, detail);

  // census over all right module structures on a carrier of the size of A:
  // the source-regular ones are exactly the represented ones
  pass = true;
  detail.clear();
  std::vector<int> act(static_cast<std::size_t>(n) * nc, 0);
  auto at = [&](int m, int i) { return act[static_cast<std::size_t>(m) * nc + i]; };
  std::vector<int> perm(n);
  while (true) {
    bool lawful = true;
    for (int m = 0; m < n && lawful; ++m) {
      if (at(m, oneIdx) != m) lawful = false;
      for (int i = 0; i < nc && lawful; ++i)
        for (int j = 0; j < nc; ++j)
          if (at(at(m, i), j) != at(m, G.idx(inst.mul(G.carrier[i], G.carrier[j])))) {
            lawful = false;
            break;
          }
    }
    bool regular = false;
    for (int m0 = 0; m0 < n && lawful && !regular; ++m0) {
      std::set<int> hit;
      for (Elem a = 0; a < n; ++a) hit.insert(at(m0, G.idx(G.source[a])));
      regular = static_cast<int>(hit.size()) == n;
    }
    if (lawful && regular) {
      bool matched = false;
      for (const Table& tb : represented) {
        if (static_cast<int>(tb.carrier.size()) != n) continue;
        std::iota(perm.begin(), perm.end(), 0);
        do {
          bool equivariant = true;
          for (int m = 0; m < n && equivariant; ++m)
            for (int i = 0; i < nc; ++i)
              if (perm[at(m, i)] != tb.act[perm[m]][i]) {
                equivariant = false;
                break;
              }
          if (equivariant) matched = true;
        } while (!matched && std::next_permutation(perm.begin(), perm.end()));
        if (matched) break;
      }
      if (!matched && pass) {
        pass = false;
        detail = "an unrepresented source-regular structure exists";
      }
    }
    int pos = static_cast<int>(act.size()) - 1;
    while (pos >= 0 && act[pos] == n - 1) act[pos--] = 0;
    if (pos < 0) break;
    ++act[pos];
  }
  rep.add("source-regular-modules-are-represented", pass, detail);

  return rep;
}

CheckReport bgdSuite(const SmmInstance& inst) {
  CheckReport rep;
  const Bialgebroid G = buildG(inst);
  const int n = inst.monoid.size();

  rep.merge(checkBialgebroid(G), "G.");
  rep.merge(checkBialgebroid(buildF(inst)), "F.");

  std::vector<Elem> image;
  image.reserve(n);
  for (Elem a = 0; a < n; ++a) image.push_back(inst.mul(inst.mu, inst.t(a)));
  rep.add("G.rank-one-free", sortedUnique(image).size() == static_cast<std::size_t>(n),
          "a -> mu*T(a) is not injective");

  bool pass = true;
  std::string detail;
  for (int i = 0; i < static_cast<int>(G.carrier.size()); ++i)
    if (G.counit[i] != inst.piOf(G.carrier[i]) && pass) {
      pass = false;
      detail = "g=" + el(G.carrier[i]);
    }
  rep.add("G.counit-is-pi", pass, detail);

  rep.merge(pairingPropertyCheck(inst), "pairing.");
  rep.merge(smashCheck(inst), "smash.");
  rep.merge(grouplikeBijectionCheck(inst), "grouplike.");
  rep.merge(reconstructionCheck(inst), "reconstruct.");
  if (n <= 2) rep.merge(sourceRegularModuleCheck(inst), "modules.");
  return rep;
}

}  // namespace smm
