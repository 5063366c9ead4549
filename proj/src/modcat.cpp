#include "smm/modcat.hpp"

#include <algorithm>
#include <cassert>

namespace smm {

bool CheckReport::ok() const {
  for (const CheckItem& c : items)
    if (!c.pass) return false;
  return true;
}

void CheckReport::add(const std::string& name, bool pass, const std::string& detail) {
  items.push_back({name, pass, pass ? "" : detail});
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (const CheckItem& c : other.items) items.push_back({prefix + c.name, c.pass, c.detail});
}

bool isTAlgebra(const SmmInstance& inst, Elem x) {
  return inst.mul(x, inst.mu) == inst.mul(x, inst.t(x)) &&
         inst.mul(x, inst.eta) == inst.monoid.unit();
}

bool isTHom(const SmmInstance& inst, const THom& h) {
  return inst.mul(h.t, h.dom) == inst.mul(h.cod, inst.t(h.t));
}

bool isQCoalgebra(const SmmInstance& inst, Elem u) {
  return inst.mul(inst.q(u), u) == inst.mul(inst.delta, u) &&
         inst.mul(inst.eps, u) == inst.monoid.unit();
}

bool isQHom(const SmmInstance& inst, const QHom& h) {
  return inst.mul(inst.q(h.s), h.dom) == inst.mul(h.cod, h.s);
}

std::vector<Elem> enumTAlgebras(const SmmInstance& inst) {
  std::vector<Elem> out;
  for (Elem x = 0; x < inst.monoid.size(); ++x)
    if (isTAlgebra(inst, x)) out.push_back(x);
  return out;
}

std::vector<Elem> enumQCoalgebras(const SmmInstance& inst) {
  std::vector<Elem> out;
  for (Elem u = 0; u < inst.monoid.size(); ++u)
    if (isQCoalgebra(inst, u)) out.push_back(u);
  return out;
}

std::vector<Elem> homSetT(const SmmInstance& inst, Elem x, Elem y) {
  std::vector<Elem> out;
  for (Elem t = 0; t < inst.monoid.size(); ++t)
    if (isTHom(inst, {t, x, y})) out.push_back(t);
  return out;
}

std::vector<Elem> homSetQ(const SmmInstance& inst, Elem u, Elem v) {
  std::vector<Elem> out;
  for (Elem s = 0; s < inst.monoid.size(); ++s)
    if (isQHom(inst, {s, u, v})) out.push_back(s);
  return out;
}

THom composeT(const SmmInstance& inst, const THom& t, const THom& s) {
  return {inst.mul(t.t, s.t), s.dom, t.cod};
}

QHom composeQ(const SmmInstance& inst, const QHom& t, const QHom& s) {
  return {inst.mul(t.s, s.s), s.dom, t.cod};
}

Elem hTensorObj(const SmmInstance& inst, Elem x, Elem y) {
  return inst.mul(inst.mul(y, inst.q(x)), inst.delta);
}

THom hTensorArr(const SmmInstance& inst, const THom& s, const THom& t) {
  Elem e = inst.mul(inst.mul(inst.mul(t.cod, inst.q(s.t)), inst.eta), t.t);
  return {e, hTensorObj(inst, s.dom, t.dom), hTensorObj(inst, s.cod, t.cod)};
}

Elem vTensorObj(const SmmInstance& inst, Elem u, Elem v) {
  return inst.mul(inst.mul(inst.mu, inst.t(v)), u);
}

QHom vTensorArr(const SmmInstance& inst, const QHom& s, const QHom& t) {
  Elem e = inst.mul(inst.mul(inst.mul(t.s, inst.eps), inst.t(s.s)), t.dom);
  return {e, vTensorObj(inst, s.dom, t.dom), vTensorObj(inst, s.cod, t.cod)};
}

Word hTensorObjWord(const Word& x, const Word& y) {
  Word out = y;
  out.append(applyEndo('Q', x));
  out.push(mkLetter(AtomKind::Delta));
  return out;
}

Word vTensorObjWord(const Word& u, const Word& v) {
  Word out = mkWord({mkLetter(AtomKind::Mu)});
  out.append(applyEndo('T', v));
  out.append(u);
  return out;
}

bool isIsoT(const SmmInstance& inst, Elem x, Elem y) {
  const Elem one = inst.monoid.unit();
  for (Elem t : homSetT(inst, x, y))
    for (Elem r : homSetT(inst, y, x))
      if (inst.mul(r, t) == one && inst.mul(t, r) == one) return true;
  return false;
}

namespace {

std::string el(Elem a) { return std::to_string(a); }

// all arrows between listed objects, as THom/QHom records
std::vector<THom> allTHoms(const SmmInstance& inst, const std::vector<Elem>& obj) {
  std::vector<THom> out;
  for (Elem x : obj)
    for (Elem y : obj)
      for (Elem t : homSetT(inst, x, y)) out.push_back({t, x, y});
  return out;
}

std::vector<QHom> allQHoms(const SmmInstance& inst, const std::vector<Elem>& obj) {
  std::vector<QHom> out;
  for (Elem u : obj)
    for (Elem v : obj)
      for (Elem s : homSetQ(inst, u, v)) out.push_back({s, u, v});
  return out;
}

Elem qPow(const SmmInstance& inst, int k, Elem a) {
  for (int i = 0; i < k; ++i) a = inst.q(a);
  return a;
}

}  // namespace

CheckReport strictMonoidalCheckT(const SmmInstance& inst) {
  CheckReport rep;
  const Elem one = inst.monoid.unit();
  const std::vector<Elem> obj = enumTAlgebras(inst);

  bool pass = isTAlgebra(inst, inst.eps);
  rep.add("unit-object", pass, "eps is not an object");

  pass = true;
  std::string detail;
  for (Elem x : obj)
    for (Elem y : obj)
      if (!isTAlgebra(inst, hTensorObj(inst, x, y)) && pass) {
        pass = false;
        detail = "x=" + el(x) + " y=" + el(y);
      }
  rep.add("object-tensor-closure", pass, detail);

  pass = true;
  detail.clear();
  for (Elem x : obj)
    for (Elem y : obj)
      for (Elem z : obj) {
        Elem l = hTensorObj(inst, hTensorObj(inst, x, y), z);
        Elem r = hTensorObj(inst, x, hTensorObj(inst, y, z));
        if (l != r && pass) {
          pass = false;
          detail = "x=" + el(x) + " y=" + el(y) + " z=" + el(z);
        }
      }
  rep.add("object-associativity", pass, detail);

  pass = true;
  detail.clear();
  for (Elem x : obj) {
    if (hTensorObj(inst, inst.eps, x) != x || hTensorObj(inst, x, inst.eps) != x) {
      if (pass) detail = "x=" + el(x);
      pass = false;
    }
  }
  rep.add("object-unit-laws", pass, detail);

  const std::vector<THom> arr = allTHoms(inst, obj);

  pass = true;
  detail.clear();
  for (Elem x : obj)
    if (!isTHom(inst, {one, x, x}) && pass) {
      pass = false;
      detail = "x=" + el(x);
    }
  rep.add("identity-arrows", pass, detail);

  pass = true;
  detail.clear();
  for (const THom& s : arr)
    for (const THom& t : arr) {
      if (s.cod != t.dom) continue;
      if (!isTHom(inst, composeT(inst, t, s)) && pass) {
        pass = false;
        detail = "s=" + el(s.t) + " t=" + el(t.t);
      }
    }
  rep.add("composition-closure", pass, detail);

  pass = true;
  detail.clear();
  for (const THom& s : arr)
    for (const THom& t : arr)
      if (!isTHom(inst, hTensorArr(inst, s, t)) && pass) {
        pass = false;
        detail = "s=" + el(s.t) + " t=" + el(t.t);
      }
  rep.add("arrow-tensor-closure", pass, detail);

  pass = true;
  detail.clear();
  for (const THom& s : arr)
    for (const THom& t : arr)
      for (const THom& r : arr) {
        THom l = hTensorArr(inst, hTensorArr(inst, s, t), r);
        THom rr = hTensorArr(inst, s, hTensorArr(inst, t, r));
        if (!(l == rr) && pass) {
          pass = false;
          detail = "s=" + el(s.t) + " t=" + el(t.t) + " r=" + el(r.t);
        }
      }
  rep.add("arrow-associativity", pass, detail);

  const THom idEps{one, inst.eps, inst.eps};
  pass = true;
  detail.clear();
  for (const THom& t : arr) {
    if (!(hTensorArr(inst, idEps, t) == t) || !(hTensorArr(inst, t, idEps) == t)) {
      if (pass) detail = "t=" + el(t.t);
      pass = false;
    }
  }
  rep.add("arrow-unit-laws", pass, detail);

  pass = true;
  detail.clear();
  for (Elem x : obj)
    for (Elem y : obj) {
      THom l = hTensorArr(inst, {one, x, x}, {one, y, y});
      if (!(l == THom{one, hTensorObj(inst, x, y), hTensorObj(inst, x, y)}) && pass) {
        pass = false;
        detail = "x=" + el(x) + " y=" + el(y);
      }
    }
  rep.add("tensor-of-identities", pass, detail);

  pass = true;
  detail.clear();
  for (const THom& s : arr)
    for (const THom& s2 : arr) {
      if (s.cod != s2.dom) continue;
      for (const THom& t : arr)
        for (const THom& t2 : arr) {
          if (t.cod != t2.dom) continue;
          THom l = hTensorArr(inst, composeT(inst, s2, s), composeT(inst, t2, t));
          THom r = composeT(inst, hTensorArr(inst, s2, t2), hTensorArr(inst, s, t));
          if (!(l == r) && pass) {
            pass = false;
            detail = "s=" + el(s.t) + " s2=" + el(s2.t) + " t=" + el(t.t) +
                     " t2=" + el(t2.t);
          }
        }
    }
  rep.add("tensor-interchange", pass, detail);

  rep.add("mu-object", isTAlgebra(inst, inst.mu), "mu fails the object equations");

  pass = true;
  detail.clear();
  for (Elem x : obj)
    if (!isTHom(inst, {x, inst.mu, x}) && pass) {
      pass = false;
      detail = "x=" + el(x);
    }
  rep.add("objects-are-arrows-from-mu", pass, detail);

  pass = true;
  detail.clear();
  for (Elem x : obj) {
    std::vector<Elem> image;
    for (Elem a = 0; a < inst.monoid.size(); ++a) image.push_back(inst.mul(x, inst.t(a)));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (homSetT(inst, inst.mu, x) != image && pass) {
      pass = false;
      detail = "x=" + el(x);
    }
  }
  rep.add("hom-from-mu-is-x-T(A)", pass, detail);

  pass = true;
  detail.clear();
  for (const THom& s : arr)
    for (const THom& t : arr) {
      if (s.dom != t.dom || s.cod != t.cod) continue;
      if (inst.mul(s.t, s.dom) == inst.mul(t.t, t.dom) && s.t != t.t && pass) {
        pass = false;
        detail = "s=" + el(s.t) + " t=" + el(t.t) + " x=" + el(s.dom);
      }
    }
  rep.add("faithful-at-objects", pass, detail);

  return rep;
}

CheckReport strictMonoidalCheckQ(const SmmInstance& inst) {
  CheckReport rep;
  const Elem one = inst.monoid.unit();
  const std::vector<Elem> obj = enumQCoalgebras(inst);

  rep.add("unit-object", isQCoalgebra(inst, inst.eta), "eta is not an object");

  bool pass = true;
  std::string detail;
  for (Elem u : obj)
    for (Elem v : obj)
      if (!isQCoalgebra(inst, vTensorObj(inst, u, v)) && pass) {
        pass = false;
        detail = "u=" + el(u) + " v=" + el(v);
      }
  rep.add("object-tensor-closure", pass, detail);

  pass = true;
  detail.clear();
  for (Elem u : obj)
    for (Elem v : obj)
      for (Elem w : obj) {
        Elem l = vTensorObj(inst, vTensorObj(inst, u, v), w);
        Elem r = vTensorObj(inst, u, vTensorObj(inst, v, w));
        if (l != r && pass) {
          pass = false;
          detail = "u=" + el(u) + " v=" + el(v) + " w=" + el(w);
        }
      }
  rep.add("object-associativity", pass, detail);

  pass = true;
  detail.clear();
  for (Elem u : obj) {
    if (vTensorObj(inst, inst.eta, u) != u || vTensorObj(inst, u, inst.eta) != u) {
      if (pass) detail = "u=" + el(u);
      pass = false;
    }
  }
  rep.add("object-unit-laws", pass, detail);

  const std::vector<QHom> arr = allQHoms(inst, obj);

  pass = true;
  detail.clear();
  for (Elem u : obj)
    if (!isQHom(inst, {one, u, u}) && pass) {
      pass = false;
      detail = "u=" + el(u);
    }
  rep.add("identity-arrows", pass, detail);

  pass = true;
  detail.clear();
  for (const QHom& s : arr)
    for (const QHom& t : arr) {
      if (s.cod != t.dom) continue;
      if (!isQHom(inst, composeQ(inst, t, s)) && pass) {
        pass = false;
        detail = "s=" + el(s.s) + " t=" + el(t.s);
      }
    }
  rep.add("composition-closure", pass, detail);

  pass = true;
  detail.clear();
  for (const QHom& s : arr)
    for (const QHom& t : arr)
      if (!isQHom(inst, vTensorArr(inst, s, t)) && pass) {
        pass = false;
        detail = "s=" + el(s.s) + " t=" + el(t.s);
      }
  rep.add("arrow-tensor-closure", pass, detail);

  pass = true;
  detail.clear();
  for (const QHom& s : arr)
    for (const QHom& t : arr)
      for (const QHom& r : arr) {
        QHom l = vTensorArr(inst, vTensorArr(inst, s, t), r);
        QHom rr = vTensorArr(inst, s, vTensorArr(inst, t, r));
        if (!(l == rr) && pass) {
          pass = false;
          detail = "s=" + el(s.s) + " t=" + el(t.s) + " r=" + el(r.s);
        }
      }
  rep.add("arrow-associativity", pass, detail);

  const QHom idEta{one, inst.eta, inst.eta};
  pass = true;
  detail.clear();
  for (const QHom& t : arr) {
    if (!(vTensorArr(inst, idEta, t) == t) || !(vTensorArr(inst, t, idEta) == t)) {
      if (pass) detail = "t=" + el(t.s);
      pass = false;
    }
  }
  rep.add("arrow-unit-laws", pass, detail);

  pass = true;
  detail.clear();
  for (Elem u : obj)
    for (Elem v : obj) {
      QHom l = vTensorArr(inst, {one, u, u}, {one, v, v});
      if (!(l == QHom{one, vTensorObj(inst, u, v), vTensorObj(inst, u, v)}) && pass) {
        pass = false;
        detail = "u=" + el(u) + " v=" + el(v);
      }
    }
  rep.add("tensor-of-identities", pass, detail);

  pass = true;
  detail.clear();
  for (const QHom& s : arr)
    for (const QHom& s2 : arr) {
      if (s.cod != s2.dom) continue;
      for (const QHom& t : arr)
        for (const QHom& t2 : arr) {
          if (t.cod != t2.dom) continue;
          QHom l = vTensorArr(inst, composeQ(inst, s2, s), composeQ(inst, t2, t));
          QHom r = composeQ(inst, vTensorArr(inst, s2, t2), vTensorArr(inst, s, t));
          if (!(l == r) && pass) {
            pass = false;
            detail = "s=" + el(s.s) + " s2=" + el(s2.s) + " t=" + el(t.s) +
                     " t2=" + el(t2.s);
          }
        }
    }
  rep.add("tensor-interchange", pass, detail);

  rep.add("delta-object", isQCoalgebra(inst, inst.delta),
          "delta fails the object equations");

  pass = true;
  detail.clear();
  for (Elem u : obj)
    if (!isQHom(inst, {u, u, inst.delta}) && pass) {
      pass = false;
      detail = "u=" + el(u);
    }
  rep.add("objects-are-arrows-to-delta", pass, detail);

  pass = true;
  detail.clear();
  for (Elem u : obj) {
    std::vector<Elem> image;
    for (Elem a = 0; a < inst.monoid.size(); ++a) image.push_back(inst.mul(inst.q(a), u));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (homSetQ(inst, u, inst.delta) != image && pass) {
      pass = false;
      detail = "u=" + el(u);
    }
  }
  rep.add("hom-to-delta-is-Q(A)-u", pass, detail);

  pass = true;
  detail.clear();
  for (const QHom& s : arr)
    for (const QHom& t : arr) {
      if (s.dom != t.dom || s.cod != t.cod) continue;
      if (inst.mul(s.cod, s.s) == inst.mul(t.cod, t.s) && s.s != t.s && pass) {
        pass = false;
        detail = "s=" + el(s.s) + " t=" + el(t.s) + " v=" + el(s.cod);
      }
    }
  rep.add("faithful-at-objects", pass, detail);

  return rep;
}

CheckReport comonoidCheck(const SmmInstance& inst) {
  CheckReport rep;
  const Elem one = inst.monoid.unit();
  const Elem mumu = hTensorObj(inst, inst.mu, inst.mu);
  const THom dlt{inst.delta, inst.mu, mumu};
  const THom cnt{inst.eps, inst.mu, inst.eps};
  const THom idMu{one, inst.mu, inst.mu};

  rep.add("mu-object", isTAlgebra(inst, inst.mu), "object equations fail");
  rep.add("delta-arrow", isTHom(inst, dlt), "delta : mu -> mu(x)mu fails");
  rep.add("eps-arrow", isTHom(inst, cnt), "eps : mu -> eps fails");

  // the two tensor reductions used by the comonoid laws
  bool pass = true;
  std::string detail;
  for (const THom& t : allTHoms(inst, enumTAlgebras(inst))) {
    if (hTensorArr(inst, idMu, t).t != t.t && pass) {
      pass = false;
      detail = "left t=" + el(t.t);
    }
    if (hTensorArr(inst, t, idMu).t != inst.q(t.t) && pass) {
      pass = false;
      detail = "right t=" + el(t.t);
    }
  }
  rep.add("identity-tensor-reductions", pass, detail);

  THom l = composeT(inst, hTensorArr(inst, idMu, dlt), dlt);
  THom r = composeT(inst, hTensorArr(inst, dlt, idMu), dlt);
  rep.add("coassociativity", l.t == r.t && l.dom == r.dom && l.cod == r.cod,
          "(1(x)delta)delta = " + el(l.t) + " but (delta(x)1)delta = " + el(r.t));

  l = composeT(inst, hTensorArr(inst, idMu, cnt), dlt);
  rep.add("counit-left", l == idMu, "(1(x)eps)delta = " + el(l.t));
  l = composeT(inst, hTensorArr(inst, cnt, idMu), dlt);
  rep.add("counit-right", l == idMu, "(eps(x)1)delta = " + el(l.t));
  return rep;
}

CheckReport monoidCheck(const SmmInstance& inst) {
  CheckReport rep;
  const Elem one = inst.monoid.unit();
  const Elem dd = vTensorObj(inst, inst.delta, inst.delta);
  const QHom mul{inst.mu, dd, inst.delta};
  const QHom unit{inst.eta, inst.eta, inst.delta};
  const QHom idDelta{one, inst.delta, inst.delta};

  rep.add("delta-object", isQCoalgebra(inst, inst.delta), "object equations fail");
  rep.add("mu-arrow", isQHom(inst, mul), "mu : delta(x)delta -> delta fails");
  rep.add("eta-arrow", isQHom(inst, unit), "eta : eta -> delta fails");

  bool pass = true;
  std::string detail;
  for (const QHom& t : allQHoms(inst, enumQCoalgebras(inst))) {
    if (vTensorArr(inst, idDelta, t).s != t.s && pass) {
      pass = false;
      detail = "left t=" + el(t.s);
    }
    if (vTensorArr(inst, t, idDelta).s != inst.t(t.s) && pass) {
      pass = false;
      detail = "right t=" + el(t.s);
    }
  }
  rep.add("identity-tensor-reductions", pass, detail);

  QHom l = composeQ(inst, mul, vTensorArr(inst, mul, idDelta));
  QHom r = composeQ(inst, mul, vTensorArr(inst, idDelta, mul));
  rep.add("associativity", l.s == r.s && l.dom == r.dom && l.cod == r.cod,
          "mu(mu(x)1) = " + el(l.s) + " but mu(1(x)mu) = " + el(r.s));

  l = composeQ(inst, mul, vTensorArr(inst, unit, idDelta));
  rep.add("unit-left", l == idDelta, "mu(eta(x)1) = " + el(l.s));
  l = composeQ(inst, mul, vTensorArr(inst, idDelta, unit));
  rep.add("unit-right", l == idDelta, "mu(1(x)eta) = " + el(l.s));
  return rep;
}

Bimodule forgetfulBimodule(const SmmInstance& inst, Elem x) {
  Bimodule b;
  b.x = x;
  const int n = inst.monoid.size();
  for (Elem a = 0; a < n; ++a) b.carrier.push_back(inst.mul(x, inst.t(a)));
  std::sort(b.carrier.begin(), b.carrier.end());
  b.carrier.erase(std::unique(b.carrier.begin(), b.carrier.end()), b.carrier.end());
  auto idx = [&](Elem e) {
    auto it = std::lower_bound(b.carrier.begin(), b.carrier.end(), e);
    assert(it != b.carrier.end() && *it == e);  // actions keep the carrier closed
    return static_cast<int>(it - b.carrier.begin());
  };
  b.lact.assign(n, std::vector<int>(b.carrier.size()));
  b.ract.assign(b.carrier.size(), std::vector<int>(n));
  for (Elem a = 0; a < n; ++a)
    for (std::size_t i = 0; i < b.carrier.size(); ++i) {
      b.lact[a][i] = idx(inst.mul(b.carrier[i], inst.s(a)));
      b.ract[i][a] = idx(inst.mul(b.carrier[i], inst.t(a)));
    }
  return b;
}

CheckReport phi2Check(const SmmInstance& inst) {
  CheckReport rep;
  const int n = inst.monoid.size();

  // well-definedness of 1 -> eps on the regular bimodule: a.eps = eps.a
  bool pass = true;
  std::string detail;
  for (Elem a = 0; a < n; ++a)
    if (inst.mul(inst.eps, inst.s(a)) != inst.mul(inst.eps, inst.t(a)) && pass) {
      pass = false;
      detail = "a=" + el(a);
    }
  rep.add("identity-constraint-balanced", pass, detail);

  // a -> eps*T(a) is a bijection A -> eps*T(A) with inverse r -> r*eta
  pass = true;
  detail.clear();
  const Bimodule epsMod = forgetfulBimodule(inst, inst.eps);
  if (epsMod.carrier.size() != static_cast<std::size_t>(n)) {
    pass = false;
    detail = "carrier has " + std::to_string(epsMod.carrier.size()) + " elements";
  }
  for (Elem a = 0; a < n && pass; ++a)
    if (inst.mul(inst.mul(inst.eps, inst.t(a)), inst.eta) != a) {
      pass = false;
      detail = "a=" + el(a);
    }
  for (Elem r : epsMod.carrier)
    if (pass && inst.mul(inst.eps, inst.t(inst.mul(r, inst.eta))) != r) {
      pass = false;
      detail = "r=" + el(r);
    }
  rep.add("identity-constraint-bijective", pass, detail);

  for (Elem x : enumTAlgebras(inst))
    for (Elem y : enumTAlgebras(inst)) {
      const std::string at = " at x=" + el(x) + " y=" + el(y);
      const Bimodule X = forgetfulBimodule(inst, x);
      const Bimodule Y = forgetfulBimodule(inst, y);
      const Elem xy = hTensorObj(inst, x, y);
      const Bimodule Z = forgetfulBimodule(inst, xy);
      const PairQuotient q = tensorOverMiddle(
          static_cast<int>(X.carrier.size()), n, static_cast<int>(Y.carrier.size()),
          [&](int i, int a) { return X.ract[i][a]; },
          [&](int a, int j) { return Y.lact[a][j]; });

      auto phi = [&](int i, int j) {
        return inst.mul(inst.mul(Y.carrier[j], inst.q(X.carrier[i])), inst.delta);
      };

      pass = true;
      detail.clear();
      std::vector<Elem> classVal(q.classes, -1);
      for (std::size_t i = 0; i < X.carrier.size(); ++i)
        for (std::size_t j = 0; j < Y.carrier.size(); ++j) {
          const int c = q.classOf(static_cast<int>(i), static_cast<int>(j));
          const Elem v = phi(static_cast<int>(i), static_cast<int>(j));
          if (classVal[c] < 0) classVal[c] = v;
          if (classVal[c] != v && pass) {
            pass = false;
            detail = "s=" + el(X.carrier[i]) + " t=" + el(Y.carrier[j]) + at;
          }
        }
      rep.add("phi2-well-defined" + at, pass, detail);

      pass = true;
      detail.clear();
      std::vector<Elem> sorted(classVal);
      std::sort(sorted.begin(), sorted.end());
      if (std::unique(sorted.begin(), sorted.end()) != sorted.end()) {
        pass = false;
        detail = "not injective";
      } else if (sorted != Z.carrier) {
        pass = false;
        detail = "image differs from the target carrier";
      }
      rep.add("phi2-bijective" + at, pass, detail);

      // displayed inverse r -> x (x) y*T(r*eta)
      pass = true;
      detail.clear();
      auto xIdx = static_cast<int>(
          std::lower_bound(X.carrier.begin(), X.carrier.end(), x) - X.carrier.begin());
      for (Elem r : Z.carrier) {
        const Elem t = inst.mul(y, inst.t(inst.mul(r, inst.eta)));
        auto tIdx = static_cast<int>(
            std::lower_bound(Y.carrier.begin(), Y.carrier.end(), t) - Y.carrier.begin());
        if (phi(xIdx, tIdx) != r && pass) {
          pass = false;
          detail = "r=" + el(r) + at;
        }
        if (pass && classVal[q.classOf(xIdx, tIdx)] != r) {
          pass = false;
          detail = "class mismatch r=" + el(r) + at;
        }
      }
      rep.add("phi2-inverse" + at, pass, detail);
    }
  return rep;
}

std::vector<SimplicialLevel> simplicialObject(int degree) {
  std::vector<SimplicialLevel> levels;
  const Word mu = mkWord({mkLetter(AtomKind::Mu)});
  Word obj = mu;
  for (int k = 0; k <= degree; ++k) {
    SimplicialLevel lv;
    lv.object = obj;
    for (int i = 0; i <= k; ++i) {
      std::string wrap(static_cast<std::size_t>(i), 'Q');
      lv.faces.push_back(mkWord({mkLetter(AtomKind::Eps, "", wrap)}));
      lv.degeneracies.push_back(mkWord({mkLetter(AtomKind::Delta, "", wrap)}));
    }
    levels.push_back(lv);
    obj = hTensorObjWord(obj, mu);
  }
  return levels;
}

CheckReport simplicialCheck(const SmmInstance& inst, int degree) {
  CheckReport rep;
  const Elem one = inst.monoid.unit();
  const std::vector<SimplicialLevel> levels = simplicialObject(degree);

  // objects: X_k = mu^{(x)(k+1)}, with X_{-1} = eps as augmentation target
  // and one extra level so top degeneracies have a codomain
  std::vector<Elem> X(static_cast<std::size_t>(degree) + 2);
  X[0] = inst.mu;
  for (int k = 1; k <= degree + 1; ++k) X[k] = hTensorObj(inst, X[k - 1], inst.mu);

  bool pass = true;
  std::string detail;
  for (int k = 0; k <= degree; ++k) {
    if (evalWord(levels[k].object, inst) != X[k] && pass) {
      pass = false;
      detail = "k=" + std::to_string(k);
    }
    if (!isTAlgebra(inst, X[k]) && pass) {
      pass = false;
      detail = "k=" + std::to_string(k) + " not an object";
    }
  }
  rep.add("objects", pass, detail);

  pass = true;
  detail.clear();
  for (int k = 0; k <= degree; ++k)
    for (int i = 0; i <= k; ++i) {
      const Elem d = evalWord(levels[k].faces[i], inst);
      if (d != qPow(inst, i, inst.eps) && pass) {
        pass = false;
        detail = "face value k=" + std::to_string(k) + " i=" + std::to_string(i);
      }
      const Elem target = k == 0 ? inst.eps : X[k - 1];
      if (!isTHom(inst, {d, X[k], target}) && pass) {
        pass = false;
        detail = "k=" + std::to_string(k) + " i=" + std::to_string(i);
      }
    }
  rep.add("faces-are-arrows", pass, detail);

  pass = true;
  detail.clear();
  for (int k = 0; k <= degree; ++k)
    for (int j = 0; j <= k; ++j) {
      const Elem s = evalWord(levels[k].degeneracies[j], inst);
      if (s != qPow(inst, j, inst.delta) && pass) {
        pass = false;
        detail = "degeneracy value k=" + std::to_string(k) + " j=" + std::to_string(j);
      }
      if (!isTHom(inst, {s, X[k], X[k + 1]}) && pass) {
        pass = false;
        detail = "k=" + std::to_string(k) + " j=" + std::to_string(j);
      }
    }
  rep.add("degeneracies-are-arrows", pass, detail);

  auto d = [&](int i) { return qPow(inst, i, inst.eps); };
  auto s = [&](int j) { return qPow(inst, j, inst.delta); };

  pass = true;
  detail.clear();
  for (int j = 0; j <= degree; ++j)
    for (int i = 0; i < j; ++i)
      if (inst.mul(d(i), d(j)) != inst.mul(d(j - 1), d(i)) && pass) {
        pass = false;
        detail = "i=" + std::to_string(i) + " j=" + std::to_string(j);
      }
  rep.add("face-face", pass, detail);

  pass = true;
  detail.clear();
  for (int j = 0; j <= degree; ++j)
    for (int i = 0; i <= j; ++i)
      if (inst.mul(s(i), s(j)) != inst.mul(s(j + 1), s(i)) && pass) {
        pass = false;
        detail = "i=" + std::to_string(i) + " j=" + std::to_string(j);
      }
  rep.add("degeneracy-degeneracy", pass, detail);

  pass = true;
  detail.clear();
  for (int j = 0; j <= degree; ++j)
    for (int i = 0; i <= degree + 1; ++i) {
      const Elem lhs = inst.mul(d(i), s(j));
      Elem rhs;
      if (i == j || i == j + 1)
        rhs = one;
      else if (i < j)
        rhs = inst.mul(s(j - 1), d(i));
      else
        rhs = inst.mul(s(j), d(i - 1));
      if (lhs != rhs && pass) {
        pass = false;
        detail = "i=" + std::to_string(i) + " j=" + std::to_string(j);
      }
    }
  rep.add("face-degeneracy", pass, detail);

  return rep;
}

CheckReport modcatSuite(const SmmInstance& inst) {
  CheckReport rep;
  rep.merge(strictMonoidalCheckT(inst), "hT.");
  rep.merge(strictMonoidalCheckQ(inst), "vQ.");
  rep.merge(comonoidCheck(inst), "comonoid.");
  rep.merge(monoidCheck(inst), "monoid.");
  rep.merge(phi2Check(inst), "phi2.");
  rep.merge(simplicialCheck(inst, 3), "simplicial.");
  return rep;
}

}  // namespace smm
