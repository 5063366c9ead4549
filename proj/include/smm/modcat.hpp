#pragma once
// The category of algebra objects over T and the dual category of coalgebra
// objects over Q for a finite instance: objects and arrows are plain elements
// tagged by role, tensor products, the comonoid on mu and the monoid on delta,
// the represented bimodules with their monoidal constraints, and the
// simplicial object living among the tensor powers of mu.

#include <string>
#include <vector>

#include "smm/finmon.hpp"
#include "smm/quotient.hpp"
#include "smm/word.hpp"

namespace smm {

// one named line of a structure check; detail carries a witness on failure
struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;

  bool ok() const;
  void add(const std::string& name, bool pass, const std::string& detail = "");
  void merge(const CheckReport& other, const std::string& prefix = "");
};

// arrow t : dom -> cod, valid when t*dom = cod*T(t)
struct THom {
  Elem t = 0;
  Elem dom = 0;
  Elem cod = 0;
  bool operator==(const THom&) const = default;
};

// arrow s : dom -> cod, valid when Q(s)*dom = cod*s
struct QHom {
  Elem s = 0;
  Elem dom = 0;
  Elem cod = 0;
  bool operator==(const QHom&) const = default;
};

bool isTAlgebra(const SmmInstance& inst, Elem x);  // x*mu = x*T(x) and x*eta = 1
bool isTHom(const SmmInstance& inst, const THom& h);
bool isQCoalgebra(const SmmInstance& inst, Elem u);  // Q(u)*u = delta*u and eps*u = 1
bool isQHom(const SmmInstance& inst, const QHom& h);

std::vector<Elem> enumTAlgebras(const SmmInstance& inst);
std::vector<Elem> enumQCoalgebras(const SmmInstance& inst);
std::vector<Elem> homSetT(const SmmInstance& inst, Elem x, Elem y);
std::vector<Elem> homSetQ(const SmmInstance& inst, Elem u, Elem v);

// composition "t after s" is multiplication in A, identities are the unit
THom composeT(const SmmInstance& inst, const THom& t, const THom& s);
QHom composeQ(const SmmInstance& inst, const QHom& t, const QHom& s);

Elem hTensorObj(const SmmInstance& inst, Elem x, Elem y);  // y*Q(x)*delta
THom hTensorArr(const SmmInstance& inst, const THom& s, const THom& t);
Elem vTensorObj(const SmmInstance& inst, Elem u, Elem v);  // mu*T(v)*u
QHom vTensorArr(const SmmInstance& inst, const QHom& s, const QHom& t);

// symbolic forms for the free case
Word hTensorObjWord(const Word& x, const Word& y);
Word vTensorObjWord(const Word& u, const Word& v);

// a pair of mutually inverse arrows exists between the two objects
bool isIsoT(const SmmInstance& inst, Elem x, Elem y);

// monoidal category laws, exhaustively over all objects and arrows
CheckReport strictMonoidalCheckT(const SmmInstance& inst);
CheckReport strictMonoidalCheckQ(const SmmInstance& inst);

// <mu, delta, eps> is a comonoid among the algebra objects
CheckReport comonoidCheck(const SmmInstance& inst);
// <delta, mu, eta> is a monoid among the coalgebra objects
CheckReport monoidCheck(const SmmInstance& inst);

// the represented module x*T(A) with actions a1.t.a2 = t*S(a1)*T(a2)
struct Bimodule {
  Elem x = 0;
  std::vector<Elem> carrier;              // sorted, distinct elements of A
  std::vector<std::vector<int>> lact;     // [a][i] -> carrier index of a.carrier[i]
  std::vector<std::vector<int>> ract;     // [i][a] -> carrier index of carrier[i].a
};
Bimodule forgetfulBimodule(const SmmInstance& inst, Elem x);

// the functor x -> x*T(A) is strong monoidal: s (x) t -> t*Q(s)*delta is a
// well-defined bijection from the tensor over A onto (x (x) y)*T(A) with the
// displayed inverse, and a -> eps*T(a) is a bijection A -> eps*T(A)
CheckReport phi2Check(const SmmInstance& inst);

// level k: object mu^{(x)(k+1)}, k+1 faces Q^i(eps) down a level (level 0's
// single face is the augmentation onto the unit object eps) and k+1
// degeneracies Q^j(delta) up a level
struct SimplicialLevel {
  Word object;
  std::vector<Word> faces;
  std::vector<Word> degeneracies;
};
std::vector<SimplicialLevel> simplicialObject(int degree);
CheckReport simplicialCheck(const SmmInstance& inst, int degree);

// every check above bundled, prefixed by its group name
CheckReport modcatSuite(const SmmInstance& inst);

}  // namespace smm
