#pragma once

#include <vector>

#include "arr/hilbert.hpp"

namespace arr {

// Ideal arithmetic built on the module engine.  All ideals are given by
// generator lists in a fixed ring; outputs are reduced Groebner bases.

template <class K>
std::vector<Poly<K>> reducedIdealBasis(const RingPtr& ring, const std::vector<Poly<K>>& gens,
                                       bool graded = false) {
  GBResult<K> gb = groebnerIdeal(ring, gens, GBOptions{false, graded});
  std::vector<Poly<K>> out;
  for (auto& v : gb.gb) out.push_back(v[0]);
  return out;
}

template <class K>
bool idealEqual(const RingPtr& ring, const std::vector<Poly<K>>& a, const std::vector<Poly<K>>& b,
                bool graded = false) {
  auto ga = reducedIdealBasis(ring, a, graded);
  auto gbv = reducedIdealBasis(ring, b, graded);
  if (ga.size() != gbv.size()) return false;
  for (size_t i = 0; i < ga.size(); ++i)
    if (ga[i] != gbv[i]) return false;
  return true;
}

// (I : f) via syzygies of [gens(I), f]: the f-coordinates of the syzygies.
template <class K>
std::vector<Poly<K>> idealQuotientByPoly(const RingPtr& ring, const std::vector<Poly<K>>& gens,
                                         const Poly<K>& f, bool graded = false) {
  if (f.isZero()) throw std::invalid_argument("idealQuotient: zero divisor poly");
  std::vector<ModVec<K>> cols;
  std::vector<Poly<K>> nz;
  for (auto& g : gens)
    if (!g.isZero()) nz.push_back(g);
  for (auto& g : nz) cols.push_back(ModVec<K>{g});
  cols.push_back(ModVec<K>{f});
  FreeMod F{ring, {0}};
  GBResult<K> gb = groebner(F, cols, ModOrderMode::TOP, GBOptions{true, graded});
  std::vector<Poly<K>> out;
  for (auto& s : gb.syz) {
    const Poly<K>& h = s.back();
    if (!h.isZero()) out.push_back(h);
  }
  return reducedIdealBasis(ring, out, graded);
}

// elimination: returns generators of I intersected with the subring excluding
// the first nelim variables (which must come first in the ring)
template <class K>
std::vector<Poly<K>> eliminate(const RingPtr& ring, const std::vector<Poly<K>>& gens, int nelim,
                               const RingPtr& target, const std::vector<int>& keepMap) {
  RingPtr elimRing = withOrder(ring, MonOrder{Order::Elim, nelim});
  std::vector<Poly<K>> g2;
  for (auto& g : gens) g2.push_back(g.reordered(elimRing));
  auto gb = reducedIdealBasis(elimRing, g2, false);
  std::vector<Poly<K>> out;
  for (auto& g : gb) {
    bool pure = true;
    for (auto& tm : g.terms())
      for (int i = 0; i < nelim && pure; ++i)
        if (tm.first.e[static_cast<size_t>(i)]) pure = false;
    if (!pure) continue;
    // push down to the target ring
    Poly<K> h(target);
    for (auto& tm : g.terms()) {
      Monomial m(target->nvars());
      for (size_t i = static_cast<size_t>(nelim); i < ring->nvars(); ++i) {
        m.e[static_cast<size_t>(keepMap[i - static_cast<size_t>(nelim)])] =
            static_cast<std::uint16_t>(tm.first.e[i]);
      }
      m.deg = tm.first.deg;
      h += Poly<K>::term(target, m, tm.second);
    }
    out.push_back(h);
  }
  return out;
}

// intersection of two ideals via  I cap J = (t I + (1-t) J) cap S
template <class K>
std::vector<Poly<K>> idealIntersect(const RingPtr& ring, const std::vector<Poly<K>>& a,
                                    const std::vector<Poly<K>>& b) {
  std::vector<std::string> names;
  names.push_back("@t");
  for (auto& n : ring->names) names.push_back(n);
  RingPtr ext = makeRing(names, MonOrder{Order::Elim, 1});
  std::vector<int> up(ring->nvars());
  for (size_t i = 0; i < ring->nvars(); ++i) up[i] = static_cast<int>(i) + 1;
  Poly<K> t = Poly<K>::variable(ext, 0);
  Poly<K> oneMinusT = Poly<K>(ext, K(1)) - t;
  std::vector<Poly<K>> gens;
  for (auto& f : a) gens.push_back(t * f.renamed(ext, up));
  for (auto& f : b) gens.push_back(oneMinusT * f.renamed(ext, up));
  std::vector<int> keep(ring->nvars());
  for (size_t i = 0; i < ring->nvars(); ++i) keep[i] = static_cast<int>(i);
  return eliminate(ext, gens, 1, ring, keep);
}

template <class K>
std::vector<Poly<K>> idealQuotient(const RingPtr& ring, const std::vector<Poly<K>>& I,
                                   const std::vector<Poly<K>>& J, bool graded = false) {
  bool first = true;
  std::vector<Poly<K>> acc;
  for (auto& f : J) {
    if (f.isZero()) continue;
    auto q = idealQuotientByPoly(ring, I, f, graded);
    acc = first ? q : idealIntersect(ring, acc, q);
    first = false;
  }
  if (first) throw std::invalid_argument("idealQuotient: zero ideal J");
  return reducedIdealBasis(ring, acc, graded);
}

// saturation (I : J^infty) by iterating quotients until stable
template <class K>
std::vector<Poly<K>> saturate(const RingPtr& ring, std::vector<Poly<K>> I,
                              const std::vector<Poly<K>>& J, bool graded = false) {
  I = reducedIdealBasis(ring, I, graded);
  while (true) {
    auto Q = idealQuotient(ring, I, J, graded);
    if (idealEqual(ring, I, Q, graded)) return I;
    I = Q;
  }
}

// Rabinowitsch: f in radical(I)?
template <class K>
bool inRadical(const RingPtr& ring, const std::vector<Poly<K>>& I, const Poly<K>& f) {
  std::vector<std::string> names;
  names.push_back("@z");
  for (auto& n : ring->names) names.push_back(n);
  RingPtr ext = makeRing(names, MonOrder{Order::GrevLex});
  std::vector<int> up(ring->nvars());
  for (size_t i = 0; i < ring->nvars(); ++i) up[i] = static_cast<int>(i) + 1;
  std::vector<Poly<K>> gens;
  for (auto& g : I) gens.push_back(g.renamed(ext, up));
  Poly<K> z = Poly<K>::variable(ext, 0);
  gens.push_back(Poly<K>(ext, K(1)) - z * f.renamed(ext, up));
  auto gb = reducedIdealBasis(ext, gens, false);
  return gb.size() == 1 && gb[0].isConstant() && !gb[0].isZero();
}

// Krull dimension of S/I
template <class K>
int idealDimension(const RingPtr& ring, const std::vector<Poly<K>>& I, bool graded = false) {
  auto hs = hilbertSeriesOfIdealQuotient(ring, I);
  return dimensionDegree(hs).dim;
}

}  // namespace arr
