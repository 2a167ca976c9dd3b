#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "arr/poly.hpp"

namespace arr {

// Mora's tangent-cone algorithm: standard bases in the local ring at the
// origin w.r.t. the anti-graded order LocalDS.  Used for Milnor/Tjurina
// numbers of plane curve singularities.

template <class K>
int ecart(const Poly<K>& f) {
  return f.maxDegree() - f.leadMonomial().deg;
}

// Mora weak normal form; the reducer set grows by intermediate results.
// Leads at or past degCap are discarded as irrelevant for the caller (which
// only consumes leading terms below its saturation degree).
template <class K>
Poly<K> moraNormalForm(Poly<K> h, std::vector<Poly<K>> T, int degCap) {
  while (!h.isZero()) {
    if (h.leadMonomial().deg >= degCap) return Poly<K>(h.ring());
    int best = -1, bestEcart = 0;
    for (size_t i = 0; i < T.size(); ++i) {
      if (T[i].isZero()) continue;
      if (!T[i].leadMonomial().divides(h.leadMonomial())) continue;
      int e = ecart(T[i]);
      if (best < 0 || e < bestEcart) { best = static_cast<int>(i); bestEcart = e; }
    }
    if (best < 0) return h;
    if (bestEcart > ecart(h)) T.push_back(h);
    const Poly<K>& g = T[static_cast<size_t>(best)];
    Monomial q = h.leadMonomial().quotientBy(g.leadMonomial());
    K f = h.leadCoeff() / g.leadCoeff();
    h -= g.timesTerm(q, f);
  }
  return h;
}

struct LocalBasisResult {
  bool capped = false;  // cap reached before the leading terms saturated
};

namespace detail {
// smallest D <= cap such that every degree-D monomial is divisible by some
// leading term; cap+1 when none
inline int saturationDegree(const std::vector<Monomial>& lts, size_t nvars, int cap) {
  for (int d = 0; d <= cap; ++d) {
    bool covered = true;
    // iterate degree-d monomials (nvars is small here)
    std::vector<int> e(nvars, 0);
    std::function<bool(size_t, int)> walk = [&](size_t pos, int rem) -> bool {
      if (pos == nvars - 1) {
        e[pos] = rem;
        Monomial m(nvars);
        for (size_t i = 0; i < nvars; ++i) m.e[i] = static_cast<std::uint16_t>(e[i]);
        m.deg = d;
        for (auto& l : lts)
          if (l.divides(m)) return true;
        return false;
      }
      for (int k = 0; k <= rem; ++k) {
        e[pos] = k;
        if (!walk(pos + 1, rem - k)) return false;
      }
      return true;
    };
    if (nvars == 0) return 0;
    covered = walk(0, d);
    if (covered) return d;
  }
  return cap + 1;
}
}  // namespace detail

// Standard basis of the ideal generated by gens in the local order ring,
// complete below the saturation degree of its leading-term ideal (which is
// all the local dimension counts need).
template <class K>
std::vector<Poly<K>> localStandardBasis(const RingPtr& localRing,
                                        std::vector<Poly<K>> gens, int degCap,
                                        LocalBasisResult* info = nullptr) {
  std::vector<Poly<K>> G;
  for (auto& g : gens)
    if (!g.isZero()) G.push_back(g.monic());
  auto satDeg = [&]() {
    std::vector<Monomial> lts;
    for (auto& g : G) lts.push_back(g.leadMonomial());
    return detail::saturationDegree(lts, localRing->nvars(), degCap);
  };
  int bound = std::min(satDeg(), degCap + 1);
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = i + 1; j < G.size(); ++j) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    Monomial l = Monomial::lcm(G[i].leadMonomial(), G[j].leadMonomial());
    if (l.deg >= bound) continue;  // cannot contribute a new lead below bound
    Poly<K> s = G[i].timesTerm(l.quotientBy(G[i].leadMonomial()), K(1)) -
                G[j].timesTerm(l.quotientBy(G[j].leadMonomial()), K(1));
    Poly<K> h = moraNormalForm(s, G, bound);
    if (h.isZero()) continue;
    h = h.monic();
    for (size_t k = 0; k < G.size(); ++k) pairs.emplace_back(k, G.size());
    G.push_back(h);
    bound = std::min(satDeg(), degCap + 1);
  }
  if (info) info->capped = (bound > degCap);
  return G;
}

// dim_K of the local quotient ring from the standard basis leading terms;
// nullopt = infinite (or cap exceeded)
template <class K>
std::optional<long> localQuotientDim(const RingPtr& localRing, const std::vector<Poly<K>>& gens,
                                     int degCap = 30) {
  LocalBasisResult info;
  auto G = localStandardBasis<K>(localRing, gens, degCap, &info);
  std::vector<Monomial> lts;
  for (auto& g : G) lts.push_back(g.leadMonomial());
  // count monomials not divisible by any leading term, by increasing degree
  size_t nv = localRing->nvars();
  std::vector<Monomial> layer{Monomial(nv)};
  long count = 0;
  for (int d = 0; d <= degCap + 1; ++d) {
    std::vector<Monomial> next;
    long live = 0;
    for (auto& m : layer) {
      bool standard = true;
      for (auto& l : lts)
        if (l.divides(m)) { standard = false; break; }
      if (!standard) continue;
      ++live;
      ++count;
      for (size_t i = 0; i < nv; ++i) {
        Monomial m2 = m;
        m2.e[i] += 1;
        m2.deg += 1;
        // dedupe: only extend by variables <= first nonzero to avoid repeats
        next.push_back(m2);
      }
    }
    if (live == 0) return info.capped ? std::nullopt : std::optional<long>(count);
    // dedupe next layer
    std::sort(next.begin(), next.end(), [](const Monomial& a, const Monomial& b) {
      return a.e < b.e;
    });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    layer = std::move(next);
  }
  return std::nullopt;  // still alive past the cap: infinite locally
}

struct LocalAlgebraReport {
  bool finite = false;
  long milnor = -1;   // -1 encodes infinity
  long tjurina = -1;
  bool quasihomogeneous = false;
};

// Milnor/Tjurina numbers of f at the origin of the local ring (2 variables).
template <class K>
LocalAlgebraReport localInvariantsAtOrigin(const RingPtr& localRing, const Poly<K>& f,
                                           int degCap = 30) {
  std::vector<Poly<K>> jac;
  for (size_t i = 0; i < localRing->nvars(); ++i) jac.push_back(f.derivative(i));
  bool singular = true;
  for (auto& d : jac)
    if (!d.isZero() && d.leadMonomial().deg == 0) singular = false;
  if (!f.isZero() && !f.constantTerm().isZero())
    throw std::invalid_argument("localInvariants: point not on the curve");
  if (!singular) throw std::invalid_argument("localInvariants: smooth point");

  LocalAlgebraReport rep;
  auto mu = localQuotientDim<K>(localRing, jac, degCap);
  std::vector<Poly<K>> jf = jac;
  jf.push_back(f);
  auto tau = localQuotientDim<K>(localRing, jf, degCap);
  if (mu && tau) {
    rep.finite = true;
    rep.milnor = *mu;
    rep.tjurina = *tau;
    rep.quasihomogeneous = (*mu == *tau);
  }
  return rep;
}

}  // namespace arr
