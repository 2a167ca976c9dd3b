#pragma once

// Test-only independent oracles: brute-force routes kept deliberately separate
// from the library implementations they check.

#include <map>
#include <vector>

#include "arr/matrix.hpp"
#include "arr/poly.hpp"

namespace arr::oracle {

// all monomials of total degree d in nvars variables
inline void monomialsOfDegreeRec(int nvars, int d, int pos, Monomial& cur,
                                 std::vector<Monomial>& out) {
  if (pos == nvars - 1) {
    cur.e[static_cast<size_t>(pos)] = static_cast<std::uint16_t>(d);
    cur.deg += d;
    out.push_back(cur);
    cur.deg -= d;
    cur.e[static_cast<size_t>(pos)] = 0;
    return;
  }
  for (int k = 0; k <= d; ++k) {
    cur.e[static_cast<size_t>(pos)] = static_cast<std::uint16_t>(k);
    cur.deg += k;
    monomialsOfDegreeRec(nvars, d - k, pos + 1, cur, out);
    cur.deg -= k;
    cur.e[static_cast<size_t>(pos)] = 0;
  }
}

inline std::vector<Monomial> monomialsOfDegree(int nvars, int d) {
  std::vector<Monomial> out;
  Monomial cur(static_cast<size_t>(nvars));
  monomialsOfDegreeRec(nvars, d, 0, cur, out);
  return out;
}

// dim_K (S/I)_d by dense linear algebra on the degree-d monomial basis
template <class K>
long quotientDimByLinearAlgebra(const RingPtr& ring, const std::vector<Poly<K>>& gens, int d) {
  auto basis = monomialsOfDegree(static_cast<int>(ring->nvars()), d);
  std::map<std::vector<std::uint16_t>, int> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i].e] = static_cast<int>(i);

  std::vector<Col<K>> span;
  for (auto& g : gens) {
    if (g.isZero()) continue;
    int dg = g.degreeHomog();
    if (dg > d) continue;
    for (auto& m : monomialsOfDegree(static_cast<int>(ring->nvars()), d - dg)) {
      Col<K> v = Col<K>::Constant(static_cast<int>(basis.size()), K(0));
      for (auto& tm : g.terms()) v(index.at((m * tm.first).e)) = tm.second;
      span.push_back(v);
    }
  }
  if (span.empty()) return static_cast<long>(basis.size());
  Mat<K> M(static_cast<int>(basis.size()), static_cast<int>(span.size()));
  for (size_t c = 0; c < span.size(); ++c) M.col(static_cast<int>(c)) = span[c];
  return static_cast<long>(basis.size()) - rank(M);
}

// local quotient dimension by truncation: dim K[x]/(I + m^N) for growing N
// until stable (the spec's truncated linear-algebra oracle)
template <class K>
long localDimByTruncation(const RingPtr& ring, const std::vector<Poly<K>>& gens, int maxN = 24) {
  long prev = -1;
  for (int N = 4; N <= maxN; N += 2) {
    // basis: all monomials of degree < N
    std::vector<Monomial> basis;
    for (int d = 0; d < N; ++d)
      for (auto& m : monomialsOfDegree(static_cast<int>(ring->nvars()), d)) basis.push_back(m);
    std::map<std::vector<std::uint16_t>, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i].e] = static_cast<int>(i);
    std::vector<Col<K>> span;
    for (auto& g : gens) {
      for (int dm = 0; dm < N; ++dm) {
        for (auto& m : monomialsOfDegree(static_cast<int>(ring->nvars()), dm)) {
          Col<K> v = Col<K>::Constant(static_cast<int>(basis.size()), K(0));
          bool any = false;
          for (auto& tm : g.terms()) {
            Monomial p = m * tm.first;
            if (p.deg >= N) continue;  // truncate modulo m^N
            v(index.at(p.e)) = v(index.at(p.e)) + tm.second;
            any = true;
          }
          if (any) span.push_back(v);
        }
      }
    }
    Mat<K> M(static_cast<int>(basis.size()), static_cast<int>(span.size()));
    for (size_t c = 0; c < span.size(); ++c) M.col(static_cast<int>(c)) = span[c];
    long dim = static_cast<long>(basis.size()) - rank(M);
    if (dim == prev) return dim;
    prev = dim;
  }
  return prev;
}

}  // namespace arr::oracle
