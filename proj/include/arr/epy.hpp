#pragma once

#include <vector>

#include "arr/resonance.hpp"

namespace arr {

// ---------------------------------------------------------------------------
// The Aomoto complex over S (EPY): 0 -> A_0 (x) S -> ... -> A_l (x) S with
// S = K[a_1..a_n]; the differential is b (x) f -> sum_i (e_i b) (x) (a_i f).
// It is exact except at the right end, where the cokernel is F(A).

namespace detail {
inline std::vector<Monomial> monomialList(int nvars, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur(static_cast<size_t>(nvars));
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == nvars - 1) {
      cur.e[static_cast<size_t>(pos)] = static_cast<std::uint16_t>(rem);
      cur.deg += rem;
      out.push_back(cur);
      cur.deg -= rem;
      cur.e[static_cast<size_t>(pos)] = 0;
      return;
    }
    for (int k = 0; k <= rem; ++k) {
      cur.e[static_cast<size_t>(pos)] = static_cast<std::uint16_t>(k);
      cur.deg += k;
      rec(pos + 1, rem - k);
      cur.deg -= k;
      cur.e[static_cast<size_t>(pos)] = 0;
    }
  };
  rec(0, d);
  return out;
}
}  // namespace detail

// rank of the slice map  A_k (x) S_s -> A_{k+1} (x) S_{s+1}
template <class K>
int epySliceRank(const AomotoComplex<K>& C, int n, int k, int s) {
  if (k < 0 || k >= static_cast<int>(C.maps.size()) || s < 0) return 0;
  const auto& M = C.maps[static_cast<size_t>(k)];
  int rows = C.dims[static_cast<size_t>(k + 1)];
  int cols = C.dims[static_cast<size_t>(k)];
  if (rows == 0 || cols == 0) return 0;
  auto srcMons = detail::monomialList(n, s);
  auto dstMons = detail::monomialList(n, s + 1);
  std::map<std::vector<std::uint16_t>, int> dstIdx;
  for (size_t i = 0; i < dstMons.size(); ++i) dstIdx[dstMons[i].e] = static_cast<int>(i);
  SparseEliminator<K> elim;
  for (int c = 0; c < cols; ++c) {
    for (auto& m : srcMons) {
      std::map<int, K> acc;
      for (int r = 0; r < rows; ++r) {
        const Poly<K>& e = M[static_cast<size_t>(r)][static_cast<size_t>(c)];
        for (auto& tm : e.terms()) {
          Monomial prod = m * tm.first;  // a_i * m
          int t = dstIdx.at(prod.e) * rows + r;
          auto it = acc.find(t);
          if (it == acc.end()) acc[t] = tm.second;
          else it->second += tm.second;
        }
      }
      SparseCol<K> col;
      for (auto& [t, v] : acc)
        if (!v.isZero()) col.e.emplace_back(t, v);
      elim.add(std::move(col));
    }
  }
  return elim.rank();
}

// homology dimension at position k of the slice whose middle is A_k (x) S_s
template <class K>
long epyHomologyDim(const AomotoComplex<K>& C, int n, int k, int s) {
  Rat b = binomialRat(s + n - 1, n - 1);
  long mid = C.dims[static_cast<size_t>(k)] * b.toLong();
  int rin = (k >= 1) ? epySliceRank(C, n, k - 1, s - 1) : 0;
  int rout = epySliceRank(C, n, k, s);
  return mid - rin - rout;
}

// ---------------------------------------------------------------------------
// Ext^{l-1}(F(A), S) as ker/im of the transposed complex, presented as an
// S-module; by Schenck-Suciu this is the linearized Alexander invariant B.

template <class K>
struct ExtModule {
  Presentation<K> presentation;  // of Ext (gens = kernel generators)
  RationalSeries hs;
  std::vector<int> genDegrees;
};

// dual shifts: only degree differences matter for the transposed complex, so
// generators of Hom(P_k) are placed at +k (the true grading is a global twist
// away; consumers compare Hilbert series up to that twist).
template <class K>
ExtModule<K> extAtPosition(const AomotoComplex<K>& C, int k) {
  const RingPtr& R = C.aring;
  // delta_k: Hom(P_k) -> Hom(P_{k-1}) is the transpose of d_{k-1}: P_{k-1} -> P_k
  auto transposedCols = [&](int mapIdx) {
    // columns of (d_mapIdx)^T as elements of S^{dim A_mapIdx}
    const auto& M = C.maps[static_cast<size_t>(mapIdx)];
    int rows = static_cast<int>(M.size());       // dim A_{mapIdx+1}
    int cols = rows ? static_cast<int>(M[0].size()) : 0;  // dim A_mapIdx
    std::vector<ModVec<K>> out;
    for (int r = 0; r < rows; ++r) {
      ModVec<K> v = zeroVec<K>(R, cols);
      for (int c = 0; c < cols; ++c) v[static_cast<size_t>(c)] = M[static_cast<size_t>(r)][static_cast<size_t>(c)];
      out.push_back(std::move(v));
    }
    return out;
  };
  // ker(Hom(P_k) -> Hom(P_{k-1})): syzygies of the columns of (d_{k-1})^T
  FreeMod Fk{R, std::vector<int>(static_cast<size_t>(C.dims[static_cast<size_t>(k)]), k)};
  std::vector<ModVec<K>> kerGens;
  if (k >= 1) {
    auto colsT = transposedCols(k - 1);  // map into S^{dim A_{k-1}}
    FreeMod Ftgt{R, std::vector<int>(static_cast<size_t>(C.dims[static_cast<size_t>(k - 1)]), k - 1)};
    GBResult<K> gb = groebner(Ftgt, colsT, ModOrderMode::TOP, GBOptions{true, true});
    kerGens = gb.syz;  // vectors in S^{dim A_k}
  } else {
    // kernel of the zero map: everything
    for (int i = 0; i < C.dims[0]; ++i) {
      ModVec<K> v = zeroVec<K>(R, C.dims[0]);
      v[static_cast<size_t>(i)] = Poly<K>(R, K(1));
      kerGens.push_back(std::move(v));
    }
  }
  // image generators: columns of (d_k)^T
  std::vector<ModVec<K>> imGens;
  if (k < static_cast<int>(C.maps.size())) imGens = transposedCols(k);

  // presentation of ker/im: relations = first-block coordinates of syzygies
  // of [kerGens | imGens]
  std::vector<ModVec<K>> all = kerGens;
  for (auto& v : imGens) all.push_back(v);
  GBResult<K> gbAll = groebner(Fk, all, ModOrderMode::TOP, GBOptions{true, true});
  ExtModule<K> out;
  for (auto& g : kerGens) out.genDegrees.push_back(vecDegree(g, Fk.shifts));
  std::vector<ModVec<K>> rels;
  for (auto& s : gbAll.syz) {
    ModVec<K> head(s.begin(), s.begin() + static_cast<long>(kerGens.size()));
    if (!vecIsZero(head)) rels.push_back(head);
  }
  Presentation<K> pres{FreeMod{R, out.genDegrees}, rels};
  out.presentation = pres;
  out.hs = hilbertSeries(pres);
  return out;
}

}  // namespace arr
