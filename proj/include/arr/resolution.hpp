#pragma once

#include <iomanip>
#include <map>
#include <sstream>
#include <vector>

#include "arr/groebner.hpp"

namespace arr {

// b_{ij} with i = homological degree and the entry keyed by internal degree j
// (generator shift).  Displayed in the usual betti-diagram layout with rows
// labelled j - i.
struct BettiTable {
  std::map<std::pair<int, int>, long> entries;  // (i, j) -> count

  void add(int i, int j, long c = 1) {
    if (c) entries[{i, j}] += c;
  }
  long get(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  long total(int i) const {
    long s = 0;
    for (auto& [k, v] : entries)
      if (k.first == i) s += v;
    return s;
  }
  int pdim() const {
    int p = 0;
    for (auto& [k, v] : entries)
      if (v) p = std::max(p, k.first);
    return p;
  }
  int regularity() const {
    int r = 0;
    for (auto& [k, v] : entries)
      if (v) r = std::max(r, k.second - k.first);
    return r;
  }
  int maxHomological() const { return pdim(); }

  std::string str() const {
    if (entries.empty()) return "empty betti table\n";
    int maxi = 0, minRow = 0, maxRow = 0;
    for (auto& [k, v] : entries) {
      maxi = std::max(maxi, k.first);
      minRow = std::min(minRow, k.second - k.first);
      maxRow = std::max(maxRow, k.second - k.first);
    }
    std::ostringstream os;
    auto cell = [&](const std::string& s) { os << std::setw(6) << s; };
    cell("total:");
    for (int i = 0; i <= maxi; ++i) cell(std::to_string(total(i)));
    os << "\n";
    for (int r = minRow; r <= maxRow; ++r) {
      cell(std::to_string(r) + ":");
      for (int i = 0; i <= maxi; ++i) {
        long v = get(i, i + r);
        cell(v ? std::to_string(v) : ".");
      }
      os << "\n";
    }
    return os.str();
  }
};

// A finitely presented graded module: coker of a matrix of column vectors
// landing in a shifted free module.
template <class K>
struct Presentation {
  FreeMod F;                      // target free module
  std::vector<ModVec<K>> rels;    // columns, degree-homogeneous

  int rank() const { return F.rank(); }
};

template <class K>
Presentation<K> idealQuotientPresentation(const RingPtr& ring, const std::vector<Poly<K>>& gens) {
  Presentation<K> p;
  p.F = FreeMod{ring, {0}};
  for (auto& g : gens)
    if (!g.isZero()) p.rels.push_back(ModVec<K>{g});
  return p;
}

// Chain complex of free modules: maps[i] : F[i+1] -> F[i] given by matrices
// with polynomial entries, rows indexed by F[i] generators.
template <class K>
struct FreeComplex {
  RingPtr ring;
  std::vector<std::vector<int>> shifts;                    // shifts[i] = gens of F_i
  std::vector<std::vector<std::vector<Poly<K>>>> maps;     // maps[i][row][col]
  int offset = 0;                                          // homological index of F_0

  int length() const { return static_cast<int>(shifts.size()); }

  BettiTable betti() const {
    BettiTable b;
    for (size_t i = 0; i < shifts.size(); ++i)
      for (int d : shifts[i]) b.add(static_cast<int>(i) + offset, d);
    return b;
  }

  // consecutive maps compose to zero; entries degree-homogeneous
  void verify() const {
    for (size_t i = 0; i + 1 < maps.size(); ++i) {
      const auto& A = maps[i];      // F_{i+1} -> F_i
      const auto& B = maps[i + 1];  // F_{i+2} -> F_{i+1}
      if (A.empty() || B.empty()) continue;
      size_t rows = A.size(), mid = B.size(), cols = B.empty() ? 0 : B[0].size();
      for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) {
          Poly<K> s(ring);
          for (size_t m = 0; m < mid; ++m) s += A[r][m] * B[m][c];
          if (!s.isZero()) throw std::logic_error("FreeComplex: composition not zero");
        }
    }
    for (size_t i = 0; i < maps.size(); ++i) {
      for (size_t r = 0; r < maps[i].size(); ++r)
        for (size_t c = 0; c < (maps[i].empty() ? 0 : maps[i][r].size()); ++c) {
          const Poly<K>& e = maps[i][r][c];
          if (e.isZero()) continue;
          if (e.degreeHomog() != shifts[i + 1][c] - shifts[i][r])
            throw std::logic_error("FreeComplex: entry not degree-homogeneous");
        }
    }
  }
};

// columns-of-vectors to matrix form
template <class K>
std::vector<std::vector<Poly<K>>> colsToMatrix(const RingPtr& ring, int rows,
                                               const std::vector<ModVec<K>>& cols) {
  std::vector<std::vector<Poly<K>>> m(static_cast<size_t>(rows));
  for (auto& row : m) row.assign(cols.size(), Poly<K>(ring));
  for (size_t c = 0; c < cols.size(); ++c)
    for (int r = 0; r < rows; ++r) m[static_cast<size_t>(r)][c] = cols[c][static_cast<size_t>(r)];
  return m;
}

template <class K>
std::vector<ModVec<K>> matrixToCols(const std::vector<std::vector<Poly<K>>>& m, const RingPtr& ring) {
  std::vector<ModVec<K>> cols;
  if (m.empty()) return cols;
  size_t nc = m[0].size();
  for (size_t c = 0; c < nc; ++c) {
    ModVec<K> v;
    for (size_t r = 0; r < m.size(); ++r) v.push_back(m[r][c]);
    cols.push_back(std::move(v));
  }
  return cols;
}

// Free resolution of coker(P) by iterated syzygies, then minimalization.
// Over a polynomial ring this terminates within #vars steps (Hilbert); a
// cutoff guards callers that want a truncation.
template <class K>
FreeComplex<K> freeResolution(const Presentation<K>& P, int cutoff = -1) {
  const RingPtr& ring = P.F.ring;
  if (cutoff < 0) cutoff = static_cast<int>(ring->nvars()) + 1;
  FreeComplex<K> C;
  C.ring = ring;
  C.shifts.push_back(P.F.shifts);

  std::vector<ModVec<K>> cur = P.rels;
  FreeMod curF = P.F;
  for (int step = 0; step < cutoff; ++step) {
    // drop zero columns
    std::vector<ModVec<K>> cols;
    for (auto& v : cur)
      if (!vecIsZero(v)) cols.push_back(v);
    if (cols.empty()) break;
    GBResult<K> gb = groebner(curF, cols, ModOrderMode::TOP, GBOptions{true, true});
    std::vector<int> colDeg;
    for (auto& v : cols) colDeg.push_back(vecDegree(v, curF.shifts));
    C.shifts.push_back(colDeg);
    C.maps.push_back(colsToMatrix(ring, curF.rank(), cols));
    cur = gb.syz;
    curF = FreeMod{ring, colDeg};
  }
  return C;
}

// Strip unit (degree-zero scalar) entries to get the minimal complex.
template <class K>
void minimalize(FreeComplex<K>& C) {
  const RingPtr& ring = C.ring;
  bool progress = true;
  while (progress) {
    progress = false;
    for (size_t mi = 0; mi < C.maps.size() && !progress; ++mi) {
      auto& M = C.maps[mi];  // F_{mi+1} -> F_{mi}
      size_t rows = M.size();
      size_t cols = rows ? M[0].size() : 0;
      for (size_t r = 0; r < rows && !progress; ++r)
        for (size_t c = 0; c < cols && !progress; ++c) {
          const Poly<K>& u = M[r][c];
          if (u.isZero() || !u.isConstant()) continue;
          if (C.shifts[mi + 1][c] != C.shifts[mi][r]) continue;
          K uval = u.constantTerm();
          // column operations on M: clear row r
          for (size_t c2 = 0; c2 < cols; ++c2) {
            if (c2 == c || M[r][c2].isZero()) continue;
            Poly<K> f = M[r][c2] * Poly<K>(ring, K(1) / uval);
            for (size_t r2 = 0; r2 < rows; ++r2) M[r2][c2] -= M[r2][c] * f;
          }
          // delete row r and column c of M
          auto eraseRowCol = [](std::vector<std::vector<Poly<K>>>& A, int dr, int dc) {
            if (dr >= 0) A.erase(A.begin() + dr);
            if (dc >= 0)
              for (auto& row : A) row.erase(row.begin() + dc);
          };
          eraseRowCol(M, static_cast<int>(r), static_cast<int>(c));
          // delete row c in the next map (basis member of F_{mi+1})
          if (mi + 1 < C.maps.size()) eraseRowCol(C.maps[mi + 1], static_cast<int>(c), -1);
          // delete column r in the previous map (basis member of F_{mi})
          if (mi >= 1) eraseRowCol(C.maps[mi - 1], -1, static_cast<int>(r));
          C.shifts[mi].erase(C.shifts[mi].begin() + static_cast<long>(r));
          C.shifts[mi + 1].erase(C.shifts[mi + 1].begin() + static_cast<long>(c));
          progress = true;
        }
    }
    // drop zero columns at the tail and empty trailing modules
    while (!C.maps.empty()) {
      auto& last = C.maps.back();
      std::vector<int>& lastShifts = C.shifts.back();
      std::vector<size_t> keep;
      size_t cols = last.empty() ? lastShifts.size() : last[0].size();
      if (!last.empty()) {
        for (size_t c = 0; c < cols; ++c) {
          bool nz = false;
          for (size_t r = 0; r < last.size(); ++r)
            if (!last[r][c].isZero()) { nz = true; break; }
          if (nz) keep.push_back(c);
        }
        if (keep.size() != cols) {
          std::vector<int> ns;
          for (size_t c : keep) ns.push_back(lastShifts[c]);
          // a dropped zero column must not be hit by the map after it; since
          // this is the last map there is none
          for (auto& row : last) {
            std::vector<Poly<K>> nr;
            for (size_t c : keep) nr.push_back(row[c]);
            row = std::move(nr);
          }
          lastShifts = ns;
        }
      }
      if (lastShifts.empty()) {
        C.shifts.pop_back();
        C.maps.pop_back();
      } else
        break;
    }
  }
}

template <class K>
FreeComplex<K> minimalFreeResolution(const Presentation<K>& P, int cutoff = -1) {
  FreeComplex<K> C = freeResolution(P, cutoff);
  minimalize(C);
  C.verify();
  return C;
}

}  // namespace arr
