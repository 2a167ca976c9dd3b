#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "arr/arrangement.hpp"
#include "arr/extalg.hpp"
#include "arr/matrix.hpp"
#include "arr/series.hpp"

namespace arr {

// ---------------------------------------------------------------------------
// circuits of the arrangement with dependency coefficients

template <class K>
struct Circuit {
  std::vector<int> support;   // sorted hyperplane indices
  std::vector<K> coeffs;      // sum coeffs[j] * l_{support[j]} = 0, first nonzero = 1
};

template <class K>
std::vector<Circuit<K>> circuits(const Arrangement<K>& A) {
  std::vector<Circuit<K>> out;
  int n = A.n();
  int top = rank(Mat<K>(A.forms));
  std::vector<std::vector<int>> known;
  std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& S, int next) {
    if (static_cast<int>(S.size()) >= 2) {
      // prune supersets of known circuits
      for (auto& c : known)
        if (std::includes(S.begin(), S.end(), c.begin(), c.end())) return;
      if (static_cast<int>(S.size()) <= top + 1) {
        int r = rowSetRank(A.forms, S);
        if (r == static_cast<int>(S.size()) - 1) {
          // dependent; minimal iff kernel vector has full support
          Mat<K> M(A.l(), static_cast<int>(S.size()));
          for (size_t j = 0; j < S.size(); ++j)
            M.col(static_cast<int>(j)) = A.forms.row(S[j]).transpose();
          Mat<K> ker = kernel_basis(M);
          if (ker.cols() == 1) {
            bool full = true;
            for (int j = 0; j < ker.rows(); ++j)
              if (ker(j, 0).isZero()) full = false;
            if (full) {
              Circuit<K> c;
              c.support = S;
              K lead(0);
              for (int j = 0; j < ker.rows(); ++j)
                if (lead.isZero() && !ker(j, 0).isZero()) lead = ker(j, 0);
              for (int j = 0; j < ker.rows(); ++j) c.coeffs.push_back(ker(j, 0) / lead);
              known.push_back(S);
              out.push_back(std::move(c));
              return;
            }
          }
        }
      }
    }
    if (static_cast<int>(S.size()) > top) return;
    for (int h = next; h < n; ++h) {
      S.push_back(h);
      rec(S, h + 1);
      S.pop_back();
    }
  };
  std::vector<int> S;
  rec(S, 0);
  // lexicographic order on supports
  std::sort(out.begin(), out.end(),
            [](const Circuit<K>& a, const Circuit<K>& b) { return a.support < b.support; });
  return out;
}

// ---------------------------------------------------------------------------
// Quotients of the exterior algebra with finite graded slices.  Covers E
// itself (no generators), the Orlik-Solomon algebra (circuit boundaries) and
// its quadratic closure (degree-2 part only).

template <class K>
class ExtQuotient {
 public:
  ExtPtr E;
  std::vector<ExtElem<K>> idealGens;

 private:
  struct Slice {
    std::vector<EMask> all;              // all masks of this degree, subset-lex
    std::vector<EMask> basis;            // standard (non-pivot) masks
    std::map<EMask, int> allIndex, basisIndex;
    Mat<K> reduceMat;                    // basis.size() x all.size(): mask -> coords
  };
  mutable std::vector<std::optional<Slice>> slices_;
  mutable std::map<std::pair<int, int>,
                   std::vector<std::vector<std::vector<std::pair<int, K>>>>>
      multCache_;

  const Slice& slice(int d) const {
    if (slices_.empty()) slices_.resize(static_cast<size_t>(E->n) + 1);
    if (d < 0 || d > E->n) throw std::out_of_range("ExtQuotient: bad degree");
    auto& s = slices_[static_cast<size_t>(d)];
    if (s) return *s;
    Slice out;
    for (EMask m = 0; m < (EMask(1) << E->n); ++m)
      if (edeg(m) == d) out.all.push_back(m);
    std::sort(out.all.begin(), out.all.end(), subsetLexLess);
    for (size_t i = 0; i < out.all.size(); ++i) out.allIndex[out.all[i]] = static_cast<int>(i);

    // span of the degree-d piece of the two-sided ideal
    std::vector<Col<K>> span;
    for (auto& g : idealGens) {
      int dg = g.degreeHomog();
      if (dg > d) continue;
      for (EMask t = 0; t < (EMask(1) << E->n); ++t) {
        if (edeg(t) != d - dg) continue;
        ExtElem<K> w = ExtElem<K>::monomial(E, t) * g;
        if (w.isZero()) continue;
        Col<K> v = Col<K>::Constant(static_cast<int>(out.all.size()), K(0));
        for (auto& tm : w.terms()) v(out.allIndex.at(tm.first)) = tm.second;
        span.push_back(v);
      }
    }
    // echelonize with pivots preferring subset-lex-smallest masks (so the
    // standard monomials are the no-broken-circuit sets for the OS ideal)
    int m = static_cast<int>(out.all.size());
    Mat<K> mat = Mat<K>::Constant(static_cast<int>(span.size()), m, K(0));
    for (size_t r = 0; r < span.size(); ++r) mat.row(static_cast<int>(r)) = span[r].transpose();
    std::vector<int> piv = rref_inplace(mat);
    std::set<int> pivSet(piv.begin(), piv.end());
    for (int c = 0; c < m; ++c)
      if (!pivSet.count(c)) out.basis.push_back(out.all[static_cast<size_t>(c)]);
    for (size_t i = 0; i < out.basis.size(); ++i) out.basisIndex[out.basis[i]] = static_cast<int>(i);
    // reduction of an arbitrary mask: pivot mask -> minus the row tail
    out.reduceMat = Mat<K>::Constant(static_cast<int>(out.basis.size()), m, K(0));
    for (size_t b = 0; b < out.basis.size(); ++b)
      out.reduceMat(static_cast<int>(b), out.allIndex.at(out.basis[b])) = K(1);
    for (size_t r = 0; r < piv.size(); ++r) {
      int pc = piv[r];
      for (int c = 0; c < m; ++c) {
        if (c == pc || mat(static_cast<int>(r), c).isZero()) continue;
        // e_{pc} = - sum_c mat(r,c) e_c over non-pivot columns
        int b = -1;
        auto it = out.basisIndex.find(out.all[static_cast<size_t>(c)]);
        if (it != out.basisIndex.end()) b = it->second;
        if (b < 0) throw std::logic_error("ExtQuotient: rref not reduced");
        out.reduceMat(b, pc) = -mat(static_cast<int>(r), c);
      }
    }
    s = std::move(out);
    return *s;
  }

 public:
  ExtQuotient() = default;
  ExtQuotient(ExtPtr e, std::vector<ExtElem<K>> gens)
      : E(std::move(e)), idealGens(std::move(gens)) {}

  int n() const { return E->n; }
  int topDegree() const { return E->n; }
  int dim(int d) const {
    if (d < 0 || d > E->n) return 0;
    return static_cast<int>(slice(d).basis.size());
  }
  const std::vector<EMask>& basisMasks(int d) const { return slice(d).basis; }
  int basisIndexOf(int d, EMask m) const { return slice(d).basisIndex.at(m); }

  // coordinates of an exterior element in the standard basis of its degree
  Col<K> reduce(const ExtElem<K>& w, int d) const {
    const Slice& s = slice(d);
    Col<K> v = Col<K>::Constant(static_cast<int>(s.basis.size()), K(0));
    for (auto& tm : w.terms()) {
      int c = s.allIndex.at(tm.first);
      for (int b = 0; b < v.rows(); ++b) {
        const K& x = s.reduceMat(b, c);
        if (!x.isZero()) v(b) += tm.second * x;
      }
    }
    return v;
  }

  ExtElem<K> basisElem(int d, int i) const {
    return ExtElem<K>::monomial(E, slice(d).basis[static_cast<size_t>(i)]);
  }

  // product of basis elements, as sparse coords in degree a+b (memoized)
  const std::vector<std::pair<int, K>>& mult(int a, int i, int b, int j) const {
    auto key = std::make_pair(a, b);
    auto& table = multCache_[key];
    if (table.empty())
      table.assign(static_cast<size_t>(dim(a)),
                   std::vector<std::vector<std::pair<int, K>>>(static_cast<size_t>(dim(b))));
    auto& cell = table[static_cast<size_t>(i)][static_cast<size_t>(j)];
    static const std::vector<std::pair<int, K>> empty;
    if (a + b > topDegree()) return empty;
    if (!cell.empty() || a + b > topDegree()) return cell;
    ExtElem<K> w = basisElem(a, i) * basisElem(b, j);
    if (w.isZero()) return cell;
    Col<K> v = reduce(w, a + b);
    for (int t = 0; t < v.rows(); ++t)
      if (!v(t).isZero()) cell.emplace_back(t, v(t));
    return cell;
  }

  QPoly hilbert() const {
    QPoly p;
    for (int d = 0; d <= topDegree(); ++d) p += QPoly::monomial(d, Rat(dim(d)));
    return p;
  }
};

// the Orlik-Solomon algebra A = E / <boundaries of circuits>
template <class K>
struct OSAlgebra {
  ExtPtr E;
  std::vector<Circuit<K>> circ;
  std::vector<ExtElem<K>> idealGens;  // del(e_C), circuits in lex order
  ExtQuotient<K> Q;

  int n() const { return E->n; }
  QPoly hilbert() const { return Q.hilbert(); }

  // degree-2 part of the ideal comes from 3-element circuits
  std::vector<ExtElem<K>> quadraticRelations() const {
    std::vector<ExtElem<K>> out;
    for (size_t i = 0; i < circ.size(); ++i)
      if (circ[i].support.size() == 3) out.push_back(idealGens[i]);
    return out;
  }
};

template <class K>
OSAlgebra<K> osAlgebra(const Arrangement<K>& A) {
  OSAlgebra<K> os;
  os.E = makeExt(A.n());
  os.circ = circuits(A);
  for (auto& c : os.circ)
    os.idealGens.push_back(boundary(ExtElem<K>::fromIndices(os.E, c.support)));
  os.Q = ExtQuotient<K>(os.E, os.idealGens);

  // the standard monomials must be exactly the no-broken-circuit sets
  std::set<EMask> broken;
  for (auto& c : os.circ) {
    EMask m = 0;
    for (int h : c.support) m |= EMask(1) << h;
    int top = 31 - std::countl_zero(m);
    broken.insert(m & ~(EMask(1) << top));
  }
  for (int d = 0; d <= os.Q.topDegree(); ++d) {
    for (EMask m : os.Q.basisMasks(d))
      for (EMask b : broken)
        if ((m & b) == b) throw std::logic_error("osAlgebra: basis not NBC");
    long nbcCount = 0;
    for (EMask m = 0; m < (EMask(1) << A.n()); ++m) {
      if (edeg(m) != d) continue;
      bool nbc = true;
      for (EMask b : broken)
        if ((m & b) == b) { nbc = false; break; }
      if (nbc) ++nbcCount;
    }
    if (nbcCount != os.Q.dim(d)) throw std::logic_error("osAlgebra: NBC count mismatch");
  }
  return os;
}

// ---------------------------------------------------------------------------
// Degreewise minimal free resolutions over an ExtQuotient algebra.
//
// The module is given by its graded slices and the algebra action; each
// resolution step records minimal generator degrees (the Tor numbers) and the
// generator vectors, expressed in the slice bases of the previous step.

template <class K>
struct SliceModule {
  std::function<int(int)> dim;
  // act(a, i, d, j): (basis i of algebra degree a) . (basis j of module degree
  // d) as coords in module degree a+d
  std::function<std::vector<std::pair<int, K>>(int, int, int, int)> act;
  int minDegree = 0;
};

template <class K>
struct SliceResolution {
  // level -> (degree -> generator vectors as columns in ambient coordinates)
  struct Level {
    std::vector<int> genDegrees;
    std::vector<SparseCol<K>> genVectors;  // in the previous level's slice basis
  };
  std::vector<Level> levels;
  std::map<std::pair<int, int>, long> betti;  // (homological, internal) -> count

  long get(int i, int j) const {
    auto it = betti.find({i, j});
    return it == betti.end() ? 0 : it->second;
  }
  long total(int i) const {
    long s = 0;
    for (auto& [k, v] : betti)
      if (k.first == i) s += v;
    return s;
  }
};

// index of the degree-d slice of the free module with generator degrees gdeg
template <class K>
struct FreeSlice {
  std::vector<std::pair<int, int>> elems;  // (gen, algebra basis index)
  std::map<std::pair<int, int>, int> index;

  static FreeSlice build(const ExtQuotient<K>& alg, const std::vector<int>& gdeg, int d) {
    FreeSlice s;
    for (size_t g = 0; g < gdeg.size(); ++g) {
      int ad = d - gdeg[g];
      for (int i = 0; i < alg.dim(ad); ++i) {
        s.index[{static_cast<int>(g), i}] = static_cast<int>(s.elems.size());
        s.elems.emplace_back(static_cast<int>(g), i);
      }
    }
    return s;
  }
  int size() const { return static_cast<int>(elems.size()); }
};

template <class K>
SliceResolution<K> minimalSliceResolution(const ExtQuotient<K>& alg, const SliceModule<K>& M,
                                          int homCutoff, int degCutoff) {
  SliceResolution<K> res;

  // ambient slice data for the current kernel: starts as the module itself
  // kernel vectors per degree, in ambient coordinates
  std::map<int, std::vector<SparseCol<K>>> kernel;
  for (int d = M.minDegree; d <= degCutoff; ++d) {
    int dim = M.dim(d);
    std::vector<SparseCol<K>> id;
    for (int i = 0; i < dim; ++i) {
      SparseCol<K> c;
      c.e.emplace_back(i, K(1));
      id.push_back(std::move(c));
    }
    kernel[d] = std::move(id);  // level -1: "kernel" = all of M
  }

  // action of algebra basis elements on ambient vectors, for the current level
  // level 0 ambient = M; level i >= 1 ambient = F_{i-1} slices
  std::vector<int> prevGdeg;                         // gens of F_{i-1}
  std::map<int, FreeSlice<K>> prevSlices;            // degree -> slice of F_{i-1}

  auto actOnVector = [&](int lvl, int a, int ai, int d,
                         const SparseCol<K>& v) -> SparseCol<K> {
    // returns (basis ai of algebra degree a) . v, v in ambient degree d
    std::map<int, K> acc;
    if (lvl == 0) {
      for (auto& [mi, c] : v.e)
        for (auto& [t, x] : M.act(a, ai, d, mi)) {
          K add = c * x;
          if (!add.isZero()) acc[t] += add;
        }
    } else {
      const FreeSlice<K>& src = prevSlices.at(d);
      FreeSlice<K>& dst = prevSlices[d + a];
      if (dst.elems.empty() && dst.index.empty())
        dst = FreeSlice<K>::build(alg, prevGdeg, d + a);
      for (auto& [idx, c] : v.e) {
        auto [g, bi] = src.elems[static_cast<size_t>(idx)];
        int bdeg = d - prevGdeg[static_cast<size_t>(g)];
        for (auto& [ti, x] : alg.mult(a, ai, bdeg, bi)) {
          K add = c * x;
          if (!add.isZero()) acc[dst.index.at({g, ti})] += add;
        }
      }
    }
    SparseCol<K> out;
    for (auto& [r, c] : acc)
      if (!c.isZero()) out.e.emplace_back(r, c);
    return out;
  };

  for (int lvl = 0; lvl <= homCutoff; ++lvl) {
    // choose minimal generators of the current kernel, degree by degree
    typename SliceResolution<K>::Level level;
    std::map<int, std::vector<SparseCol<K>>> gensByDeg;
    for (int d = M.minDegree; d <= degCutoff; ++d) {
      auto it = kernel.find(d);
      if (it == kernel.end() || it->second.empty()) continue;
      SparseEliminator<K> elim;
      // span of algebra-positive times lower-degree generators
      for (auto& [d2, gv] : gensByDeg) {
        int a = d - d2;
        if (a <= 0 || a > alg.topDegree()) continue;
        for (auto& v : gv)
          for (int ai = 0; ai < alg.dim(a); ++ai) {
            SparseCol<K> w = actOnVector(lvl, a, ai, d2, v);
            if (!w.empty()) elim.add(std::move(w));
          }
      }
      for (auto& v : it->second) {
        SparseCol<K> c = v;
        if (elim.add(std::move(c))) {
          level.genDegrees.push_back(d);
          level.genVectors.push_back(v);
          gensByDeg[d].push_back(v);
          res.betti[{lvl, d}] += 1;
        }
      }
    }
    if (level.genDegrees.empty()) break;

    // next level: kernel of F_lvl -> ambient
    std::vector<int> gdeg = level.genDegrees;
    std::map<int, FreeSlice<K>> curSlices;
    std::map<int, std::vector<SparseCol<K>>> nextKernel;
    for (int d = M.minDegree; d <= degCutoff; ++d) {
      FreeSlice<K> fs = FreeSlice<K>::build(alg, gdeg, d);
      curSlices[d] = fs;
      if (fs.size() == 0) continue;
      SparseEliminator<K> elim(true);
      for (int col = 0; col < fs.size(); ++col) {
        auto [g, ai] = fs.elems[static_cast<size_t>(col)];
        int a = d - gdeg[static_cast<size_t>(g)];
        SparseCol<K> w =
            actOnVector(lvl, a, ai, gdeg[static_cast<size_t>(g)], level.genVectors[static_cast<size_t>(g)]);
        elim.add(std::move(w), col);
      }
      nextKernel[d] = elim.kernelCombos();
    }
    res.levels.push_back(std::move(level));
    kernel = std::move(nextKernel);
    prevGdeg = gdeg;
    prevSlices = std::move(curSlices);
  }
  return res;
}

// the OS algebra viewed as a module over E (or over any exterior quotient)
template <class K>
SliceModule<K> moduleOverExt(const ExtQuotient<K>& scalars, const ExtQuotient<K>& target) {
  SliceModule<K> M;
  const ExtQuotient<K>* S = &scalars;
  const ExtQuotient<K>* T = &target;
  M.dim = [T](int d) { return T->dim(d); };
  M.act = [S, T](int a, int ai, int d, int j) {
    std::vector<std::pair<int, K>> out;
    if (a + d > T->topDegree()) return out;
    ExtElem<K> w = ExtElem<K>::monomial(S->E, S->basisMasks(a)[static_cast<size_t>(ai)]) *
                   ExtElem<K>::monomial(T->E, T->basisMasks(d)[static_cast<size_t>(j)]);
    if (w.isZero()) return out;
    Col<K> v = T->reduce(w, a + d);
    for (int t = 0; t < v.rows(); ++t)
      if (!v(t).isZero()) out.emplace_back(t, v(t));
    return out;
  };
  return M;
}

// trivial module K in degree zero
template <class K>
SliceModule<K> trivialModule() {
  SliceModule<K> M;
  M.dim = [](int d) { return d == 0 ? 1 : 0; };
  M.act = [](int a, int, int, int mi) {
    std::vector<std::pair<int, K>> out;
    if (a == 0) out.emplace_back(mi, K(1));
    return out;
  };
  return M;
}

// Tor^E_i(A, K): minimal resolution of the OS algebra over the exterior
// algebra, computed degreewise.
template <class K>
SliceResolution<K> torOverE(const OSAlgebra<K>& os, int homCutoff, int degCutoff) {
  ExtQuotient<K> Ealg(os.E, {});
  SliceModule<K> M = moduleOverExt(Ealg, os.Q);
  return minimalSliceResolution(Ealg, M, homCutoff, degCutoff);
}

// ---------------------------------------------------------------------------
// Koszulness: Tor^A_i(K,K)_j by degreewise minimal resolution over A.

struct KoszulReport {
  std::map<std::pair<int, int>, long> tor;  // (i, j) -> dim Tor_i(K,K)_j
  int cutoff = 0;
  bool koszulUpToCutoff = true;
  std::vector<long> diagonal;

  long get(int i, int j) const {
    auto it = tor.find({i, j});
    return it == tor.end() ? 0 : it->second;
  }
};

template <class K>
KoszulReport koszulTest(const ExtQuotient<K>& A, int cutoff) {
  SliceModule<K> M = trivialModule<K>();
  SliceResolution<K> res = minimalSliceResolution(A, M, cutoff, cutoff);
  KoszulReport rep;
  rep.cutoff = cutoff;
  rep.tor = res.betti;
  rep.diagonal.assign(static_cast<size_t>(cutoff) + 1, 0);
  for (auto& [k, v] : res.betti) {
    if (k.first == k.second) rep.diagonal[static_cast<size_t>(k.first)] = v;
    else if (v) rep.koszulUpToCutoff = false;
  }
  return rep;
}

// numerical Koszul duality: sum b_ii t^i * HS(A,-t) = 1 mod t^{D+1}
inline bool koszulDualityIdentity(const KoszulReport& rep, const QPoly& hsA) {
  QPoly diag;
  for (size_t i = 0; i < rep.diagonal.size(); ++i)
    diag += QPoly::monomial(static_cast<int>(i), Rat(rep.diagonal[i]));
  QPoly prod = diag * hsA.negated_t();
  for (int i = 0; i <= rep.cutoff; ++i)
    if (prod.coeff(i) != (i == 0 ? Rat(1) : Rat(0))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// quadratic Groebner bases over E under hyperplane reorderings

namespace detail {

// reduced-GB leading masks of the (relabelled) OS ideal, degree by degree;
// returns true when all minimal generators are quadratic
template <class K>
bool quadraticGBForRelabelling(int n, const std::vector<std::vector<int>>& supports) {
  ExtPtr E = makeExt(n);
  std::vector<ExtElem<K>> gens;
  for (auto& s : supports) gens.push_back(boundary(ExtElem<K>::fromIndices(E, s)));
  std::vector<EMask> gbLeads;
  for (int d = 2; d <= n; ++d) {
    // span of the ideal in degree d
    std::vector<EMask> masks;
    for (EMask m = 0; m < (EMask(1) << n); ++m)
      if (edeg(m) == d) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), subsetLexLess);
    std::map<EMask, int> idx;
    for (size_t i = 0; i < masks.size(); ++i) idx[masks[i]] = static_cast<int>(i);
    std::vector<Col<K>> span;
    for (auto& g : gens) {
      int dg = g.degreeHomog();
      if (dg > d) continue;
      for (EMask t = 0; t < (EMask(1) << n); ++t) {
        if (edeg(t) != d - dg) continue;
        ExtElem<K> w = ExtElem<K>::monomial(E, t) * g;
        if (w.isZero()) continue;
        Col<K> v = Col<K>::Constant(static_cast<int>(masks.size()), K(0));
        for (auto& tm : w.terms()) v(idx.at(tm.first)) = tm.second;
        span.push_back(v);
      }
    }
    if (span.empty()) continue;
    Mat<K> mat = Mat<K>::Constant(static_cast<int>(span.size()), static_cast<int>(masks.size()), K(0));
    for (size_t r = 0; r < span.size(); ++r) mat.row(static_cast<int>(r)) = span[r].transpose();
    std::vector<int> piv = rref_inplace(mat);
    for (int p : piv) {
      EMask lead = masks[static_cast<size_t>(p)];
      bool divisible = false;
      for (EMask g : gbLeads)
        if ((lead & g) == g) { divisible = true; break; }
      if (!divisible) {
        if (d >= 3) return false;  // a new minimal GB generator of degree >= 3
        gbLeads.push_back(lead);
      }
    }
  }
  return true;
}

}  // namespace detail

struct QuadraticGBReport {
  bool found = false;
  std::vector<int> witnessOrder;   // hyperplane relabelling giving a QGB
  long ordersTried = 0;
  bool exhaustive = false;         // all n! relabellings were covered
};

// search the default order plus all hyperplane reorderings (n <= 8)
template <class K>
QuadraticGBReport hasQuadraticGB(const OSAlgebra<K>& os, int searchLimitN = 8) {
  int n = os.n();
  std::vector<std::vector<int>> supports;
  for (auto& c : os.circ) supports.push_back(c.support);

  QuadraticGBReport rep;
  std::set<std::vector<std::vector<int>>> seen;
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  bool fullSearch = n <= searchLimitN;
  do {
    std::vector<std::vector<int>> rel;
    for (auto& s : supports) {
      std::vector<int> r;
      for (int h : s) r.push_back(perm[static_cast<size_t>(h)]);
      std::sort(r.begin(), r.end());
      rel.push_back(r);
    }
    std::sort(rel.begin(), rel.end());
    if (seen.insert(rel).second) {
      ++rep.ordersTried;
      if (detail::quadraticGBForRelabelling<K>(n, rel)) {
        rep.found = true;
        rep.witnessOrder = perm;
        return rep;
      }
    }
    if (!fullSearch) break;  // default order only
  } while (std::next_permutation(perm.begin(), perm.end()));
  rep.exhaustive = fullSearch;
  return rep;
}

// ---------------------------------------------------------------------------
// quadratic algebras T(V)/(R) and their duals

template <class K>
struct QuadraticAlgebra {
  int n = 0;                 // dim V
  std::vector<Col<K>> rels;  // vectors in V (x) V, coordinate a*n+b for x_a (x) x_b
};

template <class K>
QuadraticAlgebra<K> quadraticDual(const QuadraticAlgebra<K>& Q) {
  QuadraticAlgebra<K> D;
  D.n = Q.n;
  int m = Q.n * Q.n;
  Mat<K> rows = Mat<K>::Constant(static_cast<int>(Q.rels.size()), m, K(0));
  for (size_t i = 0; i < Q.rels.size(); ++i) rows.row(static_cast<int>(i)) = Q.rels[i].transpose();
  Mat<K> ker = kernel_basis(rows);
  for (int c = 0; c < ker.cols(); ++c) D.rels.push_back(ker.col(c));
  return D;
}

// graded dimensions of T(V)/(R) up to degree D, by the recursive quotient
// U_k = (V (x) U_{k-1}) / image(R (x) U_{k-2})
template <class K>
std::vector<long> quadraticAlgebraDims(const QuadraticAlgebra<K>& Q, int D) {
  int n = Q.n;
  std::vector<long> dims{1, n};
  if (D < 2) { dims.resize(static_cast<size_t>(D) + 1); return dims; }
  // P_k: projection V (x) U_{k-1} -> U_k given by basis selection
  // represent U_k basis as pivot-free columns; store projection matrices
  std::vector<Mat<K>> proj;  // proj[k]: dim U_k x (n * dim U_{k-1}), k >= 1
  Mat<K> p1 = Mat<K>::Constant(n, n, K(0));
  for (int i = 0; i < n; ++i) p1(i, i) = K(1);
  proj.push_back(p1);  // U_1 = V
  for (int k = 2; k <= D; ++k) {
    long uk1 = dims[static_cast<size_t>(k - 1)], uk2 = dims[static_cast<size_t>(k - 2)];
    int cols = static_cast<int>(n * uk1);
    std::vector<Col<K>> span;
    for (auto& r : Q.rels) {
      for (int x = 0; x < uk2; ++x) {
        Col<K> v = Col<K>::Constant(cols, K(0));
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            const K& c = r(a * n + b);
            if (c.isZero()) continue;
            // a (x) P_{k-1}(b (x) x)
            for (int t = 0; t < static_cast<int>(uk1); ++t) {
              const K& w = proj.back()(t, b * static_cast<int>(uk2) + x);
              if (!w.isZero()) v(a * static_cast<int>(uk1) + t) += c * w;
            }
          }
        if (!v.isZero()) span.push_back(v);
      }
    }
    Mat<K> mat = Mat<K>::Constant(static_cast<int>(span.size()), cols, K(0));
    for (size_t i = 0; i < span.size(); ++i) mat.row(static_cast<int>(i)) = span[i].transpose();
    std::vector<int> piv = rref_inplace(mat);
    std::set<int> pivSet(piv.begin(), piv.end());
    long uk = cols - static_cast<long>(piv.size());
    dims.push_back(uk);
    Mat<K> P = Mat<K>::Constant(static_cast<int>(uk), cols, K(0));
    int b = 0;
    std::vector<int> basisCols;
    for (int c = 0; c < cols; ++c)
      if (!pivSet.count(c)) basisCols.push_back(c);
    for (size_t i = 0; i < basisCols.size(); ++i) P(static_cast<int>(i), basisCols[i]) = K(1);
    for (size_t r = 0; r < piv.size(); ++r)
      for (size_t i = 0; i < basisCols.size(); ++i) {
        const K& c = mat(static_cast<int>(r), basisCols[i]);
        if (!c.isZero()) P(static_cast<int>(i), piv[r]) = -c;
      }
    proj.push_back(std::move(P));
    (void)b;
  }
  return dims;
}

// the symmetric/exterior style quadratic algebras used in fixtures
template <class K>
QuadraticAlgebra<K> commutativeQuadratic(int n) {  // S = T(V)/<ab - ba>
  QuadraticAlgebra<K> Q;
  Q.n = n;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Col<K> v = Col<K>::Constant(n * n, K(0));
      v(a * n + b) = K(1);
      v(b * n + a) = K(-1);
      Q.rels.push_back(v);
    }
  return Q;
}

template <class K>
QuadraticAlgebra<K> exteriorQuadratic(int n) {  // E = T(V)/<ab + ba, aa>
  QuadraticAlgebra<K> Q;
  Q.n = n;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      Col<K> v = Col<K>::Constant(n * n, K(0));
      if (a == b) v(a * n + a) = K(1);
      else { v(a * n + b) = K(1); v(b * n + a) = K(1); }
      Q.rels.push_back(v);
    }
  return Q;
}

// quadratic closure of the OS algebra as a T(V)/(R): skew relations plus the
// degree-two part of the OS ideal
template <class K>
QuadraticAlgebra<K> osQuadraticClosure(const OSAlgebra<K>& os) {
  int n = os.n();
  QuadraticAlgebra<K> Q = exteriorQuadratic<K>(n);
  for (auto& g : os.quadraticRelations()) {
    Col<K> v = Col<K>::Constant(n * n, K(0));
    for (auto& tm : g.terms()) {
      // e_i e_j with i < j contributes x_i (x) x_j (representative in T(V))
      EMask m = tm.first;
      int i = std::countr_zero(m);
      int j = std::countr_zero(m & (m - 1));
      v(i * n + j) += tm.second;
    }
    Q.rels.push_back(v);
  }
  return Q;
}

// E/<quadratic part of the OS ideal> with the slice machinery
template <class K>
ExtQuotient<K> osQuadraticClosureSlices(const OSAlgebra<K>& os) {
  return ExtQuotient<K>(os.E, os.quadraticRelations());
}

}  // namespace arr
