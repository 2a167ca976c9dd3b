#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arr/hilbert.hpp"
#include "arr/osalg.hpp"
#include "arr/rng.hpp"
#include "arr/satquot.hpp"

namespace arr {

// ---------------------------------------------------------------------------
// Aomoto complex (A, a): terms A_k in the no-broken-circuit bases, maps
// multiplication by a = sum a_i e_i with symbolic coefficients.

template <class K>
struct AomotoComplex {
  RingPtr aring;                                       // K[a_1..a_n]
  std::vector<int> dims;                               // dim A_k
  std::vector<std::vector<std::vector<Poly<K>>>> maps; // maps[k][row][col]: A_k -> A_{k+1}
};

template <class K>
AomotoComplex<K> aomotoComplex(const OSAlgebra<K>& os, const RingPtr& aring) {
  int n = os.n();
  if (static_cast<int>(aring->nvars()) != n)
    throw std::invalid_argument("aomoto: coefficient ring needs one variable per hyperplane");
  AomotoComplex<K> C;
  C.aring = aring;
  int top = os.Q.topDegree();
  while (top > 0 && os.Q.dim(top) == 0) --top;  // A_k vanishes above the rank
  for (int k = 0; k <= top; ++k) C.dims.push_back(os.Q.dim(k));
  for (int k = 0; k + 1 <= top; ++k) {
    int rows = os.Q.dim(k + 1), cols = os.Q.dim(k);
    std::vector<std::vector<Poly<K>>> M(static_cast<size_t>(rows),
                                        std::vector<Poly<K>>(static_cast<size_t>(cols), Poly<K>(aring)));
    for (int c = 0; c < cols; ++c) {
      ExtElem<K> b = os.Q.basisElem(k, c);
      for (int i = 0; i < n; ++i) {
        ExtElem<K> w = b * ExtElem<K>::generator(os.E, i);  // x -> x ^ a
        if (w.isZero()) continue;
        Col<K> v = os.Q.reduce(w, k + 1);
        for (int r = 0; r < rows; ++r)
          if (!v(r).isZero())
            M[static_cast<size_t>(r)][static_cast<size_t>(c)] +=
                Poly<K>::variable(aring, static_cast<size_t>(i), v(r));
      }
    }
    C.maps.push_back(std::move(M));
  }
  return C;
}

// consecutive matrices compose to zero as a polynomial identity
template <class K>
bool aomotoComposesToZero(const AomotoComplex<K>& C) {
  for (size_t k = 0; k + 1 < C.maps.size(); ++k) {
    const auto& A = C.maps[k];      // A_k -> A_{k+1}
    const auto& B = C.maps[k + 1];  // A_{k+1} -> A_{k+2}
    for (size_t r = 0; r < B.size(); ++r)
      for (size_t c = 0; c < (A.empty() ? 0 : A[0].size()); ++c) {
        Poly<K> s(C.aring);
        for (size_t m = 0; m < A.size(); ++m) s += B[r][m] * A[m][c];
        if (!s.isZero()) return false;
      }
  }
  return true;
}

// specialize at a point of the coefficient space
template <class K>
Mat<K> aomotoMapAt(const AomotoComplex<K>& C, int k, const std::vector<K>& pt) {
  const auto& M = C.maps[static_cast<size_t>(k)];
  int rows = static_cast<int>(M.size());
  int cols = rows ? static_cast<int>(M[0].size()) : 0;
  Mat<K> out = Mat<K>::Constant(rows, cols, K(0));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      out(r, c) = M[static_cast<size_t>(r)][static_cast<size_t>(c)].evaluate(pt);
  return out;
}

// dim H^k(A, a) at a specialized point
template <class K>
int aomotoHomologyDimAt(const AomotoComplex<K>& C, int k, const std::vector<K>& pt) {
  int dim = C.dims[static_cast<size_t>(k)];
  int rin = 0, rout = 0;
  if (k >= 1) rin = rank(aomotoMapAt(C, k - 1, pt));
  if (k < static_cast<int>(C.maps.size())) rout = rank(aomotoMapAt(C, k, pt));
  return dim - rin - rout;
}

// ---------------------------------------------------------------------------
// linearized Alexander invariant B presented by
// Delta = [ Koszul differential E3 (x) S | constant inclusion of ann(I2) ]

template <class K>
struct AlexanderInvariant {
  RingPtr aring;
  Presentation<K> minimalPresentation;  // gens of degree 2
  RationalSeries hs;
  int gens = 0, rels = 0;
  std::vector<Poly<K>> fitt0;           // zeroth Fitting ideal of B
};

template <class K>
AlexanderInvariant<K> linearizedAlexander(const OSAlgebra<K>& os, const RingPtr& aring) {
  int n = os.n();
  ExtPtr E = os.E;
  ExtQuotient<K> Efree(E, {});
  const std::vector<EMask>& e2 = Efree.basisMasks(2);
  const std::vector<EMask>& e3 = Efree.basisMasks(3);
  std::map<EMask, int> e2Index;
  for (size_t i = 0; i < e2.size(); ++i) e2Index[e2[i]] = static_cast<int>(i);

  // ann(I2) under the monomial pairing
  std::vector<ExtElem<K>> quads = os.quadraticRelations();
  Mat<K> relMat = Mat<K>::Constant(static_cast<int>(quads.size()), static_cast<int>(e2.size()), K(0));
  for (size_t q = 0; q < quads.size(); ++q)
    for (auto& tm : quads[q].terms()) relMat(static_cast<int>(q), e2Index.at(tm.first)) = tm.second;
  Mat<K> ann = quads.empty()
                   ? Mat<K>::Constant(static_cast<int>(e2.size()), static_cast<int>(e2.size()), K(0))
                   : kernel_basis(relMat);
  if (quads.empty()) {
    for (int i = 0; i < static_cast<int>(e2.size()); ++i) ann(i, i) = K(1);
  }

  FreeMod F{aring, std::vector<int>(e2.size(), 2)};
  std::vector<ModVec<K>> cols;
  // constant block
  for (int c = 0; c < ann.cols(); ++c) {
    ModVec<K> v = zeroVec<K>(aring, static_cast<int>(e2.size()));
    for (int r = 0; r < ann.rows(); ++r)
      if (!ann(r, c).isZero()) v[static_cast<size_t>(r)] = Poly<K>(aring, ann(r, c));
    cols.push_back(std::move(v));
  }
  // Koszul block: e_{ijk} -> x_i e_{jk} - x_j e_{ik} + x_k e_{ij}
  for (EMask m : e3) {
    ModVec<K> v = zeroVec<K>(aring, static_cast<int>(e2.size()));
    EMask mm = m;
    int q = 1;
    while (mm) {
      int i = std::countr_zero(mm);
      mm &= mm - 1;
      K sign = (q % 2 == 1) ? K(1) : K(-1);
      v[static_cast<size_t>(e2Index.at(m & ~(EMask(1) << i)))] =
          Poly<K>::variable(aring, static_cast<size_t>(i), sign);
      ++q;
    }
    cols.push_back(std::move(v));
  }

  // minimal presentation: resolve one extra step so that redundant relations
  // (dependent with constant coefficients) are cancelled by unit stripping
  Presentation<K> rawPres{F, cols};
  FreeComplex<K> C = freeResolution(rawPres, 2);
  minimalize(C);
  C.shifts.resize(std::min<size_t>(C.shifts.size(), 2));
  C.maps.resize(std::min<size_t>(C.maps.size(), 1));

  AlexanderInvariant<K> B;
  B.aring = aring;
  B.gens = static_cast<int>(C.shifts[0].size());
  B.rels = C.shifts.size() > 1 ? static_cast<int>(C.shifts[1].size()) : 0;
  Presentation<K> pres{FreeMod{aring, C.shifts[0]},
                       C.maps.empty() ? std::vector<ModVec<K>>{} : matrixToCols(C.maps[0], aring)};
  B.minimalPresentation = pres;
  B.hs = hilbertSeries(pres);

  // Fitt_0: maximal minors of the presentation matrix
  if (B.rels >= B.gens && B.gens > 0) {
    const auto& M = C.maps[0];
    std::vector<int> idx(static_cast<size_t>(B.rels));
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::vector<int> comb;
    std::function<void(int)> rec = [&](int start) {
      if (static_cast<int>(comb.size()) == B.gens) {
        // determinant of the submatrix on these columns
        std::function<Poly<K>(std::vector<int>, std::vector<int>)> det =
            [&](std::vector<int> rows, std::vector<int> colsIdx) {
              if (rows.size() == 1) return M[static_cast<size_t>(rows[0])][static_cast<size_t>(colsIdx[0])];
              Poly<K> s(aring);
              for (size_t c = 0; c < colsIdx.size(); ++c) {
                const Poly<K>& e = M[static_cast<size_t>(rows[0])][static_cast<size_t>(colsIdx[c])];
                if (e.isZero()) continue;
                std::vector<int> r2(rows.begin() + 1, rows.end());
                std::vector<int> c2 = colsIdx;
                c2.erase(c2.begin() + static_cast<long>(c));
                Poly<K> term = e * det(r2, c2);
                s += (c % 2 == 0) ? term : -term;
              }
              return s;
            };
        std::vector<int> allRows(static_cast<size_t>(B.gens));
        for (int r = 0; r < B.gens; ++r) allRows[static_cast<size_t>(r)] = r;
        Poly<K> d = det(allRows, comb);
        if (!d.isZero()) B.fitt0.push_back(d);
        return;
      }
      for (int i = start; i < B.rels; ++i) {
        comb.push_back(i);
        rec(i + 1);
        comb.pop_back();
      }
    };
    rec(0);
  }
  return B;
}

// Chen ranks theta_k = coefficients of HS(B), k >= 2
template <class K>
std::vector<long> chenRanks(const AlexanderInvariant<K>& B, int kmax) {
  auto c = B.hs.expand(kmax);
  std::vector<long> out;
  for (int k = 0; k <= kmax; ++k) out.push_back(c[static_cast<size_t>(k)].isZero() ? 0 : c[static_cast<size_t>(k)].toLong());
  return out;
}

// ---------------------------------------------------------------------------
// R^1 components: local candidates from rank-2 flats, essential candidates
// from neighborly partitions / nets; both verification gates from the spec.

template <class K>
struct ResonanceComponent {
  std::vector<Poly<K>> definingForms;  // linear forms in the a-variables
  int projDim = 0;
  bool essential = false;
  std::vector<int> flat;                     // local: the flat's hyperplanes
  std::vector<std::vector<int>> partition;   // essential: the blocks
  bool fittingGate = false;
  bool rankGate = false;
};

namespace detail {

// basis of the candidate subspace (as columns of an n x d matrix)
template <class K>
Mat<K> componentBasis(int n, const ResonanceComponent<K>& comp, const RingPtr& aring) {
  Mat<K> forms = Mat<K>::Constant(static_cast<int>(comp.definingForms.size()), n, K(0));
  for (size_t r = 0; r < comp.definingForms.size(); ++r)
    for (auto& tm : comp.definingForms[r].terms())
      for (int j = 0; j < n; ++j)
        if (tm.first.e[static_cast<size_t>(j)] == 1) forms(static_cast<int>(r), j) = tm.second;
  return kernel_basis(forms);
}

}  // namespace detail

template <class K>
std::vector<ResonanceComponent<K>> resonanceR1(const Arrangement<K>& A, const OSAlgebra<K>& os,
                                               const IntersectionLattice& L,
                                               const AlexanderInvariant<K>& B,
                                               const AomotoComplex<K>& aomoto, Rng& rng) {
  int n = A.n();
  const RingPtr& aring = B.aring;
  std::vector<ResonanceComponent<K>> cands;

  // local: flats with mu >= 2, i.e. at least three hyperplanes
  for (int f = 0; f < L.size(); ++f) {
    if (L.flats[static_cast<size_t>(f)].rank != 2) continue;
    const auto& X = L.flats[static_cast<size_t>(f)].contains;
    if (X.size() < 3) continue;
    ResonanceComponent<K> c;
    c.flat = X;
    c.projDim = static_cast<int>(X.size()) - 2;
    Poly<K> sum(aring);
    for (int i : X) sum += Poly<K>::variable(aring, static_cast<size_t>(i));
    for (int i = 0; i < n; ++i)
      if (!std::binary_search(X.begin(), X.end(), i))
        c.definingForms.push_back(Poly<K>::variable(aring, static_cast<size_t>(i)));
    c.definingForms.push_back(sum);
    cands.push_back(std::move(c));
  }
  // essential: neighborly partitions with >= 3 blocks
  for (auto& part : neighborlyPartitions(L, n)) {
    if (part.size() < 3) continue;
    ResonanceComponent<K> c;
    c.essential = true;
    c.partition = part;
    c.projDim = static_cast<int>(part.size()) - 2;
    // equal within blocks; weighted sum of block values vanishes
    for (auto& block : part)
      for (size_t j = 1; j < block.size(); ++j)
        c.definingForms.push_back(Poly<K>::variable(aring, static_cast<size_t>(block[0])) -
                                  Poly<K>::variable(aring, static_cast<size_t>(block[j])));
    Poly<K> sum(aring);
    for (int i = 0; i < n; ++i) sum += Poly<K>::variable(aring, static_cast<size_t>(i));
    c.definingForms.push_back(sum);
    cands.push_back(std::move(c));
  }

  // verification gates
  std::vector<ResonanceComponent<K>> out;
  for (auto& c : cands) {
    Mat<K> basis = detail::componentBasis(n, c, aring);
    if (basis.cols() != c.projDim + 1) continue;  // degenerate candidate
    // gate (a): Fitt_0(B) vanishes identically on the subspace: substitute the
    // generic parametrization with parameter variables
    RingPtr pring = makeRing(static_cast<size_t>(basis.cols()), "s");
    std::vector<Poly<K>> images;
    for (int i = 0; i < n; ++i) {
      Poly<K> p(pring);
      for (int j = 0; j < basis.cols(); ++j)
        if (!basis(i, j).isZero()) p += Poly<K>::variable(pring, static_cast<size_t>(j), basis(i, j));
      images.push_back(p);
    }
    c.fittingGate = true;
    for (auto& g : B.fitt0)
      if (!g.substitute(pring, images).isZero()) { c.fittingGate = false; break; }
    // gate (b): rank drop of the Aomoto d^1 at three random points
    c.rankGate = true;
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<K> pt(static_cast<size_t>(n), K(0));
      bool nonzero = false;
      while (!nonzero) {
        std::vector<K> params;
        for (int j = 0; j < basis.cols(); ++j) params.push_back(K(rng.integer(-20, 20)));
        for (int i = 0; i < n; ++i) {
          K v(0);
          for (int j = 0; j < basis.cols(); ++j) v += basis(i, j) * params[static_cast<size_t>(j)];
          pt[static_cast<size_t>(i)] = v;
          if (!v.isZero()) nonzero = true;
        }
      }
      if (aomotoHomologyDimAt(aomoto, 1, pt) < 1) { c.rankGate = false; break; }
    }
    if (c.fittingGate && c.rankGate) out.push_back(c);
  }
  // deterministic order: sort by defining forms' string form
  std::sort(out.begin(), out.end(), [](const ResonanceComponent<K>& a, const ResonanceComponent<K>& b) {
    std::string sa, sb;
    for (auto& f : a.definingForms) sa += f.str() + ";";
    for (auto& f : b.definingForms) sb += f.str() + ";";
    return sa < sb;
  });
  return out;
}

// rank-deficiency minors of the first Aomoto map beyond the generic rank
template <class K>
std::vector<Poly<K>> resonanceR1Minors(const AomotoComplex<K>& C, int n) {
  if (n > 8) throw std::invalid_argument("resonanceR1Minors: n <= 8 guard");
  const auto& M = C.maps[1];  // A_1 -> A_2
  int rows = static_cast<int>(M.size());
  int cols = static_cast<int>(M[0].size());
  int r = n - 1;  // generic rank of d^1 on A_1
  std::vector<Poly<K>> minors;
  std::vector<int> rsel, csel;
  std::function<Poly<K>(std::vector<int>, std::vector<int>)> det =
      [&](std::vector<int> rws, std::vector<int> cls) {
        if (rws.size() == 1) return M[static_cast<size_t>(rws[0])][static_cast<size_t>(cls[0])];
        Poly<K> s(C.aring);
        for (size_t c = 0; c < cls.size(); ++c) {
          const Poly<K>& e = M[static_cast<size_t>(rws[0])][static_cast<size_t>(cls[c])];
          if (e.isZero()) continue;
          std::vector<int> r2(rws.begin() + 1, rws.end());
          std::vector<int> c2 = cls;
          c2.erase(c2.begin() + static_cast<long>(c));
          Poly<K> term = e * det(r2, c2);
          s += (c % 2 == 0) ? term : -term;
        }
        return s;
      };
  std::function<void(int)> recC = [&](int start) {
    if (static_cast<int>(csel.size()) == r) {
      std::function<void(int)> recR = [&](int rs) {
        if (static_cast<int>(rsel.size()) == r) {
          Poly<K> d = det(rsel, csel);
          if (!d.isZero()) minors.push_back(d);
          return;
        }
        for (int i = rs; i < rows; ++i) {
          rsel.push_back(i);
          recR(i + 1);
          rsel.pop_back();
        }
      };
      recR(0);
      return;
    }
    for (int i = start; i < cols; ++i) {
      csel.push_back(i);
      recC(i + 1);
      csel.pop_back();
    }
  };
  recC(0);
  return minors;
}

// ---------------------------------------------------------------------------
// LCS ranks via Witt-style Mobius inversion of the factored Poincare
// polynomial, plus the product self-check.

inline long mobiusNumber(long n) {
  long m = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
  }
  if (n > 1) m = -m;
  return m;
}

inline long wittNumber(int k, long a) {
  // (1/k) sum_{d | k} mu(d) a^{k/d}
  long long sum = 0;
  for (int d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    long mu = mobiusNumber(d);
    if (mu == 0) continue;
    long long pw = 1;
    for (int i = 0; i < k / d; ++i) pw *= a;
    sum += mu * pw;
  }
  return static_cast<long>(sum / k);
}

struct LCSResult {
  std::vector<long> phi;        // phi_1..phi_kmax
  std::vector<long> expansion;  // prod 1/(1-t^k)^{phi_k} coefficients
  bool productIdentity = false; // prod (1-t^k)^{phi_k} = prod (1-a_i t) mod t^{kmax+1}
};

// roots = exponents {a_i} from a factorization pi(A,t) = prod (1 + a_i t)
inline LCSResult lcsRanks(const std::vector<int>& roots, int kmax) {
  LCSResult out;
  for (int k = 1; k <= kmax; ++k) {
    long s = 0;
    for (int a : roots) s += wittNumber(k, a);
    out.phi.push_back(s);
  }
  // truncated series arithmetic
  auto mulTrunc = [&](std::vector<Rat> a, const std::vector<Rat>& b) {
    std::vector<Rat> c(static_cast<size_t>(kmax) + 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; i + j <= static_cast<size_t>(kmax) && j < b.size(); ++j)
        c[i + j] += a[i] * b[j];
    return c;
  };
  // expansion of prod 1/(1-t^k)^{phi_k}
  std::vector<Rat> exp(static_cast<size_t>(kmax) + 1, Rat(0));
  exp[0] = Rat(1);
  for (int k = 1; k <= kmax; ++k) {
    // 1/(1-t^k) = sum t^{km}
    std::vector<Rat> geo(static_cast<size_t>(kmax) + 1, Rat(0));
    for (int m = 0; m * k <= kmax; ++m) geo[static_cast<size_t>(m * k)] = Rat(1);
    for (long c = 0; c < out.phi[static_cast<size_t>(k - 1)]; ++c) exp = mulTrunc(exp, geo);
  }
  for (auto& c : exp) out.expansion.push_back(c.toLong());
  // self-check: prod (1-t^k)^{phi_k} = prod (1 - a_i t)
  std::vector<Rat> lhs(static_cast<size_t>(kmax) + 1, Rat(0));
  lhs[0] = Rat(1);
  for (int k = 1; k <= kmax; ++k) {
    std::vector<Rat> f(static_cast<size_t>(kmax) + 1, Rat(0));
    f[0] = Rat(1);
    if (k <= kmax) f[static_cast<size_t>(k)] = Rat(-1);
    for (long c = 0; c < out.phi[static_cast<size_t>(k - 1)]; ++c) lhs = mulTrunc(lhs, f);
  }
  std::vector<Rat> rhs(static_cast<size_t>(kmax) + 1, Rat(0));
  rhs[0] = Rat(1);
  for (int a : roots) {
    std::vector<Rat> f{Rat(1), Rat(-a)};
    rhs = mulTrunc(rhs, f);
  }
  out.productIdentity = (lhs == rhs);
  return out;
}

// integer factorization pi = prod (1 + a_i t); nullopt when it fails
inline std::optional<std::vector<int>> factorPoincare(const QPoly& pi) {
  QPoly p = pi;
  std::vector<int> roots;
  while (p.degree() > 0) {
    long lead = 0;
    if (!p.coeff(p.degree()).isInteger()) return std::nullopt;
    lead = p.coeff(p.degree()).toLong();
    bool found = false;
    for (long a = 1; a <= std::abs(lead); ++a) {
      if (lead % a != 0) continue;
      // try dividing by (1 + a t)
      QPoly q, r;
      QPoly::divmod(p, QPoly(std::vector<Rat>{Rat(1), Rat(a)}), q, r);
      if (r.isZero()) {
        roots.push_back(static_cast<int>(a));
        p = q;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  if (!(p == QPoly(1))) return std::nullopt;
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Suciu's Chen-rank formula: (k-1) sum_r h_r C(r+k-1, k)
inline long suciuFormula(const std::map<int, long>& h, int k) {
  if (k < 2) throw std::invalid_argument("suciuFormula: k >= 2");
  Rat total(0);
  for (auto& [r, count] : h) {
    if (r < 1 || count == 0) continue;
    total += Rat(count) * binomialRat(r + k - 1, k);
  }
  total *= Rat(k - 1);
  return total.toLong();
}

// ---------------------------------------------------------------------------
// holonomy Lie algebra presentation data

struct HolonomyPresentation {
  int n = 0;
  // one family per rank-2 flat X with |X| >= 2: brackets [x_j, sum_{i in X} x_i]
  // for all j in X except the last (the omitted one is dependent)
  std::vector<std::pair<int, std::vector<int>>> relations;  // (j, X)
};

inline HolonomyPresentation holonomyPresentation(const IntersectionLattice& L, int n) {
  HolonomyPresentation h;
  h.n = n;
  for (int f = 0; f < L.size(); ++f) {
    if (L.flats[static_cast<size_t>(f)].rank != 2) continue;
    const auto& X = L.flats[static_cast<size_t>(f)].contains;
    if (X.size() < 2) continue;
    for (size_t j = 0; j + 1 < X.size(); ++j) h.relations.emplace_back(X[j], X);
  }
  return h;
}

}  // namespace arr
