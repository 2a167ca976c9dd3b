#pragma once

#include <cmath>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "arr/arrangement.hpp"
#include "arr/hilbert.hpp"
#include "arr/mora.hpp"
#include "arr/satquot.hpp"

namespace arr {

// ---------------------------------------------------------------------------
// D^p(A, m) as the kernel of the explicit constraint matrix
//   [ coefficient block | diag(l_i^{m_i}) slacks ],
// one row per (hyperplane, (p-1)-subset of coordinates).  Curves substitute
// f_i for l_i.

template <class K>
struct DerivationModule {
  RingPtr ring;
  int p = 1;
  std::vector<int> thetaShifts;           // shifts of the theta coordinates
  std::vector<ModVec<K>> kernelGens;      // full kernel vectors (theta + slack)
  std::vector<int> genDegrees;
  FreeMod kernelAmbient;                  // ambient free module of the kernel
  Presentation<K> presentation;           // of the module D = coker(rels -> gens)

  int thetaCount() const { return static_cast<int>(thetaShifts.size()); }

  // theta coordinates of generator g
  ModVec<K> thetaPart(int g) const {
    ModVec<K> v;
    for (int j = 0; j < thetaCount(); ++j) v.push_back(kernelGens[static_cast<size_t>(g)][static_cast<size_t>(j)]);
    return v;
  }
};

namespace detail {
inline std::vector<std::vector<int>> subsetsOfSize(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) { out.push_back(cur); return; }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}
}  // namespace detail

// generic construction from defining polynomials f_i with multiplicities
template <class K>
DerivationModule<K> derivationModuleOf(const RingPtr& R, const std::vector<Poly<K>>& fs,
                                       const std::vector<int>& mult, int p = 1) {
  int l = static_cast<int>(R->nvars());
  int nf = static_cast<int>(fs.size());
  if (p < 0 || p > l) throw std::invalid_argument("derivationModule: bad exterior power");
  for (auto& f : fs)
    if (!f.isHomogeneous() || f.isZero())
      throw std::invalid_argument("derivationModule: non-homogeneous input");

  auto thetaSets = detail::subsetsOfSize(l, p);       // columns J
  auto argSets = detail::subsetsOfSize(l, p - 1);     // row part K

  // degrees
  std::vector<int> fdeg;
  for (auto& f : fs) fdeg.push_back(f.degreeHomog());

  // rows (i, K) have shift p-1 - (deg f_i - 1) ... derived so that all theta
  // columns can carry shift 0 and slack columns shift are positive
  // entry(theta_J) has degree deg(partial f_i) = d_i - 1, so row shift
  // a_{i,K} = -(d_i - 1); slack column shift = m_i * d_i + a_{i,K}
  std::vector<int> rowShifts;
  std::vector<int> colShifts(thetaSets.size(), 0);
  for (int i = 0; i < nf; ++i)
    for (size_t k = 0; k < argSets.size(); ++k) rowShifts.push_back(1 - fdeg[static_cast<size_t>(i)]);
  for (int i = 0; i < nf; ++i)
    for (size_t k = 0; k < argSets.size(); ++k)
      colShifts.push_back(mult[static_cast<size_t>(i)] * fdeg[static_cast<size_t>(i)] + 1 - fdeg[static_cast<size_t>(i)]);

  FreeMod rowsF{R, rowShifts};
  int ncols = static_cast<int>(colShifts.size());
  int nrows = static_cast<int>(rowShifts.size());

  std::vector<ModVec<K>> cols(static_cast<size_t>(ncols));
  for (auto& c : cols) c = zeroVec<K>(R, nrows);

  // theta columns: row (i,K), column J: +- partial_{J \ K} f_i when K subset J
  for (size_t cj = 0; cj < thetaSets.size(); ++cj) {
    const auto& J = thetaSets[cj];
    int row = 0;
    for (int i = 0; i < nf; ++i) {
      for (size_t ak = 0; ak < argSets.size(); ++ak, ++row) {
        const auto& Ks = argSets[ak];
        // theta_J(df_i, dx_{K}) = +- (partial f_i / partial x_j) where J = {j} u K
        // sign from the position of j inside J relative to K
        std::vector<int> diff;
        std::set_difference(J.begin(), J.end(), Ks.begin(), Ks.end(), std::back_inserter(diff));
        if (diff.size() != 1) continue;
        if (!std::includes(J.begin(), J.end(), Ks.begin(), Ks.end())) continue;
        int j = diff[0];
        // sign of the permutation sorting (j, K...) into J
        int pos = static_cast<int>(std::lower_bound(J.begin(), J.end(), j) - J.begin());
        K sign = (pos % 2 == 0) ? K(1) : K(-1);
        cols[cj][static_cast<size_t>(row)] += sign * fs[static_cast<size_t>(i)].derivative(static_cast<size_t>(j));
      }
    }
  }
  // slack columns: -(f_i)^{m_i} on its own row
  for (int i = 0, sc = static_cast<int>(thetaSets.size()); i < nf; ++i)
    for (size_t ak = 0; ak < argSets.size(); ++ak, ++sc) {
      int row = i * static_cast<int>(argSets.size()) + static_cast<int>(ak);
      Poly<K> pw(R, K(1));
      for (int t = 0; t < mult[static_cast<size_t>(i)]; ++t) pw *= fs[static_cast<size_t>(i)];
      cols[static_cast<size_t>(sc)][static_cast<size_t>(row)] = -pw;
    }

  GBResult<K> gb = groebner(rowsF, cols, ModOrderMode::TOP, GBOptions{true, true});

  DerivationModule<K> D;
  D.ring = R;
  D.p = p;
  D.thetaShifts.assign(thetaSets.size(), 0);
  D.kernelAmbient = FreeMod{R, colShifts};
  D.kernelGens = gb.syz;
  for (auto& s : gb.syz) D.genDegrees.push_back(vecDegree(s, colShifts));

  // presentation of D: relations = syzygies among the kernel generators
  if (!D.kernelGens.empty()) {
    FreeMod F{R, D.genDegrees};
    GBResult<K> gb2 = groebner(D.kernelAmbient, D.kernelGens, ModOrderMode::TOP, GBOptions{true, true});
    D.presentation = Presentation<K>{F, gb2.syz};
  } else {
    D.presentation = Presentation<K>{FreeMod{R, {}}, {}};
  }
  return D;
}

template <class K>
DerivationModule<K> derivationModule(const Arrangement<K>& A, int p = 1,
                                     const RingPtr& ringIn = nullptr) {
  RingPtr R = ringIn ? ringIn : A.ring();
  std::vector<Poly<K>> fs;
  std::vector<int> mult;
  for (int i = 0; i < A.n(); ++i) {
    fs.push_back(A.form(i, R));
    mult.push_back(A.multiplicity(i));
  }
  return derivationModuleOf(R, fs, mult, p);
}

// ---------------------------------------------------------------------------
// freeness, exponents, projective dimension

// determinant of the l x l coefficient matrix of theta_1..theta_l
template <class K>
Poly<K> saitoDeterminant(const std::vector<ModVec<K>>& thetas, const RingPtr& R) {
  int l = static_cast<int>(R->nvars());
  if (static_cast<int>(thetas.size()) != l)
    throw std::invalid_argument("saito: need exactly l derivations");
  // cofactor expansion (l <= 4 at desk scale)
  std::function<Poly<K>(std::vector<int>, std::vector<int>)> det = [&](std::vector<int> rows,
                                                                       std::vector<int> cols) {
    if (rows.size() == 1) return thetas[static_cast<size_t>(cols[0])][static_cast<size_t>(rows[0])];
    Poly<K> s(R);
    for (size_t c = 0; c < cols.size(); ++c) {
      Poly<K> e = thetas[static_cast<size_t>(cols[c])][static_cast<size_t>(rows[0])];
      if (e.isZero()) continue;
      std::vector<int> r2(rows.begin() + 1, rows.end());
      std::vector<int> c2 = cols;
      c2.erase(c2.begin() + static_cast<long>(c));
      Poly<K> minor = det(r2, c2);
      Poly<K> term = e * minor;
      s += (c % 2 == 0) ? term : -term;
    }
    return s;
  };
  std::vector<int> all(static_cast<size_t>(l));
  for (int i = 0; i < l; ++i) all[static_cast<size_t>(i)] = i;
  return det(all, all);
}

template <class K>
struct FreenessReport {
  bool isFree = false;
  std::vector<int> exponents;  // sorted, when free
  int pdim = 0;
  BettiTable betti;
  std::vector<ModVec<K>> basisTheta;  // free basis theta-parts, when free
};

template <class K>
FreenessReport<K> freeness(const DerivationModule<K>& D) {
  FreenessReport<K> rep;
  FreeComplex<K> C = minimalFreeResolution(D.presentation);
  rep.betti = C.betti();
  rep.pdim = static_cast<int>(C.shifts.size()) - 1;
  rep.isFree = (rep.pdim == 0);
  if (rep.isFree) {
    rep.exponents = C.shifts[0];
    std::sort(rep.exponents.begin(), rep.exponents.end());
  }
  return rep;
}

// freeness of an arrangement, with a Saito-verified witness basis when free
template <class K>
FreenessReport<K> freeness(const Arrangement<K>& A) {
  RingPtr R = A.ring();
  DerivationModule<K> D = derivationModule(A, 1, R);
  FreenessReport<K> rep = freeness(D);
  if (!rep.isFree) return rep;
  Poly<K> Q = A.definingPoly(R);
  int l = A.l();
  // find l kernel generators whose degrees match the exponents and whose
  // coefficient determinant is a nonzero multiple of Q
  std::vector<int> pick;
  std::function<bool(size_t, std::multiset<int>&)> rec = [&](size_t start,
                                                             std::multiset<int>& need) {
    if (static_cast<int>(pick.size()) == l) {
      std::vector<ModVec<K>> cand;
      for (int g : pick) cand.push_back(D.thetaPart(g));
      Poly<K> det = saitoDeterminant(cand, R);
      if (det.isZero()) return false;
      K c = det.leadCoeff() / Q.leadCoeff();
      if (det == c * Q) {
        rep.basisTheta = cand;
        return true;
      }
      return false;
    }
    for (size_t i = start; i < D.kernelGens.size(); ++i) {
      int d = D.genDegrees[i];
      auto it = need.find(d);
      if (it == need.end()) continue;
      need.erase(it);
      pick.push_back(static_cast<int>(i));
      if (rec(i + 1, need)) return true;
      pick.pop_back();
      need.insert(d);
    }
    return false;
  };
  std::multiset<int> need(rep.exponents.begin(), rep.exponents.end());
  rec(0, need);
  return rep;
}

enum class SaitoStatus { FreeBasis, NotMembers, DeterminantFails };

// membership check then determinant comparison with c * Q(A,m)
template <class K>
SaitoStatus saitoCheck(const std::vector<ModVec<K>>& thetas, const Arrangement<K>& A,
                       const RingPtr& R) {
  // membership: theta(l_i) divisible by l_i^{m_i}
  for (auto& th : thetas) {
    for (int i = 0; i < A.n(); ++i) {
      Poly<K> li = A.form(i, R);
      Poly<K> val(R);
      for (int j = 0; j < A.l(); ++j) val += th[static_cast<size_t>(j)] * li.derivative(static_cast<size_t>(j));
      Poly<K> pw(R, K(1));
      for (int t = 0; t < A.multiplicity(i); ++t) pw *= li;
      // divisibility via one-element reduction
      GBResult<K> g = groebnerIdeal(R, std::vector<Poly<K>>{pw}, GBOptions{false, true});
      if (!normalFormIdeal(g, val).isZero()) return SaitoStatus::NotMembers;
    }
  }
  Poly<K> det = saitoDeterminant(thetas, R);
  Poly<K> Q = A.definingPoly(R);
  if (det.isZero()) return SaitoStatus::DeterminantFails;
  // det == c Q exactly?
  if (det.degreeHomog() != Q.degreeHomog()) return SaitoStatus::DeterminantFails;
  K c = det.leadCoeff() / Q.leadCoeff();
  return (det == c * Q) ? SaitoStatus::FreeBasis : SaitoStatus::DeterminantFails;
}

// ---------------------------------------------------------------------------
// addition-deletion

struct AdditionDeletionReport {
  bool conclusive = false;
  bool inferredFree = false;
  std::vector<int> inferredExponents;
  std::vector<int> deletionExponents;     // A'
  std::vector<int> restrictionExponents;  // A'' (simple restriction)
  std::string note;
};

template <class K>
AdditionDeletionReport additionDeletion(const Arrangement<K>& A, int h) {
  AdditionDeletionReport rep;
  Triple<K> T = makeTriple(A, h);
  Arrangement<K> Ad = essentialize(T.deleted);
  Arrangement<K> Ar = T.restricted;
  Ar.mult.clear();  // the simple restriction
  Ar = essentialize(Ar);

  FreenessReport<K> fd = freeness(derivationModule(Ad));
  FreenessReport<K> fr = freeness(derivationModule(Ar));
  if (!fd.isFree || !fr.isFree) {
    rep.note = "deletion or restriction not free; no two clauses available";
    return rep;
  }
  rep.deletionExponents = fd.exponents;
  rep.restrictionExponents = fr.exponents;
  // the deleted arrangement may be non-essential relative to A: pad with 0
  while (rep.deletionExponents.size() < rep.restrictionExponents.size() + 1)
    rep.deletionExponents.insert(rep.deletionExponents.begin(), 0);

  // clauses (2)+(3) imply (1): exp(A') = exp(A'') u {e-1}, then A free with
  // exp(A'') u {e}
  std::multiset<int> d(rep.deletionExponents.begin(), rep.deletionExponents.end());
  std::multiset<int> r(rep.restrictionExponents.begin(), rep.restrictionExponents.end());
  std::multiset<int> extra = d;
  for (int x : r) {
    auto it = extra.find(x);
    if (it == extra.end()) { rep.note = "exponent multisets do not nest"; return rep; }
    extra.erase(it);
  }
  if (extra.size() != 1) {
    rep.note = "exponent multisets do not nest";
    return rep;
  }
  int e = *extra.begin() + 1;
  rep.conclusive = true;
  rep.inferredFree = true;
  rep.inferredExponents = rep.restrictionExponents;
  rep.inferredExponents.push_back(e);
  std::sort(rep.inferredExponents.begin(), rep.inferredExponents.end());
  rep.note = "inferred from deletion and restriction via addition-deletion";
  return rep;
}

// ---------------------------------------------------------------------------
// Solomon-Terao / Abe-Terao-Wakefield characteristic polynomial

template <class K>
struct SolomonTeraoResult {
  QPoly chi;        // characteristic normalization: prod (t - d_i) when free
  QPoly chiPoincare;  // (-t)^l chi(-1/t): prod (1 + d_i t) when free
};

template <class K>
SolomonTeraoResult<K> solomonTeraoChi(const Arrangement<K>& A) {
  RingPtr R = A.ring();
  int l = A.l();
  // Hilbert series numerators of D^p over (1-x)^l
  std::vector<QPoly> numer;
  for (int p = 0; p <= l; ++p) {
    if (p == 0) {
      numer.push_back(QPoly(1));  // D^0 = S
      continue;
    }
    DerivationModule<K> D = derivationModule(A, p, R);
    RationalSeries hs = hilbertSeries(D.presentation);
    // hs = N(x)/(1-x)^l exactly (presentation over l variables)
    numer.push_back(hs.num);
  }
  // chi(t) = coefficient of eps^l in sum_p N_p(1+eps) (t*eps - 1)^p;
  // lower-order coefficients must vanish
  int maxEps = l;
  std::vector<QPoly> acc(static_cast<size_t>(maxEps) + 1);  // eps-power -> poly in t
  for (int p = 0; p <= l; ++p) {
    // N_p(1+eps) as a polynomial in eps
    std::vector<Rat> nEps(static_cast<size_t>(maxEps) + 1, Rat(0));
    for (int k = 0; k <= numer[static_cast<size_t>(p)].degree(); ++k) {
      Rat c = numer[static_cast<size_t>(p)].coeff(k);
      if (c.isZero()) continue;
      // (1+eps)^k
      Rat binom(1);
      for (int e = 0; e <= std::min(k, maxEps); ++e) {
        nEps[static_cast<size_t>(e)] += c * binom;
        binom = binom * Rat(k - e, e + 1);
      }
    }
    // (t*eps - 1)^p = sum_j C(p,j) t^j eps^j (-1)^{p-j}
    Rat pj(1);
    for (int j = 0; j <= p; ++j) {
      Rat sign((p - j) % 2 == 0 ? 1 : -1);
      for (int e = 0; e + j <= maxEps; ++e)
        acc[static_cast<size_t>(e + j)] += QPoly::monomial(j, sign * pj * nEps[static_cast<size_t>(e)]);
      pj = pj * Rat(p - j, j + 1);
    }
  }
  for (int e = 0; e < maxEps; ++e)
    if (!acc[static_cast<size_t>(e)].isZero())
      throw std::logic_error("solomonTerao: limit does not exist (low-order terms)");
  SolomonTeraoResult<K> out;
  out.chi = acc[static_cast<size_t>(maxEps)];
  for (int k = 0; k <= out.chi.degree(); ++k) {
    Rat c = out.chi.coeff(k);
    if (c.isZero()) continue;
    out.chiPoincare += QPoly::monomial(l - k, ((l - k) % 2 == 0 ? c : -c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Yoshinaga's criterion for arrangements of lines in P^2

struct YoshinagaReport {
  bool free = false;
  bool poincareFactors = false;
  int a = 0, b = 0;
  std::vector<std::vector<int>> restrictionExponents;  // per hyperplane
};

template <class K>
YoshinagaReport yoshinagaP2(const Arrangement<K>& A) {
  if (A.l() != 3) throw std::invalid_argument("yoshinaga: l = 3 required");
  YoshinagaReport rep;
  IntersectionLattice L = intersectionLattice(A);
  QPoly pi = poincarePoly(L);
  // pi = (1+t)(1+at)(1+bt) with integer a, b?
  QPoly onePlusT(std::vector<Rat>{Rat(1), Rat(1)});
  QPoly q, r;
  QPoly::divmod(pi, onePlusT, q, r);
  if (!r.isZero() && pi.degree() == 3) return rep;
  long s = q.coeff(1).toLong(), prod = q.coeff(2).toLong();
  long disc = s * s - 4 * prod;
  long sq = static_cast<long>(std::lround(std::sqrt(static_cast<double>(disc))));
  if (disc < 0 || sq * sq != disc) return rep;
  rep.poincareFactors = true;
  rep.a = static_cast<int>((s - sq) / 2);
  rep.b = static_cast<int>((s + sq) / 2);

  bool all = true;
  for (int h = 0; h < A.n(); ++h) {
    Arrangement<K> Ar = restriction(A, h, L);  // Ziegler multirestriction
    DerivationModule<K> D = derivationModule(Ar);
    FreenessReport<K> f = freeness(D);  // always free on two variables
    std::vector<int> ex = f.exponents;
    rep.restrictionExponents.push_back(ex);
    if (!(ex == std::vector<int>{rep.a, rep.b})) all = false;
  }
  rep.free = all;
  return rep;
}

}  // namespace arr
