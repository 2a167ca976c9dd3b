#pragma once

#include <vector>

#include "arr/hilbert.hpp"
#include "arr/osalg.hpp"
#include "arr/satquot.hpp"

namespace arr {

// ---------------------------------------------------------------------------
// The Orlik-Terao algebra C(A) = K[y_1..y_n] / I_A, with one generator per
// circuit recording the actual dependency coefficients.

template <class K>
struct OTAlgebra {
  RingPtr ring;                  // y_1 .. y_n
  std::vector<Circuit<K>> circ;
  std::vector<Poly<K>> gens;     // del-style generator per circuit
};

template <class K>
OTAlgebra<K> otIdeal(const Arrangement<K>& A) {
  OTAlgebra<K> ot;
  std::vector<std::string> names;
  for (int i = 0; i < A.n(); ++i) names.push_back("y" + std::to_string(i + 1));
  ot.ring = makeRing(names);
  ot.circ = circuits(A);
  for (auto& c : ot.circ) {
    Poly<K> g(ot.ring);
    for (size_t j = 0; j < c.support.size(); ++j) {
      Monomial m(ot.ring->nvars());
      for (size_t k = 0; k < c.support.size(); ++k) {
        if (k == j) continue;
        m.e[static_cast<size_t>(c.support[k])] = 1;
        m.deg += 1;
      }
      g += Poly<K>::term(ot.ring, m, c.coeffs[j]);
    }
    ot.gens.push_back(g);
  }
  return ot;
}

// pi(A, t/(1-t)) as a rational series with denominator (1-t)^{deg pi}
inline RationalSeries poincareReciprocalSubstitution(const QPoly& pi) {
  int r = pi.degree();
  QPoly num;
  QPoly oneMinusT(std::vector<Rat>{Rat(1), Rat(-1)});
  for (int k = 0; k <= r; ++k) {
    QPoly term = QPoly(std::vector<Rat>{pi.coeff(k)}) * QPoly::monomial(k);
    for (int j = 0; j < r - k; ++j) term *= oneMinusT;
    num += term;
  }
  return {num, one_minus_t_power(r)};
}

template <class K>
struct OTHilbertChecks {
  RationalSeries hsCA;      // computed from a Groebner basis
  RationalSeries predicted; // pi(A, t/(1-t))
  QPoly hsAOT;              // Artinian quotient by the squares
  QPoly poincare;
  bool caMatches = false;
  bool aotMatches = false;
};

template <class K>
OTHilbertChecks<K> otHilbertChecks(const Arrangement<K>& A, const OTAlgebra<K>& ot) {
  OTHilbertChecks<K> out;
  out.poincare = poincarePoly(intersectionLattice(A));
  out.hsCA = hilbertSeriesOfIdealQuotient(ot.ring, ot.gens);
  out.predicted = poincareReciprocalSubstitution(out.poincare);
  out.caMatches = (out.hsCA == out.predicted);

  std::vector<Poly<K>> aotGens = ot.gens;
  for (size_t i = 0; i < ot.ring->nvars(); ++i) {
    Poly<K> y = Poly<K>::variable(ot.ring, i);
    aotGens.push_back(y * y);
  }
  RationalSeries hsAot = hilbertSeriesOfIdealQuotient(ot.ring, aotGens);
  RationalSeries poly = hsAot.reduced();
  if (poly.den.degree() != 0) throw std::logic_error("otHilbert: AOT not Artinian");
  Rat c = poly.den.coeff(0);
  for (int i = 0; i <= poly.num.degree(); ++i)
    out.hsAOT += QPoly::monomial(i, poly.num.coeff(i) / c);
  out.aotMatches = (out.hsAOT == out.poincare);
  return out;
}

// 2-formality: codim of the zero set of the quadratic part of I_A equals n-l
template <class K>
struct TwoFormalityReport {
  bool formal = false;
  int codim = 0;
  int expected = 0;
  int quadricCount = 0;
};

template <class K>
TwoFormalityReport<K> twoFormality(const Arrangement<K>& A, const OTAlgebra<K>& ot) {
  TwoFormalityReport<K> rep;
  std::vector<Poly<K>> quadrics;
  for (auto& g : ot.gens)
    if (!g.isZero() && g.degreeHomog() == 2) quadrics.push_back(g);
  rep.quadricCount = static_cast<int>(quadrics.size());
  int n = A.n();
  int dim = quadrics.empty() ? n : idealDimension(ot.ring, quadrics);
  rep.codim = n - dim;
  rep.expected = n - rank(Mat<K>(A.forms));
  rep.formal = (rep.codim == rep.expected);
  return rep;
}

template <class K>
struct OTResolutionReport {
  BettiTable betti;
  int regularity = 0;
  int pdim = 0;
  bool cohenMacaulay = false;  // pdim == n - l, verified not assumed
  bool regularityMatches = false;  // == l - 1
};

template <class K>
OTResolutionReport<K> otResolution(const Arrangement<K>& A, const OTAlgebra<K>& ot) {
  OTResolutionReport<K> rep;
  auto C = minimalFreeResolution(idealQuotientPresentation(ot.ring, ot.gens));
  rep.betti = C.betti();
  rep.regularity = rep.betti.regularity();
  rep.pdim = rep.betti.pdim();
  int l = rank(Mat<K>(A.forms));
  rep.cohenMacaulay = (rep.pdim == A.n() - l);
  rep.regularityMatches = (rep.regularity == l - 1);
  return rep;
}

// every generator lies in the kernel of y_i -> prod_{j != i} l_j
template <class K>
bool otKernelSubstitutionCheck(const Arrangement<K>& A, const OTAlgebra<K>& ot,
                               const RingPtr& coordRing) {
  std::vector<Poly<K>> alpha;
  for (int i = 0; i < A.n(); ++i) {
    Poly<K> p(coordRing, K(1));
    for (int j = 0; j < A.n(); ++j)
      if (j != i) p *= A.form(j, coordRing);
    alpha.push_back(p);
  }
  for (auto& g : ot.gens)
    if (!g.substitute(coordRing, alpha).isZero()) return false;
  return true;
}

}  // namespace arr
