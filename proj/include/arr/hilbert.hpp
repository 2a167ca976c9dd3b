#pragma once

#include <algorithm>
#include <vector>

#include "arr/resolution.hpp"
#include "arr/series.hpp"

namespace arr {

namespace detail {

// minimal generators only
inline std::vector<Monomial> minimalizeMonomials(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.deg < b.deg; });
  for (auto& m : gens) {
    bool redundant = false;
    for (auto& g : out)
      if (g.divides(m)) { redundant = true; break; }
    if (!redundant) out.push_back(m);
  }
  return out;
}

}  // namespace detail

// Numerator of HS(S/I) * (1-t)^{-nvars} for a monomial ideal I, by the
// standard pivot-variable splitting  N(I) = N(I + x) + t * N(I : x).
inline QPoly monomialQuotientNumerator(std::vector<Monomial> gens) {
  gens = detail::minimalizeMonomials(std::move(gens));
  if (gens.empty()) return QPoly(1);
  for (auto& m : gens)
    if (m.isOne()) return QPoly();

  // base case: pairwise coprime generators -> product of (1 - t^deg)
  bool coprime = true;
  for (size_t i = 0; i < gens.size() && coprime; ++i)
    for (size_t j = i + 1; j < gens.size() && coprime; ++j)
      if (!gens[i].coprime(gens[j])) coprime = false;
  if (coprime) {
    QPoly r(1);
    for (auto& m : gens) r *= (QPoly(1) - QPoly::monomial(m.deg));
    return r;
  }

  // pick a variable occurring in the most generators
  size_t nv = gens[0].e.size();
  std::vector<int> cnt(nv, 0);
  for (auto& m : gens)
    for (size_t i = 0; i < nv; ++i)
      if (m.e[i]) ++cnt[i];
  size_t piv = static_cast<size_t>(std::max_element(cnt.begin(), cnt.end()) - cnt.begin());

  // I + <x_piv>
  std::vector<Monomial> plus;
  plus.push_back(Monomial::var(nv, piv));
  for (auto& m : gens)
    if (m.e[piv] == 0) plus.push_back(m);
  // I : x_piv
  std::vector<Monomial> colon;
  for (auto& m : gens) {
    Monomial q = m;
    if (q.e[piv]) { q.e[piv] -= 1; q.deg -= 1; }
    colon.push_back(q);
  }
  return monomialQuotientNumerator(std::move(plus)) +
         QPoly::monomial(1) * monomialQuotientNumerator(std::move(colon));
}

// Hilbert series of F/M from a Groebner basis of M: split leading terms by
// position, count standard monomials per position.
template <class K>
RationalSeries hilbertSeries(const GBResult<K>& gb) {
  const RingPtr& ring = gb.F.ring;
  const int nvars = static_cast<int>(ring->nvars());
  std::vector<std::vector<Monomial>> ltByPos(static_cast<size_t>(gb.F.rank()));
  for (auto& v : gb.gb) {
    ModTerm lt = leadTerm(v, ring, gb.mode);
    if (lt.valid()) ltByPos[static_cast<size_t>(lt.pos)].push_back(lt.mon);
  }
  QPoly num;
  for (int p = 0; p < gb.F.rank(); ++p)
    num += QPoly::monomial(gb.F.shifts[static_cast<size_t>(p)]) *
           monomialQuotientNumerator(ltByPos[static_cast<size_t>(p)]);
  return {num, one_minus_t_power(nvars)};
}

template <class K>
RationalSeries hilbertSeries(const Presentation<K>& P) {
  GBResult<K> gb = groebner(P.F, P.rels, ModOrderMode::TOP, GBOptions{false, false});
  return hilbertSeries(gb);
}

template <class K>
RationalSeries hilbertSeriesOfIdealQuotient(const RingPtr& ring, const std::vector<Poly<K>>& gens) {
  return hilbertSeries(idealQuotientPresentation(ring, gens));
}

// alternating sum over a free complex (graded Euler characteristic)
template <class K>
RationalSeries hilbertSeriesFromComplex(const FreeComplex<K>& C) {
  const int nvars = static_cast<int>(C.ring->nvars());
  RationalSeries hs{QPoly(), one_minus_t_power(nvars)};
  int sign = 1;
  for (size_t i = 0; i < C.shifts.size(); ++i) {
    RationalSeries term = RationalSeries::shiftedFree(C.shifts[i], nvars);
    hs = (sign > 0) ? hs + term : hs - term;
    sign = -sign;
  }
  return hs;
}

// Krull dimension and degree of the module from its Hilbert series:
// write HS = h(t)/(1-t)^d with h(1) != 0.
struct DimDegree {
  int dim;
  long degree;
};

inline DimDegree dimensionDegree(const RationalSeries& hs) {
  RationalSeries r = hs.reduced();
  if (r.num.isZero()) return {-1, 0};
  QPoly num = r.num;
  QPoly den = r.den;
  int dnum = num.strip_one_minus_t();
  int dden = den.strip_one_minus_t();
  // den should now be a unit times possibly other factors; for our usage den
  // is exactly (1-t)^k so after stripping it is constant
  if (den.degree() > 0) throw std::domain_error("dimensionDegree: denominator not (1-t)^k");
  int d = dden - dnum;
  if (d < 0) d = 0;
  Rat val = num.eval(Rat(1)) / den.eval(Rat(1));
  long deg = 0;
  if (d > 0) {
    if (!val.isInteger()) throw std::domain_error("dimensionDegree: degree not integral");
    deg = val.toLong();
    if (deg < 0) deg = -deg;
  }
  return {d, deg};
}

// Hilbert polynomial from HS = h(t)/(1-t)^d: HP(i) = sum_k h_k C(i-k+d-1, d-1).
inline Rat binomialRat(long top, int k) {
  // C(top, k) as a polynomial in top; valid for negative top
  Rat r(1);
  for (int i = 0; i < k; ++i) r *= Rat(top - i, i + 1);
  return r;
}

inline Rat hilbertPolyAt(const RationalSeries& hs, long i) {
  RationalSeries r = hs.reduced();
  QPoly num = r.num;
  QPoly den = r.den;
  int dnum = num.strip_one_minus_t();
  int dden = den.strip_one_minus_t();
  int d = dden - dnum;
  Rat c = den.eval(Rat(1));
  if (den.degree() > 0) throw std::domain_error("hilbertPolyAt: denominator not (1-t)^k");
  Rat v(0);
  if (d <= 0) return Rat(0);  // artinian: HP = 0
  for (int k = 0; k <= num.degree(); ++k)
    v += num.coeff(k) * binomialRat(i - k + d - 1, d - 1);
  return v / c;
}

}  // namespace arr
