#pragma once

#include <optional>
#include <vector>

#include "arr/derivations.hpp"
#include "arr/mora.hpp"

namespace arr {

// ---------------------------------------------------------------------------
// Reduced plane curve arrangements: products of homogeneous components in
// P^2, their Jacobian schemes and local singularity data.

template <class K>
struct CurveArrangement {
  RingPtr ring;  // three variables
  std::vector<Poly<K>> components;

  Poly<K> definingPoly() const {
    Poly<K> q(ring, K(1));
    for (auto& f : components) q *= f;
    return q;
  }
  void validate() const {
    if (ring->nvars() != 3) throw std::invalid_argument("CurveArrangement: need 3 variables");
    for (auto& f : components)
      if (f.isZero() || !f.isHomogeneous())
        throw std::invalid_argument("CurveArrangement: non-homogeneous component");
  }
};

template <class K>
DerivationModule<K> derivationModule(const CurveArrangement<K>& C) {
  std::vector<int> mult(C.components.size(), 1);
  return derivationModuleOf(C.ring, C.components, mult, 1);
}

// ---------------------------------------------------------------------------
// rational points of a zero-dimensional projective scheme in P^2

namespace detail {

// rational roots of a univariate polynomial (exact, rational-root theorem)
inline std::vector<Rat> rationalRoots(const std::vector<Rat>& coeffs) {
  // clear denominators to integers
  std::vector<Rat> c = coeffs;
  while (!c.empty() && c.back().isZero()) c.pop_back();
  std::vector<Rat> roots;
  if (c.empty()) return roots;  // zero polynomial: caller handles
  mpz_class lcmDen(1);
  for (auto& x : c) {
    mpz_class d = x.den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcmDen.get_mpz_t(), d.get_mpz_t());
    lcmDen = lcmDen / g * d;
  }
  std::vector<mpz_class> ic;
  for (auto& x : c) ic.push_back(x.num() * (lcmDen / x.den()));
  // strip powers of the variable (root zero)
  size_t low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;
  if (low > 0) roots.push_back(Rat(0));
  std::vector<mpz_class> p(ic.begin() + static_cast<long>(low), ic.end());
  if (p.size() <= 1) return roots;
  auto divisors = [](mpz_class v) {
    std::vector<mpz_class> out;
    v = abs(v);
    for (mpz_class d = 1; d * d <= v; ++d)
      if (v % d == 0) {
        out.push_back(d);
        out.push_back(v / d);
      }
    return out;
  };
  auto eval = [&](const Rat& r) {
    Rat v(0);
    for (size_t i = p.size(); i-- > 0;) v = v * r + Rat(p[i]);
    return v;
  };
  for (auto& num : divisors(p.front()))
    for (auto& den : divisors(p.back()))
      for (int sign : {1, -1}) {
        Rat cand = Rat(mpz_class(sign * num)) / Rat(den);
        if (eval(cand).isZero()) roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// number of distinct roots in an algebraic closure: degree of the
// squarefree part
inline long distinctRootCount(const std::vector<Rat>& coeffs) {
  QPoly p(coeffs);
  if (p.isZero()) return -1;
  QPoly d;
  for (int i = 1; i <= p.degree(); ++i)
    d += QPoly::monomial(i - 1, p.coeff(i) * Rat(i));
  if (d.isZero()) return 0;
  QPoly g = QPoly::gcd(p, d);
  return p.degree() - g.degree();
}

inline std::vector<Rat> univariateCoeffs(const Poly<Rat>& f, size_t var) {
  std::vector<Rat> c;
  for (auto& tm : f.terms()) {
    for (size_t i = 0; i < f.ring()->nvars(); ++i)
      if (i != var && tm.first.e[i] != 0)
        throw std::domain_error("univariateCoeffs: not univariate");
    size_t d = tm.first.e[var];
    if (c.size() <= d) c.resize(d + 1, Rat(0));
    c[d] = tm.second;
  }
  return c;
}

}  // namespace detail

struct ProjPoint {
  std::vector<Rat> xyz;  // normalized: first nonzero coordinate = 1
  bool operator<(const ProjPoint& o) const {
    for (size_t i = 0; i < xyz.size(); ++i) {
      if (xyz[i] < o.xyz[i]) return true;
      if (o.xyz[i] < xyz[i]) return false;
    }
    return false;
  }
  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < xyz.size(); ++i) s += (i ? " : " : "") + xyz[i].str();
    return s + ")";
  }
};

// all rational points of V(I) in P^2 for a one-dimensional (cone) ideal;
// incomplete == true when irrational coordinates were detected
struct RationalPointResult {
  std::vector<ProjPoint> points;
  bool incomplete = false;
};

inline RationalPointResult rationalProjectivePoints(const RingPtr& R,
                                                    const std::vector<Poly<Rat>>& I) {
  RationalPointResult out;
  std::set<ProjPoint> pts;
  // charts: z = 1; z = 0, y = 1; z = y = 0, x = 1
  for (int chart = 0; chart < 3; ++chart) {
    RingPtr Rc = makeRing(chart == 0 ? std::vector<std::string>{"u", "v"}
                                     : std::vector<std::string>{"u"},
                          MonOrder{Order::Lex});
    std::vector<Poly<Rat>> images;  // x, y, z in terms of chart coords
    if (chart == 0) {
      images = {Poly<Rat>::variable(Rc, 0), Poly<Rat>::variable(Rc, 1), Poly<Rat>(Rc, Rat(1))};
    } else if (chart == 1) {
      images = {Poly<Rat>::variable(Rc, 0), Poly<Rat>(Rc, Rat(1)), Poly<Rat>(Rc, Rat(0))};
    } else {
      images = {Poly<Rat>(Rc, Rat(1)), Poly<Rat>(Rc, Rat(0)), Poly<Rat>(Rc, Rat(0))};
    }
    std::vector<Poly<Rat>> J;
    for (auto& f : I) J.push_back(f.substitute(Rc, images));
    auto gb = reducedIdealBasis(Rc, J, false);
    bool isUnit = (gb.size() == 1 && gb[0].isConstant() && !gb[0].isZero());
    if (isUnit) continue;
    auto record = [&](const std::vector<Rat>& chartPt) {
      std::vector<Rat> xyz(3);
      for (int i = 0; i < 3; ++i) xyz[static_cast<size_t>(i)] = images[static_cast<size_t>(i)].evaluate(chartPt);
      // normalize first nonzero to 1
      Rat lead(0);
      for (auto& c : xyz)
        if (lead.isZero() && !c.isZero()) lead = c;
      for (auto& c : xyz) c /= lead;
      pts.insert(ProjPoint{xyz});
    };
    if (chart == 2) {
      // single candidate point (1:0:0)
      bool vanish = true;
      for (auto& f : J)
        if (!f.isZero()) vanish = false;
      if (vanish) record({});
      continue;
    }
    if (chart == 1) {
      // univariate in u
      std::vector<Rat> coeffs;
      bool zeroIdeal = true;
      for (auto& g : gb)
        if (!g.isZero()) zeroIdeal = false;
      if (zeroIdeal) { out.incomplete = true; continue; }
      auto uni = detail::univariateCoeffs(gb[0], 0);
      auto roots = detail::rationalRoots(uni);
      if (static_cast<long>(roots.size()) < detail::distinctRootCount(uni))
        out.incomplete = true;  // some roots are irrational
      for (auto& r : roots) {
        bool onAll = true;
        for (auto& g : gb)
          if (!g.evaluate({r}).isZero()) onAll = false;
        if (onAll) record({r});
      }
      continue;
    }
    // chart 0: lex GB with u > v has a univariate polynomial in v
    Poly<Rat> uni(Rc);
    for (auto& g : gb) {
      bool pureV = true;
      for (auto& tm : g.terms())
        if (tm.first.e[0] != 0) pureV = false;
      if (pureV && !g.isZero()) { uni = g; break; }
    }
    if (uni.isZero()) { out.incomplete = true; continue; }
    auto vroots = detail::rationalRoots(detail::univariateCoeffs(uni, 1));
    // the degree bound: if fewer rational roots than the squarefree degree,
    // some points may be irrational
    for (auto& v0 : vroots) {
      // substitute v = v0, solve for u
      RingPtr Ru = makeRing(std::vector<std::string>{"u"}, MonOrder{Order::Lex});
      std::vector<Poly<Rat>> sub;
      for (auto& g : gb)
        sub.push_back(g.substitute(Ru, {Poly<Rat>::variable(Ru, 0), Poly<Rat>(Ru, v0)}));
      auto gbu = reducedIdealBasis(Ru, sub, false);
      bool unitU = (gbu.size() == 1 && gbu[0].isConstant() && !gbu[0].isZero());
      if (unitU) continue;
      Poly<Rat> uuni(Ru);
      for (auto& g : gbu)
        if (!g.isZero()) { uuni = g; break; }
      if (uuni.isZero()) { out.incomplete = true; continue; }
      auto uCoeffs = detail::univariateCoeffs(uuni, 0);
      auto uroots = detail::rationalRoots(uCoeffs);
      if (static_cast<long>(uroots.size()) < detail::distinctRootCount(uCoeffs))
        out.incomplete = true;
      for (auto& u0 : uroots) {
        bool onAll = true;
        for (auto& g : gb)
          if (!g.evaluate({u0, v0}).isZero()) onAll = false;
        if (onAll) record({u0, v0});
      }
    }
    // irrationality flag for the v-level
    auto uniC = detail::univariateCoeffs(uni, 1);
    if (static_cast<long>(vroots.size()) < detail::distinctRootCount(uniC))
      out.incomplete = true;
  }
  out.points.assign(pts.begin(), pts.end());
  return out;
}

// ---------------------------------------------------------------------------
// per-point singularity reports and the global degree identity

struct CurvePointReport {
  ProjPoint point;
  long milnor = -1;
  long tjurina = -1;
  bool quasihomogeneous = false;
  bool ordinary = false;
  int branches = 0;  // multiplicity of the point (distinct tangents if ordinary)
};

struct CurveReport {
  std::vector<CurvePointReport> points;
  long degJacobian = 0;
  long sumMilnor = 0, sumTjurina = 0;
  bool degreeIdentity = false;  // sum tau == deg Jac
  bool incomplete = false;      // irrational singular points flagged
};

template <class K>
CurveReport curveReport(const CurveArrangement<K>& C, int moraCap = 30);

template <>
inline CurveReport curveReport<Rat>(const CurveArrangement<Rat>& C, int moraCap) {
  C.validate();
  const RingPtr& R = C.ring;
  Poly<Rat> Q = C.definingPoly();
  std::vector<Poly<Rat>> jac = {Q.derivative(0), Q.derivative(1), Q.derivative(2)};
  std::vector<Poly<Rat>> mIdeal = {Poly<Rat>::variable(R, 0), Poly<Rat>::variable(R, 1),
                                   Poly<Rat>::variable(R, 2)};
  auto Jsat = saturate<Rat>(R, jac, mIdeal);
  CurveReport rep;
  auto hs = hilbertSeriesOfIdealQuotient<Rat>(R, Jsat);
  auto dd = dimensionDegree(hs);
  if (dd.dim > 1) throw std::invalid_argument("curveReport: non-isolated singularities");
  rep.degJacobian = (dd.dim == 1) ? dd.degree : 0;

  auto pts = rationalProjectivePoints(R, Jsat);
  rep.incomplete = pts.incomplete;

  RingPtr L = makeRing({"u", "v"}, MonOrder{Order::LocalDS});
  for (auto& p : pts.points) {
    // choose a chart where some coordinate is nonzero, translate to origin
    int c = 2;
    while (c >= 0 && p.xyz[static_cast<size_t>(c)].isZero()) --c;
    // affine local equation
    std::vector<Poly<Rat>> images(3, Poly<Rat>(L));
    int k = 0;
    for (int i = 0; i < 3; ++i) {
      if (i == c) {
        images[static_cast<size_t>(i)] = Poly<Rat>(L, Rat(1));
      } else {
        images[static_cast<size_t>(i)] =
            Poly<Rat>::variable(L, static_cast<size_t>(k)) + Poly<Rat>(L, p.xyz[static_cast<size_t>(i)] / p.xyz[static_cast<size_t>(c)]);
        ++k;
      }
    }
    Poly<Rat> f = Q.substitute(L, images);
    CurvePointReport pr;
    pr.point = p;
    auto inv = localInvariantsAtOrigin<Rat>(L, f, moraCap);
    pr.milnor = inv.finite ? inv.milnor : -1;
    pr.tjurina = inv.finite ? inv.tjurina : -1;
    pr.quasihomogeneous = inv.quasihomogeneous;
    // tangent cone: lowest-degree homogeneous part
    int low = f.terms().empty() ? 0 : f.terms().back().first.deg;
    for (auto& tm : f.terms()) low = std::min(low, tm.first.deg);
    Poly<Rat> cone(L);
    for (auto& tm : f.terms())
      if (tm.first.deg == low) cone += Poly<Rat>::term(L, tm.first, tm.second);
    pr.branches = low;
    // ordinary iff the tangent cone is squarefree (distinct tangent lines):
    // check gcd(cone, d cone/du, d cone/dv) is constant via dimension
    std::vector<Poly<Rat>> g = {cone, cone.derivative(0), cone.derivative(1)};
    auto gbCone = reducedIdealBasis(L, g, false);
    // squarefree binary form <=> its jacobian ideal is (u,v)-primary of colength finite
    auto dimc = localQuotientDim<Rat>(L, g, moraCap);
    pr.ordinary = dimc.has_value();
    if (inv.finite) {
      rep.sumMilnor += inv.milnor;
      rep.sumTjurina += inv.tjurina;
      if (pr.ordinary && pr.milnor != static_cast<long>(pr.branches - 1) * (pr.branches - 1))
        throw std::logic_error("curveReport: ordinary point fails (k-1)^2");
    }
    rep.points.push_back(std::move(pr));
  }
  rep.degreeIdentity = (!rep.incomplete && rep.sumTjurina == rep.degJacobian);
  return rep;
}

}  // namespace arr
