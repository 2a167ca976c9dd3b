#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "arr/poly.hpp"

namespace arr {

// Elements of a free module S^r are plain vectors of polynomials; the ambient
// grading is a shift vector.  Rank one covers the ideal case everywhere.

template <class K>
using ModVec = std::vector<Poly<K>>;

struct FreeMod {
  RingPtr ring;
  std::vector<int> shifts;
  int rank() const { return static_cast<int>(shifts.size()); }
};

template <class K>
ModVec<K> zeroVec(const RingPtr& ring, int rank) {
  return ModVec<K>(static_cast<size_t>(rank), Poly<K>(ring));
}

template <class K>
bool vecIsZero(const ModVec<K>& v) {
  for (auto& p : v)
    if (!p.isZero()) return false;
  return true;
}

template <class K>
ModVec<K> vecAdd(const ModVec<K>& a, const ModVec<K>& b) {
  ModVec<K> r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
template <class K>
ModVec<K> vecSub(const ModVec<K>& a, const ModVec<K>& b) {
  ModVec<K> r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}
template <class K>
ModVec<K> vecScale(const K& c, const ModVec<K>& a) {
  ModVec<K> r = a;
  for (auto& p : r) p = c * p;
  return r;
}
template <class K>
ModVec<K> vecTimesTerm(const ModVec<K>& a, const Monomial& m, const K& c) {
  ModVec<K> r = a;
  for (auto& p : r) p = p.timesTerm(m, c);
  return r;
}
template <class K>
ModVec<K> vecTimesPoly(const ModVec<K>& a, const Poly<K>& f) {
  ModVec<K> r = a;
  for (auto& p : r) p = p * f;
  return r;
}

// degree of a homogeneous vector relative to shifts; -1 for zero
template <class K>
int vecDegree(const ModVec<K>& v, const std::vector<int>& shifts) {
  int d = -1;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].isZero()) continue;
    int di = v[i].degreeHomog() + shifts[i];
    if (d >= 0 && di != d) throw std::domain_error("vecDegree: not homogeneous");
    d = di;
  }
  return d;
}

enum class ModOrderMode { TOP, POT };  // term-over-position / position-over-term

struct ModTerm {
  int pos = -1;
  Monomial mon;
  bool valid() const { return pos >= 0; }
};

// module term comparison; smaller position wins ties (and dominates for POT)
inline int cmpModTerm(const MonOrder& ord, ModOrderMode mode, int posA, const Monomial& a,
                      int posB, const Monomial& b) {
  if (mode == ModOrderMode::POT) {
    if (posA != posB) return posA < posB ? 1 : -1;
    return ord.cmp(a, b);
  }
  int c = ord.cmp(a, b);
  if (c) return c;
  if (posA != posB) return posA < posB ? 1 : -1;
  return 0;
}

template <class K>
ModTerm leadTerm(const ModVec<K>& v, const RingPtr& ring, ModOrderMode mode) {
  ModTerm best;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].isZero()) continue;
    const Monomial& m = v[i].leadMonomial();
    if (!best.valid() ||
        cmpModTerm(ring->order, mode, static_cast<int>(i), m, best.pos, best.mon) > 0) {
      best.pos = static_cast<int>(i);
      best.mon = m;
    }
  }
  return best;
}

template <class K>
const K& leadCoeffAt(const ModVec<K>& v, const ModTerm& lt) {
  return v[lt.pos].leadCoeff();
}

// ---------------------------------------------------------------------------
// Division / normal form.  Fully reduces every term of v.

template <class K>
struct Reducer {
  RingPtr ring;
  ModOrderMode mode;
  std::vector<const ModVec<K>*> gens;
  std::vector<ModTerm> lts;
  std::vector<K> lcs;

  Reducer(const RingPtr& r, ModOrderMode md) : ring(r), mode(md) {}
  Reducer(const RingPtr& r, ModOrderMode md, const std::vector<ModVec<K>>& g)
      : ring(r), mode(md) {
    for (auto& v : g) push(&v);
  }
  void push(const ModVec<K>* v) {
    gens.push_back(v);
    lts.push_back(leadTerm(*v, ring, mode));
    lcs.push_back(lts.back().valid() ? leadCoeffAt(*v, lts.back()) : K(0));
  }

  int findDivisor(int pos, const Monomial& m) const {
    for (size_t k = 0; k < gens.size(); ++k) {
      if (!lts[k].valid()) continue;
      if (lts[k].pos == pos && lts[k].mon.divides(m)) return static_cast<int>(k);
    }
    return -1;
  }

  // normal form; optionally records quotients (rem = v - sum q_k gens_k).
  // headOnly stops once the leading term is irreducible (enough inside the
  // Buchberger loop; the final basis is tail-reduced separately).
  ModVec<K> normalForm(ModVec<K> v, std::vector<Poly<K>>* quotients = nullptr,
                       bool headOnly = false) const {
    if (quotients) quotients->assign(gens.size(), Poly<K>(ring));
    ModVec<K> rem = zeroVec<K>(ring, static_cast<int>(v.size()));
    while (!vecIsZero(v)) {
      ModTerm lt = leadTerm(v, ring, mode);
      const K& c = v[lt.pos].leadCoeff();
      int k = findDivisor(lt.pos, lt.mon);
      if (k >= 0) {
        Monomial q = lt.mon.quotientBy(lts[k].mon);
        K f = c / lcs[k];
        v = vecSub(v, vecTimesTerm(*gens[k], q, f));
        if (quotients) (*quotients)[k] += Poly<K>::term(ring, q, f);
      } else {
        if (headOnly) return vecAdd(rem, v);
        rem[lt.pos] += Poly<K>::term(ring, lt.mon, c);
        v[lt.pos] -= Poly<K>::term(ring, lt.mon, c);
      }
    }
    return rem;
  }
};

// ---------------------------------------------------------------------------
// Buchberger with optional syzygy extraction.

template <class K>
struct GBResult {
  FreeMod F;                      // ambient free module
  ModOrderMode mode = ModOrderMode::TOP;
  std::vector<ModVec<K>> gb;      // reduced, monic
  std::vector<int> gbDeg;         // degrees when input graded
  std::vector<ModVec<K>> syz;     // generators of syz(input gens) in S^t
  std::vector<int> syzDeg;

  ModVec<K> normalForm(const ModVec<K>& v) const {
    Reducer<K> red(F.ring, mode, gb);
    return red.normalForm(v);
  }
  bool contains(const ModVec<K>& v) const { return vecIsZero(normalForm(v)); }
};

struct GBOptions {
  bool syzygies = false;
  bool graded = true;  // inputs homogeneous (grading bookkeeping on)
};

template <class K>
class Buchberger {
  RingPtr ring_;
  FreeMod F_;
  ModOrderMode mode_;
  std::vector<ModVec<K>> gens_;
  GBOptions opt_;

  struct Elt {
    ModVec<K> v;
    ModVec<K> rep;  // v = rep . gens
    ModTerm lt;
  };
  std::vector<Elt> basis_;

  struct Pair {
    int i, j;
    Monomial lcm;
    int deg;
    bool operator<(const Pair& o) const { return deg > o.deg; }  // min-heap
  };
  std::priority_queue<Pair> pairs_;

  void pushPairs(int j) {
    for (int i = 0; i < j; ++i) {
      if (basis_[i].lt.pos != basis_[j].lt.pos) continue;
      Monomial l = Monomial::lcm(basis_[i].lt.mon, basis_[j].lt.mon);
      // product criterion is only valid in rank one
      if (F_.rank() == 1 && basis_[i].lt.mon.coprime(basis_[j].lt.mon)) continue;
      pairs_.push({i, j, l, l.deg});
    }
  }

  void addElement(ModVec<K> v, ModVec<K> rep) {
    ModTerm lt = leadTerm(v, ring_, mode_);
    K c = leadCoeffAt(v, lt);
    K inv = K(1) / c;
    v = vecScale(inv, v);
    rep = vecScale(inv, rep);
    basis_.push_back({std::move(v), std::move(rep), lt});
    pushPairs(static_cast<int>(basis_.size()) - 1);
  }

 public:
  Buchberger(FreeMod F, ModOrderMode mode, std::vector<ModVec<K>> gens, GBOptions opt)
      : ring_(F.ring), F_(std::move(F)), mode_(mode), gens_(std::move(gens)), opt_(opt) {}

  GBResult<K> run() {
    const int t = static_cast<int>(gens_.size());
    for (int j = 0; j < t; ++j) {
      if (vecIsZero(gens_[j])) continue;
      ModVec<K> rep = zeroVec<K>(ring_, t);
      rep[j] = Poly<K>(ring_, K(1));
      // reduce against current basis to keep things small
      Reducer<K> red(ring_, mode_);
      for (auto& e : basis_) red.push(&e.v);
      std::vector<Poly<K>> q;
      ModVec<K> nf = red.normalForm(gens_[j], &q);
      for (size_t k = 0; k < q.size(); ++k)
        rep = vecSub(rep, vecTimesPoly(basis_[k].rep, q[k]));
      if (!vecIsZero(nf)) addElement(std::move(nf), std::move(rep));
    }

    while (!pairs_.empty()) {
      Pair p = pairs_.top();
      pairs_.pop();
      const Elt& a = basis_[p.i];
      const Elt& b = basis_[p.j];
      // chain criterion: a third lead dividing the lcm, with both sub-lcms
      // strictly smaller, makes this pair redundant
      bool redundant = false;
      for (size_t k = 0; k < basis_.size() && !redundant; ++k) {
        if (static_cast<int>(k) == p.i || static_cast<int>(k) == p.j) continue;
        const Elt& e = basis_[k];
        if (e.lt.pos != a.lt.pos || !e.lt.mon.divides(p.lcm)) continue;
        if (Monomial::lcm(a.lt.mon, e.lt.mon) != p.lcm &&
            Monomial::lcm(b.lt.mon, e.lt.mon) != p.lcm)
          redundant = true;
      }
      if (redundant) continue;
      Monomial ma = p.lcm.quotientBy(a.lt.mon);
      Monomial mb = p.lcm.quotientBy(b.lt.mon);
      ModVec<K> s = vecSub(vecTimesTerm(a.v, ma, K(1)), vecTimesTerm(b.v, mb, K(1)));
      Reducer<K> red(ring_, mode_);
      for (auto& e : basis_) red.push(&e.v);
      std::vector<Poly<K>> q;
      ModVec<K> nf = red.normalForm(s, &q, true);
      if (vecIsZero(nf)) continue;
      ModVec<K> rep = vecSub(vecTimesTerm(a.rep, ma, K(1)), vecTimesTerm(b.rep, mb, K(1)));
      for (size_t k = 0; k < q.size(); ++k)
        rep = vecSub(rep, vecTimesPoly(basis_[k].rep, q[k]));
      addElement(std::move(nf), std::move(rep));
    }

    interreduce();

    GBResult<K> out;
    out.F = F_;
    out.mode = mode_;
    for (auto& e : basis_) {
      out.gb.push_back(e.v);
      out.gbDeg.push_back(opt_.graded ? vecDegree(e.v, F_.shifts) : -1);
    }

    if (opt_.syzygies) extractSyzygies(out);
    return out;
  }

 private:
  void interreduce() {
    // drop elements whose lead is divisible by another lead, then tail-reduce
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < basis_.size(); ++i) {
        for (size_t k = 0; k < basis_.size(); ++k) {
          if (k == i) continue;
          if (basis_[k].lt.pos == basis_[i].lt.pos &&
              basis_[k].lt.mon.divides(basis_[i].lt.mon)) {
            // reduce element i fully by the others
            Reducer<K> red(ring_, mode_);
            std::vector<size_t> idx;
            for (size_t m = 0; m < basis_.size(); ++m)
              if (m != i) {
                red.push(&basis_[m].v);
                idx.push_back(m);
              }
            std::vector<Poly<K>> q;
            ModVec<K> nf = red.normalForm(basis_[i].v, &q);
            ModVec<K> rep = basis_[i].rep;
            for (size_t m = 0; m < q.size(); ++m)
              rep = vecSub(rep, vecTimesPoly(basis_[idx[m]].rep, q[m]));
            if (vecIsZero(nf)) {
              basis_.erase(basis_.begin() + static_cast<long>(i));
            } else {
              ModTerm lt = leadTerm(nf, ring_, mode_);
              K inv = K(1) / leadCoeffAt(nf, lt);
              basis_[i] = {vecScale(inv, nf), vecScale(inv, rep), lt};
            }
            changed = true;
            break;
          }
        }
        if (changed) break;
      }
    }
    // tail reduction for canonical output
    for (size_t i = 0; i < basis_.size(); ++i) {
      Reducer<K> red(ring_, mode_);
      std::vector<size_t> idx;
      for (size_t m = 0; m < basis_.size(); ++m)
        if (m != i) {
          red.push(&basis_[m].v);
          idx.push_back(m);
        }
      std::vector<Poly<K>> q;
      ModVec<K> nf = red.normalForm(basis_[i].v, &q);
      ModVec<K> rep = basis_[i].rep;
      for (size_t m = 0; m < q.size(); ++m)
        rep = vecSub(rep, vecTimesPoly(basis_[idx[m]].rep, q[m]));
      basis_[i].v = std::move(nf);
      basis_[i].rep = std::move(rep);
      basis_[i].lt = leadTerm(basis_[i].v, ring_, mode_);
    }
    std::sort(basis_.begin(), basis_.end(), [&](const Elt& a, const Elt& b) {
      return cmpModTerm(ring_->order, mode_, a.lt.pos, a.lt.mon, b.lt.pos, b.lt.mon) < 0;
    });
  }

  void extractSyzygies(GBResult<K>& out) {
    const int t = static_cast<int>(gens_.size());
    const int s = static_cast<int>(basis_.size());
    Reducer<K> red(ring_, mode_);
    for (auto& e : basis_) red.push(&e.v);

    std::vector<ModVec<K>> raw;
    // Schreyer generators: one syzygy of the GB per S-pair
    for (int j = 0; j < s; ++j)
      for (int i = 0; i < j; ++i) {
        if (basis_[i].lt.pos != basis_[j].lt.pos) continue;
        Monomial l = Monomial::lcm(basis_[i].lt.mon, basis_[j].lt.mon);
        Monomial mi = l.quotientBy(basis_[i].lt.mon);
        Monomial mj = l.quotientBy(basis_[j].lt.mon);
        ModVec<K> sp =
            vecSub(vecTimesTerm(basis_[i].v, mi, K(1)), vecTimesTerm(basis_[j].v, mj, K(1)));
        std::vector<Poly<K>> q;
        ModVec<K> nf = red.normalForm(sp, &q);
        if (!vecIsZero(nf)) throw std::logic_error("extractSyzygies: basis not Groebner");
        // sigma in S^s: mi e_i - mj e_j - sum q_k e_k
        ModVec<K> sigma = zeroVec<K>(ring_, s);
        sigma[i] += Poly<K>::term(ring_, mi, K(1));
        sigma[j] -= Poly<K>::term(ring_, mj, K(1));
        for (int k = 0; k < s; ++k) sigma[k] -= q[k];
        // push to syzygies of the input generators via reps
        ModVec<K> sy = zeroVec<K>(ring_, t);
        for (int k = 0; k < s; ++k)
          if (!sigma[k].isZero()) sy = vecAdd(sy, vecTimesPoly(basis_[k].rep, sigma[k]));
        raw.push_back(std::move(sy));
      }
    // rows of I - B A
    for (int j = 0; j < t; ++j) {
      std::vector<Poly<K>> q;
      ModVec<K> nf = red.normalForm(gens_[j], &q);
      if (!vecIsZero(nf)) throw std::logic_error("extractSyzygies: generator not in module");
      ModVec<K> sy = zeroVec<K>(ring_, t);
      sy[j] = Poly<K>(ring_, K(1));
      for (int k = 0; k < s; ++k)
        if (!q[k].isZero()) sy = vecSub(sy, vecTimesPoly(basis_[k].rep, q[k]));
      if (!vecIsZero(sy)) raw.push_back(std::move(sy));
    }

    // prune: keep a generating set by reducing to a GB of the syzygy module
    std::vector<int> inDeg(t, 0);
    bool graded = opt_.graded;
    std::vector<int> degs;
    if (graded) {
      for (int j = 0; j < t; ++j)
        inDeg[j] = vecIsZero(gens_[j]) ? 0 : vecDegree(gens_[j], F_.shifts);
    }
    FreeMod Fsyz{ring_, inDeg};
    Buchberger<K> bb(Fsyz, mode_, raw, GBOptions{false, graded});
    GBResult<K> sgb = bb.run();
    out.syz = sgb.gb;
    out.syzDeg = sgb.gbDeg;
  }
};

template <class K>
GBResult<K> groebner(const FreeMod& F, const std::vector<ModVec<K>>& gens,
                     ModOrderMode mode = ModOrderMode::TOP, GBOptions opt = {}) {
  Buchberger<K> b(F, mode, gens, opt);
  return b.run();
}

// ideal case helpers
template <class K>
GBResult<K> groebnerIdeal(const RingPtr& ring, const std::vector<Poly<K>>& gens,
                          GBOptions opt = {}) {
  FreeMod F{ring, {0}};
  std::vector<ModVec<K>> vs;
  for (auto& g : gens) vs.push_back(ModVec<K>{g});
  return groebner(F, vs, ModOrderMode::TOP, opt);
}

template <class K>
Poly<K> normalFormIdeal(const GBResult<K>& gb, const Poly<K>& f) {
  return gb.normalForm(ModVec<K>{f})[0];
}

}  // namespace arr
