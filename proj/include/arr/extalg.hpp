#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "arr/rational.hpp"

namespace arr {

// Exterior algebra on up to 32 generators.  Monomials are index subsets
// stored as bitmasks; coefficients carry the transposition parity.

using EMask = std::uint32_t;

inline int edeg(EMask m) { return std::popcount(m); }

// subset-lex ascending comparison on sorted index lists; true if a < b
inline bool subsetLexLess(EMask a, EMask b) {
  while (a && b) {
    int ia = std::countr_zero(a), ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

// order used for exterior leading terms: higher degree first, then
// subset-lex-smallest first (so the boundary of a circuit leads with the
// subset missing the largest index)
inline bool emonGreater(EMask a, EMask b) {
  int da = edeg(a), db = edeg(b);
  if (da != db) return da > db;
  if (a == b) return false;
  return subsetLexLess(a, b);
}

// sign of e_a ^ e_b as (-1)^{inversions}; 0 if the supports intersect
inline int wedgeSign(EMask a, EMask b) {
  if (a & b) return 0;
  int sign = 1;
  EMask bb = b;
  while (bb) {
    int i = std::countr_zero(bb);
    bb &= bb - 1;
    // count elements of a greater than i
    EMask above = a & ~((EMask(1) << (i + 1)) - 1);
    if (std::popcount(above) & 1) sign = -sign;
  }
  return sign;
}

struct ExtAlgebra {
  int n = 0;
  std::vector<std::string> names;

  explicit ExtAlgebra(int n_, std::string stem = "e") : n(n_) {
    for (int i = 0; i < n; ++i) names.push_back(stem + std::to_string(i + 1));
  }
  ExtAlgebra(int n_, std::vector<std::string> nm) : n(n_), names(std::move(nm)) {}
};

using ExtPtr = std::shared_ptr<const ExtAlgebra>;

inline ExtPtr makeExt(int n, std::string stem = "e") {
  return std::make_shared<ExtAlgebra>(n, std::move(stem));
}

template <class K>
class ExtElem {
 public:
  using Term = std::pair<EMask, K>;

 private:
  ExtPtr alg_;
  std::vector<Term> t_;  // sorted by emonGreater, no zeros

  void normalize() {
    std::sort(t_.begin(), t_.end(),
              [](const Term& a, const Term& b) { return emonGreater(a.first, b.first); });
    std::vector<Term> out;
    for (auto& tm : t_) {
      if (!out.empty() && out.back().first == tm.first)
        out.back().second += tm.second;
      else
        out.push_back(tm);
      if (!out.empty() && is_zero(out.back().second)) out.pop_back();
    }
    t_ = std::move(out);
  }

 public:
  ExtElem() = default;
  explicit ExtElem(ExtPtr alg) : alg_(std::move(alg)) {}
  ExtElem(ExtPtr alg, const K& c) : alg_(std::move(alg)) {
    if (!is_zero(c)) t_.emplace_back(0u, c);
  }
  ExtElem(ExtPtr alg, std::vector<Term> terms) : alg_(std::move(alg)), t_(std::move(terms)) {
    normalize();
  }

  static ExtElem generator(const ExtPtr& alg, int i, const K& c = K(1)) {
    ExtElem x(alg);
    if (!is_zero(c)) x.t_.emplace_back(EMask(1) << i, c);
    return x;
  }
  static ExtElem monomial(const ExtPtr& alg, EMask m, const K& c = K(1)) {
    ExtElem x(alg);
    if (!is_zero(c)) x.t_.emplace_back(m, c);
    return x;
  }
  // e_{i1} ^ ... ^ e_{ik} for an arbitrary (possibly unsorted) index list
  static ExtElem fromIndices(const ExtPtr& alg, const std::vector<int>& idx, const K& c = K(1)) {
    EMask m = 0;
    int sign = 1;
    for (int i : idx) {
      int s = wedgeSign(m, EMask(1) << i);
      if (s == 0) return ExtElem(alg);
      sign *= s;
      m |= EMask(1) << i;
    }
    return monomial(alg, m, sign > 0 ? c : -c);
  }

  const ExtPtr& alg() const { return alg_; }
  const std::vector<Term>& terms() const { return t_; }
  bool isZero() const { return t_.empty(); }

  EMask leadMask() const { return t_.front().first; }
  const K& leadCoeff() const { return t_.front().second; }

  int degreeHomog() const {
    if (t_.empty()) return -1;
    int d = edeg(t_[0].first);
    for (auto& tm : t_)
      if (edeg(tm.first) != d) throw std::domain_error("ExtElem: not homogeneous");
    return d;
  }

  ExtElem operator-() const {
    ExtElem r = *this;
    for (auto& tm : r.t_) tm.second = -tm.second;
    return r;
  }
  friend ExtElem operator+(const ExtElem& a, const ExtElem& b) {
    ExtElem r(a.alg_ ? a.alg_ : b.alg_);
    r.t_ = a.t_;
    r.t_.insert(r.t_.end(), b.t_.begin(), b.t_.end());
    r.normalize();
    return r;
  }
  friend ExtElem operator-(const ExtElem& a, const ExtElem& b) { return a + (-b); }
  friend ExtElem operator*(const ExtElem& a, const ExtElem& b) {
    ExtElem r(a.alg_ ? a.alg_ : b.alg_);
    for (auto& ta : a.t_)
      for (auto& tb : b.t_) {
        int s = wedgeSign(ta.first, tb.first);
        if (s == 0) continue;
        K c = ta.second * tb.second;
        r.t_.emplace_back(ta.first | tb.first, s > 0 ? c : -c);
      }
    r.normalize();
    return r;
  }
  friend ExtElem operator*(const K& c, const ExtElem& p) {
    ExtElem r = p;
    for (auto& tm : r.t_) tm.second = c * tm.second;
    r.normalize();
    return r;
  }
  ExtElem& operator+=(const ExtElem& o) { return *this = *this + o; }
  ExtElem& operator-=(const ExtElem& o) { return *this = *this - o; }
  ExtElem& operator*=(const ExtElem& o) { return *this = *this * o; }
  friend bool operator==(const ExtElem& a, const ExtElem& b) { return (a - b).isZero(); }
  friend bool operator!=(const ExtElem& a, const ExtElem& b) { return !(a == b); }

  std::string str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& tm : t_) {
      std::string cs = tm.second.str();
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs = cs.substr(1);
      os << (first ? (neg ? "-" : "") : (neg ? "-" : "+"));
      bool coefOne = (cs == "1");
      if (!coefOne || tm.first == 0) os << cs;
      EMask m = tm.first;
      bool wrote = !coefOne || tm.first == 0;
      while (m) {
        int i = std::countr_zero(m);
        m &= m - 1;
        if (wrote) os << "*";
        os << alg_->names[i];
        wrote = true;
      }
      first = false;
    }
    return os.str();
  }
};

// boundary: del(e_S) = sum_q (-1)^{q-1} e_{S minus its q-th smallest index};
// extended linearly
template <class K>
ExtElem<K> boundary(const ExtElem<K>& w) {
  ExtElem<K> out(w.alg());
  std::vector<typename ExtElem<K>::Term> acc;
  for (auto& tm : w.terms()) {
    EMask m = tm.first;
    int q = 1;
    EMask mm = m;
    while (mm) {
      int i = std::countr_zero(mm);
      mm &= mm - 1;
      K c = (q % 2 == 1) ? tm.second : -tm.second;
      acc.emplace_back(m & ~(EMask(1) << i), c);
      ++q;
    }
  }
  return ExtElem<K>(w.alg(), std::move(acc));
}

}  // namespace arr
