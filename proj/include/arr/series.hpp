#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "arr/rational.hpp"

namespace arr {

// Dense univariate polynomial in t with rational coefficients.  Used for
// Hilbert numerators, Poincare/characteristic polynomials and friends.
class QPoly {
  std::vector<Rat> c_;

  void trim() {
    while (!c_.empty() && c_.back().isZero()) c_.pop_back();
  }

 public:
  QPoly() = default;
  QPoly(long n) { if (n) c_.assign(1, Rat(n)); }
  explicit QPoly(Rat r) { if (!r.isZero()) c_.assign(1, r); }
  explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static QPoly monomial(int deg, Rat coef = Rat(1)) {
    QPoly p;
    if (!coef.isZero()) {
      p.c_.assign(deg + 1, Rat(0));
      p.c_[deg] = coef;
    }
    return p;
  }

  bool isZero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  Rat coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0);
  }
  const std::vector<Rat>& coeffs() const { return c_; }

  QPoly operator-() const {
    QPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    r.trim();
    return r;
  }
  friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.isZero() || b.isZero()) return QPoly();
    QPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }
  QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
  QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  Rat eval(const Rat& t) const {
    Rat v(0);
    for (int i = degree(); i >= 0; --i) v = v * t + c_[i];
    return v;
  }

  // substitute t -> -t
  QPoly negated_t() const {
    QPoly r = *this;
    for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
  }

  // divide by (1-t)^k as far as it goes; returns number of factors removed
  int strip_one_minus_t(int maxk = -1) {
    int removed = 0;
    while (!isZero() && eval(Rat(1)).isZero() && removed != maxk) {
      // synthetic division by (1-t): if p = (1-t) q then q_i = sum_{j<=i} p_j
      std::vector<Rat> q(c_.size() - 1, Rat(0));
      Rat acc(0);
      for (size_t i = 0; i + 1 < c_.size(); ++i) {
        acc += c_[i];
        q[i] = acc;
      }
      c_ = std::move(q);
      trim();
      ++removed;
    }
    return removed;
  }

  // euclidean division, exact fields
  static void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    q = QPoly();
    r = a;
    while (!r.isZero() && r.degree() >= b.degree()) {
      int d = r.degree() - b.degree();
      Rat f = r.c_.back() / b.c_.back();
      QPoly m = monomial(d, f);
      q += m;
      r -= m * b;
    }
  }
  static QPoly gcd(QPoly a, QPoly b) {
    while (!b.isZero()) {
      QPoly q, r;
      divmod(a, b, q, r);
      a = b;
      b = r;
    }
    if (!a.isZero()) {  // normalize monic
      Rat lead = a.c_.back();
      for (auto& x : a.c_) x /= lead;
    }
    return a;
  }

  std::string str(const std::string& var = "t") const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].isZero()) continue;
      Rat a = c_[i];
      if (!first) os << (a.sign() > 0 ? "+" : "-");
      else if (a.sign() < 0) os << "-";
      Rat mag = a.abs();
      if (i == 0 || !mag.isOne()) os << mag.str();
      if (i > 0) {
        if (!mag.isOne()) os << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
      first = false;
    }
    return os.str();
  }
};

// Rational power series numerator/denominator, denominator(0) = +-1.
struct RationalSeries {
  QPoly num;
  QPoly den = QPoly(1);

  RationalSeries() = default;
  RationalSeries(QPoly n, QPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.isZero()) throw std::domain_error("RationalSeries: zero denominator");
  }
  explicit RationalSeries(QPoly n) : num(std::move(n)) {}

  static RationalSeries shiftedFree(const std::vector<int>& shifts, int nvars) {
    QPoly n;
    for (int a : shifts) n += QPoly::monomial(a);
    QPoly oneMinusT = QPoly(std::vector<Rat>{Rat(1), Rat(-1)});
    QPoly d(1);
    for (int i = 0; i < nvars; ++i) d *= oneMinusT;
    return {n, d};
  }

  bool expandable() const { return !den.coeff(0).isZero(); }

  std::vector<Rat> expand(int N) const {
    if (!expandable()) throw std::domain_error("RationalSeries: denominator(0) = 0");
    std::vector<Rat> out(N + 1, Rat(0));
    Rat d0inv = den.coeff(0).inverse();
    for (int i = 0; i <= N; ++i) {
      Rat v = num.coeff(i);
      for (int j = 1; j <= i; ++j) v -= den.coeff(j) * out[i - j];
      out[i] = v * d0inv;
    }
    return out;
  }

  friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
    return {a.num * b.num, a.den * b.den};
  }
  friend bool operator==(const RationalSeries& a, const RationalSeries& b) {
    return a.num * b.den == b.num * a.den;
  }
  friend bool operator!=(const RationalSeries& a, const RationalSeries& b) { return !(a == b); }

  // cancel common factors (gcd) and normalize den(0) > 0
  RationalSeries reduced() const {
    if (num.isZero()) return {QPoly(), QPoly(1)};
    QPoly g = QPoly::gcd(num, den);
    QPoly qn, qd, r;
    QPoly::divmod(num, g, qn, r);
    QPoly::divmod(den, g, qd, r);
    if (qd.coeff(0).sign() < 0 || (qd.coeff(0).isZero() && qd.eval(Rat(1)).sign() < 0)) {
      qn = -qn;
      qd = -qd;
    }
    return {qn, qd};
  }

  std::string str(const std::string& var = "t") const {
    std::string s = "(" + num.str(var) + ")";
    if (den != QPoly(1)) s += "/(" + den.str(var) + ")";
    return s;
  }
};

inline QPoly one_minus_t_power(int k) {
  QPoly oneMinusT(std::vector<Rat>{Rat(1), Rat(-1)});
  QPoly d(1);
  for (int i = 0; i < k; ++i) d *= oneMinusT;
  return d;
}

}  // namespace arr
