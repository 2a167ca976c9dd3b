#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "arr/rational.hpp"

namespace arr {

// ---------------------------------------------------------------------------
// Monomials: dense exponent vectors with cached total degree.

struct Monomial {
  std::vector<std::uint16_t> e;
  int deg = 0;

  Monomial() = default;
  explicit Monomial(size_t nvars) : e(nvars, 0) {}

  static Monomial var(size_t nvars, size_t i, int pow = 1) {
    Monomial m(nvars);
    m.e[i] = static_cast<std::uint16_t>(pow);
    m.deg = pow;
    return m;
  }

  bool isOne() const { return deg == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = static_cast<std::uint16_t>(r.e[i] + b.e[i]);
    r.deg += b.deg;
    return r;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  bool divides(const Monomial& b) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > b.e[i]) return false;
    return true;
  }
  // this / b, assuming divisibility
  Monomial quotientBy(const Monomial& b) const {
    Monomial r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = static_cast<std::uint16_t>(r.e[i] - b.e[i]);
    r.deg -= b.deg;
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    r.deg = 0;
    for (size_t i = 0; i < r.e.size(); ++i) {
      r.e[i] = std::max(a.e[i], b.e[i]);
      r.deg += r.e[i];
    }
    return r;
  }
  bool coprime(const Monomial& b) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] && b.e[i]) return false;
    return true;
  }
};

enum class Order { GrevLex, Lex, DegLex, Elim, LocalDS };

// Monomial order; cmp(a,b) > 0 means a comes before b (a is "larger").
struct MonOrder {
  Order type = Order::GrevLex;
  int elimVars = 0;  // size of the leading block for Order::Elim

  static int cmpGrevlexRange(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
    int da = 0, db = 0;
    for (size_t i = lo; i < hi; ++i) { da += a.e[i]; db += b.e[i]; }
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = hi; i-- > lo;) {
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;  // smaller last exponent wins
    }
    return 0;
  }
  static int cmpLex(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    return 0;
  }

  int cmp(const Monomial& a, const Monomial& b) const {
    switch (type) {
      case Order::GrevLex:
        return cmpGrevlexRange(a, b, 0, a.e.size());
      case Order::Lex:
        return cmpLex(a, b);
      case Order::DegLex:
        if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
        return cmpLex(a, b);
      case Order::Elim: {
        int c = cmpGrevlexRange(a, b, 0, static_cast<size_t>(elimVars));
        if (c) return c;
        return cmpGrevlexRange(a, b, static_cast<size_t>(elimVars), a.e.size());
      }
      case Order::LocalDS:
        // anti-graded: smaller total degree is larger
        if (a.deg != b.deg) return a.deg > b.deg ? -1 : 1;
        for (size_t i = a.e.size(); i-- > 0;)
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        return 0;
    }
    return 0;
  }
  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

  // degree-compatible orders keep graded computations homogeneous
  bool isGlobal() const { return type != Order::LocalDS; }
};

// ---------------------------------------------------------------------------
// Polynomial ring handle: variable names + active monomial order.

struct PolyRing {
  std::vector<std::string> names;
  MonOrder order;

  size_t nvars() const { return names.size(); }
  int varIndex(const std::string& n) const {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return static_cast<int>(i);
    return -1;
  }
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr makeRing(std::vector<std::string> names, MonOrder order = {}) {
  auto r = std::make_shared<PolyRing>();
  r->names = std::move(names);
  r->order = order;
  return r;
}

inline RingPtr makeRing(size_t n, const std::string& stem = "x", MonOrder order = {}) {
  std::vector<std::string> names;
  for (size_t i = 0; i < n; ++i) names.push_back(stem + std::to_string(i + 1));
  return makeRing(std::move(names), order);
}

// same variables, different order
inline RingPtr withOrder(const RingPtr& r, MonOrder order) {
  auto s = std::make_shared<PolyRing>(*r);
  s->order = order;
  return s;
}

// ---------------------------------------------------------------------------
// Polynomials: term lists sorted descending w.r.t. the ring's order.

template <class K>
class Poly {
 public:
  using Term = std::pair<Monomial, K>;

 private:
  RingPtr ring_;
  std::vector<Term> t_;  // sorted descending, no zero coefficients

  void normalize() {
    std::sort(t_.begin(), t_.end(), [&](const Term& a, const Term& b) {
      return ring_->order.greater(a.first, b.first);
    });
    std::vector<Term> out;
    out.reserve(t_.size());
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
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  Poly(RingPtr ring, const K& c) : ring_(std::move(ring)) {
    if (!is_zero(c)) t_.emplace_back(Monomial(ring_->nvars()), c);
  }
  Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), t_(std::move(terms)) {
    normalize();
  }

  static Poly variable(const RingPtr& ring, size_t i, const K& c = K(1)) {
    Poly p(ring);
    if (!is_zero(c)) p.t_.emplace_back(Monomial::var(ring->nvars(), i), c);
    return p;
  }
  static Poly term(const RingPtr& ring, Monomial m, const K& c) {
    Poly p(ring);
    if (!is_zero(c)) p.t_.emplace_back(std::move(m), c);
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return t_; }
  bool isZero() const { return t_.empty(); }
  size_t nterms() const { return t_.size(); }

  const Monomial& leadMonomial() const { return t_.front().first; }
  const K& leadCoeff() const { return t_.front().second; }

  bool isConstant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.isOne()); }
  K constantTerm() const {
    for (auto& tm : t_)
      if (tm.first.isOne()) return tm.second;
    return K(0);
  }

  // homogeneous degree; -1 when zero; throws when inhomogeneous
  int degreeHomog() const {
    if (t_.empty()) return -1;
    int d = t_[0].first.deg;
    for (auto& tm : t_)
      if (tm.first.deg != d) throw std::domain_error("Poly: not homogeneous");
    return d;
  }
  bool isHomogeneous() const {
    if (t_.empty()) return true;
    int d = t_[0].first.deg;
    for (auto& tm : t_)
      if (tm.first.deg != d) return false;
    return true;
  }
  int maxDegree() const {
    int d = -1;
    for (auto& tm : t_) d = std::max(d, tm.first.deg);
    return d;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& tm : r.t_) tm.second = -tm.second;
    return r;
  }
  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a.isZero() ? Poly(b.ring_ ? b.ring_ : a.ring_) : Poly(a.ring_);
    if (!a.ring_ && !b.ring_) return Poly();
    r.t_.reserve(a.t_.size() + b.t_.size());
    const auto& ord = r.ring_->order;
    size_t i = 0, j = 0;
    while (i < a.t_.size() || j < b.t_.size()) {
      if (j == b.t_.size()) r.t_.push_back(a.t_[i++]);
      else if (i == a.t_.size()) r.t_.push_back(b.t_[j++]);
      else {
        int c = ord.cmp(a.t_[i].first, b.t_[j].first);
        if (c > 0) r.t_.push_back(a.t_[i++]);
        else if (c < 0) r.t_.push_back(b.t_[j++]);
        else {
          K v = a.t_[i].second + b.t_[j].second;
          if (!is_zero(v)) r.t_.emplace_back(a.t_[i].first, v);
          ++i; ++j;
        }
      }
    }
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.isZero() || b.isZero()) return Poly(a.ring_ ? a.ring_ : b.ring_);
    Poly r(a.ring_);
    std::vector<Term> acc;
    acc.reserve(a.t_.size() * b.t_.size());
    for (auto& ta : a.t_)
      for (auto& tb : b.t_) acc.emplace_back(ta.first * tb.first, ta.second * tb.second);
    r.t_ = std::move(acc);
    r.normalize();
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator*(const K& c, const Poly& p) {
    if (is_zero(c)) return Poly(p.ring_);
    Poly r = p;
    for (auto& tm : r.t_) tm.second = c * tm.second;
    return r;
  }
  Poly scaled(const K& c) const { return c * *this; }

  // multiply by a single term
  Poly timesTerm(const Monomial& m, const K& c) const {
    if (is_zero(c)) return Poly(ring_);
    Poly r = *this;
    for (auto& tm : r.t_) {
      tm.first = tm.first * m;
      tm.second = tm.second * c;
    }
    return r;  // order preserved: orders are multiplicative
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (size_t i = 0; i < a.t_.size(); ++i)
      if (a.t_[i].first != b.t_[i].first || !((a.t_[i].second - b.t_[i].second).isZero()))
        return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly monic() const {
    if (isZero()) return *this;
    return leadCoeff().inverse() * *this;
  }

  Poly derivative(size_t var) const {
    Poly r(ring_);
    for (auto& tm : t_) {
      if (tm.first.e[var] == 0) continue;
      Monomial m = tm.first;
      K c = tm.second * K(static_cast<long>(m.e[var]));
      m.e[var] -= 1;
      m.deg -= 1;
      r.t_.emplace_back(m, c);
    }
    r.normalize();
    return r;
  }

  K evaluate(const std::vector<K>& point) const {
    K out(0);
    for (auto& tm : t_) {
      K v = tm.second;
      for (size_t i = 0; i < point.size(); ++i)
        for (int k = 0; k < tm.first.e[i]; ++k) v = v * point[i];
      out += v;
    }
    return out;
  }

  // substitute polynomials for the variables, mapping into targetRing
  Poly substitute(const RingPtr& target, const std::vector<Poly>& images) const {
    Poly out(target);
    for (auto& tm : t_) {
      Poly v(target, tm.second);
      for (size_t i = 0; i < ring_->nvars(); ++i)
        for (int k = 0; k < tm.first.e[i]; ++k) v *= images[i];
      out += v;
    }
    return out;
  }

  // reinterpret in a ring with the same variables but another order
  Poly reordered(const RingPtr& target) const {
    Poly out(target);
    out.t_ = t_;
    out.normalize();
    return out;
  }

  // variable i -> variable varMap[i] of target (target may have more vars)
  Poly renamed(const RingPtr& target, const std::vector<int>& varMap) const {
    Poly out(target);
    for (auto& tm : t_) {
      Monomial m(target->nvars());
      for (size_t i = 0; i < ring_->nvars(); ++i) {
        m.e[varMap[i]] = static_cast<std::uint16_t>(m.e[varMap[i]] + tm.first.e[i]);
      }
      m.deg = tm.first.deg;
      out.t_.emplace_back(m, tm.second);
    }
    out.normalize();
    return out;
  }

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
      bool wrote = false;
      if (!coefOne || tm.first.isOne()) {
        os << cs;
        wrote = true;
      }
      for (size_t i = 0; i < ring_->nvars(); ++i) {
        if (tm.first.e[i] == 0) continue;
        if (wrote) os << "*";
        os << ring_->names[i];
        if (tm.first.e[i] > 1) os << "^" << tm.first.e[i];
        wrote = true;
      }
      first = false;
    }
    return os.str();
  }
};

// ---------------------------------------------------------------------------
// Small expression parser: integers, variables, + - * ^ and parentheses.
// Handy for tests and fixture files.

template <class K>
class PolyParser {
  const RingPtr& ring_;
  const std::string& s_;
  size_t pos_ = 0;

  void skip() { while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_; }
  bool peek(char c) { skip(); return pos_ < s_.size() && s_[pos_] == c; }
  bool eat(char c) { if (peek(c)) { ++pos_; return true; } return false; }

  Poly<K> atom() {
    skip();
    if (eat('(')) {
      Poly<K> e = expr();
      if (!eat(')')) throw std::invalid_argument("PolyParser: expected ')'");
      return e;
    }
    if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      long v = std::stol(s_.substr(start, pos_ - start));
      return Poly<K>(ring_, K(v));
    }
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      int idx = ring_->varIndex(name);
      if (idx < 0) throw std::invalid_argument("PolyParser: unknown variable " + name);
      return Poly<K>::variable(ring_, static_cast<size_t>(idx));
    }
    throw std::invalid_argument("PolyParser: unexpected input at position " + std::to_string(pos_));
  }

  Poly<K> power() {
    Poly<K> base = atom();
    if (eat('^')) {
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) throw std::invalid_argument("PolyParser: expected exponent");
      int n = std::stoi(s_.substr(start, pos_ - start));
      Poly<K> r(ring_, K(1));
      for (int i = 0; i < n; ++i) r *= base;
      return r;
    }
    return base;
  }

  Poly<K> product() {
    Poly<K> r = power();
    while (true) {
      skip();
      if (eat('*')) { r *= power(); continue; }
      // implicit multiplication: "2x", "x y"
      if (pos_ < s_.size() &&
          (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' || s_[pos_] == '_')) {
        r *= power();
        continue;
      }
      break;
    }
    return r;
  }

  Poly<K> expr() {
    bool neg = false;
    skip();
    if (eat('-')) neg = true;
    else eat('+');
    Poly<K> r = product();
    if (neg) r = -r;
    while (true) {
      skip();
      if (eat('+')) r += product();
      else if (eat('-')) r -= product();
      else break;
    }
    return r;
  }

 public:
  PolyParser(const RingPtr& ring, const std::string& s) : ring_(ring), s_(s) {}
  Poly<K> run() {
    Poly<K> r = expr();
    skip();
    if (pos_ != s_.size()) throw std::invalid_argument("PolyParser: trailing input");
    return r;
  }
};

template <class K>
Poly<K> parsePoly(const RingPtr& ring, const std::string& s) {
  return PolyParser<K>(ring, s).run();
}

}  // namespace arr
