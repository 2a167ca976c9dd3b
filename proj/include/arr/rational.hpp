#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>

namespace arr {

// Exact rational scalar. Thin value wrapper around mpq_class so that all
// arithmetic returns plain Rat (no gmp expression templates leak into Eigen).
class Rat {
  mpq_class v_;

 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}
  Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rat(const mpz_class& z) : v_(z) {}
  explicit Rat(const std::string& s) : v_(s) { v_.canonicalize(); }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool isZero() const { return sgn(v_) == 0; }
  bool isOne() const { return v_ == 1; }
  bool isInteger() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  long toLong() const {
    if (!isInteger()) throw std::domain_error("Rat::toLong on non-integer");
    if (!v_.get_num().fits_slong_p()) throw std::domain_error("Rat::toLong overflow");
    return v_.get_num().get_si();
  }

  Rat operator-() const { Rat r; r.v_ = -v_; return r; }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.isZero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  Rat inverse() const {
    if (isZero()) throw std::domain_error("Rat: inverse of zero");
    Rat r;
    r.v_ = 1 / v_;
    return r;
  }
  Rat abs() const { Rat r; r.v_ = ::abs(v_); return r; }

  std::string str() const { return v_.get_str(); }

  static Rat fromString(const std::string& s) { return Rat(s); }
};

inline Rat abs(const Rat& a) { return a.abs(); }
inline std::ostream& operator<<(std::ostream& os, const Rat& a) { return os << a.str(); }

// Prime field scalar with the modulus carried per element.  A default
// constructed or integer-initialized value has p == 0 and behaves as an
// integer literal; it adopts the modulus of the other operand on contact.
class GF {
  long long lit_ = 0;       // literal value while p_ == 0
  std::uint64_t v_ = 0;     // canonical value in [0,p) once p_ != 0
  std::uint64_t p_ = 0;

  static std::uint64_t& activeModulus() {
    static thread_local std::uint64_t p = 0;
    return p;
  }

 public:
  GF() {
    if (activeModulus()) p_ = activeModulus();
  }
  GF(long n) {
    if (activeModulus()) {
      p_ = activeModulus();
      long long m = n % static_cast<long long>(p_);
      if (m < 0) m += static_cast<long long>(p_);
      v_ = static_cast<std::uint64_t>(m);
    } else {
      lit_ = n;
    }
  }

  // scoped default modulus: all GF literals constructed inside adopt it
  struct Context {
    std::uint64_t saved;
    explicit Context(std::uint64_t p) : saved(activeModulus()) { activeModulus() = p; }
    ~Context() { activeModulus() = saved; }
  };
  GF(long long n, std::uint64_t p) : p_(p) {
    long long m = n % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    v_ = static_cast<std::uint64_t>(m);
  }

  std::uint64_t modulus() const { return p_; }
  std::uint64_t value() const { return p_ ? v_ : static_cast<std::uint64_t>(lit_); }

  bool isZero() const { return p_ ? v_ == 0 : lit_ == 0; }
  bool isOne() const { return p_ ? v_ == 1 : lit_ == 1; }

  GF withModulus(std::uint64_t p) const {
    if (p_ == p) return *this;
    if (p_ != 0) throw std::invalid_argument("GF: modulus mismatch");
    return GF(lit_, p);
  }

  GF operator-() const {
    if (p_ == 0) { GF r; r.lit_ = -lit_; return r; }
    GF r = *this;
    if (r.v_ != 0) r.v_ = r.p_ - r.v_;
    return r;
  }

  friend GF operator+(const GF& a, const GF& b) {
    std::uint64_t p = a.p_ ? a.p_ : b.p_;
    if (a.p_ && b.p_ && a.p_ != b.p_) throw std::invalid_argument("GF: modulus mismatch");
    if (p == 0) { GF r; r.lit_ = a.lit_ + b.lit_; return r; }
    GF x = a.withModulus(p), y = b.withModulus(p);
    std::uint64_t s = x.v_ + y.v_;
    if (s >= p) s -= p;
    GF r;
    r.p_ = p;
    r.v_ = s;
    return r;
  }
  friend GF operator-(const GF& a, const GF& b) { return a + (-b); }
  friend GF operator*(const GF& a, const GF& b) {
    std::uint64_t p = a.p_ ? a.p_ : b.p_;
    if (a.p_ && b.p_ && a.p_ != b.p_) throw std::invalid_argument("GF: modulus mismatch");
    if (p == 0) { GF r; r.lit_ = a.lit_ * b.lit_; return r; }
    GF x = a.withModulus(p), y = b.withModulus(p);
    GF r;
    r.p_ = p;
    r.v_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x.v_) * y.v_) % p);
    return r;
  }
  friend GF operator/(const GF& a, const GF& b) { return a * b.inverse(); }
  GF& operator+=(const GF& o) { return *this = *this + o; }
  GF& operator-=(const GF& o) { return *this = *this - o; }
  GF& operator*=(const GF& o) { return *this = *this * o; }
  GF& operator/=(const GF& o) { return *this = *this / o; }

  friend bool operator==(const GF& a, const GF& b) { return (a - b).isZero(); }
  friend bool operator!=(const GF& a, const GF& b) { return !(a == b); }

  GF inverse() const {
    if (p_ == 0) {
      if (lit_ == 1 || lit_ == -1) { GF r; r.lit_ = lit_; return r; }
      throw std::domain_error("GF: inverse needs a modulus");
    }
    if (v_ == 0) throw std::domain_error("GF: inverse of zero");
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(p_), newr = static_cast<long long>(v_);
    while (newr != 0) {
      long long q = r / newr;
      t -= q * newt;
      std::swap(t, newt);
      r -= q * newr;
      std::swap(r, newr);
    }
    if (t < 0) t += static_cast<long long>(p_);
    GF out;
    out.p_ = p_;
    out.v_ = static_cast<std::uint64_t>(t);
    return out;
  }

  std::string str() const { return p_ ? std::to_string(v_) : std::to_string(lit_); }
};

inline std::ostream& operator<<(std::ostream& os, const GF& a) { return os << a.str(); }

template <class K>
inline bool is_zero(const K& x) { return x.isZero(); }
template <class K>
inline bool is_one(const K& x) { return x.isOne(); }

// field name shown in CLI output / .arr files
inline std::string field_name(const Rat&) { return "Q"; }
inline std::string field_name(const GF& x) { return "F " + std::to_string(x.modulus()); }

}  // namespace arr
