#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arr/extalg.hpp"
#include "arr/matrix.hpp"
#include "arr/poly.hpp"
#include "arr/rng.hpp"
#include "arr/series.hpp"

using namespace arr;

TEST_CASE("rational arithmetic is exact") {
  Rat a(1, 3), b(1, 6);
  CHECK(a + b == Rat(1, 2));
  CHECK(a * b == Rat(1, 18));
  CHECK((a - a).isZero());
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-7, 2).sign() == -1);
  CHECK_THROWS(Rat(1, 2).toLong());
}

TEST_CASE("prime field arithmetic") {
  GF a(5, 13), b(9, 13);
  CHECK((a + b).value() == 1);
  CHECK((a * b).value() == 45 % 13);
  CHECK((a / b * b) == a);
  CHECK((a - a).isZero());
  GF lit(-1);  // literal adopts modulus on contact
  CHECK((lit * a).value() == 8);
  CHECK(GF(13 * 5 + 3, 13).value() == 3);
}

TEST_CASE("rank and kernel over Q") {
  Mat<Rat> id = Mat<Rat>::Constant(3, 3, Rat(0));
  for (int i = 0; i < 3; ++i) id(i, i) = Rat(1);
  CHECK(rank(id) == 3);
  CHECK(kernel_basis(id).cols() == 0);

  Mat<Rat> z = Mat<Rat>::Constant(2, 5, Rat(0));
  CHECK(rank(z) == 0);
  CHECK(kernel_basis(z).cols() == 5);

  Mat<Rat> m(2, 3);
  m << Rat(1), Rat(2), Rat(3), Rat(2), Rat(4), Rat(6);
  CHECK(rank(m) == 1);
  Mat<Rat> k = kernel_basis(m);
  CHECK(k.cols() == 2);
  for (int c = 0; c < k.cols(); ++c) {
    Col<Rat> v = m * k.col(c);
    for (int r = 0; r < v.rows(); ++r) CHECK(v(r).isZero());
  }
}

TEST_CASE("sparse eliminator agrees with dense rank") {
  Rng rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    int rows = 6 + static_cast<int>(rng.below(5)), cols = 6 + static_cast<int>(rng.below(5));
    Mat<Rat> m = Mat<Rat>::Constant(rows, cols, Rat(0));
    SparseEliminator<Rat> elim;
    for (int c = 0; c < cols; ++c) {
      SparseCol<Rat> sc;
      for (int r = 0; r < rows; ++r) {
        if (rng.below(3) == 0) {
          Rat v(rng.integer(-3, 3));
          if (!v.isZero()) {
            m(r, c) = v;
            sc.e.emplace_back(r, v);
          }
        }
      }
      elim.add(std::move(sc), c);
    }
    CHECK(elim.rank() == rank(m));
  }
}

TEST_CASE("rational series expansion matches worked example") {
  // HS(S/<x^2,xy>) = (1-2t^2+t^3)/(1-t)^2 -> 1,2,1,1,1,...
  QPoly num(std::vector<Rat>{Rat(1), Rat(0), Rat(-2), Rat(1)});
  RationalSeries hs{num, one_minus_t_power(2)};
  auto c = hs.expand(4);
  CHECK(c == std::vector<Rat>{Rat(1), Rat(2), Rat(1), Rat(1), Rat(1)});

  RationalSeries shifted{QPoly::monomial(2) * num, one_minus_t_power(2)};
  auto c2 = shifted.expand(4);
  CHECK(c2 == std::vector<Rat>{Rat(0), Rat(0), Rat(1), Rat(2), Rat(1)});

  RationalSeries one{QPoly(1), QPoly(1)};
  CHECK(one.expand(3) == std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0)});
}

TEST_CASE("series equality reduces by common factors") {
  // (1-t^2)/(1-t)^2 == (1+t)/(1-t)
  QPoly oneMinusT2(std::vector<Rat>{Rat(1), Rat(0), Rat(-1)});
  QPoly onePlusT(std::vector<Rat>{Rat(1), Rat(1)});
  RationalSeries a{oneMinusT2, one_minus_t_power(2)};
  RationalSeries b{onePlusT, one_minus_t_power(1)};
  CHECK(a == b);
  CHECK(a.reduced().num == b.reduced().num);
}

TEST_CASE("shifted free module Hilbert series") {
  RationalSeries s = RationalSeries::shiftedFree({0}, 2);
  CHECK(s.expand(3) == std::vector<Rat>{Rat(1), Rat(2), Rat(3), Rat(4)});
  RationalSeries s2 = RationalSeries::shiftedFree({1, 2, 3}, 3);
  CHECK(s2.expand(1) == std::vector<Rat>{Rat(0), Rat(1)});
  // alternating sum over the Ex 1.3 resolution: {[0]} - {[2,2]} + {[3]}
  RationalSeries alt = RationalSeries::shiftedFree({0}, 2) -
                       RationalSeries::shiftedFree({2, 2}, 2) +
                       RationalSeries::shiftedFree({3}, 2);
  QPoly num(std::vector<Rat>{Rat(1), Rat(0), Rat(-2), Rat(1)});
  CHECK(alt == RationalSeries(num, one_minus_t_power(2)));
}

TEST_CASE("monomial orders") {
  RingPtr R = makeRing({"x", "y", "z"});
  auto x = Monomial::var(3, 0), y = Monomial::var(3, 1), z = Monomial::var(3, 2);
  MonOrder grevlex{Order::GrevLex};
  CHECK(grevlex.greater(x, y));
  CHECK(grevlex.greater(y, z));
  CHECK(grevlex.greater(x * y, z * z));  // xy > z^2 in grevlex
  MonOrder lex{Order::Lex};
  CHECK(lex.greater(x, y * y * z));
  MonOrder local{Order::LocalDS};
  CHECK(local.greater(x, x * x));  // lower degree leads locally
}

TEST_CASE("polynomial arithmetic and parser") {
  RingPtr R = makeRing({"x", "y"});
  auto f = parsePoly<Rat>(R, "x^2 - 2*x*y + y^2");
  auto g = parsePoly<Rat>(R, "(x-y)^2");
  CHECK(f == g);
  CHECK(f.degreeHomog() == 2);
  auto h = parsePoly<Rat>(R, "x^2*y - x");
  CHECK(h.derivative(0) == parsePoly<Rat>(R, "2*x*y - 1"));
  CHECK(h.evaluate({Rat(2), Rat(3)}) == Rat(10));
  CHECK(parsePoly<Rat>(R, "0").isZero());
}

TEST_CASE("exterior boundary and signs") {
  ExtPtr E = makeExt(4);
  auto e = [&](std::vector<int> idx) { return ExtElem<Rat>::fromIndices(E, idx); };
  // del(e1 e2 e3) = e12 - e13 + e23
  ExtElem<Rat> d = boundary(e({0, 1, 2}));
  CHECK(d == e({0, 1}) - e({0, 2}) + e({1, 2}));
  // del(e1) = 1
  CHECK(boundary(e({0})) == ExtElem<Rat>(E, Rat(1)));
  // del^2 = 0
  CHECK(boundary(boundary(e({0, 1, 2, 3}))).isZero());
}

TEST_CASE("boundary squares to zero exhaustively up to n = 9") {
  for (int n = 1; n <= 9; ++n) {
    ExtPtr E = makeExt(n);
    for (EMask m = 1; m < (EMask(1) << n); ++m) {
      auto w = ExtElem<Rat>::monomial(E, m);
      CHECK(boundary(boundary(w)).isZero());
    }
  }
}

TEST_CASE("exterior sign consistency on random homogeneous elements") {
  ExtPtr E = makeExt(6);
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int da = 1 + static_cast<int>(rng.below(3));
    int db = 1 + static_cast<int>(rng.below(3));
    ExtElem<Rat> a(E), b(E);
    for (int k = 0; k < 3; ++k) {
      EMask m = 0;
      while (edeg(m) != da) m = static_cast<EMask>(rng.below(1u << 6));
      a += Rat(rng.integer(-4, 4)) * ExtElem<Rat>::monomial(E, m);
      EMask m2 = 0;
      while (edeg(m2) != db) m2 = static_cast<EMask>(rng.below(1u << 6));
      b += Rat(rng.integer(-4, 4)) * ExtElem<Rat>::monomial(E, m2);
    }
    ExtElem<Rat> lhs = a * b;
    ExtElem<Rat> rhs = b * a;
    if ((da * db) % 2 == 1) rhs = -rhs;
    CHECK(lhs == rhs);
  }
}
