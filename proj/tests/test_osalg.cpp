#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arr/fixtures.hpp"
#include "arr/osalg.hpp"
#include "arr/rng.hpp"

using namespace arr;

namespace {
QPoly qpoly(std::vector<long> coeffs) {
  std::vector<Rat> c;
  for (long x : coeffs) c.emplace_back(x);
  return QPoly(c);
}
}  // namespace

TEST_CASE("circuits with coefficients") {
  auto g4 = fixtures::generic4<Rat>();
  auto cs = circuits(g4);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].support == std::vector<int>{0, 1, 2, 3});
  // l1 + l2 + l3 - l4 = 0, normalized with first coefficient 1
  CHECK(cs[0].coeffs == std::vector<Rat>{Rat(1), Rat(1), Rat(1), Rat(-1)});

  CHECK(circuits(fixtures::boolean_<Rat>(4)).empty());

  auto a3 = fixtures::a3ess<Rat>();
  auto ca = circuits(a3);
  std::set<std::vector<int>> triples;
  for (auto& c : ca) {
    CHECK((c.support.size() == 3 || c.support.size() == 4));
    if (c.support.size() == 3) triples.insert(c.support);
  }
  // the three-element circuits are exactly the four triple points
  std::set<std::vector<int>> expect = {{0, 1, 2}, {0, 3, 4}, {1, 4, 5}, {2, 3, 5}};
  CHECK(triples == expect);
  for (auto& c : ca) {
    // dependency really annihilates the forms
    for (int col = 0; col < 3; ++col) {
      Rat s(0);
      for (size_t j = 0; j < c.support.size(); ++j)
        s += c.coeffs[j] * a3.forms(c.support[j], col);
      CHECK(s.isZero());
    }
  }
}

TEST_CASE("OS algebra of the toy arrangement") {
  auto A = fixtures::toy4<Rat>();
  auto os = osAlgebra(A);
  REQUIRE(os.idealGens.size() == 1);  // only del(e1 e2 e3); the 4-set is redundant
  CHECK(os.hilbert() == qpoly({1, 4, 5, 2}));
  // del(e1 e2 e3 e4) reduces to zero in A
  ExtElem<Rat> w = boundary(ExtElem<Rat>::fromIndices(os.E, {0, 1, 2, 3}));
  Col<Rat> v = os.Q.reduce(w, 3);
  for (int i = 0; i < v.rows(); ++i) CHECK(v(i).isZero());
  // paper's A_2 basis: e13, e14, e23, e24, e34 (e12 eliminated)
  std::vector<EMask> basis = os.Q.basisMasks(2);
  std::vector<EMask> expect = {0b0101, 0b1001, 0b0110, 0b1010, 0b1100};
  CHECK(basis == expect);
}

TEST_CASE("OS Hilbert series equals the Poincare polynomial") {
  auto check = [](const Arrangement<Rat>& A) {
    auto os = osAlgebra(A);
    CHECK(os.hilbert() == poincarePoly(intersectionLattice(A)));
  };
  check(fixtures::a3ess<Rat>());
  check(fixtures::nonFano<Rat>());
  check(fixtures::toy4<Rat>());
  check(fixtures::boolean_<Rat>(4));
  check(fixtures::generic4<Rat>());
}

TEST_CASE("A3 quadratic OS relations match the printed I2") {
  auto os = osAlgebra(fixtures::a3ess<Rat>());
  auto quads = os.quadraticRelations();
  REQUIRE(quads.size() == 4);
  // I2 = <del(e1e4e5), del(e0e1e2), del(e2e3e5), del(e0e3e4)> (0-indexed)
  std::set<std::vector<int>> sup;
  for (auto& c : os.circ)
    if (c.support.size() == 3) sup.insert(c.support);
  CHECK(sup == std::set<std::vector<int>>{{1, 4, 5}, {0, 1, 2}, {2, 3, 5}, {0, 3, 4}});
}

TEST_CASE("Tor over E of A3 reproduces the printed b' table") {
  auto os = osAlgebra(fixtures::a3ess<Rat>());
  auto res = torOverE(os, 5, 7);
  CHECK(res.total(0) == 1);
  CHECK(res.total(1) == 4);
  CHECK(res.total(2) == 10);
  CHECK(res.total(3) == 21);
  CHECK(res.total(4) == 45);
  CHECK(res.total(5) == 91);
  // linear strand
  CHECK(res.get(1, 2) == 4);
  CHECK(res.get(2, 3) == 10);
  CHECK(res.get(3, 4) == 15);
  CHECK(res.get(4, 5) == 20);
  CHECK(res.get(5, 6) == 25);
  // second strand
  CHECK(res.get(3, 5) == 6);
  CHECK(res.get(4, 6) == 25);
  CHECK(res.get(5, 7) == 66);
  // boolean: A = E is free over E
  auto ob = osAlgebra(fixtures::boolean_<Rat>(3));
  auto rb = torOverE(ob, 4, 6);
  CHECK(rb.total(0) == 1);
  CHECK(rb.total(1) == 0);
}

TEST_CASE("Tor over E of the non-Fano arrangement") {
  auto os = osAlgebra(fixtures::nonFano<Rat>());
  auto res = torOverE(os, 5, 7);
  long totals[6] = {1, 7, 23, 63, 165, 387};
  for (int i = 0; i <= 5; ++i) CHECK(res.total(i) == totals[i]);
  long row1[5] = {6, 17, 27, 36, 45};
  for (int i = 1; i <= 5; ++i) CHECK(res.get(i, i + 1) == row1[i - 1]);
  long row2[5] = {1, 6, 36, 129, 342};
  for (int i = 1; i <= 5; ++i) CHECK(res.get(i, i + 2) == row2[i - 1]);
}

TEST_CASE("Koszul test: A3 diagonal over Q to degree 5") {
  auto os = osAlgebra(fixtures::a3ess<Rat>());
  auto rep = koszulTest(os.Q, 5);
  CHECK(rep.koszulUpToCutoff);
  CHECK(rep.diagonal == std::vector<long>{1, 6, 25, 90, 301, 966});
  CHECK(koszulDualityIdentity(rep, os.hilbert()));
}

TEST_CASE("Koszul test: A3 full table over a prime field to degree 6") {
  GF::Context ctx(32003);
  auto A = fixtures::a3ess<GF>();
  auto os = osAlgebra(A);
  auto rep = koszulTest(os.Q, 6);
  CHECK(rep.koszulUpToCutoff);
  CHECK(rep.diagonal == std::vector<long>{1, 6, 25, 90, 301, 966, 3025});
}

TEST_CASE("Koszul test: non-Fano fails with a degree-3 relation class") {
  auto os = osAlgebra(fixtures::nonFano<Rat>());
  auto rep = koszulTest(os.Q, 4);
  CHECK_FALSE(rep.koszulUpToCutoff);
  CHECK(rep.get(2, 3) == 1);  // the cubic generator of the OS ideal
  // against the printed b table: totals 1, 7, 35, 156 start the columns
  CHECK(rep.get(1, 1) == 7);
  CHECK(rep.get(2, 2) == 34);
  CHECK(rep.get(3, 3) == 143);
  CHECK(rep.get(3, 4) == 13);
}

TEST_CASE("boolean OS algebra is Koszul with binomial diagonal") {
  auto os = osAlgebra(fixtures::boolean_<Rat>(3));
  auto rep = koszulTest(os.Q, 5);
  CHECK(rep.koszulUpToCutoff);
  // dim Tor^E_i(K,K)_i = C(n-1+i, i) for n = 3
  CHECK(rep.diagonal == std::vector<long>{1, 3, 6, 10, 15, 21});
}

TEST_CASE("quadratic Groebner bases: supersolvable yes, non-Fano no") {
  auto a3 = osAlgebra(fixtures::a3ess<Rat>());
  auto r1 = hasQuadraticGB(a3);
  CHECK(r1.found);
  auto ob = osAlgebra(fixtures::boolean_<Rat>(3));
  CHECK(hasQuadraticGB(ob).found);
  auto nf = osAlgebra(fixtures::nonFano<Rat>());
  auto r3 = hasQuadraticGB(nf);
  CHECK_FALSE(r3.found);
  CHECK(r3.exhaustive);
}

TEST_CASE("quadratic duality") {
  // S^! = E on n generators
  auto S = commutativeQuadratic<Rat>(3);
  auto Sdual = quadraticDual(S);
  auto E = exteriorQuadratic<Rat>(3);
  // compare relation subspaces
  auto spanEq = [](const std::vector<Col<Rat>>& a, const std::vector<Col<Rat>>& b) {
    Mat<Rat> ma = Mat<Rat>::Constant(static_cast<int>(a.size()), a[0].rows(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) ma.row(static_cast<int>(i)) = a[i].transpose();
    Mat<Rat> mb = Mat<Rat>::Constant(static_cast<int>(b.size()), b[0].rows(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) mb.row(static_cast<int>(i)) = b[i].transpose();
    Mat<Rat> mab = Mat<Rat>::Constant(ma.rows() + mb.rows(), ma.cols(), Rat(0));
    mab.topRows(ma.rows()) = ma;
    mab.bottomRows(mb.rows()) = mb;
    return rank(ma) == rank(mb) && rank(mb) == rank(mab);
  };
  CHECK(spanEq(Sdual.rels, E.rels));
  // involution: (R^perp)^perp = R on random subspaces
  Rng rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    QuadraticAlgebra<Rat> Q;
    Q.n = 3;
    for (int k = 0; k < 3; ++k) {
      Col<Rat> v = Col<Rat>::Constant(9, Rat(0));
      for (int i = 0; i < 9; ++i) v(i) = Rat(rng.integer(-2, 2));
      if (!v.isZero()) Q.rels.push_back(v);
    }
    if (Q.rels.empty()) continue;
    auto QQ = quadraticDual(quadraticDual(Q));
    CHECK(spanEq(Q.rels, QQ.rels));
  }
  // dims: S on 3 vars and E on 3 vars
  CHECK(quadraticAlgebraDims(S, 4) == std::vector<long>{1, 3, 6, 10, 15});
  CHECK(quadraticAlgebraDims(E, 4) == std::vector<long>{1, 3, 3, 1, 0});
}

TEST_CASE("quadratic closure of OS(A3) and its dual Hilbert series") {
  auto os = osAlgebra(fixtures::a3ess<Rat>());
  // A3's OS ideal is quadratically generated, so Abar = A
  auto closure = osQuadraticClosureSlices(os);
  for (int d = 0; d <= 3; ++d) CHECK(closure.dim(d) == os.Q.dim(d));

  // HS(Abar^!, t) * HS(Abar, -t) = 1 up to degree 4 over Q (the full degree-6
  // check runs in the acceptance suite over a prime field)
  auto dual = quadraticDual(osQuadraticClosure(os));
  auto dims = quadraticAlgebraDims(dual, 4);
  QPoly dualHS;
  for (size_t i = 0; i < dims.size(); ++i) dualHS += QPoly::monomial(static_cast<int>(i), Rat(dims[i]));
  QPoly prod = dualHS * os.hilbert().negated_t();
  CHECK(prod.coeff(0) == Rat(1));
  for (int i = 1; i <= 4; ++i) CHECK(prod.coeff(i) == Rat(0));
  CHECK(dims == std::vector<long>{1, 6, 25, 90, 301});

  // non-Fano's closure differs from A in degree 3 (the cubic generator)
  auto nf = osAlgebra(fixtures::nonFano<Rat>());
  auto nfClosure = osQuadraticClosureSlices(nf);
  CHECK(nfClosure.dim(3) == nf.Q.dim(3) + 1);
}
