#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "arr/arrangement.hpp"
#include "arr/fixtures.hpp"

using namespace arr;

namespace {

// brute-force closure oracle: flats = distinct closures over all subsets
template <class K>
std::set<std::vector<int>> bruteForceFlats(const Arrangement<K>& A) {
  std::set<std::vector<int>> out;
  int n = A.n();
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    std::vector<int> S;
    for (int i = 0; i < n; ++i)
      if (s & (1u << i)) S.push_back(i);
    out.insert(closeRowSet(A.forms, S));
  }
  return out;
}

QPoly qpoly(std::vector<long> coeffs) {
  std::vector<Rat> c;
  for (long x : coeffs) c.emplace_back(x);
  return QPoly(c);
}

std::pair<int, int> rank2Profile(const IntersectionLattice& L) {
  int triples = 0, doubles = 0;
  for (int i = 0; i < L.size(); ++i) {
    if (L.flats[i].rank != 2) continue;
    if (L.mobius[i] == 2) ++triples;
    if (L.mobius[i] == 1) ++doubles;
  }
  return {triples, doubles};
}

}  // namespace

TEST_CASE("A3 lattice: counts, mobius, polynomials") {
  auto A = fixtures::a3ess<Rat>();
  auto L = intersectionLattice(A);
  CHECK(L.rank == 3);
  auto [triples, doubles] = rank2Profile(L);
  CHECK(triples == 4);
  CHECK(doubles == 3);
  CHECK(poincarePoly(L) == qpoly({1, 6, 11, 6}));
  CHECK(charPoly(L) == qpoly({-6, 11, -6, 1}));  // (t-1)(t-2)(t-3)
  // Mobius values over the whole lattice sum to zero
  long s = 0;
  for (long m : L.mobius) s += m;
  CHECK(s == 0);
}

TEST_CASE("non-Fano realization is lattice-validated") {
  auto A = fixtures::nonFano<Rat>();
  auto L = intersectionLattice(A);
  auto [triples, doubles] = rank2Profile(L);
  CHECK(triples == 6);
  CHECK(doubles == 3);
  CHECK(poincarePoly(L) == qpoly({1, 7, 15, 9}));
}

TEST_CASE("boolean lattice is the subset lattice") {
  auto A = fixtures::boolean_<Rat>(3);
  auto L = intersectionLattice(A);
  CHECK(L.size() == 8);
  for (int i = 0; i < L.size(); ++i) {
    int r = L.flats[i].rank;
    CHECK(L.mobius[i] == ((r % 2 == 0) ? 1 : -1));
    CHECK(static_cast<int>(L.flats[i].contains.size()) == r);
  }
  CHECK(poincarePoly(L) == qpoly({1, 3, 3, 1}));
  CHECK(charPoly(L) == qpoly({-1, 3, -3, 1}));
}

TEST_CASE("brute-force closure oracle confirms lattices (n <= 8)") {
  auto check = [](const Arrangement<Rat>& A) {
    auto L = intersectionLattice(A);
    auto brute = bruteForceFlats(A);
    CHECK(brute.size() == static_cast<size_t>(L.size()));
    for (auto& f : L.flats) CHECK(brute.count(f.contains) == 1);
  };
  check(fixtures::a3ess<Rat>());
  check(fixtures::nonFano<Rat>());
  check(fixtures::toy4<Rat>());
  check(fixtures::generic4<Rat>());
}

TEST_CASE("essentialize braid A3") {
  auto A = fixtures::a3braid<Rat>();
  CHECK(rank(Mat<Rat>(A.forms)) == 3);
  auto E = essentialize(A);
  CHECK(E.l() == 3);
  auto LA = intersectionLattice(A);
  auto LE = intersectionLattice(E);
  CHECK(poincarePoly(LA) == poincarePoly(LE));
  CHECK(poincarePoly(LE) == qpoly({1, 6, 11, 6}));
  // already essential: identity
  auto E2 = essentialize(E);
  CHECK(E2.l() == 3);
  // single hyperplane in C^3 -> rank 1
  auto S = makeArrangement<Rat>({{1, 2, 3}});
  CHECK(essentialize(S).l() == 1);
}

TEST_CASE("deletion and restriction with multiplicities") {
  auto NF = fixtures::nonFano<Rat>();
  // H = the last line x+y-z meets A3ess in four points
  auto T = makeTriple(NF, 6);
  CHECK(T.deleted.n() == 6);
  CHECK(T.restricted.n() == 4);
  long msum = 0;
  for (int m : T.restricted.mult) msum += m;
  CHECK(msum == 6);  // n - 1

  auto A3 = fixtures::a3ess<Rat>();
  auto T2 = makeTriple(A3, 0);  // H = x-y lies on 2 triples and 1 double
  CHECK(T2.restricted.n() == 3);
  std::multiset<int> ms(T2.restricted.mult.begin(), T2.restricted.mult.end());
  CHECK(ms == std::multiset<int>{1, 2, 2});

  auto B = fixtures::boolean_<Rat>(4);
  auto T3 = makeTriple(B, 0);
  CHECK(T3.restricted.n() == 3);
  for (int m : T3.restricted.mult) CHECK(m == 1);
}

TEST_CASE("graphic arrangements, chordality, induced cycles") {
  Graph K4 = completeGraph(4);
  auto AK4 = graphicArrangement<Rat>(K4);
  auto L = intersectionLattice(AK4);
  CHECK(poincarePoly(L) == qpoly({1, 6, 11, 6}));  // K4 gives braid A3

  Graph C6 = cycleGraph(6);
  CHECK_FALSE(isChordal(C6));
  CHECK(maxInducedCycle(C6) == 6);
  CHECK(isChordal(K4));
  CHECK(maxInducedCycle(K4) == 3);

  Graph tri;  // triangle with a pendant vertex
  tri.nv = 4;
  tri.addEdge(0, 1);
  tri.addEdge(1, 2);
  tri.addEdge(0, 2);
  tri.addEdge(2, 3);
  CHECK(isChordal(tri));
  auto At = graphicArrangement<Rat>(tri);
  auto Lt = intersectionLattice(At);
  CHECK(isSupersolvable(Lt).supersolvable);
}

TEST_CASE("graphic lattice fast path agrees with linear algebra") {
  for (Graph g : {completeGraph(4), cycleGraph(5), cycleGraph(6)}) {
    auto A = graphicArrangement<Rat>(g);
    auto L1 = intersectionLattice(A);
    auto L2 = graphicLattice(g);
    REQUIRE(L1.size() == L2.size());
    for (int i = 0; i < L1.size(); ++i) {
      CHECK(L1.flats[i].rank == L2.flats[i].rank);
      CHECK(L1.flats[i].contains == L2.flats[i].contains);
      CHECK(L1.mobius[i] == L2.mobius[i]);
    }
  }
}

TEST_CASE("supersolvability") {
  auto A3 = fixtures::a3ess<Rat>();
  auto rep = isSupersolvable(intersectionLattice(A3));
  CHECK(rep.supersolvable);
  CHECK(rep.chain.size() == 4);

  CHECK(isSupersolvable(intersectionLattice(fixtures::boolean_<Rat>(4))).supersolvable);
  CHECK_FALSE(isSupersolvable(intersectionLattice(fixtures::generic4<Rat>())).supersolvable);
}

TEST_CASE("modularity agrees with the rank identity on geometric lattices") {
  auto L = intersectionLattice(fixtures::nonFano<Rat>());
  for (int x = 0; x < L.size(); ++x) {
    bool viaRank = true;
    for (int y = 0; y < L.size() && viaRank; ++y) {
      int rx = L.flats[x].rank, ry = L.flats[y].rank;
      if (rx + ry != L.flats[L.meet(x, y)].rank + L.flats[L.join(x, y)].rank) viaRank = false;
    }
    CHECK(L.isModular(x) == viaRank);
  }
}

TEST_CASE("net search finds the (3,2)-net on A3 and nothing spurious") {
  auto A3 = fixtures::a3ess<Rat>();
  auto L = intersectionLattice(A3);
  auto nets = netSearch(A3, L, 3);
  REQUIRE(nets.size() == 1);
  std::set<std::vector<int>> classes(nets[0].classes.begin(), nets[0].classes.end());
  std::set<std::vector<int>> expect = {{0, 5}, {1, 3}, {2, 4}};
  CHECK(classes == expect);
  CHECK(nets[0].basePoints.size() == 4);  // the four triple points

  auto g4 = fixtures::generic4<Rat>();
  auto Lg = intersectionLattice(g4);
  CHECK(netSearch(g4, Lg, 3).empty());
  auto B3 = fixtures::boolean_<Rat>(3);
  auto Lb = intersectionLattice(B3);
  CHECK(netSearch(B3, Lb, 3).empty());
  CHECK_THROWS(netSearch(A3, L, 2));
}

TEST_CASE("neighborly partitions of A3 include the net partition") {
  auto A3 = fixtures::a3ess<Rat>();
  auto L = intersectionLattice(A3);
  auto parts = neighborlyPartitions(L, 6);
  bool foundNet = false;
  for (auto& p : parts) {
    std::set<std::vector<int>> blocks(p.begin(), p.end());
    if (blocks == std::set<std::vector<int>>{{0, 5}, {1, 3}, {2, 4}}) foundNet = true;
  }
  CHECK(foundNet);
}

TEST_CASE("poincare coefficients: nonnegative, linear term = n, essentialize-invariant") {
  for (auto A : {fixtures::a3ess<Rat>(), fixtures::nonFano<Rat>(), fixtures::toy4<Rat>(),
                 fixtures::generic4<Rat>()}) {
    auto L = intersectionLattice(A);
    QPoly p = poincarePoly(L);
    for (int i = 0; i <= p.degree(); ++i) CHECK(p.coeff(i) >= Rat(0));
    CHECK(p.coeff(1) == Rat(A.n()));
  }
}

TEST_CASE("arrangement validation rejects bad input") {
  CHECK_THROWS(makeArrangement<Rat>({{0, 0, 0}}));
  CHECK_THROWS(makeArrangement<Rat>({{1, 0, 0}, {2, 0, 0}}));
  CHECK_THROWS(makeArrangement<Rat>({{1, 0}, {0, 1}}, {}, {1}));
}
