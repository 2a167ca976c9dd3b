#pragma once

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "arr/matrix.hpp"
#include "arr/poly.hpp"
#include "arr/series.hpp"

namespace arr {

// ---------------------------------------------------------------------------
// Central arrangements: n labelled linear forms (rows) in l variables.

template <class K>
struct Arrangement {
  Mat<K> forms;                  // n x l, row i = l_i
  std::vector<int> mult;         // empty = simple
  std::vector<std::string> labels;
  std::vector<std::string> varNames;

  int n() const { return static_cast<int>(forms.rows()); }
  int l() const { return static_cast<int>(forms.cols()); }
  bool isMulti() const { return !mult.empty(); }
  int multiplicity(int i) const { return mult.empty() ? 1 : mult[static_cast<size_t>(i)]; }

  std::string label(int i) const {
    if (static_cast<size_t>(i) < labels.size()) return labels[static_cast<size_t>(i)];
    return "H" + std::to_string(i + 1);
  }

  RingPtr ring(MonOrder order = {}) const {
    if (!varNames.empty()) return makeRing(varNames, order);
    std::vector<std::string> nm;
    static const char* xyz[] = {"x", "y", "z", "w"};
    for (int i = 0; i < l(); ++i)
      nm.push_back(l() <= 4 ? xyz[i] : ("x" + std::to_string(i + 1)));
    return makeRing(nm, order);
  }

  Poly<K> form(int i, const RingPtr& R) const {
    Poly<K> f(R);
    for (int j = 0; j < l(); ++j)
      if (!forms(i, j).isZero()) f += Poly<K>::variable(R, static_cast<size_t>(j), forms(i, j));
    return f;
  }

  // defining polynomial (multiplicities included)
  Poly<K> definingPoly(const RingPtr& R) const {
    Poly<K> q(R, K(1));
    for (int i = 0; i < n(); ++i)
      for (int m = 0; m < multiplicity(i); ++m) q *= form(i, R);
    return q;
  }

  void validate() const {
    for (int i = 0; i < n(); ++i) {
      bool zero = true;
      for (int j = 0; j < l(); ++j)
        if (!forms(i, j).isZero()) zero = false;
      if (zero) throw std::invalid_argument("Arrangement: zero form " + label(i));
    }
    for (int i = 0; i < n(); ++i)
      for (int j = i + 1; j < n(); ++j) {
        Mat<K> two(2, l());
        two.row(0) = forms.row(i);
        two.row(1) = forms.row(j);
        if (rank(two) < 2)
          throw std::invalid_argument("Arrangement: proportional forms " + label(i) + ", " +
                                      label(j));
      }
    if (!mult.empty()) {
      if (static_cast<int>(mult.size()) != n())
        throw std::invalid_argument("Arrangement: mult length != form count");
      for (int m : mult)
        if (m < 1) throw std::invalid_argument("Arrangement: multiplicity < 1");
    }
  }
};

template <class K>
Arrangement<K> makeArrangement(const std::vector<std::vector<long>>& rows,
                               std::vector<std::string> varNames = {},
                               std::vector<int> mult = {}) {
  Arrangement<K> A;
  int n = static_cast<int>(rows.size());
  int l = n ? static_cast<int>(rows[0].size()) : 0;
  A.forms = Mat<K>::Constant(n, l, K(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < l; ++j) A.forms(i, j) = K(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  A.varNames = std::move(varNames);
  A.mult = std::move(mult);
  A.validate();
  return A;
}

// rank of the row set indexed by S
template <class K>
int rowSetRank(const Mat<K>& forms, const std::vector<int>& S) {
  if (S.empty()) return 0;
  Mat<K> m(static_cast<int>(S.size()), forms.cols());
  for (size_t i = 0; i < S.size(); ++i) m.row(static_cast<int>(i)) = forms.row(S[i]);
  return rank(m);
}

// closure: all hyperplanes whose form lies in the row span of S
template <class K>
std::vector<int> closeRowSet(const Mat<K>& forms, const std::vector<int>& S) {
  int r = rowSetRank(forms, S);
  std::vector<int> out;
  for (int h = 0; h < forms.rows(); ++h) {
    std::vector<int> S2 = S;
    S2.push_back(h);
    if (rowSetRank(forms, S2) == r) out.push_back(h);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Intersection lattice: flats keyed by their closed hyperplane sets,
// with Mobius values.

struct Flat {
  int rank = 0;
  std::vector<int> contains;  // sorted
};

struct IntersectionLattice {
  std::vector<Flat> flats;  // index 0 = bottom, sorted by rank
  std::vector<long> mobius;
  int rank = 0;  // rank of the top flat
  std::map<std::vector<int>, int> byKey;
  std::vector<std::vector<std::uint64_t>> up;  // upset bitsets, ids ascending

  int size() const { return static_cast<int>(flats.size()); }

  void buildUpsets() {
    int n = size();
    int words = (n + 63) / 64;
    up.assign(static_cast<size_t>(n), std::vector<std::uint64_t>(static_cast<size_t>(words), 0));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (leq(a, b)) up[static_cast<size_t>(a)][static_cast<size_t>(b / 64)] |= (1ull << (b % 64));
  }

  bool leq(int a, int b) const {
    const auto& A = flats[static_cast<size_t>(a)].contains;
    const auto& B = flats[static_cast<size_t>(b)].contains;
    return std::includes(B.begin(), B.end(), A.begin(), A.end());
  }

  int flatOf(const std::vector<int>& key) const {
    auto it = byKey.find(key);
    if (it == byKey.end()) throw std::logic_error("IntersectionLattice: not a flat");
    return it->second;
  }

  int meet(int a, int b) const {
    std::vector<int> inter;
    std::set_intersection(flats[static_cast<size_t>(a)].contains.begin(),
                          flats[static_cast<size_t>(a)].contains.end(),
                          flats[static_cast<size_t>(b)].contains.begin(),
                          flats[static_cast<size_t>(b)].contains.end(),
                          std::back_inserter(inter));
    return flatOf(inter);  // intersections of closed sets are closed
  }

  // join: smallest flat containing both; ids are rank-sorted, so the first
  // common element of the upsets is the join
  int join(int a, int b) const {
    if (!up.empty()) {
      const auto& ua = up[static_cast<size_t>(a)];
      const auto& ub = up[static_cast<size_t>(b)];
      for (size_t w = 0; w < ua.size(); ++w) {
        std::uint64_t x = ua[w] & ub[w];
        if (x) return static_cast<int>(w * 64 + static_cast<size_t>(std::countr_zero(x)));
      }
      return -1;
    }
    int best = -1;
    for (int c = 0; c < size(); ++c) {
      if (!leq(a, c) || !leq(b, c)) continue;
      if (best < 0 || leq(c, best)) best = c;
    }
    return best;
  }

  std::vector<int> flatsOfRank(int r) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (flats[static_cast<size_t>(i)].rank == r) out.push_back(i);
    return out;
  }

  // modular test (Dedekind identity over the whole lattice)
  bool isModular(int x) const {
    for (int y = 0; y < size(); ++y)
      for (int z = 0; z < size(); ++z) {
        if (z == y || !leq(z, y)) continue;
        if (join(z, meet(x, y)) != meet(join(z, x), y)) return false;
      }
    return true;
  }
};

template <class K>
IntersectionLattice intersectionLattice(const Arrangement<K>& A) {
  IntersectionLattice L;
  auto addFlat = [&](std::vector<int> key, int rank) -> int {
    auto it = L.byKey.find(key);
    if (it != L.byKey.end()) return it->second;
    int id = L.size();
    L.byKey[key] = id;
    L.flats.push_back({rank, std::move(key)});
    return id;
  };
  std::vector<int> bottomKey = closeRowSet(A.forms, {});
  addFlat(bottomKey, 0);
  // BFS by rank: extend each flat by each hyperplane not contained in it
  size_t head = 0;
  while (head < L.flats.size()) {
    Flat f = L.flats[head];
    ++head;
    for (int h = 0; h < A.n(); ++h) {
      if (std::binary_search(f.contains.begin(), f.contains.end(), h)) continue;
      std::vector<int> S = f.contains;
      S.push_back(h);
      int r = rowSetRank(A.forms, S);
      std::vector<int> key = closeRowSet(A.forms, S);
      addFlat(std::move(key), r);
    }
  }
  // sort flats by (rank, contains) for deterministic ids
  std::vector<int> perm(L.flats.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    const Flat& fa = L.flats[static_cast<size_t>(a)];
    const Flat& fb = L.flats[static_cast<size_t>(b)];
    if (fa.rank != fb.rank) return fa.rank < fb.rank;
    return fa.contains < fb.contains;
  });
  std::vector<Flat> sorted;
  for (int p : perm) sorted.push_back(L.flats[static_cast<size_t>(p)]);
  L.flats = std::move(sorted);
  L.byKey.clear();
  for (int i = 0; i < L.size(); ++i) L.byKey[L.flats[static_cast<size_t>(i)].contains] = i;
  L.rank = L.flats.back().rank;

  // Mobius recursion mu(t) = -sum_{s<t} mu(s)
  L.mobius.assign(L.flats.size(), 0);
  L.mobius[0] = 1;
  for (int i = 1; i < L.size(); ++i) {
    long s = 0;
    for (int j = 0; j < i; ++j)
      if (L.leq(j, i)) s += L.mobius[static_cast<size_t>(j)];
    L.mobius[static_cast<size_t>(i)] = -s;
  }
  L.buildUpsets();
  return L;
}

inline QPoly poincarePoly(const IntersectionLattice& L) {
  QPoly p;
  for (int i = 0; i < L.size(); ++i) {
    int r = L.flats[static_cast<size_t>(i)].rank;
    long m = L.mobius[static_cast<size_t>(i)];
    long c = (r % 2 == 0) ? m : -m;  // mu(x) (-t)^rank
    p += QPoly::monomial(r, Rat(c));
  }
  return p;
}

inline QPoly charPoly(const IntersectionLattice& L) {
  QPoly p;
  for (int i = 0; i < L.size(); ++i) {
    int r = L.flats[static_cast<size_t>(i)].rank;
    p += QPoly::monomial(L.rank - r, Rat(L.mobius[static_cast<size_t>(i)]));
  }
  return p;
}

// ---------------------------------------------------------------------------
// essentialize: project onto the span of the forms

template <class K>
Arrangement<K> essentialize(const Arrangement<K>& A) {
  Mat<K> m = A.forms;
  std::vector<int> piv = rref_inplace(m);
  int r = static_cast<int>(piv.size());
  if (r == A.l()) return A;
  // each form equals sum over pivots of its pivot-column coefficients times
  // the rref rows; those coefficients are the essential coordinates
  Arrangement<K> B;
  B.forms = Mat<K>::Constant(A.n(), r, K(0));
  // coefficients: solve forms = C * rref_rows; C(i,j) = entry of forms(i) at
  // pivot column j after eliminating earlier pivots -> use back substitution
  for (int i = 0; i < A.n(); ++i) {
    // residual = form_i; subtract rref rows
    Col<K> res = A.forms.row(i).transpose();
    for (int j = 0; j < r; ++j) {
      K c = res(piv[static_cast<size_t>(j)]);
      B.forms(i, j) = c;
      if (!c.isZero())
        for (int t = 0; t < A.l(); ++t) res(t) = res(t) - c * m(j, t);
    }
    for (int t = 0; t < A.l(); ++t)
      if (!res(t).isZero()) throw std::logic_error("essentialize: form outside row span");
  }
  B.mult = A.mult;
  B.labels = A.labels;
  return B;
}

// ---------------------------------------------------------------------------
// deletion / restriction

template <class K>
Arrangement<K> deletion(const Arrangement<K>& A, int h) {
  Arrangement<K> B;
  B.forms = Mat<K>::Constant(A.n() - 1, A.l(), K(0));
  int r = 0;
  for (int i = 0; i < A.n(); ++i) {
    if (i == h) continue;
    B.forms.row(r) = A.forms.row(i);
    if (!A.mult.empty()) B.mult.push_back(A.mult[static_cast<size_t>(i)]);
    if (!A.labels.empty()) B.labels.push_back(A.labels[static_cast<size_t>(i)]);
    ++r;
  }
  B.varNames = A.varNames;
  return B;
}

// Restriction to H: one hyperplane per rank-2 flat through H, with the
// natural (Ziegler) multiplicities. Works in coordinates of ker(l_H).
template <class K>
Arrangement<K> restriction(const Arrangement<K>& A, int h, const IntersectionLattice& L) {
  Mat<K> lh(1, A.l());
  lh.row(0) = A.forms.row(h);
  Mat<K> B = kernel_basis(lh);  // l x (l-1)
  std::vector<std::vector<int>> groups;
  for (int i = 0; i < L.size(); ++i) {
    const Flat& f = L.flats[static_cast<size_t>(i)];
    if (f.rank != 2) continue;
    if (!std::binary_search(f.contains.begin(), f.contains.end(), h)) continue;
    groups.push_back(f.contains);
  }
  Arrangement<K> R;
  R.forms = Mat<K>::Constant(static_cast<int>(groups.size()), A.l() - 1, K(0));
  for (size_t g = 0; g < groups.size(); ++g) {
    int rep = -1;
    int m = 0;
    for (int i : groups[g]) {
      if (i == h) continue;
      if (rep < 0) rep = i;
      m += A.multiplicity(i);
    }
    R.forms.row(static_cast<int>(g)) = A.forms.row(rep) * B;
    R.mult.push_back(m);
  }
  return R;
}

template <class K>
struct Triple {
  Arrangement<K> deleted;      // A'
  Arrangement<K> restricted;   // A'' with natural multiplicities
};

template <class K>
Triple<K> makeTriple(const Arrangement<K>& A, int h) {
  if (h < 0 || h >= A.n()) throw std::invalid_argument("triple: no such hyperplane");
  IntersectionLattice L = intersectionLattice(A);
  return {deletion(A, h), restriction(A, h, L)};
}

// ---------------------------------------------------------------------------
// graphs and graphic arrangements

struct Graph {
  int nv = 0;
  std::set<std::pair<int, int>> edges;  // i < j

  void addEdge(int i, int j) {
    if (i == j) throw std::invalid_argument("Graph: loop");
    if (i > j) std::swap(i, j);
    edges.insert({i, j});
  }
  bool has(int i, int j) const {
    if (i > j) std::swap(i, j);
    return edges.count({i, j}) > 0;
  }
  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (auto& [a, b] : edges) {
      if (a == v) out.push_back(b);
      if (b == v) out.push_back(a);
    }
    return out;
  }
};

inline Graph cycleGraph(int n) {
  Graph g;
  g.nv = n;
  for (int i = 0; i < n; ++i) g.addEdge(i, (i + 1) % n);
  return g;
}
inline Graph completeGraph(int n) {
  Graph g;
  g.nv = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.addEdge(i, j);
  return g;
}

template <class K>
Arrangement<K> graphicArrangement(const Graph& g) {
  Arrangement<K> A;
  A.forms = Mat<K>::Constant(static_cast<int>(g.edges.size()), g.nv, K(0));
  int r = 0;
  for (auto& [i, j] : g.edges) {
    A.forms(r, i) = K(1);
    A.forms(r, j) = K(-1);
    A.labels.push_back("z" + std::to_string(i + 1) + "-z" + std::to_string(j + 1));
    ++r;
  }
  return A;
}

// chordal iff a perfect elimination ordering exists (greedy simplicial removal)
inline bool isChordal(Graph g) {
  std::vector<bool> removed(static_cast<size_t>(g.nv), false);
  for (int step = 0; step < g.nv; ++step) {
    int pick = -1;
    for (int v = 0; v < g.nv; ++v) {
      if (removed[static_cast<size_t>(v)]) continue;
      std::vector<int> nb;
      for (int u : g.neighbors(v))
        if (!removed[static_cast<size_t>(u)]) nb.push_back(u);
      bool simplicial = true;
      for (size_t a = 0; a < nb.size() && simplicial; ++a)
        for (size_t b = a + 1; b < nb.size() && simplicial; ++b)
          if (!g.has(nb[a], nb[b])) simplicial = false;
      if (simplicial) { pick = v; break; }
    }
    if (pick < 0) return false;
    removed[static_cast<size_t>(pick)] = true;
  }
  return true;
}

// longest induced cycle by exhaustive vertex-subset search (desk scale)
inline int maxInducedCycle(const Graph& g) {
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << g.nv); ++s) {
    int cnt = std::popcount(s);
    if (cnt < 3 || cnt <= best) continue;
    std::vector<int> vs;
    for (int v = 0; v < g.nv; ++v)
      if (s & (1u << v)) vs.push_back(v);
    bool cycle = true;
    int ne = 0;
    for (size_t a = 0; a < vs.size() && cycle; ++a) {
      int deg = 0;
      for (size_t b = 0; b < vs.size(); ++b)
        if (a != b && g.has(vs[a], vs[b])) ++deg;
      if (deg != 2) cycle = false;
      ne += deg;
    }
    if (!cycle || ne != 2 * cnt) continue;
    // connectivity of the induced subgraph
    std::vector<int> stack{vs[0]};
    std::set<int> seen{vs[0]};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : vs)
        if (u != v && g.has(u, v) && !seen.count(u)) {
          seen.insert(u);
          stack.push_back(u);
        }
    }
    if (static_cast<int>(seen.size()) == cnt) best = cnt;
  }
  return best;
}

// combinatorial lattice of a graphic arrangement: flats = partitions of the
// vertex set into connected blocks, ordered by refinement (fast path used by
// the chordality/supersolvability property suite)
inline IntersectionLattice graphicLattice(const Graph& g) {
  std::vector<std::pair<int, int>> edges(g.edges.begin(), g.edges.end());
  int ne = static_cast<int>(edges.size());
  IntersectionLattice L;
  auto closure = [&](std::uint32_t s) {
    // union-find components of the edge subset, then all edges inside comps
    std::vector<int> parent(static_cast<size_t>(g.nv));
    for (int v = 0; v < g.nv; ++v) parent[static_cast<size_t>(v)] = v;
    std::function<int(int)> find = [&](int v) {
      while (parent[static_cast<size_t>(v)] != v) v = parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
      return v;
    };
    for (int e = 0; e < ne; ++e)
      if (s & (1u << e)) parent[static_cast<size_t>(find(edges[static_cast<size_t>(e)].first))] = find(edges[static_cast<size_t>(e)].second);
    std::vector<int> key;
    int rank = 0;
    for (int e = 0; e < ne; ++e)
      if (find(edges[static_cast<size_t>(e)].first) == find(edges[static_cast<size_t>(e)].second)) key.push_back(e);
    std::set<int> roots;
    for (int v = 0; v < g.nv; ++v) roots.insert(find(v));
    rank = g.nv - static_cast<int>(roots.size());
    return std::make_pair(key, rank);
  };
  auto addFlat = [&](std::vector<int> key, int rank) {
    if (!L.byKey.count(key)) {
      L.byKey[key] = L.size();
      L.flats.push_back({rank, std::move(key)});
    }
  };
  auto [bk, br] = closure(0);
  addFlat(bk, br);
  size_t head = 0;
  while (head < L.flats.size()) {
    Flat f = L.flats[head];
    ++head;
    std::uint32_t s = 0;
    for (int e : f.contains) s |= (1u << e);
    for (int e = 0; e < ne; ++e) {
      if (s & (1u << e)) continue;
      auto [k2, r2] = closure(s | (1u << e));
      addFlat(k2, r2);
    }
  }
  std::sort(L.flats.begin(), L.flats.end(), [](const Flat& a, const Flat& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.contains < b.contains;
  });
  L.byKey.clear();
  for (int i = 0; i < L.size(); ++i) L.byKey[L.flats[static_cast<size_t>(i)].contains] = i;
  L.rank = L.flats.back().rank;
  L.mobius.assign(L.flats.size(), 0);
  L.mobius[0] = 1;
  for (int i = 1; i < L.size(); ++i) {
    long sum = 0;
    for (int j = 0; j < i; ++j)
      if (L.leq(j, i)) sum += L.mobius[static_cast<size_t>(j)];
    L.mobius[static_cast<size_t>(i)] = -sum;
  }
  L.buildUpsets();
  return L;
}

// ---------------------------------------------------------------------------
// supersolvability: maximal chain of modular flats, one per rank

struct SupersolvableReport {
  bool supersolvable = false;
  std::vector<int> chain;  // flat ids, rank 0..rank
};

inline SupersolvableReport isSupersolvable(const IntersectionLattice& L) {
  std::map<int, bool> modularCache;
  auto modular = [&](int x) {
    auto it = modularCache.find(x);
    if (it != modularCache.end()) return it->second;
    bool m = L.isModular(x);
    modularCache[x] = m;
    return m;
  };
  SupersolvableReport rep;
  std::vector<int> chain{0};
  std::function<bool(int)> dfs = [&](int cur) {
    const Flat& f = L.flats[static_cast<size_t>(cur)];
    if (f.rank == L.rank) {
      rep.supersolvable = true;
      rep.chain = chain;
      return true;
    }
    for (int cand = 0; cand < L.size(); ++cand) {
      if (L.flats[static_cast<size_t>(cand)].rank != f.rank + 1) continue;
      if (!L.leq(cur, cand)) continue;
      if (!modular(cand)) continue;
      chain.push_back(cand);
      if (dfs(cand)) return true;
      chain.pop_back();
    }
    return false;
  };
  dfs(0);
  return rep;
}

// ---------------------------------------------------------------------------
// nets and neighborly partitions

struct Net {
  int k = 0, m = 0;
  std::vector<std::vector<int>> classes;
  std::vector<int> basePoints;  // flat ids
};

// exhaustive equal-size-class partition search with the net axioms
template <class K>
std::vector<Net> netSearch(const Arrangement<K>& A, const IntersectionLattice& L, int k) {
  if (k < 3) throw std::invalid_argument("netSearch: k >= 3 required");
  std::vector<Net> out;
  int n = A.n();
  if (n % k != 0) return out;
  int m = n / k;
  std::vector<int> cls(static_cast<size_t>(n), -1);
  std::vector<int> count(static_cast<size_t>(k), 0);
  std::vector<int> rank2;
  for (int i = 0; i < L.size(); ++i)
    if (L.flats[static_cast<size_t>(i)].rank == 2) rank2.push_back(i);

  auto check = [&]() {
    std::vector<int> base;
    for (int fid : rank2) {
      const auto& c = L.flats[static_cast<size_t>(fid)].contains;
      std::set<int> touched;
      for (int h : c) touched.insert(cls[static_cast<size_t>(h)]);
      if (touched.size() < 2) continue;  // mono-class point: not a base point
      // base point: exactly one line from every class
      std::vector<int> per(static_cast<size_t>(k), 0);
      for (int h : c) per[static_cast<size_t>(cls[static_cast<size_t>(h)])]++;
      for (int t = 0; t < k; ++t)
        if (per[static_cast<size_t>(t)] != 1) return std::pair<bool, std::vector<int>>{false, {}};
      base.push_back(fid);
    }
    return std::pair<bool, std::vector<int>>{true, base};
  };

  std::function<void(int)> rec = [&](int h) {
    if (h == n) {
      auto [ok, base] = check();
      if (ok) {
        Net nt;
        nt.k = k;
        nt.m = m;
        nt.classes.assign(static_cast<size_t>(k), {});
        for (int i = 0; i < n; ++i) nt.classes[static_cast<size_t>(cls[static_cast<size_t>(i)])].push_back(i);
        nt.basePoints = base;
        out.push_back(std::move(nt));
      }
      return;
    }
    int maxc = 0;
    for (int i = 0; i < h; ++i) maxc = std::max(maxc, cls[static_cast<size_t>(i)] + 1);
    for (int c = 0; c <= std::min(maxc, k - 1); ++c) {  // canonical: first use of class c
      if (count[static_cast<size_t>(c)] == m) continue;
      cls[static_cast<size_t>(h)] = c;
      count[static_cast<size_t>(c)]++;
      rec(h + 1);
      count[static_cast<size_t>(c)]--;
      cls[static_cast<size_t>(h)] = -1;
    }
  };
  rec(0);
  return out;
}

// all partitions (>= 2 blocks) satisfying the neighborliness condition
inline std::vector<std::vector<std::vector<int>>> neighborlyPartitions(
    const IntersectionLattice& L, int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> cls(static_cast<size_t>(n), -1);
  std::vector<int> rank2;
  for (int i = 0; i < L.size(); ++i)
    if (L.flats[static_cast<size_t>(i)].rank == 2) rank2.push_back(i);

  auto neighborly = [&]() {
    int blocks = 0;
    for (int i = 0; i < n; ++i) blocks = std::max(blocks, cls[static_cast<size_t>(i)] + 1);
    if (blocks < 2) return false;
    for (int fid : rank2) {
      const auto& c = L.flats[static_cast<size_t>(fid)].contains;
      long mu = static_cast<long>(c.size()) - 1;  // mobius of a rank-2 flat
      for (int b = 0; b < blocks; ++b) {
        long inter = 0;
        for (int h : c)
          if (cls[static_cast<size_t>(h)] == b) ++inter;
        if (mu <= inter && inter < static_cast<long>(c.size())) return false;
      }
    }
    return true;
  };

  std::function<void(int, int)> rec = [&](int h, int used) {
    if (h == n) {
      if (neighborly()) {
        int blocks = used;
        std::vector<std::vector<int>> part(static_cast<size_t>(blocks));
        for (int i = 0; i < n; ++i) part[static_cast<size_t>(cls[static_cast<size_t>(i)])].push_back(i);
        out.push_back(std::move(part));
      }
      return;
    }
    for (int c = 0; c <= std::min(used, n - 1); ++c) {
      cls[static_cast<size_t>(h)] = c;
      rec(h + 1, std::max(used, c + 1));
      cls[static_cast<size_t>(h)] = -1;
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace arr
