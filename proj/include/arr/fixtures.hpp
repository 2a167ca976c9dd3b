#pragma once

#include "arr/arrangement.hpp"

namespace arr::fixtures {

// Braid arrangement A3, essentialized, with hyperplanes ordered
//   e0 = x-y, e1 = x-z, e2 = y-z, e3 = y, e4 = x, e5 = z
// (the labelling used for the resonance computations; the four triple points
// are {1,4,5}, {0,1,2}, {2,3,5}, {0,3,4} and the normal crossings
// {0,5}, {1,3}, {2,4}).
template <class K>
Arrangement<K> a3ess() {
  auto A = makeArrangement<K>(
      {{1, -1, 0}, {1, 0, -1}, {0, 1, -1}, {0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, {"x", "y", "z"});
  A.labels = {"e0", "e1", "e2", "e3", "e4", "e5"};
  return A;
}

// braid A3 inside C^4 (non-essential), forms x_i - x_j
template <class K>
Arrangement<K> a3braid() {
  return makeArrangement<K>({{1, -1, 0, 0},
                             {1, 0, -1, 0},
                             {1, 0, 0, -1},
                             {0, 1, -1, 0},
                             {0, 1, 0, -1},
                             {0, 0, 1, -1}},
                            {"x1", "x2", "x3", "x4"});
}

// non-Fano: A3ess plus the line x+y-z (6 triple points, 3 doubles)
template <class K>
Arrangement<K> nonFano() {
  return makeArrangement<K>({{1, 0, 0},
                             {0, 1, 0},
                             {0, 0, 1},
                             {1, -1, 0},
                             {1, 0, -1},
                             {0, 1, -1},
                             {1, 1, -1}},
                            {"x", "y", "z"});
}

// the toy arrangement V(xy(x-y)z): one triple point and three doubles
template <class K>
Arrangement<K> toy4() {
  return makeArrangement<K>({{1, 0, 0}, {0, 1, 0}, {1, -1, 0}, {0, 0, 1}}, {"x", "y", "z"});
}

template <class K>
Arrangement<K> boolean_(int l) {
  std::vector<std::vector<long>> rows;
  for (int i = 0; i < l; ++i) {
    std::vector<long> r(static_cast<size_t>(l), 0);
    r[static_cast<size_t>(i)] = 1;
    rows.push_back(r);
  }
  return makeArrangement<K>(rows);
}

// four generic planes in C^3 (four generic lines in P^2)
template <class K>
Arrangement<K> generic4() {
  return makeArrangement<K>({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}, {"x", "y", "z"});
}

// Ziegler multiarrangements in P^1, multiplicities (1,1,3,3)
template <class K>
Arrangement<K> zieglerMulti(long a) {  // forms x, y, x+y, x-ay
  auto A = makeArrangement<K>({{1, 0}, {0, 1}, {1, 1}, {1, -a}}, {"x", "y"}, {1, 1, 3, 3});
  return A;
}

}  // namespace arr::fixtures
