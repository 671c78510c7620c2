// Copyright 2026 The delaynet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "delaynet/graph.hpp"
#include "delaynet/presets.hpp"
#include "delaynet/rng.hpp"
#include "oracles.hpp"

using namespace delaynet;

namespace {

SignedMatrix cycle3() {
  SignedMatrix w = SignedMatrix::Zero(3, 3);
  w(1, 0) = 1.0;  // 0 -> 1
  w(2, 1) = 1.0;  // 1 -> 2
  w(0, 2) = 1.0;  // 2 -> 0
  return w;
}

std::multiset<std::vector<int>> component_multiset(const std::vector<std::vector<int>>& cs) {
  return {cs.begin(), cs.end()};
}

}  // namespace

TEST_CASE("scc: directed 3-cycle is one closed component", "[graph]") {
  const auto d = scc_decompose(cycle3());
  REQUIRE(d.components.size() == 1);
  CHECK(d.components[0] == std::vector<int>{0, 1, 2});
  CHECK(d.closed[0]);
  CHECK(d.cscc_count() == 1);
}

TEST_CASE("scc: edgeless graph splits into closed singletons", "[graph]") {
  const auto d = scc_decompose(SignedMatrix::Zero(3, 3));
  REQUIRE(d.components.size() == 3);
  for (std::size_t c = 0; c < 3; ++c) {
    CHECK(d.components[c].size() == 1);
    CHECK(d.closed[c]);
  }
}

TEST_CASE("scc: agrees with transitive-closure oracle on random digraphs", "[graph]") {
  for (int trial = 0; trial < 100; ++trial) {
    rng::Stream pick(2024, trial);
    const int n = 2 + static_cast<int>(pick.below(7));  // n <= 8
    const auto w = oracles::random_signed_graph(1000 + trial, n, pick.uniform(0.1, 0.6),
                                                pick.uniform(0.0, 0.3));
    const auto got = scc_decompose(w);
    const auto want = oracles::scc_by_closure(w);
    INFO("trial " << trial << " n=" << n);
    REQUIRE(component_multiset(got.components) == component_multiset(want.components));
    for (int v = 0; v < n; ++v) {
      const auto& gc = got.components[got.component_of[v]];
      CHECK(std::find(gc.begin(), gc.end(), v) != gc.end());
    }
    // closed flags must agree component-by-component
    for (std::size_t c = 0; c < got.components.size(); ++c) {
      const int rep = got.components[c].front();
      CHECK(got.closed[c] == want.closed[want.component_of[rep]]);
    }
  }
}

TEST_CASE("scc: component structure is invariant under node relabeling", "[graph]") {
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 6;
    const auto w = oracles::random_signed_graph(77 + trial, n, 0.3, 0.1);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    rng::Stream st(500 + trial, 1);
    for (int i = n - 1; i > 0; --i) {
      std::swap(perm[i], perm[st.below(i + 1)]);
    }
    SignedMatrix pw(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) pw(perm[i], perm[j]) = w(i, j);
    }
    const auto a = scc_decompose(w);
    const auto b = scc_decompose(pw);
    REQUIRE(a.components.size() == b.components.size());
    CHECK(a.cscc_count() == b.cscc_count());
    std::multiset<std::size_t> sa, sb;
    for (const auto& c : a.components) sa.insert(c.size());
    for (const auto& c : b.components) sb.insert(c.size());
    CHECK(sa == sb);
  }
}

TEST_CASE("balance: all-positive weights give the trivial bipartition", "[graph]") {
  SignedMatrix w(3, 3);
  w << 0, 0.5, 0.5, 0.2, 0, 0.8, 0.3, 0.7, 0;
  const auto r = is_structurally_balanced(w);
  REQUIRE(r.balanced);
  REQUIRE(r.bipartition.has_value());
  CHECK(r.bipartition->first == std::vector<int>{0, 1, 2});
  CHECK(r.bipartition->second.empty());
}

TEST_CASE("balance: digon with one positive and one negative arc conflicts", "[graph]") {
  SignedMatrix w = SignedMatrix::Zero(2, 2);
  w(0, 1) = 1.0;
  w(1, 0) = -1.0;
  CHECK_FALSE(is_structurally_balanced(w).balanced);
}

TEST_CASE("balance: agrees with exhaustive bipartition search", "[graph]") {
  for (int trial = 0; trial < 100; ++trial) {
    rng::Stream pick(909, trial);
    const int n = 2 + static_cast<int>(pick.below(9));  // n <= 10
    auto w = oracles::random_signed_graph(4000 + trial, n, pick.uniform(0.1, 0.5));
    // Bias half the trials toward balance so both verdicts get coverage:
    // plant a bipartition and force arc signs to respect it.
    if (trial % 2 == 0) {
      std::vector<int> side(n);
      for (int i = 0; i < n; ++i) side[i] = static_cast<int>(pick.below(2));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (w(i, j) == 0.0) continue;
          const double mag = std::abs(w(i, j));
          w(i, j) = side[i] == side[j] ? mag : -mag;
        }
      }
    }
    const auto got = is_structurally_balanced(w);
    const bool want = oracles::balanced_by_enumeration(w);
    INFO("trial " << trial << " n=" << n);
    REQUIRE(got.balanced == want);
    if (got.balanced) {
      // Witness check: the returned bipartition satisfies the sign rules
      // edge by edge.
      std::vector<int> side(n, 0);
      for (int v : got.bipartition->second) side[v] = 1;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (w(i, j) > 0.0) CHECK(side[i] == side[j]);
          if (w(i, j) < 0.0) CHECK(side[i] != side[j]);
        }
      }
    }
  }
}

TEST_CASE("periodicity: self-loop in a strongly connected graph is aperiodic", "[graph]") {
  auto w = cycle3();
  w(1, 1) = 0.5;
  CHECK(is_aperiodic(w));
}

TEST_CASE("periodicity: pure 2-cycle has period two", "[graph]") {
  SignedMatrix w = SignedMatrix::Zero(2, 2);
  w(0, 1) = 1.0;
  w(1, 0) = -1.0;
  const auto p = periodicity(w);
  CHECK(p.has_cycle);
  CHECK(p.period == 2);
  CHECK_FALSE(is_aperiodic(w));
}

TEST_CASE("periodicity: acyclic graph reports the distinguishable flag", "[graph]") {
  SignedMatrix w = SignedMatrix::Zero(3, 3);
  w(1, 0) = 1.0;
  w(2, 1) = 1.0;
  const auto p = periodicity(w);
  CHECK_FALSE(p.has_cycle);
  CHECK(p.period == 0);
  CHECK_FALSE(is_aperiodic(w));
}

TEST_CASE("periodicity: matches brute-force cycle enumeration", "[graph]") {
  int done = 0;
  for (int seed = 0; done < 100 && seed < 3000; ++seed) {
    rng::Stream pick(31337, seed);
    const int n = 2 + static_cast<int>(pick.below(6));  // n <= 7
    const auto w =
        oracles::random_signed_graph(9000 + seed, n, pick.uniform(0.2, 0.7), 0.05);
    if (scc_decompose(w).components.size() != 1) continue;  // want strongly connected
    ++done;
    const long long want = oracles::cycle_gcd_by_enumeration(w);
    const auto p = periodicity(w);
    INFO("seed " << seed << " n=" << n);
    REQUIRE(p.has_cycle);
    CHECK(p.period == want);
    CHECK(is_aperiodic(w) == (want == 1));
  }
  REQUIRE(done == 100);
}

TEST_CASE("compress: identity partition reproduces the arc structure", "[graph]") {
  const auto w = oracles::random_signed_graph(5, 6, 0.4);
  const auto c = compress(w, singleton_partition(6));
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      CHECK((c.exists(i, j) == 1) == (w(i, j) != 0.0));
      if (w(i, j) != 0.0) CHECK(c.sign(i, j) == (w(i, j) > 0 ? 1 : -1));
    }
  }
  CHECK(c.mixed.empty());
  CHECK_NOTHROW(c.signed_matrix());
}

TEST_CASE("compress: mixed-sign crossings are reported and block signed output", "[graph]") {
  SignedMatrix w = SignedMatrix::Zero(4, 4);
  w(2, 0) = 1.0;   // block {0,1} -> block {2,3}, positive
  w(3, 1) = -1.0;  // block {0,1} -> block {2,3}, negative
  Partition p;
  p.blocks = {{0, 1}, {2, 3}};
  const auto c = compress(w, p);
  CHECK(c.exists(1, 0) == 1);
  REQUIRE(c.mixed.size() == 1);
  CHECK(c.mixed[0] == std::pair<int, int>{1, 0});
  CHECK_THROWS_AS(c.signed_matrix(), MixedSignCrossing);
}

TEST_CASE("compress: rejects invalid partitions", "[graph]") {
  const auto w = SignedMatrix::Zero(3, 3);
  Partition missing;
  missing.blocks = {{0, 1}};
  CHECK_THROWS_AS(compress(w, missing), ValidationError);
  Partition overlapping;
  overlapping.blocks = {{0, 1}, {1, 2}};
  CHECK_THROWS_AS(compress(w, overlapping), ValidationError);
}

TEST_CASE("preset: trust-mistrust network has one CSCC and one OSCC", "[graph]") {
  const auto d = scc_decompose(trust_mistrust_network());
  CHECK(d.cscc_count() == 1);
  CHECK(d.oscc_count() == 1);
  CHECK_FALSE(is_structurally_balanced(trust_mistrust_network()).balanced);
}
