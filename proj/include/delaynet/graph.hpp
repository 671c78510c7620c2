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

#ifndef DELAYNET_GRAPH_HPP_
#define DELAYNET_GRAPH_HPP_

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "delaynet/errors.hpp"
#include "delaynet/matrix.hpp"

namespace delaynet {

// Arc convention throughout: w(i, j) != 0  <=>  arc j -> i.
// Connectivity questions ignore signs; an entry is an arc iff it is
// exactly nonzero (generators emit exact zeros for absent arcs).

/// Decomposition of a signed digraph into strongly connected components.
struct SccDecomposition {
  std::vector<std::vector<int>> components;  // node lists, one per SCC
  std::vector<bool> closed;                  // true = no incoming arc from another SCC
  std::vector<int> component_of;             // node -> component index

  int cscc_count() const {
    return static_cast<int>(std::count(closed.begin(), closed.end(), true));
  }
  int oscc_count() const {
    return static_cast<int>(closed.size()) - cscc_count();
  }
};

/// Structural balance verdict with a witness bipartition when balanced.
struct BalanceResult {
  bool balanced = false;
  std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition;
};

/// Non-empty disjoint node blocks covering all nodes.
struct Partition {
  std::vector<std::vector<int>> blocks;
};

/// Cycle structure of a digraph: gcd of all directed cycle lengths.
struct Periodicity {
  bool has_cycle = false;
  long long period = 0;  // gcd of cycle lengths; 0 when acyclic
};

/// Compressed (quotient) graph over a partition. `exists` records arc
/// structure between blocks; `sign` is +-1 where all crossing arcs agree
/// and 0 where the pair is absent or mixed; mixed pairs are listed.
struct CompressedGraph {
  Eigen::MatrixXi exists;  // exists(i, j) = 1  <=>  arc block j -> block i
  Eigen::MatrixXi sign;
  std::vector<std::pair<int, int>> mixed;  // (to-block, from-block) pairs

  /// Signed adjacency as a matrix; throws MixedSignCrossing if any block
  /// pair has crossing arcs of both signs.
  SignedMatrix signed_matrix() const {
    if (!mixed.empty()) {
      throw MixedSignCrossing("compressed graph has mixed-sign crossings");
    }
    return sign.cast<double>();
  }
};

/// Strongly connected components with closed/open flags. Iterative
/// Tarjan lowlink pass, then one edge scan for the closed flags.
inline SccDecomposition scc_decompose(const SignedMatrix& w) {
  require_signed_matrix(w);
  const int n = static_cast<int>(w.rows());

  // Out-neighbors of u are the nonzero rows of column u.
  std::vector<std::vector<int>> out(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (w(v, u) != 0.0 && v != u) out[u].push_back(v);
    }
  }

  SccDecomposition d;
  d.component_of.assign(n, -1);
  std::vector<int> index(n, -1), lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_index = 0;

  struct Frame {
    int node;
    std::size_t child;
  };
  std::vector<Frame> call;
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.child < out[f.node].size()) {
        const int v = out[f.node][f.child++];
        if (index[v] == -1) {
          index[v] = lowlink[v] = next_index++;
          stack.push_back(v);
          on_stack[v] = true;
          call.push_back({v, 0});
        } else if (on_stack[v]) {
          lowlink[f.node] = std::min(lowlink[f.node], index[v]);
        }
      } else {
        const int u = f.node;
        call.pop_back();
        if (!call.empty()) {
          lowlink[call.back().node] = std::min(lowlink[call.back().node], lowlink[u]);
        }
        if (lowlink[u] == index[u]) {
          std::vector<int> comp;
          int v;
          do {
            v = stack.back();
            stack.pop_back();
            on_stack[v] = false;
            d.component_of[v] = static_cast<int>(d.components.size());
            comp.push_back(v);
          } while (v != u);
          std::sort(comp.begin(), comp.end());
          d.components.push_back(std::move(comp));
        }
      }
    }
  }

  d.closed.assign(d.components.size(), true);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && w(i, j) != 0.0 && d.component_of[i] != d.component_of[j]) {
        d.closed[d.component_of[i]] = false;  // arc j -> i enters i's SCC
      }
    }
  }
  return d;
}

/// Sign-consistent 2-coloring of the underlying undirected sign graph.
/// A positive arc forces equal colors, a negative one opposite colors.
inline BalanceResult is_structurally_balanced(const SignedMatrix& w) {
  require_signed_matrix(w);
  const int n = static_cast<int>(w.rows());
  std::vector<int> color(n, -1);
  std::vector<int> queue;

  auto sign_between = [&](int a, int b, bool& pos, bool& neg) {
    pos = w(a, b) > 0.0 || w(b, a) > 0.0;
    neg = w(a, b) < 0.0 || w(b, a) < 0.0;
  };

  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      const int u = queue.back();
      queue.pop_back();
      for (int v = 0; v < n; ++v) {
        if (v == u) {
          if (w(u, u) < 0.0) return {};  // negative self-loop is a conflict
          continue;
        }
        bool pos = false, neg = false;
        sign_between(u, v, pos, neg);
        if (!pos && !neg) continue;
        if (pos && neg) return {};  // digon (or pair) with both signs
        const int want = pos ? color[u] : 1 - color[u];
        if (color[v] == -1) {
          color[v] = want;
          queue.push_back(v);
        } else if (color[v] != want) {
          return {};
        }
      }
    }
  }

  BalanceResult r;
  r.balanced = true;
  std::vector<int> a, b;
  for (int i = 0; i < n; ++i) (color[i] == 0 ? a : b).push_back(i);
  r.bipartition = {std::move(a), std::move(b)};
  return r;
}

/// Cycle-length gcd, computed per SCC from BFS level differences:
/// for each intra-SCC arc u -> v, fold |level(u) + 1 - level(v)| into
/// the gcd. Self-loops contribute cycle length one.
inline Periodicity periodicity(const SignedMatrix& w) {
  require_signed_matrix(w);
  const int n = static_cast<int>(w.rows());
  const SccDecomposition d = scc_decompose(w);

  Periodicity p;
  long long g = 0;
  for (const auto& comp : d.components) {
    const int c = d.component_of[comp.front()];
    bool loop_here = false;
    for (int u : comp) {
      if (w(u, u) != 0.0) loop_here = true;
    }
    if (comp.size() == 1 && !loop_here) continue;  // no cycle through it

    // BFS levels within the component.
    std::vector<int> level(n, -1);
    std::vector<int> frontier{comp.front()};
    level[comp.front()] = 0;
    std::size_t head = 0;
    while (head < frontier.size()) {
      const int u = frontier[head++];
      for (int v = 0; v < n; ++v) {
        if (v != u && w(v, u) != 0.0 && d.component_of[v] == c && level[v] == -1) {
          level[v] = level[u] + 1;
          frontier.push_back(v);
        }
      }
    }
    long long gc = loop_here ? 1 : 0;
    for (int u : comp) {
      for (int v : comp) {
        if (v != u && w(v, u) != 0.0) {
          gc = std::gcd(gc, static_cast<long long>(std::abs(level[u] + 1 - level[v])));
        }
      }
    }
    if (gc > 0) {
      p.has_cycle = true;
      g = std::gcd(g, gc);
    }
  }
  p.period = g;
  return p;
}

/// True iff the graph has a cycle and the gcd of all cycle lengths is 1.
/// Acyclic graphs report false; use periodicity() to distinguish them.
inline bool is_aperiodic(const SignedMatrix& w) {
  const Periodicity p = periodicity(w);
  return p.has_cycle && p.period == 1;
}

inline void require_partition(const Partition& p, int n) {
  std::vector<int> seen(n, 0);
  for (const auto& block : p.blocks) {
    if (block.empty()) throw ValidationError("partition block is empty");
    for (int v : block) {
      if (v < 0 || v >= n || seen[v]++) {
        throw ValidationError("partition blocks must disjointly cover all nodes");
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (!seen[v]) throw ValidationError("partition misses a node");
  }
}

/// Quotient of w over partition p. Block j -> block i carries an arc iff
/// some member of j points at some member of i; crossing-arc signs are
/// recorded where unanimous and reported as mixed otherwise.
inline CompressedGraph compress(const SignedMatrix& w, const Partition& p) {
  require_signed_matrix(w);
  const int n = static_cast<int>(w.rows());
  require_partition(p, n);
  const int m = static_cast<int>(p.blocks.size());

  std::vector<int> block_of(n, -1);
  for (int b = 0; b < m; ++b) {
    for (int v : p.blocks[b]) block_of[v] = b;
  }

  Eigen::MatrixXi pos = Eigen::MatrixXi::Zero(m, m);
  Eigen::MatrixXi neg = Eigen::MatrixXi::Zero(m, m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double v = w(i, j);
      if (v == 0.0) continue;
      const int bi = block_of[i], bj = block_of[j];
      (v > 0.0 ? pos : neg)(bi, bj) = 1;
    }
  }

  CompressedGraph c;
  c.exists = Eigen::MatrixXi::Zero(m, m);
  c.sign = Eigen::MatrixXi::Zero(m, m);
  for (int bi = 0; bi < m; ++bi) {
    for (int bj = 0; bj < m; ++bj) {
      if (!pos(bi, bj) && !neg(bi, bj)) continue;
      c.exists(bi, bj) = 1;
      if (pos(bi, bj) && neg(bi, bj)) {
        c.mixed.emplace_back(bi, bj);
      } else {
        c.sign(bi, bj) = pos(bi, bj) ? 1 : -1;
      }
    }
  }
  return c;
}

/// Partition into singleton blocks {0}, {1}, ..., {n-1}.
inline Partition singleton_partition(int n) {
  Partition p;
  p.blocks.resize(n);
  for (int i = 0; i < n; ++i) p.blocks[i] = {i};
  return p;
}

/// Layer partition of an augmented n(tau_d+1)-node graph: block i holds
/// {i, n+i, ..., n*tau_d+i}, the copies of node i across delay layers.
inline Partition layer_partition(int n, int tau_d) {
  Partition p;
  p.blocks.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r <= tau_d; ++r) p.blocks[i].push_back(r * n + i);
  }
  return p;
}

}  // namespace delaynet

#endif  // DELAYNET_GRAPH_HPP_
