#include "opsysdual/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace osd {

ToleranceRelation::ToleranceRelation(
    int n, const std::vector<std::pair<int, int>>& edges)
    : n_(n) {
  if (n <= 0) {
    throw InvalidInput("vertex count must be positive, got " +
                       std::to_string(n));
  }
  adj_mat_.assign(n_, std::vector<char>(n_, 0));
  for (auto [i, j] : edges) {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) {
      throw IndexOutOfRange("edge (" + std::to_string(i) + "," +
                            std::to_string(j) + ") out of range for n=" +
                            std::to_string(n_));
    }
    if (i == j) continue;  // reflexive pairs are implicit
    adj_mat_[i][j] = adj_mat_[j][i] = 1;
  }
  adj_.assign(n_, {});
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (adj_mat_[i][j]) adj_[i].push_back(j);
    }
    for (int j = i + 1; j < n_; ++j) {
      if (adj_mat_[i][j]) edges_.emplace_back(i, j);
    }
  }
}

ToleranceRelation ToleranceRelation::complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return ToleranceRelation(n, edges);
}

ToleranceRelation ToleranceRelation::edgeless(int n) {
  return ToleranceRelation(n, {});
}

bool ToleranceRelation::related(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_) {
    throw IndexOutOfRange("vertex index out of range");
  }
  return i == j || adj_mat_[i][j] != 0;
}

bool ToleranceRelation::adjacent(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_) {
    throw IndexOutOfRange("vertex index out of range");
  }
  return adj_mat_[i][j] != 0;
}

const std::vector<int>& ToleranceRelation::neighbors(int v) const {
  if (v < 0 || v >= n_) throw IndexOutOfRange("vertex index out of range");
  return adj_[v];
}

EliminationOrder mcs_order(const ToleranceRelation& r) {
  const int n = r.vertex_count();
  std::vector<int> weight(n, 0);
  std::vector<char> numbered(n, 0);
  std::vector<int> selection;
  selection.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!numbered[v] && (best < 0 || weight[v] > weight[best])) best = v;
    }
    numbered[best] = 1;
    selection.push_back(best);
    for (int u : r.neighbors(best)) {
      if (!numbered[u]) ++weight[u];
    }
  }
  // MCS selects v_n first; reversing the selection gives v_1 < ... < v_n.
  std::reverse(selection.begin(), selection.end());
  return EliminationOrder{std::move(selection)};
}

bool verify_peo(const ToleranceRelation& r, const EliminationOrder& sigma) {
  const int n = r.vertex_count();
  if (static_cast<int>(sigma.order.size()) != n) {
    throw InvalidInput("elimination order has wrong length");
  }
  std::vector<int> position(n, -1);
  for (int p = 0; p < n; ++p) {
    int v = sigma.order[p];
    if (v < 0 || v >= n || position[v] >= 0) {
      throw InvalidInput("elimination order is not a permutation");
    }
    position[v] = p;
  }
  for (int p = 0; p < n; ++p) {
    const int v = sigma.order[p];
    std::vector<int> later;
    for (int u : r.neighbors(v)) {
      if (position[u] > p) later.push_back(u);
    }
    for (size_t a = 0; a < later.size(); ++a) {
      for (size_t b = a + 1; b < later.size(); ++b) {
        if (!r.adjacent(later[a], later[b])) return false;
      }
    }
  }
  return true;
}

bool is_chordal(const ToleranceRelation& r) {
  return verify_peo(r, mcs_order(r));
}

std::vector<std::vector<int>> maximal_cliques(const ToleranceRelation& r) {
  const EliminationOrder sigma = mcs_order(r);
  if (!verify_peo(r, sigma)) {
    throw NotChordal("maximal clique enumeration requires a chordal graph");
  }
  const int n = r.vertex_count();
  std::vector<int> position(n);
  for (int p = 0; p < n; ++p) position[sigma.order[p]] = p;

  // Every maximal clique of a chordal graph is C[i] for some i; collect the
  // candidates and drop the ones contained in another.
  std::vector<std::vector<int>> candidates(n);
  for (int p = 0; p < n; ++p) {
    const int v = sigma.order[p];
    auto& c = candidates[p];
    c.push_back(v);
    for (int u : r.neighbors(v)) {
      if (position[u] > p) c.push_back(u);
    }
    std::sort(c.begin(), c.end());
  }
  auto contains = [](const std::vector<int>& big, const std::vector<int>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  std::vector<std::vector<int>> cliques;
  for (int a = 0; a < n; ++a) {
    bool maximal = true;
    for (int b = 0; b < n && maximal; ++b) {
      if (a != b && candidates[b].size() >= candidates[a].size() &&
          contains(candidates[b], candidates[a])) {
        maximal = false;
      }
    }
    if (maximal) cliques.push_back(candidates[a]);
  }
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

std::vector<std::vector<int>> connected_components(const ToleranceRelation& r) {
  const int n = r.vertex_count();
  std::vector<int> label(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::queue<int> q;
    q.push(s);
    label[s] = next;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : r.neighbors(v)) {
        if (label[u] < 0) {
          label[u] = next;
          q.push(u);
        }
      }
    }
    ++next;
  }
  std::vector<std::vector<int>> components(next);
  for (int v = 0; v < n; ++v) components[label[v]].push_back(v);
  return components;  // ordered by minimal element since labels grow with v
}

std::optional<int> diameter(const ToleranceRelation& r) {
  const int n = r.vertex_count();
  int diam = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : r.neighbors(v)) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          q.push(u);
        }
      }
    }
    for (int t = 0; t < n; ++t) {
      if (dist[t] < 0) return std::nullopt;
      diam = std::max(diam, dist[t]);
    }
  }
  return diam;
}

bool is_equivalence(const ToleranceRelation& r) {
  for (const auto& component : connected_components(r)) {
    for (size_t a = 0; a < component.size(); ++a) {
      for (size_t b = a + 1; b < component.size(); ++b) {
        if (!r.adjacent(component[a], component[b])) return false;
      }
    }
  }
  return true;
}

ToleranceRelation ampliate(const ToleranceRelation& r, int m) {
  if (m < 1) throw InvalidInput("ampliation factor must be >= 1");
  const int n = r.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      if (!r.related(x, y)) continue;
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          int a = x * m + i;
          int b = y * m + j;
          if (a < b) edges.emplace_back(a, b);
        }
      }
    }
  }
  return ToleranceRelation(n * m, edges);
}

}  // namespace osd
