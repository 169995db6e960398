#include "pidfair/transport.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace pidfair {

namespace {

struct Edge {
  int to;
  int rev;
  double cap;
  double cost;
};

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMassEps = 1e-15;

class McmfGraph {
 public:
  explicit McmfGraph(int n) : adj_(n) {}

  // returns the slot of the forward edge in adj_[u]
  int add_edge(int u, int v, double cap, double cost) {
    adj_[u].push_back({v, static_cast<int>(adj_[v].size()), cap, cost});
    adj_[v].push_back({u, static_cast<int>(adj_[u].size()) - 1, 0.0, -cost});
    return static_cast<int>(adj_[u].size()) - 1;
  }

  // Successive shortest paths from s to t with node potentials. The
  // initial residual graph is acyclic, so one Bellman-Ford sweep gives
  // exact starting potentials; afterwards reduced costs stay
  // nonnegative (up to roundoff, clamped) and plain dense Dijkstra
  // yields a predecessor tree, which keeps augmentation well-founded
  // even with inexact arithmetic.
  void run(int s, int t) {
    const int n = static_cast<int>(adj_.size());
    std::vector<double> pi(n, 0.0);
    for (int pass = 0; pass < n; ++pass)
      for (int u = 0; u < n; ++u)
        for (const Edge& e : adj_[u])
          if (e.cap > kMassEps && pi[u] + e.cost < pi[e.to]) pi[e.to] = pi[u] + e.cost;

    const int max_rounds = 64 * n * n + 64;  // generous safety cap
    for (int round = 0; round < max_rounds; ++round) {
      std::vector<double> dist(n, kInf);
      std::vector<int> pe(n, -1), pv(n, -1);
      std::vector<bool> done(n, false);
      dist[s] = 0.0;
      for (;;) {
        int u = -1;
        for (int v = 0; v < n; ++v)
          if (!done[v] && dist[v] < kInf && (u < 0 || dist[v] < dist[u])) u = v;
        if (u < 0) break;
        done[u] = true;
        for (int k = 0; k < static_cast<int>(adj_[u].size()); ++k) {
          const Edge& e = adj_[u][k];
          if (e.cap <= kMassEps || done[e.to]) continue;
          const double rc = std::max(e.cost + pi[u] - pi[e.to], 0.0);
          if (dist[u] + rc < dist[e.to]) {
            dist[e.to] = dist[u] + rc;
            pv[e.to] = u;
            pe[e.to] = k;
          }
        }
      }
      if (dist[t] == kInf) return;
      for (int v = 0; v < n; ++v)
        if (dist[v] < kInf) pi[v] += dist[v];
      double bottleneck = kInf;
      for (int v = t; v != s; v = pv[v])
        bottleneck = std::min(bottleneck, adj_[pv[v]][pe[v]].cap);
      if (bottleneck <= kMassEps) return;
      for (int v = t; v != s; v = pv[v]) {
        Edge& e = adj_[pv[v]][pe[v]];
        e.cap -= bottleneck;
        adj_[v][e.rev].cap += bottleneck;
      }
    }
    throw std::runtime_error("transport_min_cost: augmentation cap exceeded");
  }

  double flow_on(int u, int slot) const {
    const Edge& e = adj_[u][slot];
    return adj_[e.to][e.rev].cap;  // reverse capacity equals shipped flow
  }

 private:
  std::vector<std::vector<Edge>> adj_;
};

}  // namespace

Eigen::MatrixXd transport_min_cost(const Eigen::MatrixXd& cost,
                                   const Eigen::VectorXd& supply,
                                   const Eigen::VectorXd& demand) {
  const int m = static_cast<int>(supply.size());
  const int n = static_cast<int>(demand.size());
  if (cost.rows() != m || cost.cols() != n)
    throw std::invalid_argument("transport_min_cost: shape mismatch");

  // node ids: source 0, rows 1..m, cols m+1..m+n, sink m+n+1
  McmfGraph g(m + n + 2);
  const int src = 0, snk = m + n + 1;
  std::vector<std::vector<int>> slot(m, std::vector<int>(n, -1));
  for (int i = 0; i < m; ++i)
    if (supply[i] > kMassEps) g.add_edge(src, 1 + i, supply[i], 0.0);
  for (int i = 0; i < m; ++i) {
    if (supply[i] <= kMassEps) continue;
    for (int j = 0; j < n; ++j) {
      if (demand[j] <= kMassEps) continue;
      slot[i][j] = g.add_edge(1 + i, m + 1 + j, kInf, cost(i, j));
    }
  }
  for (int j = 0; j < n; ++j)
    if (demand[j] > kMassEps) g.add_edge(m + 1 + j, snk, demand[j], 0.0);

  g.run(src, snk);

  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (slot[i][j] >= 0) x(i, j) = g.flow_on(1 + i, slot[i][j]);
  return x;
}

}  // namespace pidfair
