#include "maxplus/path_algebra.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "maxplus/error.hpp"

namespace maxplus {

namespace {

// Floyd-Warshall relaxation over (max, +). With no positive cycle this
// yields A+ (best weight over paths of length >= 1).
Matrix relax_all_pairs(const Matrix& a) {
  Matrix d = a;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (d(i, k).is_bottom()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (d(k, j).is_bottom()) continue;
        Scalar via = otimes(d(i, k), d(k, j));
        if (d(i, j) < via) d(i, j) = std::move(via);
      }
    }
  return d;
}

Scalar karp_component(const Matrix& a, const std::vector<std::size_t>& comp) {
  const std::size_t k = comp.size();
  std::vector<std::vector<Scalar>> walk(k + 1, std::vector<Scalar>(k));
  walk[0][0] = Scalar::unit();
  for (std::size_t t = 1; t <= k; ++t)
    for (std::size_t u = 0; u < k; ++u) {
      if (walk[t - 1][u].is_bottom()) continue;
      for (std::size_t v = 0; v < k; ++v)
        walk[t][v] = oplus(walk[t][v], otimes(walk[t - 1][u], a(comp[u], comp[v])));
    }

  Scalar best;
  for (std::size_t v = 0; v < k; ++v) {
    if (walk[k][v].is_bottom()) continue;
    Scalar worst;
    bool have = false;
    for (std::size_t t = 0; t < k; ++t) {
      if (walk[t][v].is_bottom()) continue;
      Rational mean = (walk[k][v].value() - walk[t][v].value()) /
                      Rational(static_cast<long>(k - t));
      Scalar m(mean);
      if (!have || m < worst) worst = m;
      have = true;
    }
    if (have) best = oplus(best, worst);
  }
  return best;
}

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

EdgeList critical_edges_at(const Matrix& a, const Rational& lambda) {
  const Matrix b = shifted(a, -lambda);
  const Matrix plus = relax_all_pairs(b);
  EdgeList edges;
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (b(i, j).is_bottom()) continue;
      const Scalar back = i == j ? Scalar::unit() : plus(j, i);
      if (otimes(b(i, j), back) == Scalar::unit()) edges.emplace_back(i, j);
    }
  return edges;
}

// Lexicographically least simple cycle of the critical graph, written from
// its smallest node. Greedy choice is exact because every step is checked
// for the existence of a completion.
std::vector<std::size_t> least_cycle(std::size_t n, const EdgeList& edges) {
  std::vector<std::vector<std::size_t>> succ(n);
  for (const auto& [i, j] : edges) succ[i].push_back(j);
  for (auto& s : succ) std::sort(s.begin(), s.end());

  std::size_t start = n;
  for (std::size_t i = 0; i < n && start == n; ++i)
    if (!succ[i].empty()) start = i;
  if (start == n) return {};

  std::vector<char> visited(n, 0);
  auto reaches_start = [&](std::size_t from) {
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w : succ[u]) {
        if (w == start) return true;
        if (visited[w] || seen[w]) continue;
        seen[w] = 1;
        stack.push_back(w);
      }
    }
    return false;
  };

  std::vector<std::size_t> cycle{start};
  visited[start] = 1;
  std::size_t cur = start;
  for (;;) {
    bool advanced = false;
    for (std::size_t w : succ[cur]) {
      if (w == start) return cycle;
      if (visited[w] || !reaches_start(w)) continue;
      cycle.push_back(w);
      visited[w] = 1;
      cur = w;
      advanced = true;
      break;
    }
    if (!advanced) return {};  // unreachable: start lies on a critical cycle
  }
}

Scalar lambda_only(const Matrix& a) {
  Scalar best;
  for (const auto& comp : strong_components(a)) best = oplus(best, karp_component(a, comp));
  return best;
}

}  // namespace

std::vector<std::vector<std::size_t>> strong_components(const Matrix& a) {
  require_square(a, "strong_components");
  const std::size_t n = a.rows();
  // Tarjan; emits components sinks-first.
  std::vector<long> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> comps;
  long counter = 0;

  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (std::size_t w = 0; w < n; ++w) {
      if (w == v || a(v, w).is_bottom()) continue;
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] < 0) visit(v);
  std::reverse(comps.begin(), comps.end());
  return comps;
}

CycleMeanResult max_cycle_mean(const Matrix& a) {
  require_square(a, "max_cycle_mean");
  CycleMeanResult result;
  result.lambda = lambda_only(a);
  if (result.lambda.is_bottom()) return result;
  result.witness_cycle =
      least_cycle(a.rows(), critical_edges_at(a, result.lambda.value()));
  return result;
}

Scalar cycle_mean(const Matrix& a, const std::vector<std::size_t>& cycle) {
  if (cycle.empty()) return Scalar::bottom();
  Scalar weight = Scalar::unit();
  for (std::size_t t = 0; t < cycle.size(); ++t)
    weight = otimes(weight, a(cycle[t], cycle[(t + 1) % cycle.size()]));
  return power(weight, make_rational(1, static_cast<long>(cycle.size())));
}

Matrix kleene_star(const Matrix& a) {
  require_square(a, "kleene_star");
  CycleMeanResult cm = max_cycle_mean(a);
  if (cm.lambda.is_finite() && cm.lambda > Scalar::unit())
    throw CycleMeanPositiveError(cm.lambda, cm.witness_cycle);
  return mat_add(identity_matrix(a.rows()), relax_all_pairs(a));
}

Matrix plus_closure(const Matrix& a) { return mat_mul(a, kleene_star(a)); }

std::vector<std::pair<std::size_t, std::size_t>> critical_edges(const Matrix& a) {
  require_square(a, "critical_edges");
  const Scalar lambda = lambda_only(a);
  if (lambda.is_bottom()) return {};
  return critical_edges_at(a, lambda.value());
}

namespace {

void require_normalized(const Matrix& a, const char* what) {
  require_square(a, what);
  if (lambda_only(a) != Scalar::unit())
    fail(ErrorKind::kNotNormalized,
         std::string(what) + ": maximal cycle mean must be 0");
}

}  // namespace

std::vector<std::size_t> critical_nodes(const Matrix& a) {
  require_normalized(a, "critical_nodes");
  const Matrix plus = plus_closure(a);
  std::vector<std::size_t> nodes;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (plus(i, i) == Scalar::unit()) nodes.push_back(i);
  return nodes;
}

std::vector<std::vector<std::size_t>> critical_classes(const Matrix& a) {
  require_normalized(a, "critical_classes");
  const Matrix star = kleene_star(a);
  const Matrix plus = mat_mul(a, star);
  const std::size_t n = a.rows();

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };

  std::vector<char> critical(n, 0);
  for (std::size_t i = 0; i < n; ++i) critical[i] = plus(i, i) == Scalar::unit();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (critical[i] && critical[j] &&
          otimes(star(i, j), star(j, i)) == Scalar::unit())
        parent[find(j)] = find(i);

  std::vector<std::vector<std::size_t>> classes;
  std::vector<long> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (!critical[i]) continue;
    const std::size_t root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<long>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(slot[root])].push_back(i);
  }
  return classes;
}

}  // namespace maxplus
