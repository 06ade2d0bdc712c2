#include "margchoice/flow.hpp"

#include <deque>
#include <map>

namespace margchoice {

namespace {

class Network {
 public:
  explicit Network(std::size_t nodes) : adj_(nodes) {}

  std::size_t add_edge(std::size_t from, std::size_t to, const Rational& cap) {
    adj_[from].push_back({to, adj_[to].size(), cap, cap});
    adj_[to].push_back({from, adj_[from].size() - 1, Rational(0), Rational(0)});
    return adj_[from].size() - 1;
  }

  Rational max_flow(std::size_t s, std::size_t t) {
    Rational total = 0;
    std::vector<std::pair<std::size_t, std::size_t>> parent(adj_.size());
    while (true) {
      std::vector<bool> seen(adj_.size(), false);
      std::deque<std::size_t> queue{s};
      seen[s] = true;
      while (!queue.empty() && !seen[t]) {
        std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < adj_[u].size(); ++k) {
          const Edge& e = adj_[u][k];
          if (!seen[e.to] && e.residual > 0) {
            seen[e.to] = true;
            parent[e.to] = {u, k};
            queue.push_back(e.to);
          }
        }
      }
      if (!seen[t]) return total;
      Rational bottleneck;
      bool first = true;
      for (std::size_t v = t; v != s; v = parent[v].first) {
        const Edge& e = adj_[parent[v].first][parent[v].second];
        if (first || e.residual < bottleneck) bottleneck = e.residual;
        first = false;
      }
      for (std::size_t v = t; v != s; v = parent[v].first) {
        Edge& e = adj_[parent[v].first][parent[v].second];
        e.residual -= bottleneck;
        adj_[e.to][e.rev].residual += bottleneck;
      }
      total += bottleneck;
    }
  }

  std::vector<bool> reachable(std::size_t s) const {
    std::vector<bool> seen(adj_.size(), false);
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (const Edge& e : adj_[u])
        if (!seen[e.to] && e.residual > 0) {
          seen[e.to] = true;
          queue.push_back(e.to);
        }
    }
    return seen;
  }

  Rational flow_on(std::size_t from, std::size_t index) const {
    const Edge& e = adj_[from][index];
    return e.capacity - e.residual;
  }

  struct Edge {
    std::size_t to;
    std::size_t rev;
    Rational capacity;
    Rational residual;
  };

 private:
  std::vector<std::vector<Edge>> adj_;
};

}  // namespace

FlowResult solve_flow(const FlowProblem& problem) {
  const std::size_t n = problem.lambda.n();
  const std::size_t ys = problem.source_weights.size();
  if (problem.allowed.size() != ys) throw Error(ErrorCode::InvalidParameters, "one feasible set per index is required");
  Rational total = 0;
  for (std::size_t y = 0; y < ys; ++y) {
    if (problem.source_weights[y] < 0) throw Error(ErrorCode::NegativeProbability, "index weight is negative");
    if (problem.allowed[y].empty()) throw Error(ErrorCode::EmptyMenu, "index has an empty feasible set");
    if (!problem.allowed[y].subset_of(Menu::full(n)))
      throw Error(ErrorCode::UnknownAlternative, "feasible set outside the universe");
    total += problem.source_weights[y];
  }
  if (total != 1) throw Error(ErrorCode::SumNotOne, "index weights sum to " + to_string(total));

  // Node layout: 0 = source, 1..n = alternatives, n+1..n+ys = indices, last = sink.
  const std::size_t source = 0, sink = n + ys + 1;
  Network net(n + ys + 2);
  for (std::size_t a = 0; a < n; ++a)
    if (problem.lambda[a] > 0) net.add_edge(source, 1 + a, problem.lambda[a]);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> middle;  // (a, y) -> edge index at node a
  for (std::size_t y = 0; y < ys; ++y)
    for (std::size_t a : problem.allowed[y].elements()) middle[{a, y}] = net.add_edge(1 + a, 1 + n + y, Rational(1));
  for (std::size_t y = 0; y < ys; ++y)
    if (problem.source_weights[y] > 0) net.add_edge(1 + n + y, sink, problem.source_weights[y]);

  FlowResult result;
  result.max_flow = net.max_flow(source, sink);
  result.feasible = result.max_flow == 1;

  if (result.feasible) {
    std::vector<std::vector<Rational>> pi(ys, std::vector<Rational>(n, Rational(0)));
    for (const auto& [key, index] : middle) {
      const auto [a, y] = key;
      if (problem.source_weights[y] > 0) pi[y][a] = net.flow_on(1 + a, index) / problem.source_weights[y];
    }
    for (std::size_t y = 0; y < ys; ++y) {
      if (problem.source_weights[y] > 0)
        result.pi.push_back(ChoiceDistribution::make(std::move(pi[y])));
      else
        result.pi.push_back(ChoiceDistribution::uniform_on(n, problem.allowed[y]));
    }
    return result;
  }

  const auto seen = net.reachable(source);
  Menu cut;
  for (std::size_t a = 0; a < n; ++a)
    if (!seen[1 + a]) cut = cut.with(a);
  Rational inside = 0;
  for (std::size_t y = 0; y < ys; ++y)
    if (problem.allowed[y].subset_of(cut)) inside += problem.source_weights[y];
  result.cut = cut;
  result.cut_deficit = inside - problem.lambda.mass(cut);
  if (cut.empty() || result.cut_deficit <= 0)
    throw Error(ErrorCode::Internal, "residual cut does not certify infeasibility");
  return result;
}

Rationalization rationalize(const MarginalDataset& dataset) {
  FlowProblem problem;
  problem.lambda = dataset.lambda;
  std::vector<Menu> menus;
  for (const auto& [menu, w] : dataset.mu.support()) {
    menus.push_back(menu);
    problem.allowed.push_back(menu);
    problem.source_weights.push_back(w);
  }
  const FlowResult flow = solve_flow(problem);
  Rationalization out;
  out.feasible = flow.feasible;
  out.cut = flow.cut;
  out.cut_deficit = flow.cut_deficit;
  if (flow.feasible) {
    std::map<Menu, ChoiceDistribution> conditionals;
    for (std::size_t y = 0; y < menus.size(); ++y) conditionals.emplace(menus[y], flow.pi[y]);
    out.pi = StochasticChoiceFunction::make(std::move(conditionals));
  }
  return out;
}

}  // namespace margchoice
