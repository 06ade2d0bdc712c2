#include "margchoice/twostage.hpp"

#include "margchoice/flow.hpp"

namespace margchoice {

FeasibleCollection FeasibleCollection::make(std::size_t n, std::vector<Menu> menus) {
  if (menus.empty()) throw Error(ErrorCode::InvalidParameters, "feasible collection is empty");
  FeasibleCollection c;
  c.n_ = n;
  for (Menu m : menus) {
    if (m.empty()) throw Error(ErrorCode::EmptyMenu, "feasible collection holds the empty menu");
    if (!m.subset_of(Menu::full(n))) throw Error(ErrorCode::UnknownAlternative, "feasible menu outside the universe");
    c.menus_.insert(m);
  }
  return c;
}

FeasibleCollection FeasibleCollection::parse(const Universe& universe, std::string_view text) {
  std::vector<Menu> menus;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view piece = text.substr(start, end - start);
    bool blank = piece.find_first_not_of(" \t\n") == std::string_view::npos;
    if (!blank) {
      try {
        menus.push_back(universe.parse_menu(piece));
      } catch (const Error& e) {
        throw Error(e.code(), "feasible \"" + std::string(piece) + "\": " + e.detail());
      }
    }
    start = end + 1;
  }
  return make(universe.n(), std::move(menus));
}

FeasibleCollection FeasibleCollection::all_singletons(std::size_t n) {
  std::vector<Menu> menus;
  for (std::size_t a = 0; a < n; ++a) menus.push_back(Menu::singleton(a));
  return make(n, std::move(menus));
}

RedundancyReport analyze_collection(const FeasibleCollection& collection) {
  RedundancyReport r;
  for (Menu a : collection.menus()) {
    Menu covered;
    for (Menu b : collection.menus()) {
      if (b.strict_subset_of(a)) {
        covered = covered | b;
        r.nested.insert(b);
      }
    }
    Menu bar(a.bits() & ~covered.bits());
    r.bar.emplace(a, bar);
    if (bar.empty()) r.redundant.insert(a);
  }
  return r;
}

void require_support_inside(const MarginalDataset& dataset, const FeasibleCollection& collection) {
  for (const auto& [menu, w] : dataset.mu.support())
    if (!collection.contains(menu))
      throw Error(ErrorCode::SupportOutsideCollection,
                  "mu({" + dataset.universe.format(menu) + "}) > 0 but the menu is not feasible");
}

CooperativeGame game_tsc(const MenuDistribution& mu, const FeasibleCollection& collection) {
  const std::size_t n = mu.n();
  if (collection.n() != n) throw Error(ErrorCode::UniverseMismatch, "collection and menus disagree on n");
  for (const auto& [menu, w] : mu.support())
    if (!collection.contains(menu))
      throw Error(ErrorCode::SupportOutsideCollection, "a support menu of mu is not feasible");
  const auto report = analyze_collection(collection);
  std::vector<Rational> f(std::size_t{1} << n, Rational(0));
  for (const auto& [menu, w] : mu.support()) f[report.bar.at(menu).bits()] += w;
  zeta_transform(f, n);
  f[0] = 0;
  return CooperativeGame::make(n, std::move(f));
}

TscResult tsc_rationalize(const MarginalDataset& dataset, const FeasibleCollection& collection) {
  require_support_inside(dataset, collection);
  TscResult result;
  result.structure = analyze_collection(collection);
  for (const auto& [menu, w] : dataset.mu.support())
    if (result.structure.redundant.contains(menu)) result.redundant_in_support.push_back(menu);
  if (!result.redundant_in_support.empty()) return result;

  const auto v = game_tsc(dataset.mu, collection);
  result.core = core_contains(v, dataset.lambda);

  FlowProblem problem;
  problem.lambda = dataset.lambda;
  std::vector<Menu> menus;
  for (const auto& [menu, w] : dataset.mu.support()) {
    menus.push_back(menu);
    problem.source_weights.push_back(w);
    problem.allowed.push_back(result.structure.bar.at(menu));
  }
  const auto flow = solve_flow(problem);
  if (flow.feasible != result.core->member)
    throw Error(ErrorCode::Internal, "flow feasibility and the core scan of the modified game disagree");
  if (flow.feasible) {
    std::map<Menu, ChoiceDistribution> conditionals;
    for (std::size_t y = 0; y < menus.size(); ++y) conditionals.emplace(menus[y], flow.pi[y]);
    result.pi = StochasticChoiceFunction::make(std::move(conditionals));
    result.rationalizable = true;
  }
  return result;
}

const char* pf_verdict_name(PfVerdict verdict) {
  switch (verdict) {
    case PfVerdict::Rationalizable: return "Rationalizable";
    case PfVerdict::NotRationalizable: return "NotRationalizable";
    case PfVerdict::Indeterminate: return "Indeterminate";
  }
  return "?";
}

PfResult pf_rationalize(const MarginalDataset& dataset, const FeasibleCollection& collection) {
  require_support_inside(dataset, collection);
  const auto structure = analyze_collection(collection);
  PfResult result;
  for (const auto& [menu, w] : dataset.mu.support())
    if (structure.nested.contains(menu)) result.nested_in_support.push_back(menu);
  result.core = core_contains(game_from_mu(dataset.mu), dataset.lambda);
  if (!result.nested_in_support.empty() || !result.core.member)
    result.verdict = PfVerdict::NotRationalizable;
  else if (result.core.tight.empty())
    result.verdict = PfVerdict::Rationalizable;
  else
    result.verdict = PfVerdict::Indeterminate;
  return result;
}

}  // namespace margchoice
