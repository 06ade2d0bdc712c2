#include "margchoice/domain.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <set>

namespace margchoice {

std::size_t max_alternatives() {
  if (const char* env = std::getenv("MARGINAL_CHOICE_MAX_N"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 1)
      return std::min<std::size_t>(static_cast<std::size_t>(value), kHardMaxAlternatives);
  }
  return kDefaultMaxAlternatives;
}

// ---- Menu -------------------------------------------------------------------

Menu Menu::of(std::initializer_list<std::size_t> items) {
  Menu m;
  for (std::size_t i : items) m = m.with(i);
  return m;
}

std::vector<std::size_t> Menu::elements() const {
  std::vector<std::size_t> out;
  for (Bits b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(__builtin_ctz(b)));
  return out;
}

// ---- Universe ---------------------------------------------------------------

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error(ErrorCode::InvalidUniverse, "at least one alternative is required");
  if (labels_.size() > max_alternatives())
    throw Error(ErrorCode::InvalidUniverse, std::to_string(labels_.size()) + " alternatives exceed the cap of " +
                                                std::to_string(max_alternatives()));
  std::set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (label.empty()) throw Error(ErrorCode::InvalidUniverse, "empty alternative label");
    if (label.find_first_of(",{};") != std::string::npos)
      throw Error(ErrorCode::InvalidUniverse, "label \"" + label + "\" contains a reserved character");
    if (!seen.insert(label).second) throw Error(ErrorCode::InvalidUniverse, "duplicate label \"" + label + "\"");
  }
}

std::size_t Universe::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorCode::UnknownAlternative, "\"" + std::string(label) + "\"");
  return static_cast<std::size_t>(it - labels_.begin());
}

std::string Universe::format(Menu menu) const {
  std::vector<std::string_view> names;
  for (std::size_t i : menu.elements()) names.push_back(labels_.at(i));
  std::sort(names.begin(), names.end());
  std::string out;
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (k) out += ',';
    out += names[k];
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Menu Universe::parse_menu(std::string_view text) const {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') throw Error(ErrorCode::Parse, "unbalanced braces in menu \"" + std::string(text) + "\"");
    body = trim(body.substr(1, body.size() - 2));
  }
  Menu menu;
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view item = trim(body.substr(0, comma));
    if (item.empty()) throw Error(ErrorCode::Parse, "empty label in menu \"" + std::string(text) + "\"");
    std::size_t i = index_of(item);
    if (menu.contains(i)) throw Error(ErrorCode::Parse, "repeated label in menu \"" + std::string(text) + "\"");
    menu = menu.with(i);
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
  }
  if (menu.empty()) throw Error(ErrorCode::EmptyMenu, "\"" + std::string(text) + "\"");
  return menu;
}

// ---- MenuDistribution ---------------------------------------------------------

MenuDistribution MenuDistribution::make(std::size_t n, std::map<Menu, Rational> weights) {
  MenuDistribution d;
  d.n_ = n;
  Rational total = 0;
  const Menu universe = Menu::full(n);
  for (auto& [menu, w] : weights) {
    if (menu.empty()) throw Error(ErrorCode::EmptyMenu, "menu distribution assigns weight to the empty set");
    if (!menu.subset_of(universe))
      throw Error(ErrorCode::UnknownAlternative, "menu uses an index outside the universe");
    if (w < 0) throw Error(ErrorCode::NegativeProbability, "menu weight " + to_string(w));
    total += w;
    if (w > 0) d.weights_.emplace(menu, w);
  }
  if (total != 1) {
    Rational dev = total - 1;
    throw Error(ErrorCode::SumNotOne, "menu weights sum to " + to_string(total) + " (deviation " +
                                          to_string(dev) + ")");
  }
  return d;
}

Rational MenuDistribution::weight(Menu menu) const {
  auto it = weights_.find(menu);
  return it == weights_.end() ? Rational(0) : it->second;
}

Rational MenuDistribution::mass_where(const std::function<bool(Menu)>& pred) const {
  Rational total = 0;
  for (const auto& [menu, w] : weights_)
    if (pred(menu)) total += w;
  return total;
}

// ---- ChoiceDistribution -------------------------------------------------------

ChoiceDistribution ChoiceDistribution::make(std::vector<Rational> probabilities) {
  if (probabilities.empty()) throw Error(ErrorCode::InvalidParameters, "empty choice distribution");
  Rational total = 0;
  for (const auto& p : probabilities) {
    if (p < 0) throw Error(ErrorCode::NegativeProbability, "choice probability " + to_string(p));
    total += p;
  }
  if (total != 1) {
    Rational dev = total - 1;
    throw Error(ErrorCode::SumNotOne, "choice probabilities sum to " + to_string(total) + " (deviation " +
                                          to_string(dev) + ")");
  }
  ChoiceDistribution d;
  d.p_ = std::move(probabilities);
  return d;
}

ChoiceDistribution ChoiceDistribution::point_mass(std::size_t n, std::size_t i) {
  std::vector<Rational> p(n, Rational(0));
  p.at(i) = 1;
  return make(std::move(p));
}

ChoiceDistribution ChoiceDistribution::uniform(std::size_t n) { return uniform_on(n, Menu::full(n)); }

ChoiceDistribution ChoiceDistribution::uniform_on(std::size_t n, Menu support) {
  std::vector<Rational> p(n, Rational(0));
  const Rational share(1, support.size());
  for (std::size_t i : support.elements()) p.at(i) = share;
  return make(std::move(p));
}

Rational ChoiceDistribution::mass(Menu set) const {
  Rational total = 0;
  for (std::size_t i : set.elements()) total += p_[i];
  return total;
}

Menu ChoiceDistribution::support() const {
  Menu m;
  for (std::size_t i = 0; i < p_.size(); ++i)
    if (p_[i] > 0) m = m.with(i);
  return m;
}

// ---- PreferenceOrder ----------------------------------------------------------

PreferenceOrder PreferenceOrder::make(std::vector<std::size_t> ranking) {
  const std::size_t n = ranking.size();
  std::vector<std::size_t> position(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (ranking[k] >= n || position[ranking[k]] != n)
      throw Error(ErrorCode::InvalidParameters, "ranking is not a permutation");
    position[ranking[k]] = k;
  }
  PreferenceOrder o;
  o.ranking_ = std::move(ranking);
  o.position_ = std::move(position);
  return o;
}

PreferenceOrder PreferenceOrder::identity(std::size_t n) {
  std::vector<std::size_t> r(n);
  std::iota(r.begin(), r.end(), std::size_t{0});
  return make(std::move(r));
}

Menu PreferenceOrder::lower_contour(std::size_t a) const {
  Menu m;
  for (std::size_t k = position_.at(a) + 1; k < ranking_.size(); ++k) m = m.with(ranking_[k]);
  return m;
}

std::size_t PreferenceOrder::top_of(Menu menu) const {
  for (std::size_t alt : ranking_)
    if (menu.contains(alt)) return alt;
  throw Error(ErrorCode::EmptyMenu, "top_of on an empty menu");
}

std::string PreferenceOrder::format(const Universe& universe) const {
  std::string out;
  for (std::size_t k = 0; k < ranking_.size(); ++k) {
    if (k) out += '>';
    out += universe.label(ranking_[k]);
  }
  return out;
}

std::vector<PreferenceOrder> all_orders(std::size_t n) {
  std::vector<std::size_t> r(n);
  std::iota(r.begin(), r.end(), std::size_t{0});
  std::vector<PreferenceOrder> out;
  out.reserve(static_cast<std::size_t>(factorial(n)));
  do {
    out.push_back(PreferenceOrder::make(r));
  } while (std::next_permutation(r.begin(), r.end()));
  return out;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    if (f > UINT64_MAX / k) return UINT64_MAX;
    f *= k;
  }
  return f;
}

// ---- StochasticChoiceFunction -------------------------------------------------

StochasticChoiceFunction StochasticChoiceFunction::make(std::map<Menu, ChoiceDistribution> conditionals) {
  for (const auto& [menu, dist] : conditionals) {
    if (menu.empty()) throw Error(ErrorCode::EmptyMenu, "conditional on the empty menu");
    if (!dist.support().subset_of(menu))
      throw Error(ErrorCode::InvalidParameters, "conditional choice puts mass outside its menu");
  }
  StochasticChoiceFunction f;
  f.conditionals_ = std::move(conditionals);
  return f;
}

std::vector<Rational> StochasticChoiceFunction::implied_marginal(const MenuDistribution& mu) const {
  std::vector<Rational> out(mu.n(), Rational(0));
  for (const auto& [menu, w] : mu.support()) {
    auto it = conditionals_.find(menu);
    if (it == conditionals_.end())
      throw Error(ErrorCode::InvalidParameters, "no conditional for a menu in the support");
    for (std::size_t a : menu.elements()) out[a] += w * it->second[a];
  }
  return out;
}

// ---- validation ---------------------------------------------------------------

std::vector<Rational> parse_label_weights(const Universe& universe,
                                          const std::vector<std::pair<std::string, std::string>>& entries,
                                          std::string_view field) {
  std::vector<Rational> p(universe.n(), Rational(0));
  std::vector<bool> seen(universe.n(), false);
  for (const auto& [label, text] : entries) {
    std::size_t i;
    try {
      i = universe.index_of(label);
    } catch (const Error&) {
      throw Error(ErrorCode::UnknownAlternative, std::string(field) + ": \"" + label + "\"");
    }
    if (seen[i]) throw Error(ErrorCode::Parse, std::string(field) + ": duplicate entry for \"" + label + "\"");
    seen[i] = true;
    try {
      p[i] = parse_rational(text);
    } catch (const Error& e) {
      throw Error(ErrorCode::Parse, std::string(field) + "[\"" + label + "\"]: " + e.detail());
    }
    if (p[i] < 0)
      throw Error(ErrorCode::NegativeProbability, std::string(field) + "[\"" + label + "\"] = " + to_string(p[i]));
  }
  return p;
}

MenuDistribution parse_menu_weights(const Universe& universe,
                                    const std::vector<std::pair<std::string, std::string>>& entries) {
  std::map<Menu, Rational> mu;
  for (const auto& [key, text] : entries) {
    Menu menu;
    try {
      menu = universe.parse_menu(key);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::EmptyMenu) throw Error(ErrorCode::EmptyMenu, "mu[\"" + key + "\"]");
      if (e.code() == ErrorCode::UnknownAlternative)
        throw Error(ErrorCode::UnknownAlternative, "mu[\"" + key + "\"]: " + e.detail());
      throw Error(e.code(), "mu[\"" + key + "\"]: " + e.detail());
    }
    Rational w;
    try {
      w = parse_rational(text);
    } catch (const Error& e) {
      throw Error(ErrorCode::Parse, "mu[\"" + key + "\"]: " + e.detail());
    }
    if (w < 0) throw Error(ErrorCode::NegativeProbability, "mu[\"" + key + "\"] = " + to_string(w));
    if (!mu.emplace(menu, w).second) throw Error(ErrorCode::Parse, "mu: duplicate menu \"" + key + "\"");
  }
  try {
    return MenuDistribution::make(universe.n(), std::move(mu));
  } catch (const Error& e) {
    throw Error(e.code(), std::string("mu: ") + e.detail());
  }
}

MarginalDataset validate_dataset(const RawDataset& raw) {
  MarginalDataset d;
  d.universe = Universe(raw.alternatives);
  d.mu = parse_menu_weights(d.universe, raw.mu);

  auto lambda = parse_label_weights(d.universe, raw.lambda, "lambda");
  try {
    d.lambda = ChoiceDistribution::make(std::move(lambda));
  } catch (const Error& e) {
    throw Error(e.code(), std::string("lambda: ") + e.detail());
  }
  return d;
}

RawDataset to_raw(const MarginalDataset& dataset) {
  RawDataset raw;
  raw.alternatives = dataset.universe.labels();
  for (const auto& [menu, w] : dataset.mu.support()) raw.mu.emplace_back(dataset.universe.format(menu), to_string(w));
  for (std::size_t i = 0; i < dataset.n(); ++i)
    raw.lambda.emplace_back(dataset.universe.label(i), to_string(dataset.lambda[i]));
  return raw;
}

}  // namespace margchoice
