#pragma once

// Core data model: alternatives, menus, marginal datasets, preference orders
// and conditional choice systems. Everything here is immutable after
// construction; factories validate and throw margchoice::Error.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "margchoice/error.hpp"
#include "margchoice/rational.hpp"

namespace margchoice {

inline constexpr std::size_t kDefaultMaxAlternatives = 24;
inline constexpr std::size_t kHardMaxAlternatives = 30;

/// Universe size cap; MARGINAL_CHOICE_MAX_N raises it (up to 30 bits).
std::size_t max_alternatives();

/// A subset of the universe as a bit vector. Menus proper are nonempty; the
/// empty value is allowed for intermediate set algebra (e.g. a redundant
/// menu's undominated part).
class Menu {
 public:
  using Bits = std::uint32_t;

  constexpr Menu() = default;
  constexpr explicit Menu(Bits bits) : bits_(bits) {}

  static constexpr Menu singleton(std::size_t i) { return Menu(Bits{1} << i); }
  static constexpr Menu full(std::size_t n) {
    return Menu(n >= 32 ? ~Bits{0} : (Bits{1} << n) - 1);
  }
  static Menu of(std::initializer_list<std::size_t> items);

  constexpr Bits bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  int size() const { return __builtin_popcount(bits_); }
  constexpr bool subset_of(Menu other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool strict_subset_of(Menu other) const { return subset_of(other) && bits_ != other.bits_; }
  constexpr bool intersects(Menu other) const { return (bits_ & other.bits_) != 0; }
  constexpr Menu with(std::size_t i) const { return Menu(bits_ | (Bits{1} << i)); }
  constexpr Menu without(std::size_t i) const { return Menu(bits_ & ~(Bits{1} << i)); }
  constexpr Menu complement(std::size_t n) const { return Menu(~bits_ & full(n).bits_); }

  std::vector<std::size_t> elements() const;

  friend constexpr Menu operator|(Menu a, Menu b) { return Menu(a.bits_ | b.bits_); }
  friend constexpr Menu operator&(Menu a, Menu b) { return Menu(a.bits_ & b.bits_); }
  friend constexpr auto operator<=>(Menu, Menu) = default;

 private:
  Bits bits_ = 0;
};

class Universe {
 public:
  Universe() = default;
  /// Throws InvalidUniverse on empty/duplicate labels or n outside [1, cap].
  explicit Universe(std::vector<std::string> labels);

  std::size_t n() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  Menu full() const { return Menu::full(n()); }

  /// Throws UnknownAlternative.
  std::size_t index_of(std::string_view label) const;

  /// Canonical key: labels sorted lexicographically and comma-joined.
  std::string format(Menu menu) const;
  /// Accepts "a,b", "{a,b}" and surrounding whitespace. Empty menus throw EmptyMenu.
  Menu parse_menu(std::string_view text) const;

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Distribution over menus (the support only: every stored weight is > 0).
class MenuDistribution {
 public:
  MenuDistribution() = default;
  /// Zero weights are dropped. Throws EmptyMenu, UnknownAlternative (menu
  /// outside the universe), NegativeProbability, SumNotOne.
  static MenuDistribution make(std::size_t n, std::map<Menu, Rational> weights);

  std::size_t n() const { return n_; }
  const std::map<Menu, Rational>& support() const { return weights_; }
  Rational weight(Menu menu) const;
  /// Total mass of menus satisfying `pred`.
  Rational mass_where(const std::function<bool(Menu)>& pred) const;

  friend bool operator==(const MenuDistribution&, const MenuDistribution&) = default;

 private:
  std::size_t n_ = 0;
  std::map<Menu, Rational> weights_;
};

/// Distribution over alternatives, dense over universe indices.
class ChoiceDistribution {
 public:
  ChoiceDistribution() = default;
  /// Throws NegativeProbability, SumNotOne.
  static ChoiceDistribution make(std::vector<Rational> probabilities);
  static ChoiceDistribution point_mass(std::size_t n, std::size_t i);
  static ChoiceDistribution uniform(std::size_t n);
  static ChoiceDistribution uniform_on(std::size_t n, Menu support);

  std::size_t n() const { return p_.size(); }
  const Rational& operator[](std::size_t i) const { return p_[i]; }
  const std::vector<Rational>& values() const { return p_; }
  Rational mass(Menu set) const;
  Menu support() const;

  friend bool operator==(const ChoiceDistribution&, const ChoiceDistribution&) = default;

 private:
  std::vector<Rational> p_;
};

struct MarginalDataset {
  Universe universe;
  MenuDistribution mu;
  ChoiceDistribution lambda;

  std::size_t n() const { return universe.n(); }
  friend bool operator==(const MarginalDataset&, const MarginalDataset&) = default;
};

/// Strict total order, ranking[0] is the best alternative.
class PreferenceOrder {
 public:
  PreferenceOrder() = default;
  /// Throws InvalidParameters when `ranking` is not a permutation of 0..n-1.
  static PreferenceOrder make(std::vector<std::size_t> ranking);
  static PreferenceOrder identity(std::size_t n);

  std::size_t n() const { return ranking_.size(); }
  const std::vector<std::size_t>& ranking() const { return ranking_; }
  std::size_t rank_of(std::size_t alternative) const { return position_[alternative]; }
  bool prefers(std::size_t a, std::size_t b) const { return position_[a] < position_[b]; }
  /// Alternatives ranked strictly below `a`.
  Menu lower_contour(std::size_t a) const;
  /// The best alternative of a nonempty menu.
  std::size_t top_of(Menu menu) const;

  std::string format(const Universe& universe) const;  // "a>b>c"

  friend auto operator<=>(const PreferenceOrder& x, const PreferenceOrder& y) {
    return x.ranking_ <=> y.ranking_;
  }
  friend bool operator==(const PreferenceOrder& x, const PreferenceOrder& y) {
    return x.ranking_ == y.ranking_;
  }

 private:
  std::vector<std::size_t> ranking_;
  std::vector<std::size_t> position_;
};

/// All n! orders in lexicographic order of their rankings.
std::vector<PreferenceOrder> all_orders(std::size_t n);
/// n! with overflow saturation.
std::uint64_t factorial(std::size_t n);

/// Conditional choice probabilities pi(.|A), each supported inside A.
class StochasticChoiceFunction {
 public:
  StochasticChoiceFunction() = default;
  /// Throws InvalidParameters if some conditional puts mass outside its menu.
  static StochasticChoiceFunction make(std::map<Menu, ChoiceDistribution> conditionals);

  const std::map<Menu, ChoiceDistribution>& conditionals() const { return conditionals_; }
  /// lambda(a) = sum_A mu(A) pi(a|A) over the menus of mu.
  std::vector<Rational> implied_marginal(const MenuDistribution& mu) const;

 private:
  std::map<Menu, ChoiceDistribution> conditionals_;
};

/// Dataset as parsed from the JSON file, before any validation.
struct RawDataset {
  std::vector<std::string> alternatives;
  std::vector<std::pair<std::string, std::string>> mu;      // menu key -> probability text
  std::vector<std::pair<std::string, std::string>> lambda;  // label -> probability text
  std::vector<std::pair<std::string, std::string>> xi;      // label -> availability text
  std::vector<std::string> feasible;                        // menu keys
  bool outside_option = false;
  bool has_xi = false;
  bool has_feasible = false;
};

/// Parses menu-key -> probability entries into a validated distribution.
MenuDistribution parse_menu_weights(const Universe& universe,
                                    const std::vector<std::pair<std::string, std::string>>& entries);

/// Builds a validated MarginalDataset. No silent renormalization: SumNotOne
/// reports the exact deviation from 1.
MarginalDataset validate_dataset(const RawDataset& raw);

/// Inverse of validate_dataset (canonical menu keys, "p/q" strings).
RawDataset to_raw(const MarginalDataset& dataset);

/// Parses a labelled probability vector over `universe` (missing labels are 0).
std::vector<Rational> parse_label_weights(const Universe& universe,
                                          const std::vector<std::pair<std::string, std::string>>& entries,
                                          std::string_view field);

}  // namespace margchoice
