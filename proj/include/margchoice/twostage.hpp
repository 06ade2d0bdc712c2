#pragma once

// Two-stage models: the agent first picks a menu from a feasible collection,
// then an alternative from it. Temptation and self-control (TSC) and
// preference for flexibility (PF).

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "margchoice/core_geometry.hpp"
#include "margchoice/domain.hpp"
#include "margchoice/games.hpp"

namespace margchoice {

class FeasibleCollection {
 public:
  FeasibleCollection() = default;
  /// Throws InvalidParameters on an empty collection, EmptyMenu, UnknownAlternative.
  static FeasibleCollection make(std::size_t n, std::vector<Menu> menus);
  /// Parses "{a};{c};{a,b}" (separators ';', braces optional per menu).
  static FeasibleCollection parse(const Universe& universe, std::string_view text);
  static FeasibleCollection all_singletons(std::size_t n);

  std::size_t n() const { return n_; }
  const std::set<Menu>& menus() const { return menus_; }
  bool contains(Menu menu) const { return menus_.contains(menu); }

 private:
  std::size_t n_ = 0;
  std::set<Menu> menus_;
};

struct RedundancyReport {
  /// A minus the union of feasible menus strictly inside A; may be empty.
  std::map<Menu, Menu> bar;
  std::set<Menu> redundant;  // bar[A] empty
  std::set<Menu> nested;     // strictly inside another feasible menu
};

RedundancyReport analyze_collection(const FeasibleCollection& collection);

/// Throws SupportOutsideCollection naming the first menu of mu outside it.
void require_support_inside(const MarginalDataset& dataset, const FeasibleCollection& collection);

/// v(A) = sum of mu(B) over feasible B with bar(B) inside A, for nonempty A;
/// v(empty) = 0. Throws SupportOutsideCollection.
CooperativeGame game_tsc(const MenuDistribution& mu, const FeasibleCollection& collection);

struct TscResult {
  bool rationalizable = false;
  RedundancyReport structure;
  std::vector<Menu> redundant_in_support;  // nonempty => rejected
  /// Core scan of lambda against the modified game (empty when the
  /// redundancy condition already fails).
  std::optional<CoreMembershipReport> core;
  /// Conditionals with support(pi(.|A)) inside bar(A); set iff rationalizable.
  std::optional<StochasticChoiceFunction> pi;
};

/// Throws SupportOutsideCollection. The inequality scan and the flow
/// construction are run independently and must agree (Internal otherwise).
TscResult tsc_rationalize(const MarginalDataset& dataset, const FeasibleCollection& collection);

enum class PfVerdict { Rationalizable, NotRationalizable, Indeterminate };
const char* pf_verdict_name(PfVerdict verdict);

struct PfResult {
  PfVerdict verdict = PfVerdict::NotRationalizable;
  std::vector<Menu> nested_in_support;  // mu mass on nested menus
  CoreMembershipReport core;            // against v_mu; tight lists the boundary face
};

/// Rationalizable when no support menu is nested and lambda is interior to
/// Core(v_mu); NotRationalizable when a support menu is nested or lambda is
/// outside the core; Indeterminate otherwise (lambda on the boundary).
/// Throws SupportOutsideCollection.
PfResult pf_rationalize(const MarginalDataset& dataset, const FeasibleCollection& collection);

}  // namespace margchoice
