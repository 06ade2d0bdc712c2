#include "margchoice/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "margchoice/availability.hpp"
#include "margchoice/core_geometry.hpp"
#include "margchoice/flow.hpp"
#include "margchoice/generators.hpp"
#include "margchoice/io.hpp"
#include "margchoice/ircs.hpp"
#include "margchoice/luce.hpp"
#include "margchoice/rum.hpp"
#include "margchoice/twostage.hpp"

namespace margchoice {

namespace {

using nlohmann::json;

struct Options {
  std::string file;
  std::string format = "text";
  std::string feasible;
  double tolerance = 1e-10;
  std::size_t order_cap = kDefaultOrderEnumerationCap;
  std::string model;
  std::size_t n = 4;
  std::uint64_t seed = 1;
  std::size_t batch = 1;
};

struct Report {
  json data = json::object();
  std::vector<std::string> lines;
  int exit_code = kExitPositive;

  void line(std::string text) { lines.push_back(std::move(text)); }
};

std::string braces(const Universe& u, Menu m) { return "{" + u.format(m) + "}"; }

json labelled(const Universe& u, const std::vector<Rational>& values) {
  json obj = json::object();
  for (std::size_t a = 0; a < values.size(); ++a) obj[u.label(a)] = to_string(values[a]);
  return obj;
}

std::string labelled_text(const Universe& u, const std::vector<Rational>& values) {
  std::string s;
  for (std::size_t a = 0; a < values.size(); ++a) {
    if (a) s += "  ";
    s += u.label(a) + "=" + to_string(values[a]);
  }
  return s;
}

json menu_weights(const Universe& u, const MenuDistribution& mu) {
  json obj = json::object();
  for (const auto& [menu, w] : mu.support()) obj[u.format(menu)] = to_string(w);
  return obj;
}

void add_conditionals(Report& r, const Universe& u, const StochasticChoiceFunction& pi) {
  json obj = json::object();
  for (const auto& [menu, p] : pi.conditionals()) {
    json row = json::object();
    std::string text;
    for (std::size_t a : menu.elements()) {
      row[u.label(a)] = to_string(p[a]);
      text += "  " + u.label(a) + "=" + to_string(p[a]);
    }
    obj[u.format(menu)] = row;
    r.line("  pi(.|" + braces(u, menu) + "):" + text);
  }
  r.data["pi"] = obj;
}

void add_core(Report& r, const Universe& u, const CoreMembershipReport& core, const std::string& game) {
  json violated = json::array();
  for (const auto& d : core.violated) {
    violated.push_back({{"menu", u.format(d.menu)}, {"deficit", to_string(d.deficit)}});
    r.line("  violated: lambda(" + braces(u, d.menu) + ") < " + game + " by " + to_string(d.deficit));
  }
  json tight = json::array();
  for (Menu m : core.tight) tight.push_back(u.format(m));
  r.data["in_core"] = core.member;
  r.data["violated"] = violated;
  r.data["tight"] = tight;
  if (!core.tight.empty()) {
    std::string text;
    for (Menu m : core.tight) text += " " + braces(u, m);
    r.line("  tight:" + text);
  }
  if (core.min_slack) {
    r.data["min_slack"] = {{"menu", u.format(core.min_slack->first)}, {"slack", to_string(core.min_slack->second)}};
    r.line("  min slack " + to_string(core.min_slack->second) + " at menu \"" + u.format(core.min_slack->first) + "\"");
  }
}

MarginalDataset load(const Options& o) { return validate_dataset(read_dataset_file(o.file)); }

FeasibleCollection load_collection(const Options& o, const RawDataset& raw, const Universe& u) {
  if (!o.feasible.empty()) return FeasibleCollection::parse(u, o.feasible);
  if (!raw.has_feasible) throw Error(ErrorCode::Parse, "feasible: missing (give --feasible or a \"feasible\" array)");
  std::vector<Menu> menus;
  for (const auto& key : raw.feasible) {
    try {
      menus.push_back(u.parse_menu(key));
    } catch (const Error& e) {
      throw Error(e.code(), "feasible \"" + key + "\": " + e.detail());
    }
  }
  return FeasibleCollection::make(u.n(), std::move(menus));
}

Report cmd_check(const Options& o) {
  const auto d = load(o);
  Report r;
  const auto core = core_contains(d);
  const auto cls = classify(game_from_mu(d.mu));
  r.line(std::string("lambda in Core(v_mu): ") + (core.member ? "yes" : "no"));
  add_core(r, d.universe, core, "v_mu");
  r.data["game"] = {{"totally_monotone", cls.totally_monotone},
                    {"convex", cls.convex},
                    {"strictly_convex", cls.strictly_convex}};
  r.line(std::string("  v_mu strictly convex: ") + (cls.strictly_convex ? "yes" : "no"));
  r.exit_code = core.member ? kExitPositive : kExitNegative;
  return r;
}

Report cmd_rationalize(const Options& o) {
  const auto d = load(o);
  Report r;
  const auto result = rationalize(d);
  r.data["rationalizable"] = result.feasible;
  r.line(std::string("rationalizable: ") + (result.feasible ? "yes" : "no"));
  if (result.feasible) {
    add_conditionals(r, d.universe, *result.pi);
  } else {
    r.data["cut"] = {{"menu", d.universe.format(*result.cut)}, {"deficit", to_string(result.cut_deficit)}};
    r.line("  lambda(" + braces(d.universe, *result.cut) + ") falls short of v_mu by " + to_string(result.cut_deficit));
    r.exit_code = kExitNegative;
  }
  return r;
}

Report cmd_rum(const Options& o) {
  const auto d = load(o);
  Report r;
  const auto result = rum_rationalize(d, o.order_cap);
  r.data["rum_rationalizable"] = result.feasible;
  r.line(std::string("RUM rationalizable: ") + (result.feasible ? "yes" : "no"));
  add_core(r, d.universe, result.certificate, "v_mu");
  if (!result.feasible) {
    r.exit_code = kExitNegative;
    return r;
  }
  json nu = json::array();
  for (const auto& [order, w] : result.nu.weights) {
    nu.push_back({{"order", order.format(d.universe)}, {"weight", to_string(w)}});
    r.line("  nu(" + order.format(d.universe) + ") = " + to_string(w));
  }
  r.data["nu"] = nu;
  try {
    require_pair_support(d);
    const bool unique = unique_rum(d);
    json chain = json::array();
    std::string text;
    for (Menu m : inferior_chain(d)) {
      chain.push_back(d.universe.format(m));
      text += " " + braces(d.universe, m);
    }
    r.data["unique"] = unique;
    r.data["inferior_chain"] = chain;
    r.line(std::string("  unique: ") + (unique ? "yes" : "no"));
    r.line("  inferior chain:" + text);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PairSupportMissing) throw;
    r.data["unique"] = nullptr;
    r.line(std::string("  uniqueness and inferior sets need full pair support: ") + e.detail());
  }
  return r;
}

Report cmd_luce(const Options& o) {
  const auto d = load(o);
  Report r;
  LuceOptions opts;
  opts.tolerance = o.tolerance;
  try {
    const auto inv = luce_invert(d, opts);
    json u = json::object();
    std::ostringstream text;
    text.precision(12);
    for (std::size_t a = 0; a < d.n(); ++a) {
      u[d.universe.label(a)] = inv.u[a];
      text << "  " << d.universe.label(a) << "=" << inv.u[a];
    }
    r.data["luce_rationalizable"] = true;
    r.data["u"] = u;
    r.data["residual"] = inv.residual;
    r.data["iterations"] = inv.iterations;
    r.line("Luce rationalizable: yes");
    r.line("  u:" + text.str());
    std::ostringstream residual;
    residual << std::scientific << std::setprecision(2) << inv.residual;
    r.line("  residual " + residual.str() + " after " + std::to_string(inv.iterations) + " iterations");
    if (inv.exact) {
      r.data["u_exact"] = labelled(d.universe, inv.exact->values());
      r.line("  exact u: " + labelled_text(d.universe, inv.exact->values()));
    } else {
      r.data["u_exact"] = nullptr;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotInterior && e.code() != ErrorCode::NoConvergence) throw;
    r.data["luce_rationalizable"] = false;
    r.data["reason"] = e.what();
    r.line("Luce rationalizable: no");
    r.line(std::string("  ") + e.what());
    r.exit_code = kExitNegative;
  }
  return r;
}

Report cmd_ircs(const Options& o) {
  const auto d = validate_star_dataset(read_dataset_file(o.file));
  Report r;
  const auto solutions = ircs_rationalize(d, o.order_cap);
  r.data["ircs_rationalizable"] = !solutions.empty();
  r.line(std::string("IRCS rationalizable: ") + (solutions.empty() ? "no" : "yes") + " (" +
         std::to_string(solutions.size()) + " order" + (solutions.size() == 1 ? "" : "s") + ")");
  json sols = json::array();
  for (const auto& s : solutions) {
    sols.push_back({{"order", s.order.format(d.universe)}, {"gamma", labelled(d.universe, s.gamma)}});
    r.line("  " + s.order.format(d.universe) + ": gamma " + labelled_text(d.universe, s.gamma));
  }
  r.data["solutions"] = sols;
  json tv = json::array();
  for (const auto& order : all_orders(d.n())) {
    const auto t = ircs_t_vector(d, order);
    json ts = json::array();
    for (const auto& x : t) ts.push_back(to_string(x));
    tv.push_back({{"order", order.format(d.universe)}, {"t", ts}, {"complete", t.size() == d.n()}});
  }
  r.data["t_vectors"] = tv;
  r.data["lambda_outside"] = to_string(d.outside);
  if (solutions.empty()) r.exit_code = kExitNegative;
  return r;
}

Report cmd_tsc(const Options& o) {
  const auto raw = read_dataset_file(o.file);
  const auto d = validate_dataset(raw);
  const auto collection = load_collection(o, raw, d.universe);
  Report r;
  const auto result = tsc_rationalize(d, collection);
  const auto& u = d.universe;
  r.data["tsc_rationalizable"] = result.rationalizable;
  r.line(std::string("TSC rationalizable: ") + (result.rationalizable ? "yes" : "no"));
  json bar = json::object();
  for (const auto& [menu, b] : result.structure.bar) bar[u.format(menu)] = u.format(b);
  r.data["bar"] = bar;
  json redundant = json::array();
  for (Menu m : result.structure.redundant) redundant.push_back(u.format(m));
  r.data["redundant"] = redundant;
  json in_support = json::array();
  for (Menu m : result.redundant_in_support) {
    in_support.push_back(u.format(m));
    r.line("  redundant menu " + braces(u, m) + " in support");
  }
  r.data["redundant_in_support"] = in_support;
  if (result.core) add_core(r, u, *result.core, "v^X'_mu");
  if (result.pi) add_conditionals(r, u, *result.pi);
  if (!result.rationalizable) r.exit_code = kExitNegative;
  return r;
}

Report cmd_pf(const Options& o) {
  const auto raw = read_dataset_file(o.file);
  const auto d = validate_dataset(raw);
  const auto collection = load_collection(o, raw, d.universe);
  Report r;
  const auto result = pf_rationalize(d, collection);
  r.data["verdict"] = pf_verdict_name(result.verdict);
  r.line(std::string("PF verdict: ") + pf_verdict_name(result.verdict));
  json nested = json::array();
  for (Menu m : result.nested_in_support) {
    nested.push_back(d.universe.format(m));
    r.line("  nested menu " + braces(d.universe, m) + " in support");
  }
  r.data["nested_in_support"] = nested;
  add_core(r, d.universe, result.core, "v_mu");
  if (result.verdict != PfVerdict::Rationalizable) r.exit_code = kExitNegative;
  return r;
}

Report cmd_avail(const Options& o) {
  const auto raw = read_dataset_file(o.file);
  if (!raw.has_xi) throw Error(ErrorCode::Parse, "xi: missing");
  const Universe u(raw.alternatives);
  const auto xi = AvailabilityVector::make(parse_label_weights(u, raw.xi, "xi"));
  ChoiceDistribution lambda;
  try {
    lambda = ChoiceDistribution::make(parse_label_weights(u, raw.lambda, "lambda"));
  } catch (const Error& e) {
    throw Error(e.code(), std::string("lambda: ") + e.detail());
  }
  Report r;
  const bool ok = potentially_rationalizable(xi, lambda);
  r.data["potentially_rationalizable"] = ok;
  r.line(std::string("potentially rationalizable: ") + (ok ? "yes" : "no"));
  if (!ok) {
    json short_of = json::array();
    for (std::size_t a = 0; a < u.n(); ++a)
      if (lambda[a] > xi[a]) {
        short_of.push_back(u.label(a));
        r.line("  lambda(" + u.label(a) + ") = " + to_string(lambda[a]) + " > xi = " + to_string(xi[a]));
      }
    r.data["violations"] = short_of;
    r.exit_code = kExitNegative;
    return r;
  }
  const auto built = construct_mu(xi, lambda);
  r.data["mu"] = menu_weights(u, built.mu);
  r.data["iterations"] = built.iterations;
  for (const auto& [menu, w] : built.mu.support()) r.line("  mu(" + braces(u, menu) + ") = " + to_string(w));
  r.line("  " + std::to_string(built.iterations) + " mass shifts");
  return r;
}

RawDataset star_to_raw(const StarDataset& d) {
  RawDataset raw;
  raw.alternatives = d.universe.labels();
  for (const auto& [menu, w] : d.mu.support()) raw.mu.emplace_back(d.universe.format(menu), to_string(w));
  for (std::size_t a = 0; a < d.n(); ++a) raw.lambda.emplace_back(d.universe.label(a), to_string(d.lambda[a]));
  raw.lambda.emplace_back(kOutsideOptionLabel, to_string(d.outside));
  raw.outside_option = true;
  return raw;
}

RawDataset generate(const std::string& model, std::size_t n, std::uint64_t seed) {
  RandomSource rs(seed);
  const Universe u = default_universe(n);
  const std::size_t menus = std::min<std::size_t>(6, (std::size_t{1} << n) - 1);
  if (model == "rum") {
    const auto mu = rs.menu_distribution(n, menus);
    const auto nu = rs.order_distribution(n, 4);
    return to_raw({u, mu, gen_rum(mu, nu)});
  }
  if (model == "luce") {
    const auto mu = rs.menu_distribution(n, menus, {u.full()});
    return to_raw(gen_luce(u, mu, rs.luce_weights(n)));
  }
  if (model == "ircs") {
    std::vector<Menu> singletons;
    for (std::size_t a = 0; a < n; ++a) singletons.push_back(Menu::singleton(a));
    const auto mu = rs.menu_distribution(n, menus, singletons);
    const auto order = rs.order(n);
    return star_to_raw(gen_ircs(u, mu, order, rs.unit_interval_vector(n)));
  }
  if (model == "tsc") {
    std::vector<Menu> feasible;
    const std::size_t count = 1 + rs.uniform_index(menus);
    for (std::size_t i = 0; i < count; ++i) feasible.push_back(rs.menu(n));
    const auto collection = FeasibleCollection::make(n, feasible);
    const auto structure = analyze_collection(collection);
    std::vector<std::pair<Menu, std::size_t>> targets;
    for (const auto& [menu, bar] : structure.bar)
      for (std::size_t a : bar.elements()) targets.emplace_back(menu, a);
    std::shuffle(targets.begin(), targets.end(), rs.engine());
    targets.resize(std::min<std::size_t>(targets.size(), 1 + rs.uniform_index(4)));
    const auto weights = rs.simplex(targets.size(), 9, true);
    std::vector<std::pair<TscAgent, Rational>> population;
    for (std::size_t i = 0; i < targets.size(); ++i)
      population.emplace_back(committed_agent(n, targets[i].first, targets[i].second), weights[i]);
    auto raw = to_raw(gen_tsc(u, population, collection));
    for (Menu m : collection.menus()) raw.feasible.push_back(u.format(m));
    raw.has_feasible = true;
    return raw;
  }
  if (model == "avail") {
    const auto lambda = rs.simplex(n);
    RawDataset raw;
    raw.alternatives = u.labels();
    for (std::size_t a = 0; a < n; ++a) {
      const Rational extra = (1 - lambda[a]) * Rational(static_cast<long>(rs.uniform_index(7))) / 6;
      raw.lambda.emplace_back(u.label(a), to_string(lambda[a]));
      raw.xi.emplace_back(u.label(a), to_string(Rational(lambda[a] + extra)));
    }
    raw.has_xi = true;
    return raw;
  }
  throw Error(ErrorCode::InvalidParameters, "unknown model \"" + model + "\" (rum, luce, ircs, tsc, avail)");
}

int cmd_gen(const Options& o, std::ostream& out) {
  if (o.n < 1) throw Error(ErrorCode::InvalidParameters, "--n must be at least 1");
  if (o.n > max_alternatives())
    throw Error(ErrorCode::InvalidParameters, "--n exceeds the cap of " + std::to_string(max_alternatives()));
  if (o.batch == 1) {
    out << dataset_to_json(generate(o.model, o.n, o.seed)) << "\n";
  } else {
    for (std::size_t i = 0; i < o.batch; ++i) out << dataset_to_json(generate(o.model, o.n, o.seed + i), -1) << "\n";
  }
  return kExitPositive;
}

void emit(const Report& r, const Options& o, const std::string& command, std::ostream& out) {
  if (o.format == "json") {
    json data = r.data;
    data["command"] = command;
    data["exit_code"] = r.exit_code;
    out << data.dump(2) << "\n";
  } else {
    for (const auto& line : r.lines) out << line << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Marginal stochastic choice: rationalizability tests and model inversion"};
  app.require_subcommand(1);
  Options o;

  struct Command {
    const char* name;
    const char* help;
    Report (*fn)(const Options&);
  };
  const std::vector<Command> commands = {
      {"check", "core membership of lambda in Core(v_mu)", cmd_check},
      {"rationalize", "build conditional choices reproducing lambda, or a violated inequality", cmd_rationalize},
      {"rum", "random utility: distribution over orders, uniqueness, inferior sets", cmd_rum},
      {"luce", "invert the Luce map to recover weights u", cmd_luce},
      {"ircs", "independent random consideration sets (needs an outside option)", cmd_ircs},
      {"tsc", "temptation and self-control given feasible menus", cmd_tsc},
      {"pf", "preference for flexibility given feasible menus", cmd_pf},
      {"avail", "potential rationalizability from availability xi", cmd_avail},
  };
  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("dataset", o.file, "dataset JSON file")->required();
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    if (std::string(c.name) == "tsc" || std::string(c.name) == "pf")
      sub->add_option("--feasible", o.feasible, "feasible menus, e.g. '{a};{c};{a,b}'");
    if (std::string(c.name) == "luce") sub->add_option("--tolerance", o.tolerance, "max residual on lambda");
    if (std::string(c.name) == "rum" || std::string(c.name) == "ircs")
      sub->add_option("--order-cap", o.order_cap, "largest n for which all n! orders are enumerated");
    subs.push_back(sub);
  }
  auto* gen = app.add_subcommand("gen", "generate a dataset from random model parameters");
  gen->add_option("model", o.model, "rum, luce, ircs, tsc or avail")->required();
  gen->add_option("--n", o.n, "number of alternatives");
  gen->add_option("--seed", o.seed, "random seed");
  gen->add_option("--batch", o.batch, "number of datasets (one JSON object per line)")->check(CLI::PositiveNumber);
  gen->add_option("--format", o.format, "ignored; datasets are always JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPositive : kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    for (std::size_t i = 0; i < commands.size(); ++i)
      if (subs[i]->parsed()) {
        const Report r = commands[i].fn(o);
        emit(r, o, commands[i].name, out);
        return r.exit_code;
      }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace margchoice
