#include "belcond/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "belcond/combination.hpp"
#include "belcond/conditioning.hpp"
#include "belcond/io.hpp"
#include "belcond/lp_conditioning.hpp"
#include "belcond/oracle.hpp"
#include "belcond/random.hpp"
#include "belcond/ternary_plot.hpp"

namespace belcond {

namespace {

using nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

MassFunction load_mass(const std::string& path, double tolerance) {
  const MassDocument doc = read_mass_document(slurp(path), tolerance);
  try {
    return to_mass_function(doc);
  } catch (const Error& e) {
    // Input documents that fail basic validation are input problems, not
    // domain errors: keep them on exit code 1.
    throw ParseError(std::string("invalid mass document: ") + e.what());
  }
}

std::string fmt6(double v) {
  if (std::abs(v) < 5e-7) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

ordered_json signed_document(const SignedMassFunction& m) {
  ordered_json doc = document_json(m.frame(), m.dense());
  doc["admissible"] = m.is_admissible();
  return doc;
}

ordered_json simplex_json(const MassFunction& m, const ConditionalSimplex& s) {
  ordered_json out;
  out["frame"] = m.frame().names();
  out["event"] = m.frame().subset_key(s.event);
  out["kind"] =
      s.kind == ConditionalKind::kLinfPoint ? "point" : "simplex";
  ordered_json vertices = ordered_json::array();
  for (const ConditionalVertex& v : s.vertices) {
    ordered_json vj = signed_document(v.mass);
    vj["generator"] = m.frame().subset_key(v.generator);
    vertices.push_back(std::move(vj));
  }
  out["vertices"] = std::move(vertices);
  out["barycenter"] = signed_document(s.barycenter);
  return out;
}

int cmd_condition(const std::string& path, const std::string& rule,
                  const std::string& event_key, double tolerance,
                  std::ostream& out) {
  const MassFunction m = load_mass(path, tolerance);
  const Subset event = m.frame().subset_from_key(event_key);
  ordered_json doc;

  if (rule == "dempster" || rule == "suppes" || rule == "disjunctive" ||
      rule == "l2") {
    MassFunction conditional = [&] {
      if (rule == "dempster") return dempster_condition(m, event);
      if (rule == "suppes") return suppes_geometric_condition(m, event).mass;
      if (rule == "disjunctive") return disjunctive_condition(m, event);
      return l2_condition(m, event);
    }();
    doc = document_json(conditional.frame(), conditional.dense());
  } else if (rule == "credal") {
    const CredalConditional credal = credal_condition(m, event);
    doc["frame"] = m.frame().names();
    ordered_json intervals = ordered_json::object();
    for (Subset a = 1; a < m.frame().subset_count(); ++a) {
      intervals[m.frame().subset_key(a)] = {
          round6(credal.intervals.belief[a]), round6(credal.intervals.plaus[a])};
    }
    doc["intervals"] = std::move(intervals);
    if (credal.mass.has_value()) {
      doc["mass"] = document_json(credal.mass->frame(), credal.mass->dense());
    }
  } else if (rule == "conjunctive") {
    const UnnormalizedMass u = conjunctive_condition(m, event);
    doc = document_json(m.frame(), u.dense());
    if (round6(u.empty_mass()) != 0.0) {
      doc["empty_mass"] = round6(u.empty_mass());
    }
  } else if (rule == "l1") {
    doc = simplex_json(m, l1_condition(m, event));
  } else if (rule == "linf") {
    doc = simplex_json(m, linf_condition(m, event));
    doc["minimal_distance"] = round6(linf_norm_value(m, event));
  } else if (rule == "l2-belief") {
    doc = signed_document(l2_condition_belief_space(m, event));
  } else {  // linf-bary-belief (the option validator admits nothing else)
    doc = signed_document(linf_barycentre_belief_space(m, event));
  }

  doc["rule"] = rule;
  if (!doc.contains("event")) doc["event"] = m.frame().subset_key(event);
  out << doc.dump(2) << "\n";
  return 0;
}

int cmd_compare(const std::string& path, const std::string& event_key,
                int samples, std::uint64_t seed, double tolerance,
                std::ostream& out) {
  const MassFunction m = load_mass(path, tolerance);
  const Subset event = m.frame().subset_from_key(event_key);

  struct Column {
    const char* name;
    IntervalAssignment intervals;
    bool defined;
    std::string reason;
  };
  auto column = [&](const char* name, auto&& fn) {
    try {
      return Column{name, fn(m, event), true, ""};
    } catch (const Error& e) {
      return Column{name, IntervalAssignment{m.frame(), event, {}, {}}, false,
                    e.what()};
    }
  };
  std::vector<Column> cols;
  cols.push_back(column("dempster", dempster_intervals));
  cols.push_back(column("credal", credal_intervals));
  cols.push_back(column("geometric", suppes_geometric_intervals));
  cols.push_back(column("conjunctive", conjunctive_intervals));
  cols.push_back(column("disjunctive", disjunctive_intervals));

  std::size_t key_width = 7;
  for (Subset a = 0; a < m.frame().subset_count(); ++a) {
    key_width = std::max(key_width, m.frame().subset_key(a).size());
  }

  out << "conditional belief / plausibility given '"
      << m.frame().subset_key(event) << "'\n";
  out << std::string(key_width, ' ');
  for (const Column& c : cols) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "  %-19s", c.name);
    out << buf;
  }
  out << "\n";
  for (Subset a = 0; a < m.frame().subset_count(); ++a) {
    std::string key = a == 0 ? "(empty)" : m.frame().subset_key(a);
    key.resize(key_width, ' ');
    out << key;
    for (const Column& c : cols) {
      if (c.defined) {
        out << "  " << fmt6(c.intervals.belief[a]) << " "
            << fmt6(c.intervals.plaus[a]) << "   ";
      } else {
        out << "  undefined           ";
      }
    }
    out << "\n";
  }
  for (const Column& c : cols) {
    if (!c.defined) out << c.name << ": " << c.reason << "\n";
  }

  try {
    const ChainReport chain = nested_chain_check(m, event);
    if (chain.ok) {
      out << "nested chain: holds for every event (worst slack "
          << fmt6(chain.worst_slack) << ")\n";
    } else {
      static const char* kLinks[] = {
          "disjunctive bel <= credal bel", "credal bel <= dempster bel",
          "dempster bel <= conjunctive bel",
          "conjunctive bel <= conjunctive pl",
          "conjunctive pl <= dempster pl", "dempster pl <= credal pl",
          "credal pl <= disjunctive pl"};
      out << "nested chain: violated at event '"
          << m.frame().subset_key(chain.worst_event) << "' ("
          << kLinks[chain.worst_link] << ", slack " << fmt6(chain.worst_slack)
          << ")\n";
    }
  } catch (const Error& e) {
    out << "nested chain: not checkable (" << e.what() << ")\n";
  }

  if (samples > 0) {
    const CredalEnvelope env = credal_sampling(m, event, samples, seed);
    const Column& credal = cols[1];
    out << "\nsampled credal envelope (" << env.samples_used
        << " samples, seed " << seed << ")\n";
    for (Subset a = 1; a < m.frame().subset_count(); ++a) {
      std::string key = m.frame().subset_key(a);
      key.resize(key_width, ' ');
      out << key << "  [" << fmt6(env.lower[a]) << ", " << fmt6(env.upper[a])
          << "]";
      if (credal.defined) {
        out << "  closed form [" << fmt6(credal.intervals.belief[a]) << ", "
            << fmt6(credal.intervals.plaus[a]) << "]";
      }
      out << "\n";
    }
  }
  return 0;
}

int cmd_plot_ternary(const std::string& path, const std::string& event_key,
                     const std::string& format, bool belief_space,
                     double tolerance, std::ostream& out) {
  const MassFunction m = load_mass(path, tolerance);
  const Subset event = m.frame().subset_from_key(event_key);
  const TernaryScene scene = ternary_scene(m, event, belief_space);
  out << (format == "svg" ? scene_to_svg(scene) : scene_to_csv(scene));
  return 0;
}

int cmd_random(int n, int k, std::uint64_t seed, std::ostream& out) {
  static const char* kNames[] = {"x", "y", "z", "w", "v", "u",
                                 "t", "s", "r", "q", "p", "o"};
  if (n < 1 || n > Frame::kDefaultCap) {
    throw BadFrame("frame size must be between 1 and " +
                   std::to_string(Frame::kDefaultCap));
  }
  std::vector<std::string> names(kNames, kNames + n);
  const MassFunction m = random_mass(Frame(std::move(names)), k, seed);
  out << write_mass_function(m);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Belief-function conditioning and combination toolkit"};
  app.require_subcommand(1);

  std::string input, event_key, rule = "l2", format;
  double tolerance = kDocumentSumTolerance;
  int samples = 0, n = 3, k = 3;
  std::uint64_t seed = 0;
  bool belief_space = false;

  CLI::App* condition =
      app.add_subcommand("condition", "Condition a mass function on an event");
  condition->add_option("input", input, "mass document (JSON)")->required();
  condition->add_option("--event", event_key, "conditioning event subset key")
      ->required();
  condition
      ->add_option("--rule", rule,
                   "conditioning rule (default l2)")
      ->check(CLI::IsMember({"dempster", "credal", "suppes", "conjunctive",
                             "disjunctive", "l1", "l2", "linf", "l2-belief",
                             "linf-bary-belief"}));
  condition->add_option("--tolerance", tolerance,
                        "accepted slack on the input mass total");

  CLI::App* compare = app.add_subcommand(
      "compare", "Tabulate all conditioning operators on one event");
  compare->add_option("input", input, "mass document (JSON)")->required();
  compare->add_option("--event", event_key, "conditioning event subset key")
      ->required();
  compare->add_option("--samples", samples,
                      "also print a sampled credal envelope");
  compare->add_option("--seed", seed, "sampling seed");
  compare->add_option("--tolerance", tolerance,
                      "accepted slack on the input mass total");

  CLI::App* plot = app.add_subcommand(
      "plot-ternary",
      "Render the conditional geometry for a two-element event on a "
      "three-element frame");
  plot->add_option("input", input, "mass document (JSON)")->required();
  plot->add_option("--event", event_key, "conditioning event subset key")
      ->required();
  plot->add_option("--format", format, "csv (default) or svg")
      ->check(CLI::IsMember({"csv", "svg"}));
  plot->add_flag("--belief-space", belief_space,
                 "include the belief-coordinate conditioning points");
  plot->add_option("--tolerance", tolerance,
                   "accepted slack on the input mass total");

  CLI::App* random =
      app.add_subcommand("random", "Generate a random mass document");
  random->add_option("--n", n, "frame size (default 3)");
  random->add_option("--k", k, "number of focal elements (default 3)");
  random->add_option("--seed", seed, "generator seed (default 0)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (app.got_subcommand(condition)) {
      return cmd_condition(input, rule, event_key, tolerance, out);
    }
    if (app.got_subcommand(compare)) {
      return cmd_compare(input, event_key, samples, seed, tolerance, out);
    }
    if (app.got_subcommand(plot)) {
      return cmd_plot_ternary(input, event_key, format, belief_space,
                              tolerance, out);
    }
    return cmd_random(n, k, seed, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace belcond
