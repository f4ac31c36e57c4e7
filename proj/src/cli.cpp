#include "borsuk/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

#include "borsuk/capacity.hpp"
#include "borsuk/errors.hpp"
#include "borsuk/parse.hpp"

namespace borsuk::cli {

namespace {

using abelian::FgAbelianGroup;
using capacity::ExtendedCount;
using spaces::SpaceExpr;
using Json = nlohmann::ordered_json;

Json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return Json(n.get_si());
  return Json(n.get_str());
}

Json group_json(const FgAbelianGroup& g) {
  Json factors = Json::array();
  for (const Integer& d : g.invariant_factors()) factors.push_back(integer_json(d));
  return Json{{"literal", g.to_string()}, {"free_rank", g.free_rank()}, {"invariant_factors", factors}};
}

Json count_json(const ExtendedCount& c) {
  switch (c.kind()) {
    case ExtendedCount::Kind::finite:
      return Json{{"kind", "Finite"}, {"value", integer_json(c.value())}};
    case ExtendedCount::Kind::lower_bound:
      return Json{{"kind", "LowerBound"}, {"value", integer_json(c.value())}};
    case ExtendedCount::Kind::unknown:
      break;
  }
  return Json{{"kind", "Unknown"}, {"value", nullptr}};
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int homology(const HomologyCommand& cmd, bool json, std::ostream& out) {
  const SpaceExpr x = parse_space(cmd.space);
  const int bound = cmd.bound.value_or(capacity::default_comparison_bound({x}));
  const spaces::HomologyProfile p = spaces::homology_profile(x, bound);

  if (json) {
    Json groups = Json::array();
    for (const auto& [degree, g] : p.groups) {
      Json entry{{"degree", degree}};
      entry.update(group_json(g));
      groups.push_back(std::move(entry));
    }
    out << Json{{"command", "homology"},
                {"space", x.to_string()},
                {"canonical", spaces::canonicalize(x).to_string()},
                {"bound", p.bound},
                {"exact_above_bound", p.exact_above_bound},
                {"groups", groups}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  out << "space: " << x.to_string() << '\n';
  out << "degree  H_n\n";
  for (const auto& [degree, g] : p.groups) {
    out << std::left << std::setw(8) << degree << g.to_string() << '\n';
  }
  if (p.exact_above_bound) {
    out << "H_n = 0 for all n > " << p.bound << '\n';
  } else {
    out << "verified up to " << p.bound << " (higher degrees not computed)\n";
  }
  return kExitOk;
}

int capacity_cmd(const CapacityCommand& cmd, bool json, std::ostream& out) {
  const SpaceExpr x = parse_space(cmd.space);
  const SpaceExpr canonical = spaces::canonicalize(x);
  const capacity::CapacityCase kind = capacity::classify(canonical);
  const ExtendedCount value = capacity::capacity(canonical);
  std::vector<SpaceExpr> dominated;
  if (cmd.enumerate) dominated = capacity::enumerate_dominated(canonical);

  if (json) {
    Json doc{{"command", "capacity"},
             {"space", x.to_string()},
             {"canonical", canonical.to_string()},
             {"case", capacity::to_string(kind)},
             {"extension", capacity::is_extension(kind)},
             {"capacity", count_json(value)}};
    if (cmd.enumerate) {
      Json list = Json::array();
      for (const SpaceExpr& d : dominated) list.push_back(d.to_string());
      doc["dominated"] = list;
    }
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "capacity(" << canonical.to_string() << ") = " << value.to_string() << '\n';
  if (capacity::is_extension(kind)) {
    out << "note: wedge of Moore spaces of distinct degrees; value is the product of the "
           "per-degree summand counts\n";
  }
  if (cmd.enumerate) {
    out << "dominated homotopy types (" << dominated.size() << "):\n";
    for (const SpaceExpr& d : dominated) out << "  " << d.to_string() << '\n';
  }
  return kExitOk;
}

int compare(const CompareCommand& cmd, bool json, std::ostream& out) {
  const SpaceExpr x = parse_space(cmd.space_x);
  const SpaceExpr y = parse_space(cmd.space_y);
  const int bound = cmd.bound.value_or(capacity::default_comparison_bound({x, y}));
  const capacity::CounterexampleReport r = capacity::borsuk_report(x, y, bound);

  if (json) {
    out << Json{{"command", "compare"},
                {"space_x", r.space_x.to_string()},
                {"space_y", r.space_y.to_string()},
                {"compared_up_to", r.compared_up_to},
                {"homology_agrees", r.homology_agrees},
                {"exact_comparison", r.exact_comparison},
                {"capacity_x", count_json(r.capacity_x)},
                {"capacity_y", count_json(r.capacity_y)},
                {"is_counterexample", r.is_counterexample}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  out << "X: " << r.space_x.to_string() << '\n';
  out << "Y: " << r.space_y.to_string() << '\n';
  out << "homology agrees: " << yes_no(r.homology_agrees);
  if (r.exact_comparison) {
    out << " (all degrees; both vanish above " << r.compared_up_to << ")\n";
  } else {
    out << " (verified up to " << r.compared_up_to << ")\n";
  }
  out << "capacity X: " << r.capacity_x.to_string() << '\n';
  out << "capacity Y: " << r.capacity_y.to_string() << '\n';
  out << "is_counterexample: " << (r.is_counterexample ? "true" : "false") << '\n';
  return kExitOk;
}

int summands(const SummandsCommand& cmd, bool json, std::ostream& out) {
  const FgAbelianGroup g = parse_group(cmd.group);
  const Integer count = abelian::count_direct_summands(g);
  const std::vector<FgAbelianGroup> classes = abelian::enumerate_direct_summands(g);

  if (json) {
    Json list = Json::array();
    for (const FgAbelianGroup& c : classes) list.push_back(group_json(c));
    out << Json{{"command", "summands"},
                {"group", group_json(g)},
                {"count", integer_json(count)},
                {"summands", list}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  out << "group: " << g.to_string() << '\n';
  out << "direct summand classes: " << count << '\n';
  for (const FgAbelianGroup& c : classes) out << "  " << c.to_string() << '\n';
  return kExitOk;
}

void report_error(std::ostream& err, std::string_view code, std::string_view message) {
  std::string line(message);
  for (char& ch : line) {
    if (ch == '\n') ch = ' ';
  }
  err << "error: " << code << ": " << line << '\n';
}

}  // namespace

int run(const Options& options, std::ostream& out, std::ostream& err) {
  try {
    return std::visit(
        [&](const auto& cmd) {
          using T = std::decay_t<decltype(cmd)>;
          if constexpr (std::is_same_v<T, HomologyCommand>) return homology(cmd, options.json, out);
          if constexpr (std::is_same_v<T, CapacityCommand>) return capacity_cmd(cmd, options.json, out);
          if constexpr (std::is_same_v<T, CompareCommand>) return compare(cmd, options.json, out);
          if constexpr (std::is_same_v<T, SummandsCommand>) return summands(cmd, options.json, out);
        },
        options.command);
  } catch (const ParseError& e) {
    report_error(err, "parse_error", e.what());
    return kExitInputError;
  } catch (const DomainError& e) {
    report_error(err, "domain_error", e.what());
    return kExitInputError;
  } catch (const UnsupportedSpace& e) {
    report_error(err, "unsupported_space", e.what());
    return kExitUnsupported;
  } catch (const UnsupportedCapacity& e) {
    report_error(err, "unsupported_capacity", e.what());
    return kExitUnsupported;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Borsuk capacities of wedges of spheres, Moore and Eilenberg-MacLane spaces"};
  app.require_subcommand(1, 1);

  Options options;
  app.add_flag("--json", options.json, "Emit one JSON document instead of text");

  HomologyCommand homology_cmd;
  auto* h = app.add_subcommand("homology", "Integral homology table of a space");
  h->add_option("space", homology_cmd.space, "Space literal, e.g. 'S^3 x K(Z,2)'")->required();
  h->add_option("--bound", homology_cmd.bound, "Highest degree to compute")->check(CLI::NonNegativeNumber);

  CapacityCommand capacity_cmd;
  auto* c = app.add_subcommand("capacity", "Number of homotopy types dominated by a space");
  c->add_option("space", capacity_cmd.space, "Space literal")->required();
  c->add_flag("--enumerate", capacity_cmd.enumerate, "List the dominated homotopy types");

  CompareCommand compare_cmd;
  auto* cmp = app.add_subcommand("compare", "Compare homology and capacity of two spaces");
  cmp->add_option("x", compare_cmd.space_x, "First space")->required();
  cmp->add_option("y", compare_cmd.space_y, "Second space")->required();
  cmp->add_option("--bound", compare_cmd.bound, "Highest degree to compare")->check(CLI::NonNegativeNumber);

  SummandsCommand summands_cmd;
  auto* s = app.add_subcommand("summands", "Direct summand classes of an abelian group");
  s->add_option("group", summands_cmd.group, "Group literal, e.g. 'Z^2 + Z/4 + Z/6'")->required();

  for (auto* sub : {h, c, cmp, s}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage_error", e.what());
    return kExitInputError;
  }

  if (h->parsed()) {
    options.command = homology_cmd;
  } else if (c->parsed()) {
    options.command = capacity_cmd;
  } else if (cmp->parsed()) {
    options.command = compare_cmd;
  } else {
    options.command = summands_cmd;
  }
  return run(options, out, err);
}

}  // namespace borsuk::cli
