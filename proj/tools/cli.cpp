#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>

#include "posetkit/complement.hpp"
#include "posetkit/completion.hpp"
#include "posetkit/cones.hpp"
#include "posetkit/errors.hpp"
#include "posetkit/format.hpp"
#include "posetkit/registry.hpp"
#include "posetkit/residuation.hpp"
#include "posetkit/search.hpp"

namespace posetkit::cli {

namespace {

using json = nlohmann::ordered_json;

json names_of(const Poset& p, const Subset& s) {
  json out = json::array();
  for (Element e : s.elements()) out.push_back(p.name(e));
  return out;
}

json report_json(const Poset& p, const PropertyReport& r) {
  json j;
  j["property"] = r.property;
  j["holds"] = r.holds;
  j["vacuous"] = r.vacuous;
  j["exhaustive"] = r.exhaustive;
  j["samples"] = r.samples;
  json w = json::object();
  for (const auto& b : r.witness) {
    if (const auto* e = std::get_if<Element>(&b.value)) {
      w[b.var] = p.name(*e);
    } else {
      w[b.var] = names_of(p, std::get<Subset>(b.value));
    }
  }
  j["witness"] = w;
  j["note"] = r.note;
  return j;
}

std::string report_line(const Poset& p, const PropertyReport& r) {
  std::string line = r.property + ": " + (r.holds ? "true" : "false");
  if (r.vacuous) line += " (vacuous)";
  if (!r.exhaustive) line += " (sampled " + std::to_string(r.samples) + ")";
  const std::string w = describe_witness(p, r);
  if (!w.empty()) line += "  " + w;
  if (!r.note.empty()) line += "  [" + r.note + "]";
  return line;
}

json poset_json(const Poset& p) {
  json j;
  j["elements"] = p.names();
  json covers = json::array();
  for (const auto& [lo, hi] : p.covers()) covers.push_back({p.name(lo), p.name(hi)});
  j["covers"] = covers;
  return j;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  f << text;
}

// ---- check --------------------------------------------------------------

struct CheckArgs {
  std::string file;
  std::string props = "all";
  std::vector<std::string> expect;
  bool json = false;
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
};

Output cmd_check(const CheckArgs& a) {
  Output o;
  const BoundedPoset bp = as_bounded(load_poset(a.file));
  const Poset& p = bp.poset();

  std::vector<std::string> names;
  if (a.props == "all") {
    names = property_names();
  } else {
    for (const auto& n : split_list(a.props)) names.push_back(resolve_property(n));
  }
  std::map<std::string, bool> expected;
  for (const auto& e : a.expect) {
    const auto eq = e.find('=');
    const std::string value = eq == std::string::npos ? "" : e.substr(eq + 1);
    if (eq == std::string::npos || (value != "true" && value != "false")) {
      throw Error(ErrorKind::InvalidArgument, "--expect takes name=true|false, got '" + e + "'");
    }
    const std::string name = resolve_property(e.substr(0, eq));
    expected[name] = value == "true";
    if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
  }

  EvalContext ctx;
  ctx.conditions.samples = a.samples;
  ctx.conditions.seed = a.seed;
  ctx.hull.samples = a.samples;
  ctx.hull.seed = a.seed;
  ctx.seed = a.seed;

  json reports = json::array();
  std::string text;
  for (const auto& name : names) {
    try {
      const PropertyReport r = evaluate_property(bp, name, ctx);
      reports.push_back(report_json(p, r));
      text += report_line(p, r) + '\n';
      if (auto it = expected.find(name); it != expected.end() && it->second != r.holds) {
        o.err += "expectation failed: " + name + " is " + (r.holds ? "true" : "false") + '\n';
        o.exit_code = 2;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SizeCapExceeded) throw;
      json j;
      j["property"] = name;
      j["error"] = e.what();
      reports.push_back(j);
      text += name + ": skipped  [" + e.what() + "]\n";
      if (expected.count(name)) {
        o.err += "expectation failed: " + name + " could not be evaluated\n";
        o.exit_code = 2;
      }
    }
  }
  if (a.json) {
    json j;
    j["file"] = a.file;
    j["size"] = bp.size();
    j["reports"] = reports;
    o.out = j.dump(2) + '\n';
  } else {
    o.out = text;
  }
  return o;
}

// ---- op -----------------------------------------------------------------

Output cmd_op(const std::string& file, const std::string& op, const std::vector<std::string>& args) {
  const BoundedPoset bp = as_bounded(load_poset(file));
  const Poset& p = bp.poset();
  std::vector<Element> elems;
  for (const auto& a : args) elems.push_back(p.index(a));
  const Subset set = p.subset(std::span<const Element>(elems));

  auto need = [&](std::size_t k) {
    if (elems.size() != k) {
      throw Error(ErrorKind::InvalidArgument, op + " takes " + std::to_string(k) + " element argument(s)");
    }
  };
  Subset result;
  if (op == "plus") {
    result = plus(bp, set);
  } else if (op == "circ" || op == "imp" || op == "odot" || op == "hook") {
    need(2);
    result = apply(bp, parse_op(op), elems[0], elems[1]);
  } else if (op == "U") {
    result = upper(p, set);
  } else if (op == "L") {
    result = lower(p, set);
  } else if (op == "min") {
    result = min_of(p, set);
  } else if (op == "max") {
    result = max_of(p, set);
  } else if (op == "hull") {
    result = convex_hull(p, set);
  } else {
    throw Error(ErrorKind::InvalidArgument,
                "unknown operation '" + op + "' (plus, circ, imp, odot, hook, U, L, min, max, hull)");
  }
  Output o;
  o.out = p.label(result) + '\n';
  return o;
}

// ---- derive -------------------------------------------------------------

Output cmd_derive(const std::string& file, const std::string& what, const std::string& dot_path, bool as_json) {
  const Poset base = load_poset(file);
  std::optional<Poset> derived;
  if (what == "cl") {
    derived = closed_sets(as_bounded(base)).as_poset();
  } else if (what == "dm") {
    derived = dm_completion(base).as_poset();
  } else if (what == "conv") {
    derived = conv_star(as_bounded(base)).as_poset();
  } else {
    throw Error(ErrorKind::InvalidArgument, "derive takes cl, dm or conv, got '" + what + "'");
  }
  if (!dot_path.empty()) write_file(dot_path, to_dot(*derived, what));
  Output o;
  if (as_json) {
    json j;
    j["kind"] = what;
    j["size"] = derived->size();
    const json pj = poset_json(*derived);
    j["elements"] = pj["elements"];
    j["covers"] = pj["covers"];
    o.out = j.dump(2) + '\n';
  } else {
    o.out = serialize(*derived);
  }
  return o;
}

// ---- search -------------------------------------------------------------

struct SearchArgs {
  std::size_t min_n = 2;
  std::size_t max_n = 2;
  std::string find;
  std::string verify;
  bool find_all = false;
  std::uint64_t seed = 0;
  std::size_t samples = 200;
  std::size_t threads = 0;
  std::vector<std::string> include;
  bool json = false;
};

Output cmd_search(const SearchArgs& a) {
  SearchSpec spec;
  spec.min_size = a.min_n;
  spec.max_size = a.max_n;
  spec.seed = a.seed;
  spec.samples = a.samples;
  spec.threads = a.threads;
  if (!a.verify.empty()) {
    spec.mode = SearchMode::VerifyUniversal;
    spec.predicate = a.verify;
  } else {
    spec.mode = a.find_all ? SearchMode::FindAll : SearchMode::FindFirst;
    spec.predicate = a.find;
  }
  for (const auto& f : a.include) spec.extra.push_back(as_bounded(load_poset(f)));

  const SearchResult r = run_search(spec);
  Output o;
  const char* mode = spec.mode == SearchMode::VerifyUniversal ? "verify"
                     : spec.mode == SearchMode::FindAll      ? "find-all"
                                                             : "find-first";
  if (a.json) {
    json j;
    j["mode"] = mode;
    j["predicate"] = spec.predicate;
    j["min_n"] = spec.min_size;
    j["max_n"] = spec.max_size;
    j["seed"] = spec.seed;
    j["samples"] = spec.samples;
    j["examined"] = r.examined;
    json per = json::object();
    for (std::size_t n = 0; n < r.per_size.size(); ++n) {
      if (r.per_size[n]) per[std::to_string(n)] = r.per_size[n];
    }
    j["per_size"] = per;
    if (spec.mode == SearchMode::VerifyUniversal) j["passed"] = r.passed;
    json matches = json::array();
    for (const auto& m : r.matches) {
      json mj = poset_json(m.poset.poset());
      mj["size"] = m.poset.size();
      json reps = json::array();
      for (const auto& rep : m.reports) reps.push_back(report_json(m.poset.poset(), rep));
      mj["reports"] = reps;
      matches.push_back(mj);
    }
    j["matches"] = matches;
    o.out = j.dump(2) + '\n';
  } else {
    std::ostringstream out;
    out << mode << ' ' << spec.predicate << ": examined " << r.examined << " classes (";
    bool first = true;
    for (std::size_t n = 0; n < r.per_size.size(); ++n) {
      if (!r.per_size[n]) continue;
      out << (first ? "" : ", ") << "n=" << n << ": " << r.per_size[n];
      first = false;
    }
    out << ")\n";
    if (spec.mode == SearchMode::VerifyUniversal) out << (r.passed ? "PASS" : "FAIL") << '\n';
    out << r.matches.size() << (spec.mode == SearchMode::VerifyUniversal ? " counterexample(s)\n" : " match(es)\n");
    for (const auto& m : r.matches) {
      out << "--- n=" << m.poset.size() << '\n' << serialize(m.poset.poset());
      for (const auto& rep : m.reports) out << "  " << report_line(m.poset.poset(), rep) << '\n';
    }
    o.out = out.str();
  }
  std::ostringstream elapsed;
  elapsed << std::fixed << std::setprecision(3) << "elapsed " << r.elapsed_seconds << " s\n";
  o.err += elapsed.str();
  if (!r.passed) o.exit_code = 2;
  return o;
}

Output cmd_dot(const std::string& file, const std::string& out_path) {
  const Poset p = load_poset(file);
  Output o;
  if (out_path == "-") {
    o.out = to_dot(p);
  } else {
    write_file(out_path, to_dot(p));
  }
  return o;
}

}  // namespace

Output run(std::vector<std::string> args) {
  CLI::App app{"Finite poset toolkit: complements, closed sets, completions, enumeration"};
  app.name("posetkit");
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Evaluate named properties of a bounded poset");
  c->add_option("file", check.file, "Poset file")->required();
  c->add_option("--props", check.props, "Comma-separated property names, or 'all'");
  c->add_option("--expect", check.expect, "name=true|false; a mismatch exits with status 2");
  c->add_flag("--json", check.json, "Machine-readable output");
  c->add_option("--seed", check.seed, "Seed for sampled checks");
  c->add_option("--sample", check.samples, "Samples for checks above their exhaustive cap");

  std::string op_file, op_name;
  std::vector<std::string> op_args;
  auto* op = app.add_subcommand("op", "Apply a set operator");
  op->add_option("file", op_file, "Poset file")->required();
  op->add_option("op", op_name, "plus|circ|imp|odot|hook|U|L|min|max|hull")->required();
  op->add_option("args", op_args, "Element names");

  std::string d_file, d_what, d_dot;
  bool d_json = false;
  auto* derive = app.add_subcommand("derive", "Build Cl(P), the completion D(P), or Conv*(P)");
  derive->add_option("file", d_file, "Poset file")->required();
  derive->add_option("what", d_what, "cl|dm|conv")->required();
  derive->add_option("--dot", d_dot, "Also write the Hasse diagram as DOT");
  derive->add_flag("--json", d_json, "Machine-readable output");

  SearchArgs s;
  auto* search = app.add_subcommand("search", "Search or verify over bounded posets up to isomorphism");
  search->add_option("--max-n", s.max_n, "Largest poset size")->required();
  search->add_option("--min-n", s.min_n, "Smallest poset size");
  auto* find = search->add_option("--find", s.find, "Predicate expression, e.g. \"complemented & !boolean\"");
  auto* verify = search->add_option("--verify", s.verify, "Suite name or expression that must never hold");
  find->excludes(verify);
  search->add_flag("--all", s.find_all, "Report every match instead of the first");
  search->add_option("--seed", s.seed, "Base seed for sampled checks");
  search->add_option("--sample", s.samples, "Samples for checks above the exhaustive cap");
  search->add_option("--threads", s.threads, "Worker threads (0 = POSETKIT_THREADS or all cores)");
  search->add_option("--include", s.include, "Extra poset files evaluated after the enumeration");
  search->add_flag("--json", s.json, "Machine-readable output");

  std::string dot_file, dot_out;
  auto* dot = app.add_subcommand("dot", "Write the Hasse diagram as DOT ('-' for stdout)");
  dot->add_option("file", dot_file, "Poset file")->required();
  dot->add_option("out", dot_out, "Output path")->required();

  std::reverse(args.begin(), args.end());
  Output o;
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    o.exit_code = app.exit(e, out, err) == 0 ? 0 : 1;
    o.out = out.str();
    o.err = err.str();
    return o;
  }
  try {
    if (*c) return cmd_check(check);
    if (*op) return cmd_op(op_file, op_name, op_args);
    if (*derive) return cmd_derive(d_file, d_what, d_dot, d_json);
    if (*search) {
      if (s.find.empty() && s.verify.empty()) throw Error(ErrorKind::InvalidArgument, "search needs --find or --verify");
      return cmd_search(s);
    }
    if (*dot) return cmd_dot(dot_file, dot_out);
  } catch (const std::exception& e) {
    o.exit_code = 1;
    o.err = std::string("error: ") + e.what() + '\n';
  }
  return o;
}

}  // namespace posetkit::cli
