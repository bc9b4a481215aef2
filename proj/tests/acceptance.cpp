// Prints one [PASS]/[FAIL] line per acceptance item and exits non-zero if
// any item fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "posetkit/complement.hpp"
#include "posetkit/completion.hpp"
#include "posetkit/cones.hpp"
#include "posetkit/enumerate.hpp"
#include "posetkit/registry.hpp"
#include "posetkit/residuation.hpp"
#include "posetkit/search.hpp"
#include "posetkit/structure.hpp"

using namespace posetkit;

namespace {

int failures = 0;

struct Checks {
  std::vector<std::string> problems;
  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const std::string& id, const std::string& title, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::printf("[%s] %s %s: %s\n", ok ? "PASS" : "FAIL", id.c_str(), title.c_str(), detail.c_str());
  std::fflush(stdout);
}

// Runs a fixture item; it must also finish within a second.
void fixture_item(const std::string& id, const std::string& title, const std::function<void(Checks&)>& body) {
  Checks c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.problems.push_back(std::string("exception: ") + e.what());
  }
  const double t = seconds_since(t0);
  c.expect(t < 1.0, "took longer than 1 s");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f s", t);
  std::string detail = buf;
  for (const auto& p : c.problems) detail += "; " + p;
  report(id, title, c.problems.empty(), detail);
}

std::string label(const Poset& p, const Subset& s) { return p.label(s); }

void fig1(Checks& c) {
  auto bp = fixtures::bounded("fig1");
  const Poset& p = bp;
  c.expect(is_uniquely_complemented(bp).holds, "not uniquely complemented");
  c.expect(!is_distributive(p).holds, "distributive");
  auto s = distributive_sides(p, 1, p.index("c"), p.index("f'"), p.index("a"));
  c.expect(label(p, s.lhs) == "{0,a}" && label(p, s.rhs) == "{0}",
           "sides at (c,f',a) are " + label(p, s.lhs) + " vs " + label(p, s.rhs));
  auto pc = is_pseudocomplemented(bp);
  c.expect(!pc.holds, "pseudocomplemented");
  if (!pc.holds) c.expect(bp.name(pc.element("a")) == "a", "pseudocomplement fails at " + bp.name(pc.element("a")));
}

void fig2_3(Checks& c) {
  auto bp = fixtures::bounded("fig2");
  const Poset& p = bp;
  c.expect(label(p, plus(bp, p.index("b"))) == "{a,c}", "b+ = " + label(p, plus(bp, p.index("b"))));
  auto cl = closed_sets(bp);
  c.expect(cl.size() == 6, "|Cl| = " + std::to_string(cl.size()));
  if (cl.size() != 6) return;
  auto fig3 = fixtures::poset("fig3");
  const std::map<std::string, std::string> ortho = {{"empty", "N5"}, {"N5", "empty"}, {"0", "1"},
                                                    {"1", "0"},       {"b", "ac"},      {"ac", "b"}};
  auto lat = cl.as_poset();
  std::vector<std::size_t> perm(6);
  std::iota(perm.begin(), perm.end(), 0);
  bool found = false;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < 6 && ok; ++i) {
      for (std::size_t j = 0; j < 6 && ok; ++j) ok = lat.leq(i, j) == fig3.leq(perm[i], perm[j]);
      ok = ok && fig3.name(perm[cl.ortho(i)]) == ortho.at(fig3.name(perm[i]));
    }
    found = ok;
  } while (!found && std::next_permutation(perm.begin(), perm.end()));
  c.expect(found, "no ortholattice isomorphism onto fig3");
}

void fig4_5(Checks& c) {
  auto bp = fixtures::bounded("fig4");
  const Poset& p = bp;
  c.expect(label(p, plus(bp, p.index("b"))) == "{f,g}", "b+ = " + label(p, plus(bp, p.index("b"))));
  c.expect(label(p, plus(bp, p.index("c"))) == "{f,g}", "c+ = " + label(p, plus(bp, p.index("c"))));
  c.expect(complement_antichain_all(bp).holds, "some x+ is not an antichain");
  c.expect(!has_n5_with_bounds(bp).holds, "N5 with bounds found");
  auto s = distributive_sides(p, 1, p.index("a"), p.index("b"), p.index("c"));
  c.expect(s.lhs == lower(p, p.singleton(p.index("c"))) && label(p, s.rhs) == "{0}",
           "sides at (a,b,c) are " + label(p, s.lhs) + " vs " + label(p, s.rhs));
  auto cl = closed_sets(bp);
  c.expect(cl.size() == 10, "|Cl| = " + std::to_string(cl.size()));
  auto fig5 = fixtures::poset("fig5");
  std::vector<std::size_t> to_fig;
  for (const auto& s2 : cl.elements()) {
    std::string name;
    if (s2.empty()) name = "empty";
    else if (s2.size() == p.size()) name = "P";
    else
      for (auto e : s2.elements()) name += p.name(e);
    auto idx = fig5.find(name);
    c.expect(idx.has_value(), "closed set " + label(p, s2) + " is not a fig5 label");
    if (!idx) return;
    to_fig.push_back(*idx);
  }
  for (std::size_t i = 0; i < cl.size(); ++i) {
    for (std::size_t j = 0; j < cl.size(); ++j) {
      if (cl.leq(i, j) != fig5.leq(to_fig[i], to_fig[j])) {
        c.expect(false, "order differs from fig5");
        return;
      }
    }
  }
}

void fig6(Checks& c) {
  auto bp = fixtures::bounded("fig6");
  const Poset& p = bp;
  auto sum = horizontal_sum(fixtures::bounded("fig4"), as_bounded(chain(4)));
  c.expect(oracle::isomorphic(sum.poset(), p), "horizontal sum is not isomorphic to fig6");
  auto bplus = plus(bp, p.index("b"));
  c.expect(label(p, bplus) == "{f,g,i,j}", "b+ = " + label(p, bplus));
  c.expect(!is_antichain(p, bplus), "b+ is an antichain");
  c.expect(has_n5_with_bounds(bp).holds, "no N5 with bounds");
  c.expect(is_n5_with_bounds(bp, p.index("a"), p.index("e"), p.index("i")), "{0,a,e,i,1} is not an N5");
}

void fig7(Checks& c) {
  auto bp = fixtures::bounded("fig7");
  const Poset& p = bp;
  const Element f = p.index("f"), k = p.index("k");
  c.expect(p.leq(f, k), "f is not below k");
  for (int i = 1; i <= 3; ++i) {
    c.expect(!antitone_holds_at(bp, i, f, k), "condition " + std::to_string(i) + " holds at (f,k)");
    c.expect(!antitone_condition(bp, i).holds, "condition " + std::to_string(i) + " holds");
  }
  c.expect(plus(bp, f) == convex_hull_between(p, p.subset_named({"b", "n"})), "f+ = " + label(p, plus(bp, f)));
  c.expect(plus(bp, k) == convex_hull_between(p, p.subset_named({"c", "o"})), "k+ = " + label(p, plus(bp, k)));
}

void fig8(Checks& c) {
  auto bp = fixtures::bounded("fig8");
  const Poset& p = bp;
  const Element a = p.index("a");
  c.expect(label(p, plus(bp, a)) == "{c,d,g,h}", "a+ = " + label(p, plus(bp, a)));
  auto one = de_morgan_sides(bp, 1, a, bp.bottom());
  c.expect(label(p, one.lhs) == "{c,d,g,h}" && label(p, one.rhs) == "{0}",
           "first law at (a,0): " + label(p, one.lhs) + " vs " + label(p, one.rhs));
  auto two = de_morgan_sides(bp, 2, a, bp.top());
  c.expect(label(p, two.lhs) == "{c,d,g,h}" && label(p, two.rhs) == "{1}",
           "second law at (a,1): " + label(p, two.lhs) + " vs " + label(p, two.rhs));
  c.expect(!sup_of(p, p.subset_named({"a", "b"})).has_value(), "sup{a,b} exists");
  c.expect(condition(bp, 1).holds, "condition 1 fails");
  c.expect(condition(bp, 3).holds, "condition 3 fails");
  c.expect(weakly_antitone_left(bp, Op::Hook).holds, "hook not weakly antitone from the left");
  c.expect(adjointness_report(bp).forward.holds, "forward adjointness fails");
}

void fig9_10(Checks& c) {
  auto conv = conv_star(fixtures::bounded("fig9"));
  c.expect(conv.size() == 12, "|Conv*| = " + std::to_string(conv.size()));
  c.expect(oracle::isomorphic(conv.as_poset(), fixtures::poset("fig10")), "not isomorphic to fig10");
}

void universal(double& total) {
  for (const auto& suite : suite_names()) {
    SearchSpec spec;
    spec.min_size = 2;
    spec.max_size = 7;
    spec.predicate = suite;
    spec.mode = SearchMode::VerifyUniversal;
    spec.threads = 1;
    spec.exhaustive_cap = 8;
    spec.samples = 200;
    std::string detail;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      auto r = run_search(spec);
      ok = r.passed;
      detail = std::to_string(r.examined) + " classes";
      if (!r.matches.empty()) {
        const auto& m = r.matches.front();
        detail += ", counterexample " + canonical_form(m.poset) + " " + describe_witness(m.poset, m.reports.front());
      }
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double t = seconds_since(t0);
    total += t;
    // Vacuous passes are counted apart from substantive ones.
    if (ok) {
      std::size_t vacuous = 0, classes = 0;
      for (std::size_t n = 2; n <= 7; ++n) {
        for (const auto& bp : enumerate_bounded(n)) {
          auto ctx = EvalContext::with_cap(8, 200, class_seed(bp, 0));
          vacuous += run_suite(bp, suite, ctx).vacuous ? 1 : 0;
          ++classes;
        }
      }
      detail += " (" + std::to_string(classes - vacuous) + " substantive, " + std::to_string(vacuous) + " vacuous)";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, ", %.2f s", t);
    report("2", "verify " + suite + " n<=7", ok, detail + buf);
  }
}

void enumeration() {
  for (std::size_t n = 2; n <= 7; ++n) {
    const std::size_t got = enumerate_bounded(n).size();
    const std::size_t want = oracle::class_count(n - 2);
    report("3", "class count n=" + std::to_string(n), got == want,
           std::to_string(got) + " enumerated, " + std::to_string(want) + " by labelled brute force");
  }
  bool same = true;
  std::size_t classes = 0;
  for (std::size_t m = 0; m <= 5; ++m) {
    auto one = generate_posets(m, 1);
    auto many = generate_posets(m, 4);
    classes += one.size();
    same = same && one.size() == many.size();
    for (std::size_t i = 0; same && i < one.size(); ++i) {
      same = one[i].names() == many[i].names() && one[i].covers() == many[i].covers();
    }
  }
  report("3", "1 thread vs 4 threads", same, std::to_string(classes) + " classes compared");
}

void determinism() {
  const std::string f8 = fixtures::path("fig8.poset");
  const std::string f1 = fixtures::path("fig1.poset");
  const std::vector<std::pair<std::string, std::vector<std::string>>> commands = {
      {"check fig8 --json", {"check", f8, "--json", "--seed", "7"}},
      {"check fig1", {"check", f1, "--props", "all"}},
      {"search --find --json", {"search", "--max-n", "7", "--find", "complemented & !lattice", "--all", "--json"}},
      {"search --verify all", {"search", "--max-n", "6", "--verify", "all", "--seed", "11"}},
  };
  for (const auto& [title, args] : commands) {
    auto a = cli::run(args);
    auto b = cli::run(args);
    const bool ok = a.exit_code == b.exit_code && a.out == b.out && !a.out.empty();
    report("4", title + " byte-identical", ok, std::to_string(a.out.size()) + " bytes");
  }
  std::vector<std::string> base = {"search", "--max-n", "7", "--verify", "adjointness-theorems", "--json"};
  auto one = base, four = base;
  one.insert(one.end(), {"--threads", "1"});
  four.insert(four.end(), {"--threads", "4"});
  auto a = cli::run(one);
  auto b = cli::run(four);
  report("4", "search output independent of --threads", a.out == b.out && a.exit_code == b.exit_code,
         std::to_string(a.out.size()) + " bytes");
}

}  // namespace

int main() {
  fixture_item("1", "fig1", fig1);
  fixture_item("1", "fig2/fig3", fig2_3);
  fixture_item("1", "fig4/fig5", fig4_5);
  fixture_item("1", "fig6", fig6);
  fixture_item("1", "fig7", fig7);
  fixture_item("1", "fig8", fig8);
  fixture_item("1", "fig9/fig10", fig9_10);

  double total = 0;
  universal(total);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f s single-threaded", total);
  report("2", "universal verification total", total < 60.0, buf);

  enumeration();
  determinism();

  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
