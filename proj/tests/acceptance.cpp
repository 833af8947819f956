// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "freeprod/classify.hpp"
#include "freeprod/dudley.hpp"
#include "freeprod/oracle.hpp"
#include "freeprod/text.hpp"

using namespace freeprod;

namespace {

using Clock = std::chrono::steady_clock;

GroupSpec cyclic_product(const std::vector<std::uint64_t>& orders) {
  static const char* names[] = {"x", "y", "z"};
  RawGroupSpec raw;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    raw.factors.push_back(FactorSpec::cyclic(orders[i]));
    raw.generators.push_back({names[i], {static_cast<std::int64_t>(i), 1}});
  }
  return validate_spec(raw);
}

struct NamedGroup {
  std::string name;
  GroupSpec spec;
};

std::vector<NamedGroup> configured_groups() {
  return {{"Z3*Z2", cyclic_product({3, 2})},
          {"Z2*Z2", cyclic_product({2, 2})},
          {"Z2*Z2*Z2", cyclic_product({2, 2, 2})},
          {"Z7*Z2", cyclic_product({7, 2})}};
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail.str("");
    if (!pass) detail << "; ";
    pass = false;
    detail << why;
  }
};

// Runs a suite and folds its report into the outcome.
std::uint64_t run_suite(Outcome& o, const NamedGroup& g, std::string_view id, const EnumBounds& b) {
  const auto r = verify_lemma(g.spec, id, b);
  if (!r.passed()) {
    const auto& c = r.counterexamples.front();
    o.fail(std::string(id) + " in " + g.name + ": " + std::to_string(r.counterexamples.size()) +
           " counterexamples, first \"" + format_word(g.spec, c.word) + "\" " + c.detail);
  }
  return r.instances;
}

int report(int index, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("[%s] %d. %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", index, title.c_str(), secs,
              o.detail.str().c_str());
  std::fflush(stdout);
  return o.pass ? 0 : 1;
}

double elapsed(Clock::time_point since) { return std::chrono::duration<double>(Clock::now() - since).count(); }

}  // namespace

int main() {
  const auto groups = configured_groups();
  const auto& z3z2 = groups[0];
  const auto& z2z2 = groups[1];
  const auto& z2z2z2 = groups[2];
  const auto& z7z2 = groups[3];
  int failures = 0;

  failures += report(1, "matcher/oracle equivalence", [&](Outcome& o) {
    const auto start = Clock::now();
    std::uint64_t n = run_suite(o, z3z2, "sc-squared-forms", EnumBounds{8, 3, 0});
    n += run_suite(o, z2z2z2, "sc-squared-forms", EnumBounds{6, 3, 0});
    n += run_suite(o, z7z2, "sc-squared-forms", EnumBounds{6, 3, 0});
    const double t = elapsed(start);
    if (t > 300) o.fail("runtime " + std::to_string(t) + "s exceeds 300s");
    if (o.pass) o.detail << n << " words (Z3*Z2 <= 8, Z2*Z2*Z2 and Z7*Z2 <= 6), 0 discrepancies";
  });

  failures += report(2, "constructed elements outside S^c*S^c", [&](Outcome& o) {
    const std::vector<std::pair<const NamedGroup*, std::string>> cases = {
        {&z3z2, "(x y)^3"}, {&z7z2, "x y x^2 y x^3 y"}, {&z2z2z2, "x y z"}};
    for (const auto& [g, text] : cases) {
      const Word u = parse_word(g->spec, text);
      const bool matcher = match_sc_squared(g->spec, u).has_value();
      const bool oracle = oracle_sc_squared(g->spec, u, EnumBounds{u.size(), 3, 0});
      if (matcher || oracle) {
        o.fail(text + " in " + g->name + ": matcher " + (matcher ? "member" : "non-member") + ", oracle " +
               (oracle ? "member" : "non-member"));
      }
    }
    if (o.pass) o.detail << "(x y)^3, x y x^2 y x^3 y, x y z excluded by matcher and oracle";
  });

  failures += report(3, "dihedral exception", [&](Outcome& o) {
    const auto n = run_suite(o, z2z2, "dihedral", EnumBounds{10, 3, 0});
    if (o.pass) o.detail << n / 2 << " words of Z2*Z2 up to length 10 in S^c*S^c; S^c = odd length + e";
  });

  failures += report(4, "power lengths", [&](Outcome& o) {
    std::uint64_t n = 0;
    for (const auto& g : groups) n += run_suite(o, g, "power-length", EnumBounds{6, 3, 0});
    if (o.pass) o.detail << n << " checks over length <= 6 in 4 groups, 2 <= n <= 6";
  });

  failures += report(5, "unbalanced words in Z7*Z2", [&](Outcome& o) {
    const auto start = Clock::now();
    std::uint64_t n = 0;
    for (const char* id : {"unbalanced-excluded", "unbalanced-cyclic-power", "unbalanced-s-power"}) {
      n += run_suite(o, z7z2, id, EnumBounds{6, 3, 0});
    }
    const double t = elapsed(start);
    if (t > 600) o.fail("runtime " + std::to_string(t) + "s exceeds 600s");
    if (o.pass) o.detail << n << " instances, 0 counterexamples";
  });

  failures += report(6, "nested power simulation", [&](Outcome& o) {
    constexpr std::uint64_t kBudget = 100'000'000;
    const Word g3 = parse_word(z3z2.spec, "(x y)^3");
    std::ostringstream lengths;
    for (std::size_t n = 1; n <= 6; ++n) {
      const std::vector<Word> gammas(n, g3);
      const Schedule s(ScheduleKind::dudley, std::vector<std::uint64_t>(n, g3.size()));
      const auto r = verify_chain(z3z2.spec, gammas, s, n, kBudget);
      if (!r.all_checks_pass()) o.fail("dudley n = " + std::to_string(n) + ": a per-level check failed");
      if (r.final_length + 1 < n) o.fail("dudley n = " + std::to_string(n) + ": ||H_n,1|| < n - 1");
      lengths << (n > 1 ? ", " : "") << r.final_length;
    }
    const Word xi = parse_word(z7z2.spec, "x y x^2 y x^3 y");
    for (std::size_t n = 1; n <= 4; ++n) {
      const std::vector<Word> gammas(n, xi);
      const Schedule s(ScheduleKind::linear, std::vector<std::uint64_t>(n, xi.size()));
      const auto r = verify_chain(z7z2.spec, gammas, s, n, kBudget);
      for (const auto& l : r.levels) {
        if (l.in_s_complement) o.fail("linear n = " + std::to_string(n) + ": level " + std::to_string(l.m) + " in S^c");
      }
    }
    if (o.pass) o.detail << "dudley ||H_n,1|| for n = 1..6: " << lengths.str() << "; linear levels outside S^c";
  });

  failures += report(7, "algebra foundations", [&](Outcome& o) {
    std::uint64_t n = 0;
    for (const auto& g : groups) {
      n += run_suite(o, g, "axioms", EnumBounds{6, 3, 0});
      n += run_suite(o, g, "core-decomposition", EnumBounds{6, 3, 0});
    }
    if (o.pass) o.detail << n << " checks over the length <= 6 balls of 4 groups";
  });

  std::printf("%d of 7 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
