#include "freeprod/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <optional>

#include <CLI11.hpp>

#include "freeprod/classify.hpp"
#include "freeprod/dudley.hpp"
#include "freeprod/errors.hpp"
#include "freeprod/json_io.hpp"
#include "freeprod/oracle.hpp"
#include "freeprod/text.hpp"

namespace freeprod::cli {

namespace {

namespace fs = std::filesystem;

constexpr const char* kSpecDirEnv = "FREEPROD_SPEC_DIR";

struct Options {
  std::string spec;
  std::vector<std::string> words;
  std::int64_t exponent = 2;
  bool oracle = false;
  bool expect_member = false;
  std::string expect;
  std::size_t slack = 0;
  std::size_t max_len = 6;
  std::int64_t exp_bound = 3;
  bool count_only = false;
  std::string lemma;
  std::uint64_t seed = VerifyOptions{}.seed;
  unsigned jobs = 0;
  std::string schedule = "dudley";
  std::vector<std::string> gammas;
  std::size_t depth = 4;
  std::uint64_t budget = kDefaultLetterBudget;
  std::uint64_t prime = 2;
};

fs::path resolve_spec(const std::string& name) {
  fs::path p(name);
  if (fs::exists(p) || p.is_absolute()) return p;
  if (const char* dir = std::getenv(kSpecDirEnv); dir != nullptr && *dir != '\0') {
    const fs::path q = fs::path(dir) / p;
    if (fs::exists(q)) return q;
  }
  return p;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

bool has_property(const Json& record, const std::string& property) {
  if (property == "s-complement") return record["in_s_complement"].get<bool>();
  if (property == "torsion") return !record["torsion_order"].is_null() && record["length"].get<std::size_t>() > 0;
  if (property == "f-tilde") return record["in_f_tilde"].get<bool>();
  if (property == "sc-squared") return record["in_sc_squared"].get<bool>();
  throw CLI::ValidationError("--expect", "unknown property '" + property + "'");
}

int cmd_reduce(const GroupSpec& spec, const Options& o, std::ostream& out) {
  for (const auto& text : o.words) {
    const Word w = parse_word(spec, text);
    emit(out, {{"reduced", format_word(spec, w)}, {"length", w.size()}});
  }
  return kOk;
}

int cmd_classify(const GroupSpec& spec, const Options& o, std::ostream& out) {
  int status = kOk;
  for (const auto& text : o.words) {
    Json rec;
    rec["word"] = text;
    const Json record = classification_record(spec, parse_word(spec, text));
    for (const auto& [k, v] : record.items()) rec[k] = v;
    if (!o.expect.empty()) {
      const bool ok = has_property(rec, o.expect);
      rec["expect"] = {{"property", o.expect}, {"met", ok}};
      if (!ok) status = kNo;
    }
    emit(out, rec);
  }
  return status;
}

int cmd_power(const GroupSpec& spec, const Options& o, std::ostream& out) {
  for (const auto& text : o.words) {
    const Word u = parse_word(spec, text);
    const auto magnitude = o.exponent < 0 ? 0 - static_cast<std::uint64_t>(o.exponent)
                                          : static_cast<std::uint64_t>(o.exponent);
    const auto length = power_length(spec, u, magnitude);
    if (length > kDefaultLetterBudget) {
      throw ResourceError("power has " + std::to_string(length) + " letters, over the budget of " +
                          std::to_string(kDefaultLetterBudget));
    }
    const Word p = power(spec, u, o.exponent);
    emit(out, {{"word", format_word(spec, u)}, {"exponent", o.exponent}, {"power", format_word(spec, p)},
               {"length", p.size()}});
  }
  return kOk;
}

int cmd_sc2(const GroupSpec& spec, const Options& o, std::ostream& out) {
  int status = kOk;
  for (const auto& text : o.words) {
    const Word u = parse_word(spec, text);
    const auto w = match_sc_squared(spec, u);
    Json j;
    j["member"] = w.has_value();
    if (w) {
      const auto [s, t] = factorize_witness(spec, u, *w);
      j["witness"] = witness_to_json(spec, *w);
      j["factors"] = Json::array({format_word(spec, s), format_word(spec, t)});
    }
    if (o.oracle) {
      EnumBounds b;
      b.max_len = u.size();
      b.exp_bound = o.exp_bound;
      b.sc_slack = o.slack;
      const bool member = oracle_sc_squared(spec, u, b);
      j["oracle"] = member;
      j["agree"] = member == w.has_value();
      if (member != w.has_value()) status = kNo;
    }
    if (o.expect_member && !w) status = kNo;
    emit(out, j);
  }
  return status;
}

int cmd_enumerate(const GroupSpec& spec, const Options& o, std::ostream& out) {
  std::uint64_t count = 0;
  for_each_word(spec, o.max_len, o.exp_bound, [&](const Word& w) {
    ++count;
    if (!o.count_only) emit(out, {{"word", format_word(spec, w)}, {"length", w.size()}});
  });
  if (o.count_only) emit(out, {{"max_len", o.max_len}, {"count", count}});
  return kOk;
}

int cmd_verify(const GroupSpec& spec, const Options& o, std::ostream& out) {
  const auto& known = known_lemmas();
  const bool found = std::any_of(known.begin(), known.end(),
                                 [&](const LemmaInfo& l) { return lemma_matches(l, o.lemma); });
  if (!found) {
    emit(out, error_json("unknown_lemma", "unknown lemma id '" + o.lemma + "'"));
    return kUsage;
  }
  EnumBounds b;
  b.max_len = o.max_len;
  b.exp_bound = o.exp_bound;
  b.sc_slack = o.slack;
  VerifyOptions vo;
  vo.jobs = o.jobs;
  vo.seed = o.seed;
  const auto report = verify_lemma(spec, o.lemma, b, vo);
  emit(out, report_to_json(spec, report));
  return report.passed() ? kOk : kNo;
}

int cmd_simulate(const GroupSpec& spec, const Options& o, std::ostream& out) {
  if (o.gammas.size() != 1 && o.gammas.size() != o.depth) {
    throw CLI::ValidationError("--gamma", "give one gamma or exactly --depth of them");
  }
  std::vector<Word> gammas;
  for (std::size_t m = 0; m < o.depth; ++m) {
    gammas.push_back(parse_word(spec, o.gammas[o.gammas.size() == 1 ? 0 : m]));
  }
  std::vector<std::uint64_t> lengths;
  for (const auto& g : gammas) lengths.push_back(g.size());
  const Schedule schedule(parse_schedule_kind(o.schedule), lengths, o.prime);
  const auto report = verify_chain(spec, gammas, schedule, o.depth, o.budget);
  emit(out, report_to_json(report));
  return report.all_checks_pass() ? kOk : kNo;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Exact computation in free products of groups", "freeprod"};
  app.require_subcommand(1, 1);
  Options o;

  const auto add_spec = [&](CLI::App* sub) {
    sub->add_option("--spec", o.spec, "group spec JSON file (relative paths also searched in $" +
                                          std::string(kSpecDirEnv) + ")")
        ->required();
  };
  const auto add_words = [&](CLI::App* sub) {
    sub->add_option("--word,-w", o.words, "word expression (repeatable)")->required();
  };

  auto* reduce = app.add_subcommand("reduce", "print the reduced form of a word");
  add_spec(reduce);
  add_words(reduce);

  auto* classify_cmd = app.add_subcommand("classify", "classify words (JSON lines)");
  add_spec(classify_cmd);
  add_words(classify_cmd);
  classify_cmd->add_option("--expect", o.expect, "exit 1 unless every word has the property")
      ->check(CLI::IsMember({"s-complement", "torsion", "f-tilde", "sc-squared"}));

  auto* power_cmd = app.add_subcommand("power", "raise a word to an integer power");
  add_spec(power_cmd);
  add_words(power_cmd);
  power_cmd->add_option("--exp,-n", o.exponent, "exponent")->required();

  auto* sc2 = app.add_subcommand("sc2", "decide membership in S^c*S^c");
  add_spec(sc2);
  add_words(sc2);
  sc2->add_flag("--oracle", o.oracle, "cross-check with the brute-force oracle");
  sc2->add_option("--slack", o.slack, "extra conjugator length for the oracle");
  sc2->add_option("--exp-bound", o.exp_bound, "id cap for infinite cyclic factors (oracle)")
      ->check(CLI::PositiveNumber);
  sc2->add_flag("--expect", o.expect_member, "exit 1 unless every word is a member");

  auto* enumerate = app.add_subcommand("enumerate", "list reduced words in length-lex order");
  add_spec(enumerate);
  enumerate->add_option("--max-len", o.max_len, "maximum length");
  enumerate->add_option("--exp-bound", o.exp_bound, "id cap for infinite cyclic factors")
      ->check(CLI::PositiveNumber);
  enumerate->add_flag("--count", o.count_only, "print only the number of words");

  auto* verify = app.add_subcommand("verify", "run an exhaustive verification suite");
  add_spec(verify);
  verify->add_option("--lemma", o.lemma, "suite id or numeric alias")->required();
  verify->add_option("--max-len", o.max_len, "ball radius");
  verify->add_option("--exp-bound", o.exp_bound, "id cap for infinite cyclic factors")
      ->check(CLI::PositiveNumber);
  verify->add_option("--slack", o.slack, "extra conjugator length for the oracle");
  verify->add_option("--seed", o.seed, "seed for randomized samples");
  verify->add_option("--jobs,-j", o.jobs, "worker threads (0 = all cores)");

  auto* simulate = app.add_subcommand("simulate", "build and audit a nested-power truncation");
  add_spec(simulate);
  simulate->add_option("--schedule", o.schedule, "dudley, dyadic, prime_power or linear")
      ->check(CLI::IsMember({"dudley", "dyadic", "prime_power", "prime-power", "linear"}));
  simulate->add_option("--gamma,-g", o.gammas, "gamma_m (repeatable; a single value is used at every level)")
      ->required();
  simulate->add_option("--depth,-n", o.depth, "truncation depth")->check(CLI::PositiveNumber);
  simulate->add_option("--budget", o.budget, "letter budget across all levels");
  simulate->add_option("--prime", o.prime, "p for the prime_power schedule")->check(CLI::Range(2, 1 << 30));

  std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rev.begin(), rev.end());

  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    emit(out, {{"help", subs.empty() ? app.help() : subs.front()->help()}});
    return kOk;
  } catch (const CLI::ParseError& e) {
    emit(out, error_json("usage", e.what()));
    return kUsage;
  }

  try {
    const GroupSpec spec = load_spec(resolve_spec(o.spec));
    if (reduce->parsed()) return cmd_reduce(spec, o, out);
    if (classify_cmd->parsed()) return cmd_classify(spec, o, out);
    if (power_cmd->parsed()) return cmd_power(spec, o, out);
    if (sc2->parsed()) return cmd_sc2(spec, o, out);
    if (enumerate->parsed()) return cmd_enumerate(spec, o, out);
    if (verify->parsed()) return cmd_verify(spec, o, out);
    return cmd_simulate(spec, o, out);
  } catch (const SpecError& e) {
    Json j = error_json("spec", e.what());
    j["error"]["violations"] = e.violations();
    emit(out, j);
    return kUsage;
  } catch (const ParseError& e) {
    Json j = error_json("parse", e.what());
    j["error"]["offset"] = e.offset();
    emit(out, j);
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    emit(out, error_json("usage", e.what()));
    return kUsage;
  } catch (const ResourceError& e) {
    emit(out, error_json("resource", e.what()));
    return kResource;
  } catch (const IntegrityError& e) {
    emit(out, error_json("integrity", e.what()));
    return kInternal;
  } catch (const DomainError& e) {
    emit(out, error_json("domain", e.what()));
    return kUsage;
  } catch (const std::invalid_argument& e) {
    emit(out, error_json("invalid_argument", e.what()));
    return kUsage;
  } catch (const std::out_of_range& e) {
    emit(out, error_json("invalid_argument", e.what()));
    return kUsage;
  }
}

}  // namespace freeprod::cli
