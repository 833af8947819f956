#include "freeprod/json_io.hpp"

#include <fstream>

#include "freeprod/errors.hpp"
#include "freeprod/text.hpp"

namespace freeprod {

namespace {

std::int64_t get_int(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw SpecError({where + ": missing integer field '" + key + "'"});
  }
  return j.at(key).get<std::int64_t>();
}

FactorSpec factor_from_json(const Json& f, std::size_t i) {
  const std::string where = "factor " + std::to_string(i);
  if (!f.is_object()) throw SpecError({where + ": expected an object"});
  const std::string kind = f.value("kind", "");
  if (kind == "cyclic") {
    const auto order = get_int(f, "order", where);
    if (order < 0) throw SpecError({where + ": negative order"});
    return FactorSpec::cyclic(static_cast<std::uint64_t>(order));
  }
  if (kind == "table") {
    const auto size = get_int(f, "size", where);
    if (size <= 0) throw SpecError({where + ": size must be positive"});
    if (!f.contains("mul") || !f.at("mul").is_array()) throw SpecError({where + ": missing array field 'mul'"});
    std::vector<ElemId> mul;
    for (const auto& v : f.at("mul")) {
      if (!v.is_number_integer()) throw SpecError({where + ": 'mul' entries must be integers"});
      mul.push_back(v.get<ElemId>());
    }
    return FactorSpec::table(static_cast<std::size_t>(size), std::move(mul), get_int(f, "identity", where));
  }
  throw SpecError({where + ": unknown kind '" + kind + "'"});
}

std::optional<std::string> type_string(const Word& u) {
  const auto t = word_type(u);
  if (!t) return std::nullopt;
  return std::to_string(t->first) + "-" + std::to_string(t->last);
}

Json word_list(const GroupSpec& spec, const std::vector<Counterexample>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back({{"word", format_word(spec, c.word)}, {"detail", c.detail}});
  return out;
}

}  // namespace

GroupSpec spec_from_json(const Json& j) {
  if (!j.is_object()) throw SpecError({"spec must be a JSON object"});
  if (!j.contains("factors") || !j.at("factors").is_array()) throw SpecError({"missing array field 'factors'"});
  RawGroupSpec raw;
  const auto& fs = j.at("factors");
  for (std::size_t i = 0; i < fs.size(); ++i) raw.factors.push_back(factor_from_json(fs[i], i));
  if (j.contains("generators")) {
    const auto& gs = j.at("generators");
    if (!gs.is_object()) throw SpecError({"'generators' must be an object"});
    for (const auto& [name, v] : gs.items()) {
      if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
        throw SpecError({"generator '" + name + "': expected [factor, element]"});
      }
      raw.generators.push_back({name, {v[0].get<std::int64_t>(), v[1].get<std::int64_t>()}});
    }
  }
  return validate_spec(raw);
}

GroupSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecError({"cannot open spec file '" + path.string() + "'"});
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecError({"spec file '" + path.string() + "' is not valid JSON: " + e.what()});
  }
  return spec_from_json(j);
}

Json letter_to_json(const Letter& a) { return Json::array({a.factor, a.elem}); }

Json witness_to_json(const GroupSpec& spec, const ScSquaredWitness& w) {
  Json j;
  j["form"] = to_string(w.form);
  j["eta"] = format_word(spec, w.eta);
  if (w.form == ScForm::simple || w.form == ScForm::full) j["mu"] = format_word(spec, w.mu);
  if (w.form != ScForm::trivial) j["nu"] = format_word(spec, w.nu);
  const auto put = [&](const char* key, const std::optional<Letter>& l) {
    if (l) j[key] = format_letter(spec, *l);
  };
  put("z0", w.z0);
  put("z1", w.z1);
  put("delta1", w.delta1);
  put("delta2", w.delta2);
  put("delta3", w.delta3);
  return j;
}

Json classification_record(const GroupSpec& spec, const Word& u) {
  const auto c = classify(spec, u);
  const auto d = cyclic_decompose(spec, u);
  const auto type = type_string(u);
  const auto witness = match_sc_squared(spec, u);
  Json j;
  j["reduced"] = format_word(spec, u);
  j["length"] = u.size();
  j["type"] = type ? Json(*type) : Json(nullptr);
  j["symmetric"] = u.empty() ? Json(nullptr) : Json(word_type(u)->symmetric());
  j["conjugator"] = format_word(spec, d.conjugator);
  j["core"] = format_word(spec, d.core);
  j["in_s_complement"] = c.in_s_complement;
  j["torsion_order"] = c.torsion_order ? Json(*c.torsion_order) : Json(nullptr);
  j["in_f_tilde"] = c.in_f_tilde;
  j["in_sc_squared"] = witness.has_value();
  j["witness_form"] = witness ? Json(std::string(to_string(witness->form))) : Json(nullptr);
  return j;
}

Json report_to_json(const GroupSpec& spec, const LemmaReport& r) {
  Json j;
  j["lemma"] = r.id;
  j["title"] = r.title;
  j["passed"] = r.passed();
  j["instances"] = r.instances;
  j["counterexamples"] = word_list(spec, r.counterexamples);
  j["notes"] = r.notes;
  j["wall_time_s"] = r.wall_time.count();
  return j;
}

Json report_to_json(const SimReport& r) {
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    Json lj;
    lj["m"] = l.m;
    lj["length"] = l.length;
    lj["in_s_complement"] = l.in_s_complement;
    lj["torsion"] = l.torsion;
    lj["recursion_identity"] = l.recursion_identity;
    const auto opt = [&](const char* key, const auto& v) { lj[key] = v ? Json(*v) : Json(nullptr); };
    opt("gamma_outside_sc2", l.gamma_outside_sc2);
    opt("pair_check", l.pair_check);
    opt("r_prev", l.r_prev);
    opt("power_length", l.power_length);
    opt("power_bound", l.power_bound);
    opt("monotone", l.monotone);
    levels.push_back(std::move(lj));
  }
  Json j;
  j["schedule"] = to_string(r.schedule);
  j["depth"] = r.depth;
  j["levels"] = std::move(levels);
  j["final_length"] = r.final_length;
  j["target"] = r.target;
  j["bound"] = to_string(r.bound);
  j["all_checks_pass"] = r.all_checks_pass();
  j["notes"] = r.notes;
  return j;
}

Json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace freeprod
