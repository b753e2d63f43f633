#include "frk/driver.hpp"

#include <algorithm>
#include <sstream>

#include "frk/cat.hpp"
#include "frk/universal.hpp"

namespace frk {

namespace {

const char* kSubcommands[] = {
    "doubling",   "sumset",    "check-hom",  "iso-check", "enumerate-homs",
    "product",    "coproduct", "pullback",   "pushout",   "equalizer",
    "coequalizer", "universal", "structure-report"};

int effective_order(const ProblemDocument& doc, const RunOptions& opts) {
  return opts.order.value_or(doc.default_order);
}

const AdditiveSet& pick_set(const ProblemDocument& doc, const RunOptions& opts,
                            std::size_t idx) {
  if (idx >= opts.sets.size())
    throw std::invalid_argument("missing required --set argument");
  auto it = doc.sets.find(opts.sets[idx]);
  if (it == doc.sets.end())
    throw std::invalid_argument("unknown set name: " + opts.sets[idx]);
  return it->second;
}

const FreimanMap& pick_map(const ProblemDocument& doc, const RunOptions& opts,
                           std::size_t idx) {
  if (idx >= opts.maps.size())
    throw std::invalid_argument("missing required --map argument");
  auto it = doc.maps.find(opts.maps[idx]);
  if (it == doc.maps.end())
    throw std::invalid_argument("unknown map name: " + opts.maps[idx]);
  return it->second;
}

json violation_to_json(const HomViolation& v, const FreimanMap& f) {
  auto multiset_elems = [&](const std::vector<std::size_t>& ms) {
    json out = json::array();
    for (std::size_t i : ms) out.push_back(element_to_json(f.source()[i]));
    return out;
  };
  return {{"left", multiset_elems(v.left)},
          {"right", multiset_elems(v.right)},
          {"common_sum", element_to_json(v.common_sum)},
          {"image_sums", json::array({element_to_json(v.image_sums.first),
                                      element_to_json(v.image_sums.second)})}};
}

json doubling_to_json(const DoublingReport& r) {
  return {{"sigma", rat_to_json(r.sigma)},
          {"set_size", r.set_size},
          {"sumset_size", r.sumset_size}};
}

json cone_to_json(const ConeResult& cone, bool verified) {
  json legs = json::array();
  for (const FreimanMap& leg : cone.legs) legs.push_back(map_to_json(leg));
  return {{"kind", cone.kind == ConeKind::limit ? "limit" : "colimit"},
          {"order", cone.order},
          {"object", set_to_json(cone.apex)},
          {"legs", legs},
          {"verified", verified}};
}

// Self-competitor sanity verdict: the cone's own legs must admit exactly the
// expected mediator. When the apex is too large for the exhaustive self-cone
// search, fall back to a singleton competitor, which keeps the candidate
// space at |apex| or 1.
bool self_verify(const ConeResult& cone, const RunOptions& opts,
                 bool preserve_zero) {
  try {
    return verify_universal_property(cone, cone.legs, cone.order,
                                     preserve_zero, opts.budget);
  } catch (const BudgetExceeded&) {
  }
  std::vector<FreimanMap> competitor;
  if (cone.kind == ConeKind::limit) {
    std::size_t base =
        preserve_zero ? cone.apex.zero_index()
                      : static_cast<std::size_t>(0);
    AdditiveSet point(cone.apex.ambient(), {cone.apex[base]});
    FreimanMap incl(point, cone.apex, {base}, cone.order);
    for (const FreimanMap& leg : cone.legs)
      competitor.push_back(compose(leg, incl));
  } else {
    FgaGroup z = FgaGroup::free(1);
    for (const FreimanMap& leg : cone.legs)
      competitor.push_back(unique_to_terminal(leg.source(), z, cone.order));
  }
  return verify_universal_property(cone, competitor, cone.order,
                                   preserve_zero, opts.budget);
}

RunResult run_construction(const std::string& name,
                           const ProblemDocument& doc,
                           const RunOptions& opts) {
  const int k = effective_order(doc, opts);
  json report;
  if (name == "product") {
    const AdditiveSet& a = pick_set(doc, opts, 0);
    const AdditiveSet& b = pick_set(doc, opts, 1);
    ConeResult cone = product(a, b, k);
    bool zero = a.is_normalized() && b.is_normalized();
    report = cone_to_json(cone, self_verify(cone, opts, zero));
  } else if (name == "coproduct") {
    ConeResult cone =
        coproduct0(pick_set(doc, opts, 0), pick_set(doc, opts, 1), k);
    report = cone_to_json(cone, self_verify(cone, opts, true));
  } else if (name == "pullback") {
    ConeResult cone = pullback0(pick_map(doc, opts, 0), pick_map(doc, opts, 1));
    report = cone_to_json(cone, self_verify(cone, opts, true));
  } else if (name == "pushout") {
    PushoutResult res =
        pushout0(pick_map(doc, opts, 0), pick_map(doc, opts, 1));
    report = cone_to_json(res.cone, self_verify(res.cone, opts, true));
    report["ambient_quotient"] =
        group_to_json(res.object.ambient_quotient.quotient);
    report["classes"] = res.object.classes;
    report["classes_collapsed"] = res.object.classes_collapsed;
  } else if (name == "equalizer") {
    ConeResult cone =
        equalizer0(pick_map(doc, opts, 0), pick_map(doc, opts, 1));
    report = cone_to_json(cone, self_verify(cone, opts, true));
  } else {  // coequalizer
    CoequalizerResult res =
        coequalizer0(pick_map(doc, opts, 0), pick_map(doc, opts, 1));
    report = cone_to_json(res.cone, self_verify(res.cone, opts, true));
    report["ambient_quotient"] =
        group_to_json(res.object.ambient_quotient.quotient);
    report["classes"] = res.object.classes;
    report["classes_collapsed"] = res.object.classes_collapsed;
  }
  int exit = report["verified"].get<bool>() ? kExitOk : kExitPropertyViolated;
  return {report, exit};
}

json inequality_entry(const Rat& lhs, const Rat& rhs, bool holds) {
  return {{"lhs", rat_to_json(lhs)}, {"rhs", rat_to_json(rhs)},
          {"holds", holds}};
}

RunResult run_structure_report(const ProblemDocument& doc,
                               const RunOptions& opts) {
  const AdditiveSet& a = pick_set(doc, opts, 0);
  const AdditiveSet& b = pick_set(doc, opts, 1);
  json report;
  bool all_hold = true;

  DoublingReport da = doubling(a), db = doubling(b);
  report["sigma_a"] = doubling_to_json(da);
  report["sigma_b"] = doubling_to_json(db);

  AdditiveSet zero = zero_object(a.ambient());
  Rat sigma_zero = doubling(zero).sigma;
  bool zero_ok = sigma_zero == 1;
  report["zero_set"] = inequality_entry(sigma_zero, Rat(1), zero_ok);
  all_hold = all_hold && zero_ok;

  DoublingReport dprod = doubling(product_set(a, b));
  bool prod_ok = dprod.sigma == da.sigma * db.sigma;
  report["product_multiplicative"] =
      inequality_entry(dprod.sigma, da.sigma * db.sigma, prod_ok);
  all_hold = all_hold && prod_ok;

  if (a.is_normalized() && b.is_normalized()) {
    // Fiber product over the terminal object: bounds 1 <= sigma <= sigma[AxB].
    int k = effective_order(doc, opts);
    FreimanMap f = unique_to_terminal(a, a.ambient(), k);
    FreimanMap g = unique_to_terminal(b, a.ambient(), k);
    Rat sp = doubling(pullback0(f, g).apex).sigma;
    bool pb_ok = sp >= 1 && sp <= dprod.sigma;
    report["pullback_bounds"] = inequality_entry(sp, dprod.sigma, pb_ok);
    all_hold = all_hold && pb_ok;
  }

  if (a.ambient() == b.ambient()) {
    bool disjoint = true;
    for (const GroupElement& x : a.elements())
      if (b.contains(x)) disjoint = false;
    report["disjoint"] = disjoint;
    if (disjoint) {
      AdditiveSet u = union_disjoint(a, b);
      Rat lhs = doubling(u).sigma;
      Rat cross(Int(sumset(a, b).size()), Int(a.size() + b.size()));
      cross.canonicalize();
      Rat rhs = da.sigma + db.sigma + cross;
      bool union_ok = lhs <= rhs;
      report["union_bound"] = inequality_entry(lhs, rhs, union_ok);
      all_hold = all_hold && union_ok;
    }
  }

  report["all_hold"] = all_hold;
  return {report, all_hold ? kExitOk : kExitPropertyViolated};
}

}  // namespace

const std::vector<std::string>& subcommand_names() {
  static const std::vector<std::string> names(std::begin(kSubcommands),
                                              std::end(kSubcommands));
  return names;
}

ProblemDocument parse_document(const json& doc) {
  if (!doc.is_object())
    throw std::invalid_argument("document: expected a JSON object");
  ProblemDocument out;
  if (doc.contains("order")) out.default_order = doc.at("order").get<int>();
  if (out.default_order < 1)
    throw std::invalid_argument("document: order must be >= 1");
  if (doc.contains("groups"))
    for (const auto& [name, gj] : doc.at("groups").items())
      out.groups.emplace(name, group_from_json(gj));
  auto resolve_group = [&](const json& ambient) -> FgaGroup {
    if (ambient.is_string()) {
      auto it = out.groups.find(ambient.get<std::string>());
      if (it == out.groups.end())
        throw std::invalid_argument("document: unknown group name: " +
                                    ambient.get<std::string>());
      return it->second;
    }
    return group_from_json(ambient);
  };
  if (doc.contains("sets"))
    for (const auto& [name, sj] : doc.at("sets").items()) {
      FgaGroup g = resolve_group(sj.at("ambient"));
      std::vector<GroupElement> elems;
      for (const json& e : sj.at("elements"))
        elems.push_back(element_from_json(g, e));
      out.sets.emplace(name, AdditiveSet(std::move(g), std::move(elems)));
    }
  if (doc.contains("maps"))
    for (const auto& [name, mj] : doc.at("maps").items()) {
      auto src = out.sets.find(mj.at("source").get<std::string>());
      auto tgt = out.sets.find(mj.at("target").get<std::string>());
      if (src == out.sets.end() || tgt == out.sets.end())
        throw std::invalid_argument("document: map references unknown set");
      out.maps.emplace(
          name, map_from_json(src->second, tgt->second, mj, out.default_order));
    }
  return out;
}

std::vector<std::string> validate(const json& doc,
                                  const std::string& subcommand,
                                  const RunOptions& opts) {
  std::vector<std::string> diags;
  ProblemDocument parsed;
  try {
    parsed = parse_document(doc);
  } catch (const std::exception& e) {
    diags.push_back(e.what());
    return diags;
  }
  const auto& names = subcommand_names();
  if (std::find(names.begin(), names.end(), subcommand) == names.end())
    diags.push_back("unknown subcommand: " + subcommand);
  for (const std::string& s : opts.sets)
    if (!parsed.sets.count(s)) diags.push_back("unknown set name: " + s);
  for (const std::string& m : opts.maps)
    if (!parsed.maps.count(m)) diags.push_back("unknown map name: " + m);

  const int k = opts.order.value_or(parsed.default_order);
  if (subcommand == "universal" && k < 2)
    diags.push_back("universal: order k >= 2 is required (got " +
                    std::to_string(k) + ")");
  static const std::vector<std::string> zero_cmds = {
      "coproduct", "pullback", "pushout", "equalizer", "coequalizer"};
  if (std::find(zero_cmds.begin(), zero_cmds.end(), subcommand) !=
      zero_cmds.end()) {
    for (const std::string& s : opts.sets) {
      auto it = parsed.sets.find(s);
      if (it != parsed.sets.end() && !it->second.is_normalized())
        diags.push_back(subcommand + ": set '" + s +
                        "' is not normalized (0 missing)");
    }
    for (const std::string& m : opts.maps) {
      auto it = parsed.maps.find(m);
      if (it != parsed.maps.end() && !it->second.preserves_zero())
        diags.push_back(subcommand + ": map '" + m + "' does not preserve 0");
    }
  }
  return diags;
}

RunResult run(const std::string& subcommand, const ProblemDocument& doc,
              const RunOptions& opts) {
  try {
    const int k = effective_order(doc, opts);
    if (subcommand == "doubling") {
      const AdditiveSet& a = pick_set(doc, opts, 0);
      json report = doubling_to_json(doubling(a));
      report["set"] = set_to_json(a);
      return {report, kExitOk};
    }
    if (subcommand == "sumset") {
      json report = {{"sumset", set_to_json(sumset(pick_set(doc, opts, 0),
                                                   pick_set(doc, opts, 1)))}};
      return {report, kExitOk};
    }
    if (subcommand == "check-hom") {
      const FreimanMap& f = pick_map(doc, opts, 0);
      auto v = hom_violation(f);
      json report = {{"order", f.order()}, {"is_hom", !v.has_value()}};
      if (v) report["violation"] = violation_to_json(*v, f);
      return {report, v ? kExitPropertyViolated : kExitOk};
    }
    if (subcommand == "iso-check") {
      const FreimanMap& f = pick_map(doc, opts, 0);
      bool iso = is_freiman_iso(f);
      json report = {{"order", f.order()},
                     {"is_hom", is_freiman_hom(f)},
                     {"is_iso", iso},
                     {"is_mono", is_mono(f)},
                     {"is_epi", is_epi(f)}};
      return {report, iso ? kExitOk : kExitPropertyViolated};
    }
    if (subcommand == "enumerate-homs") {
      const AdditiveSet& a = pick_set(doc, opts, 0);
      const AdditiveSet& b = pick_set(doc, opts, 1);
      std::vector<FreimanMap> homs =
          enumerate_homs(a, b, k, opts.preserve_zero, opts.budget);
      json list = json::array();
      for (const FreimanMap& h : homs) list.push_back(map_to_json(h));
      return {{{"count", homs.size()}, {"homs", list}, {"order", k}}, kExitOk};
    }
    if (subcommand == "universal") {
      if (k < 2)
        throw std::invalid_argument("universal: order k >= 2 is required");
      UniversalResult u = build_universal(pick_set(doc, opts, 0), k);
      json report = {
          {"order", k},
          {"universal_group", group_to_json(u.cover_quotient.quotient)},
          {"embedded", set_to_json(u.embedded)},
          {"unit", map_to_json(u.unit)},
          {"unit_is_iso", is_freiman_iso(u.unit)},
          {"generated_by_image",
           subgroup_generated_equals(u.cover_quotient.quotient,
                                     u.embedded.elements())}};
      bool ok = report["unit_is_iso"].get<bool>() &&
                report["generated_by_image"].get<bool>();
      return {report, ok ? kExitOk : kExitPropertyViolated};
    }
    if (subcommand == "structure-report")
      return run_structure_report(doc, opts);
    static const std::vector<std::string> cons = {
        "product", "coproduct", "pullback", "pushout", "equalizer",
        "coequalizer"};
    if (std::find(cons.begin(), cons.end(), subcommand) != cons.end())
      return run_construction(subcommand, doc, opts);
    throw std::invalid_argument("unknown subcommand: " + subcommand);
  } catch (const BudgetExceeded& e) {
    return {{{"error", e.what()}}, kExitBudgetExceeded};
  } catch (const std::exception& e) {
    return {{{"error", e.what()}}, kExitInputError};
  }
}

namespace {

void render_text(const json& j, const std::string& prefix,
                 std::ostringstream& os) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      std::string path = prefix.empty() ? key : prefix + "." + key;
      if (value.is_object() || value.is_array())
        render_text(value, path, os);
      else
        os << path << ": " << value.dump() << "\n";
    }
  } else if (j.is_array()) {
    os << prefix << ": " << j.dump() << "\n";
  } else {
    os << prefix << ": " << j.dump() << "\n";
  }
}

}  // namespace

std::string emit_report(const json& report, bool as_json) {
  if (as_json) return report.dump(2) + "\n";
  std::ostringstream os;
  render_text(report, "", os);
  return os.str();
}

}  // namespace frk
