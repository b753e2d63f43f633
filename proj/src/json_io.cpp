#include "frk/json_io.hpp"

#include <stdexcept>

namespace frk {

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer (number or decimal string)");
}

json vec_to_json(const IntVec& v) {
  json out = json::array();
  for (const Int& x : v) out.push_back(int_to_json(x));
  return out;
}

json group_to_json(const FgaGroup& g) {
  json torsion = json::array();
  for (const Int& d : g.torsion) torsion.push_back(int_to_json(d));
  return {{"rank", g.free_rank}, {"torsion", torsion}};
}

FgaGroup group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("torsion"))
    throw std::invalid_argument("group: expected {\"rank\", \"torsion\"}");
  std::vector<Int> torsion;
  for (const json& d : j.at("torsion")) torsion.push_back(int_from_json(d));
  return FgaGroup(j.at("rank").get<std::size_t>(), std::move(torsion));
}

json element_to_json(const GroupElement& x) { return vec_to_json(x.coords()); }

GroupElement element_from_json(const FgaGroup& g, const json& j) {
  if (!j.is_array())
    throw std::invalid_argument("element: expected a coordinate array");
  IntVec coords;
  for (const json& c : j) coords.push_back(int_from_json(c));
  return GroupElement(g, std::move(coords));
}

json set_to_json(const AdditiveSet& a) {
  json elems = json::array();
  for (const GroupElement& x : a.elements()) elems.push_back(element_to_json(x));
  return {{"ambient", group_to_json(a.ambient())}, {"elements", elems}};
}

AdditiveSet set_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ambient") || !j.contains("elements"))
    throw std::invalid_argument("set: expected {\"ambient\", \"elements\"}");
  FgaGroup g = group_from_json(j.at("ambient"));
  std::vector<GroupElement> elems;
  for (const json& e : j.at("elements"))
    elems.push_back(element_from_json(g, e));
  return AdditiveSet(std::move(g), std::move(elems));
}

json rat_to_json(const Rat& r) {
  return {{"num", int_to_json(r.get_num())}, {"den", int_to_json(r.get_den())}};
}

json map_to_json(const FreimanMap& f) {
  json pairs = json::array();
  for (std::size_t i = 0; i < f.source().size(); ++i)
    pairs.push_back(json::array({element_to_json(f.source()[i]),
                                 element_to_json(f.target()[f.table()[i]])}));
  return {{"order", f.order()}, {"pairs", pairs}};
}

FreimanMap map_from_json(const AdditiveSet& source, const AdditiveSet& target,
                         const json& j, int default_order) {
  if (!j.is_object() || !j.contains("pairs"))
    throw std::invalid_argument("map: expected {\"pairs\", [\"order\"]}");
  int order = j.contains("order") ? j.at("order").get<int>() : default_order;
  std::vector<std::pair<GroupElement, GroupElement>> pairs;
  for (const json& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2)
      throw std::invalid_argument("map: each pair must be [source, target]");
    pairs.emplace_back(element_from_json(source.ambient(), p[0]),
                       element_from_json(target.ambient(), p[1]));
  }
  return FreimanMap::from_pairs(source, target, pairs, order);
}

}  // namespace frk
