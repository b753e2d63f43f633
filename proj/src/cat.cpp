#include "frk/cat.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace frk {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct Paired {
  DirectSum ds;
  AdditiveSet apex;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // apex idx -> (i,j)
  std::vector<std::size_t> apex_of;                        // i*nb+j -> apex idx
};

Paired paired_product(const AdditiveSet& a, const AdditiveSet& b) {
  DirectSum ds = direct_sum(a.ambient(), b.ambient());
  std::vector<GroupElement> elems;
  elems.reserve(a.size() * b.size());
  for (const GroupElement& x : a.elements())
    for (const GroupElement& y : b.elements())
      elems.push_back(ds.inj1.apply(x) + ds.inj2.apply(y));
  AdditiveSet apex(ds.group, elems);
  if (apex.size() != a.size() * b.size())
    throw std::logic_error("paired_product: pair images collided");
  std::vector<std::pair<std::size_t, std::size_t>> pairs(apex.size());
  std::vector<std::size_t> apex_of(apex.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t at = *apex.index_of(elems[i * b.size() + j]);
      pairs[at] = {i, j};
      apex_of[i * b.size() + j] = at;
    }
  return {std::move(ds), std::move(apex), std::move(pairs),
          std::move(apex_of)};
}

void require_parallel_pair(const FreimanMap& f, const FreimanMap& g,
                           const char* what) {
  if (f.order() != g.order())
    throw std::invalid_argument(std::string(what) + ": order mismatch");
}

void require_normalized(const AdditiveSet& s, const char* what) {
  if (!s.is_normalized())
    throw std::invalid_argument(std::string(what) +
                                ": set is not normalized (0 missing)");
}

std::size_t must_index(const AdditiveSet& s, const GroupElement& x,
                       const char* what) {
  auto i = s.index_of(x);
  if (!i) throw MediatorUndefined(std::string(what) +
                                  ": mediator image escapes the set");
  return *i;
}

}  // namespace

ConeResult product(const AdditiveSet& a, const AdditiveSet& b, int k) {
  Paired pp = paired_product(a, b);
  std::vector<std::size_t> t1(pp.apex.size()), t2(pp.apex.size());
  for (std::size_t at = 0; at < pp.apex.size(); ++at) {
    t1[at] = pp.pairs[at].first;
    t2[at] = pp.pairs[at].second;
  }
  FreimanMap p1(pp.apex, a, std::move(t1), k);
  FreimanMap p2(pp.apex, b, std::move(t2), k);
  AdditiveSet apex = pp.apex;
  auto apex_of = pp.apex_of;
  std::size_t nb = b.size();
  auto mediator = [apex, apex_of, nb,
                   k](const std::vector<FreimanMap>& comp) -> FreimanMap {
    if (comp.size() != 2 || comp[0].source() != comp[1].source())
      throw std::invalid_argument("product mediator: need a cone f, g from one source");
    std::vector<std::size_t> table(comp[0].source().size());
    for (std::size_t d = 0; d < table.size(); ++d)
      table[d] = apex_of[comp[0].table()[d] * nb + comp[1].table()[d]];
    return FreimanMap(comp[0].source(), apex, std::move(table), k);
  };
  return {ConeKind::limit, k, pp.apex, {std::move(p1), std::move(p2)},
          std::move(mediator)};
}

ConeResult coproduct0(const AdditiveSet& a, const AdditiveSet& b, int k) {
  require_normalized(a, "coproduct0");
  require_normalized(b, "coproduct0");
  Paired pp = paired_product(a, b);
  const std::size_t za = a.zero_index(), zb = b.zero_index();
  std::vector<std::size_t> t1(a.size()), t2(b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    t1[i] = pp.apex_of[i * b.size() + zb];
  for (std::size_t j = 0; j < b.size(); ++j)
    t2[j] = pp.apex_of[za * b.size() + j];
  FreimanMap in1(a, pp.apex, std::move(t1), k);
  FreimanMap in2(b, pp.apex, std::move(t2), k);
  AdditiveSet apex = pp.apex;
  auto pairs = pp.pairs;
  auto mediator = [apex, pairs,
                   k](const std::vector<FreimanMap>& comp) -> FreimanMap {
    if (comp.size() != 2 || comp[0].target() != comp[1].target())
      throw std::invalid_argument(
          "coproduct0 mediator: need a cocone f, g into one target");
    const AdditiveSet& d = comp[0].target();
    std::vector<std::size_t> table(apex.size());
    for (std::size_t at = 0; at < apex.size(); ++at) {
      const auto [i, j] = pairs[at];
      GroupElement v = d[comp[0].table()[i]] + d[comp[1].table()[j]];
      table[at] = must_index(d, v, "coproduct0");
    }
    return FreimanMap(apex, d, std::move(table), k);
  };
  return {ConeKind::colimit, k, pp.apex, {std::move(in1), std::move(in2)},
          std::move(mediator)};
}

ConeResult pullback0(const FreimanMap& f, const FreimanMap& g) {
  require_parallel_pair(f, g, "pullback0");
  if (f.target() != g.target())
    throw std::invalid_argument("pullback0: targets differ");
  if (!f.preserves_zero() || !g.preserves_zero())
    throw std::invalid_argument("pullback0: maps must preserve 0");
  const int k = f.order();
  const AdditiveSet& a = f.source();
  const AdditiveSet& b = g.source();
  Paired pp = paired_product(a, b);
  std::vector<GroupElement> elems;
  std::vector<std::pair<std::size_t, std::size_t>> fiber_pairs;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (f.target()[f.table()[i]] == f.target()[g.table()[j]]) {
        elems.push_back(pp.apex[pp.apex_of[i * b.size() + j]]);
        fiber_pairs.push_back({i, j});
      }
  AdditiveSet apex(pp.ds.group, elems);
  std::vector<std::pair<std::size_t, std::size_t>> pairs(apex.size());
  for (std::size_t n = 0; n < elems.size(); ++n)
    pairs[*apex.index_of(elems[n])] = fiber_pairs[n];
  std::vector<std::size_t> t1(apex.size()), t2(apex.size());
  for (std::size_t at = 0; at < apex.size(); ++at) {
    t1[at] = pairs[at].first;
    t2[at] = pairs[at].second;
  }
  FreimanMap p1(apex, a, std::move(t1), k);
  FreimanMap p2(apex, b, std::move(t2), k);
  DirectSum ds = pp.ds;
  auto mediator = [apex, a, b, ds,
                   k](const std::vector<FreimanMap>& comp) -> FreimanMap {
    if (comp.size() != 2 || comp[0].source() != comp[1].source())
      throw std::invalid_argument(
          "pullback0 mediator: need a cone d1, d2 from one source");
    std::vector<std::size_t> table(comp[0].source().size());
    for (std::size_t x = 0; x < table.size(); ++x) {
      GroupElement v = ds.inj1.apply(a[comp[0].table()[x]]) +
                       ds.inj2.apply(b[comp[1].table()[x]]);
      table[x] = must_index(apex, v, "pullback0");
    }
    return FreimanMap(comp[0].source(), apex, std::move(table), k);
  };
  return {ConeKind::limit, k, apex, {std::move(p1), std::move(p2)},
          std::move(mediator)};
}

PushoutResult pushout0(const FreimanMap& f, const FreimanMap& g) {
  require_parallel_pair(f, g, "pushout0");
  if (f.source() != g.source())
    throw std::invalid_argument("pushout0: sources differ");
  if (!f.preserves_zero() || !g.preserves_zero())
    throw std::invalid_argument("pushout0: maps must preserve 0");
  const int k = f.order();
  const AdditiveSet& c = f.source();
  const AdditiveSet& a = f.target();
  const AdditiveSet& b = g.target();
  DirectSum ds = direct_sum(a.ambient(), b.ambient());

  std::vector<GroupElement> gens;
  for (std::size_t ci = 0; ci < c.size(); ++ci)
    gens.push_back(ds.inj1.apply(a[f.table()[ci]]) -
                   ds.inj2.apply(b[g.table()[ci]]));
  QuotientResult qr = quotient(ds.group, gens);

  const std::size_t nb = b.size();
  auto node = [nb](std::size_t i, std::size_t j) { return i * nb + j; };
  UnionFind uf(a.size() * nb);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t ci = 0; ci < c.size(); ++ci) {
        // Single step (a,b) - (a',b') = (f(c), -g(c)); +- closure comes from
        // running the step from both endpoints.
        auto ia = a.index_of(a[i] - a[f.table()[ci]]);
        auto ib = b.index_of(b[j] + b[g.table()[ci]]);
        if (ia && ib) uf.unite(node(i, j), node(*ia, *ib));
      }

  std::vector<GroupElement> node_image;
  node_image.reserve(a.size() * nb);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < nb; ++j)
      node_image.push_back(
          qr.projection.apply(ds.inj1.apply(a[i]) + ds.inj2.apply(b[j])));

  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t n = 0; n < a.size() * nb; ++n)
    by_root[uf.find(n)].push_back(n);
  QuotientObject obj{{}, qr, {}, false};
  std::vector<GroupElement> class_elems;
  for (auto& [root, members] : by_root) {
    for (std::size_t m : members)
      if (node_image[m] != node_image[root])
        throw std::logic_error(
            "pushout0: equivalence class with inconsistent quotient images");
    obj.classes.push_back(members);
    obj.class_images.push_back(node_image[root]);
    class_elems.push_back(node_image[root]);
  }
  AdditiveSet apex(qr.quotient, class_elems);
  obj.classes_collapsed = apex.size() < obj.classes.size();

  std::vector<std::size_t> t1(a.size()), t2(b.size());
  const std::size_t za = a.zero_index(), zb = b.zero_index();
  for (std::size_t i = 0; i < a.size(); ++i)
    t1[i] = *apex.index_of(node_image[node(i, zb)]);
  for (std::size_t j = 0; j < nb; ++j)
    t2[j] = *apex.index_of(node_image[node(za, j)]);
  FreimanMap i1(a, apex, std::move(t1), k);
  FreimanMap i2(b, apex, std::move(t2), k);

  auto mediator = [apex, a, b, f, g, node_image, nb,
                   k](const std::vector<FreimanMap>& comp) -> FreimanMap {
    if (comp.size() != 2 || comp[0].target() != comp[1].target())
      throw std::invalid_argument(
          "pushout0 mediator: need a cocone d1, d2 into one target");
    if (!(compose(comp[0], f) == compose(comp[1], g)))
      throw std::invalid_argument("pushout0 mediator: cocone does not commute");
    const AdditiveSet& d = comp[0].target();
    std::vector<std::optional<std::size_t>> table(apex.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < nb; ++j) {
        std::size_t at = *apex.index_of(node_image[i * nb + j]);
        GroupElement v = d[comp[0].table()[i]] + d[comp[1].table()[j]];
        std::size_t di = must_index(d, v, "pushout0");
        if (table[at] && *table[at] != di)
          throw MediatorUndefined(
              "pushout0: mediator formula inconsistent on a class");
        table[at] = di;
      }
    std::vector<std::size_t> out(apex.size());
    for (std::size_t at = 0; at < apex.size(); ++at) out[at] = *table[at];
    return FreimanMap(apex, d, std::move(out), k);
  };
  ConeResult cone{ConeKind::colimit, k, apex, {std::move(i1), std::move(i2)},
                  std::move(mediator)};
  return {std::move(cone), std::move(obj)};
}

ConeResult equalizer0(const FreimanMap& f, const FreimanMap& g) {
  require_parallel_pair(f, g, "equalizer0");
  if (f.source() != g.source() || f.target() != g.target())
    throw std::invalid_argument("equalizer0: maps are not parallel");
  if (!f.preserves_zero() || !g.preserves_zero())
    throw std::invalid_argument("equalizer0: maps must preserve 0");
  const int k = f.order();
  const AdditiveSet& a = f.source();
  std::vector<GroupElement> elems;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (f.table()[i] == g.table()[i]) elems.push_back(a[i]);
  AdditiveSet apex(a.ambient(), elems);
  std::vector<std::size_t> incl(apex.size());
  for (std::size_t e = 0; e < apex.size(); ++e) incl[e] = *a.index_of(apex[e]);
  FreimanMap leg(apex, a, std::move(incl), k);
  auto mediator = [apex, a,
                   k](const std::vector<FreimanMap>& comp) -> FreimanMap {
    if (comp.size() != 1)
      throw std::invalid_argument("equalizer0 mediator: need one leg into A");
    std::vector<std::size_t> table(comp[0].source().size());
    for (std::size_t x = 0; x < table.size(); ++x)
      table[x] = must_index(apex, a[comp[0].table()[x]], "equalizer0");
    return FreimanMap(comp[0].source(), apex, std::move(table), k);
  };
  return {ConeKind::limit, k, apex, {std::move(leg)}, std::move(mediator)};
}

CoequalizerResult coequalizer0(const FreimanMap& f, const FreimanMap& g) {
  require_parallel_pair(f, g, "coequalizer0");
  if (f.source() != g.source() || f.target() != g.target())
    throw std::invalid_argument("coequalizer0: maps are not parallel");
  if (!f.preserves_zero() || !g.preserves_zero())
    throw std::invalid_argument("coequalizer0: maps must preserve 0");
  const int k = f.order();
  const AdditiveSet& a = f.source();
  const AdditiveSet& b = f.target();

  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < a.size(); ++i)
    gens.push_back(b[f.table()[i]] - b[g.table()[i]]);
  QuotientResult qr = quotient(b.ambient(), gens);

  UnionFind uf(b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    uf.unite(f.table()[i], g.table()[i]);

  std::vector<GroupElement> b_image;
  for (const GroupElement& x : b.elements())
    b_image.push_back(qr.projection.apply(x));

  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t j = 0; j < b.size(); ++j) by_root[uf.find(j)].push_back(j);
  QuotientObject obj{{}, qr, {}, false};
  std::vector<GroupElement> class_elems;
  for (auto& [root, members] : by_root) {
    for (std::size_t m : members)
      if (b_image[m] != b_image[root])
        throw std::logic_error(
            "coequalizer0: equivalence class with inconsistent quotient images");
    obj.classes.push_back(members);
    obj.class_images.push_back(b_image[root]);
    class_elems.push_back(b_image[root]);
  }
  AdditiveSet apex(qr.quotient, class_elems);
  obj.classes_collapsed = apex.size() < obj.classes.size();

  std::vector<std::size_t> ctab(b.size());
  for (std::size_t j = 0; j < b.size(); ++j)
    ctab[j] = *apex.index_of(b_image[j]);
  FreimanMap leg(b, apex, ctab, k);

  auto mediator = [apex, b, f, g, b_image,
                   k](const std::vector<FreimanMap>& comp) -> FreimanMap {
    if (comp.size() != 1)
      throw std::invalid_argument("coequalizer0 mediator: need one leg from B");
    const FreimanMap& kmap = comp[0];
    if (!(compose(kmap, f) == compose(kmap, g)))
      throw std::invalid_argument(
          "coequalizer0 mediator: leg does not coequalize f and g");
    const AdditiveSet& d = kmap.target();
    std::vector<std::optional<std::size_t>> table(apex.size());
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t at = *apex.index_of(b_image[j]);
      std::size_t di = kmap.table()[j];
      if (table[at] && *table[at] != di)
        throw MediatorUndefined(
            "coequalizer0: mediator formula inconsistent on a class");
      table[at] = di;
    }
    std::vector<std::size_t> out(apex.size());
    for (std::size_t at = 0; at < apex.size(); ++at) out[at] = *table[at];
    return FreimanMap(apex, d, std::move(out), k);
  };
  ConeResult cone{ConeKind::colimit, k, apex, {std::move(leg)},
                  std::move(mediator)};
  return {std::move(cone), std::move(obj)};
}

AdditiveSet zero_object(const FgaGroup& z) {
  return AdditiveSet(z, {zero_of(z)});
}

FreimanMap unique_to_terminal(const AdditiveSet& a, const FgaGroup& z, int k) {
  return FreimanMap::constant(a, zero_object(z), 0, k);
}

FreimanMap unique_from_initial(const FgaGroup& z, const AdditiveSet& b,
                               int k) {
  require_normalized(b, "unique_from_initial");
  return FreimanMap(zero_object(z), b, {b.zero_index()}, k);
}

std::vector<FreimanMap> maps_from_singleton(const AdditiveSet& single,
                                            const AdditiveSet& b, int k) {
  if (single.size() != 1)
    throw std::invalid_argument("maps_from_singleton: source must be a singleton");
  std::vector<FreimanMap> out;
  for (std::size_t j = 0; j < b.size(); ++j)
    out.push_back(FreimanMap(single, b, {j}, k));
  return out;
}

bool verify_universal_property(const ConeResult& cone,
                               const std::vector<FreimanMap>& competitor,
                               int k, bool preserve_zero, std::uint64_t budget,
                               bool parallel) {
  if (competitor.size() != cone.legs.size())
    throw std::invalid_argument("verify_universal_property: leg count mismatch");
  const bool limit = cone.kind == ConeKind::limit;
  for (std::size_t i = 0; i < competitor.size(); ++i) {
    bool ok = limit ? competitor[i].target() == cone.legs[i].target() &&
                          competitor[i].source() == competitor[0].source()
                    : competitor[i].source() == cone.legs[i].source() &&
                          competitor[i].target() == competitor[0].target();
    if (!ok)
      throw std::invalid_argument(
          "verify_universal_property: competitor does not match the diagram");
  }
  const AdditiveSet& d =
      limit ? competitor[0].source() : competitor[0].target();
  const AdditiveSet& src = limit ? d : cone.apex;
  const AdditiveSet& tgt = limit ? cone.apex : d;

  std::optional<FreimanMap> mediator;
  try {
    mediator = cone.mediator(competitor);
  } catch (const MediatorUndefined&) {
    return false;  // no mediating morphism exists at all
  }

  SumFibers fibers = ksum_fibers(src, k);
  std::optional<std::size_t> src_zero, tgt_zero;
  if (preserve_zero) {
    src_zero = src.zero_index();
    tgt_zero = tgt.zero_index();
  }
  auto pred = [&](const MapTable& t) {
    if (src_zero && t[*src_zero] != *tgt_zero) return false;
    if (limit) {
      for (std::size_t i = 0; i < competitor.size(); ++i)
        for (std::size_t x = 0; x < d.size(); ++x)
          if (cone.legs[i].table()[t[x]] != competitor[i].table()[x])
            return false;
    } else {
      for (std::size_t i = 0; i < competitor.size(); ++i)
        for (std::size_t x = 0; x < cone.legs[i].source().size(); ++x)
          if (t[cone.legs[i].table()[x]] != competitor[i].table()[x])
            return false;
    }
    for (const SumFiber& fiber : fibers.fibers) {
      if (fiber.multisets.size() < 2) continue;
      auto sum_of = [&](const std::vector<std::size_t>& ms) {
        GroupElement s = tgt[t[ms[0]]];
        for (std::size_t i = 1; i < ms.size(); ++i) s = s + tgt[t[ms[i]]];
        return s;
      };
      GroupElement base = sum_of(fiber.multisets[0]);
      for (std::size_t j = 1; j < fiber.multisets.size(); ++j)
        if (sum_of(fiber.multisets[j]) != base) return false;
    }
    return true;
  };
  std::vector<MapTable> matches =
      search_maps(src.size(), tgt.size(), pred, budget, parallel);
  return matches.size() == 1 && matches[0] == mediator->table();
}

}  // namespace frk
