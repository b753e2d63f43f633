#include "frk/universal.hpp"

namespace frk {

UniversalResult build_universal(const AdditiveSet& a, int k) {
  if (k < 2)
    throw std::invalid_argument("build_universal: order must be >= 2");
  const std::size_t n = a.size();
  FgaGroup cover = FgaGroup::free(n);

  // One row per non-base multiset of each fiber: indicator(m_i) -
  // indicator(m_0). These span the same lattice as all pairwise differences.
  SumFibers fibers = ksum_fibers(a, k);
  std::vector<IntVec> rows;
  for (const SumFiber& fiber : fibers.fibers) {
    if (fiber.multisets.size() < 2) continue;
    IntVec base(n);
    for (std::size_t idx : fiber.multisets[0]) base[idx] += 1;
    for (std::size_t m = 1; m < fiber.multisets.size(); ++m) {
      IntVec row(n);
      for (std::size_t idx : fiber.multisets[m]) row[idx] += 1;
      for (std::size_t i = 0; i < n; ++i) row[i] -= base[i];
      rows.push_back(std::move(row));
    }
  }
  IntMatrix relation_matrix = IntMatrix::from_rows(n, rows);

  std::vector<GroupElement> gens;
  for (const IntVec& r : rows) gens.push_back(GroupElement(cover, r));
  QuotientResult qr = quotient(cover, gens);

  std::vector<GroupElement> images;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n);
    e[i] = 1;
    images.push_back(qr.projection.apply(GroupElement(cover, e)));
  }
  AdditiveSet embedded(qr.quotient, images);
  if (embedded.size() != n)
    throw std::logic_error("build_universal: unit failed to be injective");
  std::vector<std::size_t> table(n);
  for (std::size_t i = 0; i < n; ++i) table[i] = *embedded.index_of(images[i]);
  FreimanMap unit(a, embedded, std::move(table), k);
  return {a, std::move(embedded), std::move(unit), std::move(relation_matrix),
          std::move(qr)};
}

namespace {

GroupElement weighted_image(const FgaGroup& w, const IntVec& weights,
                            const FreimanMap& g) {
  GroupElement acc = zero_of(w);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] == 0) continue;
    acc = acc + g.target()[g.table()[i]].scaled(weights[i]);
  }
  return acc;
}

}  // namespace

GroupHom extend_hom(const UniversalResult& u, const FreimanMap& g) {
  if (g.source() != u.original)
    throw std::invalid_argument("extend_hom: map must start at the original set");
  const FgaGroup& w = g.target().ambient();
  const FgaGroup& zprime = u.cover_quotient.quotient;

  for (std::size_t r = 0; r < u.relation_matrix.rows(); ++r) {
    IntVec row = u.relation_matrix.row(r);
    GroupElement img = weighted_image(w, row, g);
    if (!img.is_zero())
      throw ExtendHomError("extend_hom: map is not a Freiman k-homomorphism",
                           std::move(row), std::move(img));
  }

  // Generator j of Z' lifts to the section column; push that word through g.
  IntMatrix m(w.dim(), zprime.dim());
  for (std::size_t j = 0; j < zprime.dim(); ++j) {
    GroupElement img =
        weighted_image(w, u.cover_quotient.section.col(j), g);
    for (std::size_t i = 0; i < w.dim(); ++i) m(i, j) = img.coords()[i];
  }
  return GroupHom(zprime, w, std::move(m));
}

FreimanMap adjunction_theta(const UniversalResult& u, const FreimanMap& f) {
  if (f.source() != u.embedded)
    throw std::invalid_argument("adjunction_theta: map must start at A'");
  return compose(f, u.unit);
}

FreimanMap adjunction_eta(const UniversalResult& u, const FreimanMap& g) {
  if (g.source() != u.original)
    throw std::invalid_argument("adjunction_eta: map must start at A");
  std::vector<std::size_t> table(u.embedded.size());
  for (std::size_t i = 0; i < u.original.size(); ++i)
    table[u.unit.table()[i]] = g.table()[i];
  return FreimanMap(u.embedded, g.target(), std::move(table), g.order());
}

}  // namespace frk
