#include "frk/group.hpp"

#include <sstream>
#include <stdexcept>

namespace frk {

FgaGroup::FgaGroup(std::size_t rank, std::vector<Int> tors)
    : free_rank(rank), torsion(std::move(tors)) {
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    if (torsion[i] < 2)
      throw std::invalid_argument("FgaGroup: torsion entries must be >= 2");
    if (i > 0 && torsion[i] % torsion[i - 1] != 0)
      throw std::invalid_argument("FgaGroup: torsion must form a divisibility chain");
  }
}

Int FgaGroup::order() const {
  if (!is_finite())
    throw std::domain_error("FgaGroup::order: group is infinite");
  Int n = 1;
  for (const Int& d : torsion) n *= d;
  return n;
}

std::string FgaGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < free_rank; ++i) {
    os << (first ? "" : " + ") << "Z";
    first = false;
  }
  for (const Int& d : torsion) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

IntVec canonicalize(const FgaGroup& g, IntVec coords) {
  if (coords.size() != g.dim())
    throw std::invalid_argument("GroupElement: coordinate length mismatch");
  for (std::size_t i = 0; i < g.torsion.size(); ++i) {
    Int& c = coords[g.free_rank + i];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), g.torsion[i].get_mpz_t());
  }
  return coords;
}

void require_same_group(const GroupElement& a, const GroupElement& b,
                        const char* what) {
  if (a.group() != b.group())
    throw std::invalid_argument(std::string(what) + ": ambient group mismatch");
}

}  // namespace

GroupElement::GroupElement(FgaGroup group, IntVec coords)
    : group_(std::move(group)), coords_(canonicalize(group_, std::move(coords))) {}

bool GroupElement::is_zero() const {
  for (const Int& c : coords_)
    if (c != 0) return false;
  return true;
}

GroupElement GroupElement::operator+(const GroupElement& rhs) const {
  require_same_group(*this, rhs, "elem_add");
  IntVec c = coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += rhs.coords_[i];
  return GroupElement(group_, std::move(c));
}

GroupElement GroupElement::operator-() const {
  IntVec c = coords_;
  for (Int& x : c) x = -x;
  return GroupElement(group_, std::move(c));
}

GroupElement GroupElement::operator-(const GroupElement& rhs) const {
  return *this + (-rhs);
}

GroupElement GroupElement::scaled(const Int& n) const {
  IntVec c = coords_;
  for (Int& x : c) x *= n;
  return GroupElement(group_, std::move(c));
}

bool GroupElement::operator==(const GroupElement& rhs) const {
  require_same_group(*this, rhs, "element comparison");
  return coords_ == rhs.coords_;
}

GroupElement zero_of(const FgaGroup& g) {
  return GroupElement(g, IntVec(g.dim()));
}

bool coord_less(const GroupElement& a, const GroupElement& b) {
  return a.coords() < b.coords();
}

GroupHom::GroupHom(FgaGroup source, FgaGroup target, IntMatrix matrix)
    : source_(std::move(source)),
      target_(std::move(target)),
      matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
    throw std::invalid_argument("GroupHom: matrix shape mismatch");
}

GroupHom GroupHom::identity(const FgaGroup& g) {
  return GroupHom(g, g, IntMatrix::identity(g.dim()));
}

GroupHom GroupHom::zero(const FgaGroup& source, const FgaGroup& target) {
  return GroupHom(source, target, IntMatrix(target.dim(), source.dim()));
}

GroupElement GroupHom::apply(const GroupElement& x) const {
  if (x.group() != source_)
    throw std::invalid_argument("GroupHom::apply: element not in source group");
  return GroupElement(target_, matrix_.mul(x.coords()));
}

GroupHom GroupHom::compose(const GroupHom& inner) const {
  if (inner.target_ != source_)
    throw std::invalid_argument("GroupHom::compose: boundary mismatch");
  return GroupHom(inner.source_, target_, matrix_ * inner.matrix_);
}

bool hom_is_well_defined(const GroupHom& h) {
  const FgaGroup& src = h.source();
  for (std::size_t i = 0; i < src.torsion.size(); ++i) {
    IntVec col = h.matrix().col(src.free_rank + i);
    for (Int& c : col) c *= src.torsion[i];
    if (!GroupElement(h.target(), std::move(col)).is_zero()) return false;
  }
  return true;
}

namespace {

struct FreeQuotient {
  FgaGroup group;
  IntMatrix projection;  // group.dim() x n
  IntMatrix section;     // n x group.dim()
};

// Z^n modulo the row span of `relations`.
FreeQuotient quotient_of_free(std::size_t n,
                              const std::vector<IntVec>& relations) {
  SnfDecomposition d = snf(IntMatrix::from_rows(n, relations));
  const std::size_t ndiag = std::min(relations.size(), n);
  std::vector<std::size_t> free_idx, tors_idx;
  std::vector<Int> torsion;
  for (std::size_t j = 0; j < n; ++j) {
    const Int dj = (j < ndiag) ? d.s(j, j) : Int(0);
    if (dj == 0)
      free_idx.push_back(j);
    else if (dj >= 2) {
      tors_idx.push_back(j);
      torsion.push_back(dj);
    }
  }
  FgaGroup q(free_idx.size(), torsion);
  std::vector<std::size_t> picked = free_idx;
  picked.insert(picked.end(), tors_idx.begin(), tors_idx.end());
  IntMatrix proj(q.dim(), n);
  IntMatrix sect(n, q.dim());
  for (std::size_t out = 0; out < picked.size(); ++out) {
    const std::size_t j = picked[out];
    for (std::size_t i = 0; i < n; ++i) {
      proj(out, i) = d.v(i, j);
      sect(i, out) = d.v_inv(j, i);
    }
  }
  return {std::move(q), std::move(proj), std::move(sect)};
}

// Torsion relation rows d_i * e_(free_rank + i) for a presentation laid out
// in Z^n, with the torsion block starting at `offset`.
void append_torsion_rows(std::size_t n, std::size_t offset,
                         const std::vector<Int>& torsion,
                         std::vector<IntVec>& rows) {
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    IntVec row(n);
    row[offset + i] = torsion[i];
    rows.push_back(std::move(row));
  }
}

}  // namespace

QuotientResult quotient(const FgaGroup& g,
                        const std::vector<GroupElement>& gens) {
  const std::size_t n = g.dim();
  std::vector<IntVec> rows;
  append_torsion_rows(n, g.free_rank, g.torsion, rows);
  for (const GroupElement& x : gens) {
    if (x.group() != g)
      throw std::invalid_argument("quotient: generator not in the group");
    rows.push_back(x.coords());
  }
  FreeQuotient fq = quotient_of_free(n, rows);
  return {fq.group, GroupHom(g, fq.group, std::move(fq.projection)),
          std::move(fq.section)};
}

bool subgroup_generated_equals(const FgaGroup& g,
                               const std::vector<GroupElement>& gens) {
  return quotient(g, gens).quotient.is_trivial();
}

DirectSum direct_sum(const FgaGroup& g, const FgaGroup& h) {
  const std::size_t rank = g.free_rank + h.free_rank;
  const std::size_t n = g.dim() + h.dim();
  // Raw layout: [free_g | free_h | tors_g | tors_h].
  std::vector<IntVec> rows;
  append_torsion_rows(n, rank, g.torsion, rows);
  append_torsion_rows(n, rank + g.torsion.size(), h.torsion, rows);
  FreeQuotient fq = quotient_of_free(n, rows);

  auto embed = [&](const FgaGroup& part, std::size_t free_at,
                   std::size_t tors_at) {
    IntMatrix e(n, part.dim());
    for (std::size_t j = 0; j < part.free_rank; ++j) e(free_at + j, j) = 1;
    for (std::size_t j = 0; j < part.torsion.size(); ++j)
      e(tors_at + j, part.free_rank + j) = 1;
    return e;
  };
  IntMatrix e1 = embed(g, 0, rank);
  IntMatrix e2 = embed(h, g.free_rank, rank + g.torsion.size());

  auto select = [&](const IntMatrix& e) {
    IntMatrix s(e.cols(), fq.group.dim());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < e.cols(); ++j)
        if (e(i, j) == 1)
          for (std::size_t c = 0; c < fq.group.dim(); ++c)
            s(j, c) = fq.section(i, c);
    return s;
  };

  return {fq.group,
          GroupHom(g, fq.group, fq.projection * e1),
          GroupHom(h, fq.group, fq.projection * e2),
          GroupHom(fq.group, g, select(e1)),
          GroupHom(fq.group, h, select(e2))};
}

std::vector<GroupElement> enumerate_elements(const FgaGroup& g) {
  if (!g.is_finite())
    throw std::domain_error("enumerate_elements: group is infinite");
  std::vector<GroupElement> out;
  IntVec coords(g.dim());
  for (;;) {
    out.push_back(GroupElement(g, coords));
    // Lexicographic odometer over torsion coordinates.
    std::size_t i = g.dim();
    while (i > 0) {
      --i;
      coords[i] += 1;
      if (coords[i] < g.torsion[i]) break;
      coords[i] = 0;
      if (i == 0) return out;
    }
    if (g.dim() == 0) return out;
  }
}

}  // namespace frk
