#include "ainfty/graded_map.hpp"

#include <stdexcept>

namespace ainfty {

SparseVec GradedMap::column(Index j) const {
  auto it = cols.find(j);
  return it == cols.end() ? SparseVec{} : it->second;
}

SparseVec GradedMap::apply(const SparseVec& x) const {
  SparseVec r;
  for (const auto& [j, c] : x) {
    auto it = cols.find(j);
    if (it != cols.end()) axpy(r, c, it->second);
  }
  return r;
}

Scalar GradedMap::entry(Index i, Index j) const {
  auto it = cols.find(j);
  if (it == cols.end()) return Scalar(0);
  return coeff(it->second, i);
}

void GradedMap::set(Index i, Index j, const Scalar& c) {
  if (ainfty::is_zero(c)) {
    auto it = cols.find(j);
    if (it != cols.end()) {
      it->second.erase(i);
      if (it->second.empty()) cols.erase(it);
    }
    return;
  }
  cols[j][i] = c;
}

bool GradedMap::is_zero() const {
  for (const auto& [j, col] : cols)
    if (!col.empty()) return false;
  return true;
}

GradedMap make_map(SpacePtr src, SpacePtr dst, int degree) {
  return GradedMap{std::move(src), std::move(dst), degree, {}};
}

GradedMap identity_map(const SpacePtr& v) {
  GradedMap f = make_map(v, v, 0);
  for (Index i = 0; i < v->dim(); ++i) f.cols[i] = unit_vec(i);
  return f;
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
  if (!same_space(g.dst, f.src)) throw std::invalid_argument("compose: space mismatch");
  GradedMap r = make_map(g.src, f.dst, f.degree + g.degree);
  for (const auto& [j, col] : g.cols) {
    SparseVec v = f.apply(col);
    if (!v.empty()) r.cols[j] = std::move(v);
  }
  return r;
}

GradedMap map_sum(const GradedMap& f, const GradedMap& g) {
  if (!same_space(f.src, g.src) || !same_space(f.dst, g.dst) || f.degree != g.degree)
    throw std::invalid_argument("map_sum: incompatible maps");
  GradedMap r = f;
  for (const auto& [j, col] : g.cols) {
    axpy(r.cols[j], Scalar(1), col);
    if (r.cols[j].empty()) r.cols.erase(j);
  }
  return r;
}

GradedMap map_scaled(const GradedMap& f, const Scalar& c) {
  GradedMap r = make_map(f.src, f.dst, f.degree);
  if (is_zero(c)) return r;
  for (const auto& [j, col] : f.cols) r.cols[j] = scaled(col, c);
  return r;
}

void check_map_degrees(const GradedMap& f, std::optional<int> aux_shift) {
  for (const auto& [j, col] : f.cols)
    for (const auto& [i, c] : col) {
      (void)c;
      if (f.dst->deg(i) != f.src->deg(j) + f.degree)
        throw std::invalid_argument("map entry (" + f.dst->label(i) + "," + f.src->label(j) +
                                    ") violates degree " + std::to_string(f.degree));
      if (aux_shift && f.src->has_aux() && f.dst->has_aux() &&
          f.dst->aux(i) != f.src->aux(j) + *aux_shift)
        throw std::invalid_argument("map entry (" + f.dst->label(i) + "," + f.src->label(j) +
                                    ") violates aux degree " + std::to_string(*aux_shift));
    }
}

int map_rank(const GradedMap& f) {
  // column echelon, exact
  std::vector<SparseVec> pivots;
  std::vector<Index> pivot_rows;
  int rank = 0;
  for (const auto& [j, col] : f.cols) {
    SparseVec v = col;
    for (size_t t = 0; t < pivots.size(); ++t) {
      Scalar c = coeff(v, pivot_rows[t]);
      if (!is_zero(c)) axpy(v, -c, pivots[t]);
    }
    if (v.empty()) continue;
    Index r = v.begin()->first;
    Scalar lead = v.begin()->second;
    for (auto& [i, c] : v) c /= lead;
    pivot_rows.push_back(r);
    pivots.push_back(std::move(v));
    ++rank;
  }
  return rank;
}

}  // namespace ainfty
