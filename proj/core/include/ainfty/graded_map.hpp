#pragma once

#include "ainfty/graded_space.hpp"
#include "ainfty/sparse.hpp"

namespace ainfty {

// Degree-homogeneous linear map between graded spaces, stored column-sparse.
// Entry (i,j) may be nonzero only if deg(dst_i) = deg(src_j) + degree.
struct GradedMap {
  SpacePtr src;
  SpacePtr dst;
  int degree = 0;
  std::map<Index, SparseVec> cols;

  SparseVec column(Index j) const;
  SparseVec apply(const SparseVec& x) const;
  Scalar entry(Index i, Index j) const;
  void set(Index i, Index j, const Scalar& c);
  bool is_zero() const;
};

GradedMap make_map(SpacePtr src, SpacePtr dst, int degree);
GradedMap identity_map(const SpacePtr& v);

// f after g
GradedMap compose(const GradedMap& f, const GradedMap& g);
GradedMap map_sum(const GradedMap& f, const GradedMap& g);
GradedMap map_scaled(const GradedMap& f, const Scalar& c);

// throws unless every entry respects the degree (and, when both spaces carry
// an auxiliary grading, the aux shift t)
void check_map_degrees(const GradedMap& f, std::optional<int> aux_shift = std::nullopt);

int map_rank(const GradedMap& f);

}  // namespace ainfty
