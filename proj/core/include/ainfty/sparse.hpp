#pragma once

#include <map>

#include "ainfty/rational.hpp"

namespace ainfty {

using Index = int;

// Sparse vector over the basis of some GradedSpace. Entries are nonzero;
// std::map keeps iteration deterministic.
using SparseVec = std::map<Index, Scalar>;

inline void add_term(SparseVec& v, Index i, const Scalar& c) {
  if (is_zero(c)) return;
  auto [it, fresh] = v.emplace(i, c);
  if (!fresh) {
    it->second += c;
    if (is_zero(it->second)) v.erase(it);
  }
}

// y += a*x
inline void axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
  if (is_zero(a)) return;
  for (const auto& [i, c] : x) add_term(y, i, a * c);
}

inline SparseVec scaled(const SparseVec& x, const Scalar& a) {
  SparseVec r;
  if (!is_zero(a))
    for (const auto& [i, c] : x) r.emplace(i, a * c);
  return r;
}

inline SparseVec unit_vec(Index i) { return SparseVec{{i, Scalar(1)}}; }

inline Scalar coeff(const SparseVec& v, Index i) {
  auto it = v.find(i);
  return it == v.end() ? Scalar(0) : it->second;
}

}  // namespace ainfty
