#pragma once

#include "ainfty/ainf.hpp"

namespace ainfty {

// Bilinear form of degree -d on a graded space: <a,b> = 0 unless
// |a|+|b| = d, and <a,b> = (-1)^(|a||b|) <b,a>. Nondegeneracy is a property
// of the induced form on cohomology, checked rather than assumed.
struct Pairing {
  SpacePtr space;
  int pair_dim = 0;  // d; the form has degree -d
  std::map<std::pair<Index, Index>, Scalar> entries;
  std::optional<SparseVec> trace;  // functional t with <a,b> = t(ab), when one exists

  Scalar at(Index i, Index j) const;
};

Pairing make_pairing(SpacePtr space, int pair_dim,
                     std::map<std::pair<Index, Index>, Scalar> entries,
                     std::optional<SparseVec> trace = std::nullopt);

// left side minus signed right side of
// (m_n(a_0..a_{n-1}), a_n) = (-1)^(n + |a_0|(|a_1|+..+|a_n|)) (m_n(a_1..a_n), a_0)
// per basis tuple, unsuspended degrees; all-zero iff cyclic at arity n
std::map<Tuple, Scalar> cyclicity_defect(const AInfStructure& a, const Pairing& p, int n);

// rank of the form induced on b_1-cohomology equals dim H
bool cohomologically_nondegenerate(const AInfStructure& a, const Pairing& p);

// the induced pairing on the homology space of a chosen splitting
Pairing induced_cohomology_pairing(const Pairing& p, const Splitting& s);

// pairing entries have aux(i)+aux(j) == value wherever nonzero
bool pairing_has_aux_degree(const Pairing& p, int value);

}  // namespace ainfty
