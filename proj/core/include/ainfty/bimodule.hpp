#pragma once

#include "ainfty/ainf.hpp"

namespace ainfty {

// A-infinity bimodule over A: maps b_{k,l} : (sA)^{⊗k} ⊗ sM ⊗ (sA)^{⊗l} -> sM
// of degree one, for k+l+1 <= max_arity, with vanishing relation defect.
struct Bimodule {
  AInfStructure algebra;
  SpacePtr space;   // unsuspended M
  SpacePtr sspace;  // suspended M
  int max_arity = 1;
  std::map<std::pair<int, int>, MultiMap> ops;

  bool has(int k, int l) const { return ops.count({k, l}) > 0; }
  const MultiMap& b(int k, int l) const;
  MultiMap& ensure(int k, int l);
  std::vector<SpacePtr> slots_for(int k, int l) const;
};

Bimodule make_bimodule(AInfStructure algebra, SpacePtr mspace, int max_arity);

// b_{k,l} = b_{k+l+1} with the module slot at position k+1
Bimodule diagonal_bimodule(const AInfStructure& a);

// corestriction of (b_M)² to sM at arity (k,l); zero iff the relation holds
MultiMap bimodule_relation_defect(const Bimodule& m, int k, int l);
SparseVec bimodule_relation_defect_at(const Bimodule& m, int k, int l, const Tuple& t);

// b*_{k,l}([a_1|..|a_k|m*|a_{k+1}|..|a_{k+l}])(m') =
//   (-1)^⋈ m*(b_{l,k}([a_{k+1}|..|a_{k+l}|m'|a_1|..|a_k])),
// ⋈ = (Σ_r |a_r|)(|m*| + Σ_t |a_{k+t}|) + |m*| + Σ_j |a_j| Σ_{i>j} |a_i|
// on suspended degrees. Dual basis element x* has degree -|x|, aux -aux(x).
Bimodule dual_bimodule(const Bimodule& m);

// M[r]: degree-q elements land in degree q-r; structure maps pick up
// (-1)^(r * number of algebra inputs to the left); aux unchanged
Bimodule shift_bimodule(const Bimodule& m, int r);

// the canonical M -> M** identification, entrywise compatible with the
// double-dual structure maps
GradedMap double_dual_iso(const Bimodule& m);

}  // namespace ainfty
