#pragma once

#include "ainfty/ainf.hpp"

namespace ainfty {

struct TransferOptions {
  int max_arity = 8;
  // use degree/aux counting to certify zero output arities instead of
  // enumerating their tuples; certified arities are recorded
  bool grading_certificate = false;
  // evaluate p∘β_{K+1} to detect provably nonzero discarded coefficients
  bool check_truncation = true;
};

struct TransferResult {
  AInfStructure minimal;   // structure on H(A), b_1 = 0
  AInfMorphism include;    // H -> A quasi-isomorphism, F_1 = splitting include
  GradedMap project;       // p_1 : A -> H (higher components not emitted)
  std::vector<int> certified_arities;  // proven zero by grading, not enumerated
};

// Homotopy transfer along a chosen splitting: λ_1 = i_1, β_n = Σ_{k≥2} b_k ∘
// Σ_{n_1+..+n_k=n} λ_{n_1}⊗..⊗λ_{n_k}, λ_n = h∘β_n, b'_n = p_1∘β_n. In the
// suspended convention every λ has degree zero, so the tensor products carry
// no Koszul signs; correctness is enforced by the defect invariants.
TransferResult transfer(const AInfStructure& a, const Splitting& s,
                        const TransferOptions& opt = {});
TransferResult transfer(const AInfStructure& a, const TransferOptions& opt = {});

}  // namespace ainfty
