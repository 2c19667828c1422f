#pragma once

#include <optional>

#include "ainfty/multi_map.hpp"
#include "ainfty/splitting.hpp"

namespace ainfty {

// A-infinity structure in suspended form: degree one maps
// b_k : (sA)^{⊗k} -> sA, k = 1..max_arity, Stasheff defect zero at every
// arity covered by the data. `space` is the unsuspended A.
struct AInfStructure {
  SpacePtr space;
  SpacePtr sspace;
  int max_arity = 1;
  std::vector<MultiMap> ops;  // ops[k], index 0 unused
  bool aux_flag = false;      // every b_k has aux degree 0
  bool truncated = false;     // arity cap discarded provably nonzero data

  const MultiMap& b(int k) const;
  MultiMap& b(int k);
};

AInfStructure make_ainf(SpacePtr space, int max_arity, bool aux_flag = false);

struct DgAlgebra {
  SpacePtr space;
  GradedMap m1;   // degree +1
  MultiMap m2;    // degree 0
  std::optional<Index> unit;
};

DgAlgebra make_dg(SpacePtr space);

// m1² = 0, Leibniz, associativity — exact, all basis tuples. Only for
// materialized m2; rule-backed algebras get checked on cores by their tests.
void check_dg(const DgAlgebra& a);

// b_1 = m_1, b_2 = s∘m_2∘(s^{-1}⊗s^{-1}); coefficientwise the sign on a
// basis tuple (a_1..a_k) is (-1)^(Σ_t (k-t)|a_t|) with unsuspended degrees.
AInfStructure from_dg(const DgAlgebra& a);

// m_k = s^{-1}∘b_k∘s^{⊗k}, degree 2-k; the same diagonal sign, so the
// round trip b -> m -> b is the identity.
std::vector<MultiMap> convert_b_to_m(const AInfStructure& a);
AInfStructure ainf_from_m(const SpacePtr& space, const std::vector<MultiMap>& m,
                          bool aux_flag = false);

// Σ_{i+j+k=n, j>=1} b_{n-j+1}(id^i ⊗ b_j ⊗ id^k), degree +2; zero iff the
// Stasheff relation holds at arity n. n must not exceed the arity cap.
MultiMap stasheff_defect(const AInfStructure& a, int n);
SparseVec stasheff_defect_at(const AInfStructure& a, const Tuple& t);

struct AInfMorphism {
  AInfStructure src, dst;
  std::vector<MultiMap> fs;  // fs[k]: (sA)^{⊗k} -> sA', degree 0; index 0 unused
  int max_arity() const { return static_cast<int>(fs.size()) - 1; }
  const MultiMap* f(int k) const;  // nullptr when k past the stored components
};

AInfMorphism identity_morphism(const AInfStructure& a);

// Σ F_{n-j+1}(id^i ⊗ b_j ⊗ id^k) - Σ b_r(F_{i_1} ⊗ ... ⊗ F_{i_r})
MultiMap morphism_defect(const AInfMorphism& f, int n);
SparseVec morphism_defect_at(const AInfMorphism& f, const Tuple& t);

// F_1 induces an isomorphism on b_1-cohomology (exact rank computation)
bool is_quasi_isomorphism(const AInfMorphism& f);

GradedMap b1_as_map(const AInfStructure& a);

// true when degree (and aux) counting alone rules out any nonzero map
// slot^{⊗arity} -> dst of the given degree
bool arity_excluded_by_grading(const SpacePtr& slot, int arity, const SpacePtr& dst,
                               int degree, bool use_aux, int aux_shift = 0);

}  // namespace ainfty
