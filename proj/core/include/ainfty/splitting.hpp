#pragma once

#include "ainfty/graded_map.hpp"

namespace ainfty {

// A = H ⊕ B ⊕ D with B = im(d), d|_D : D -> B an isomorphism, and the
// homotopy h vanishing on H ⊕ D with h|_B = (d|_D)^{-1}. Then
// d h + h d = id - include∘project, h² = 0, h∘include = 0, project∘h = 0.
struct Splitting {
  SpacePtr space;
  SpacePtr homology;
  std::vector<SparseVec> h_basis, b_basis, d_basis;  // in ambient coordinates
  GradedMap include;   // homology -> space
  GradedMap project;   // space -> homology
  GradedMap homotopy;  // space -> space, degree -1
};

// Row reduction with a fixed pivot rule: columns in stored basis order,
// pivot at the topmost nonzero row. Throws if d² != 0, or if an auxiliary
// grading is present and d does not have aux degree 0.
Splitting homology_splitting(const GradedMap& d);

// Same, but the elimination runs independently inside each block; block_of
// must be constant along d (multidegrees of a Čech complex, say). Refining
// by aux is the caller's duty here.
Splitting homology_splitting_blocked(const GradedMap& d, const std::vector<int>& block_of);

}  // namespace ainfty
