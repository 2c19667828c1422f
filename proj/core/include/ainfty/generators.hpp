#pragma once

#include <random>

#include "ainfty/ainf.hpp"
#include "ainfty/bimodule.hpp"

namespace ainfty {

// Randomized exact test inputs. Associativity comes for free from monomial
// path algebras (quotients by path-length ideals); differentials are inner,
// d = [e,-] for an odd e with central e², and every draw is re-verified by
// check_dg before being returned.
struct DgGenOptions {
  int max_dim = 5;
  bool with_differential = true;
  int max_degree = 2;  // arrow degrees drawn from 0..max_degree
};

DgAlgebra random_dg_algebra(std::mt19937_64& rng, const DgGenOptions& opt = {});

// transfer of a random dg algebra; may carry honest higher products
AInfStructure random_minimal_ainf(std::mt19937_64& rng, int max_arity);

// diagonal, dual, or shifted modules over random structures
Bimodule random_bimodule(std::mt19937_64& rng, int max_dim = 4);

}  // namespace ainfty
