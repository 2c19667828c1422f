#pragma once

#include "ainfty/bimodule.hpp"
#include "ainfty/pairing.hpp"

namespace ainfty {

// Square-zero extension A ⊕ M: b_n restricted to pure-A inputs is A's b_n,
// inputs with exactly one M slot use b_{k,l}, two or more M slots give zero.
// Module labels must not collide with algebra labels.
AInfStructure trivial_extension_ainf(const AInfStructure& a, const Bimodule& m);

// which extension indices came from the module part
std::vector<Index> extension_module_indices(const AInfStructure& a, const Bimodule& m);

// The pairing <(a1,b1*),(a2,b2*)> = tr(product), tr reading the dual part of
// an extension element against its algebra part. Requires M to be A* up to a
// degree shift (basis of M = basis of A dualized, in order).
Pairing canonical_extension_pairing(const AInfStructure& ext, int algebra_dim);

// dg trivial extension A(A*) with m·m' = 0 and the trace pairing
std::pair<DgAlgebra, Pairing> dg_trivial_extension_with_pairing(const DgAlgebra& a);

struct RecognitionResult {
  bool ok = false;
  std::string failure;            // first failing identity when !ok
  std::optional<GradedMap> witness;  // iso from the model extension onto Aprime
};

// Decides whether the minimal structure Aprime, with the splitting
// Aprime = image(embed) ⊕ span(complement) and cyclic nondegenerate pairing
// p of aux degree one, is the trivial extension of A_sub by its shifted dual
// bimodule. Verifies strata, cyclicity, and the structure constants under
// the pairing-induced identification; returns the witness isomorphism.
RecognitionResult recognize_trivial_extension(const AInfStructure& aprime,
                                              const AInfStructure& a_sub,
                                              const GradedMap& embed,
                                              const std::vector<Index>& complement,
                                              const Pairing& p);

}  // namespace ainfty
