#pragma once

#include <functional>
#include <vector>

#include "ainfty/graded_map.hpp"

namespace ainfty {

using Tuple = std::vector<Index>;

// Multilinear map slots[0] ⊗ ... ⊗ slots[k-1] -> dst. Coefficients live in a
// sparse table keyed by input tuples; a structure too large to materialize can
// instead carry an evaluation rule.
struct MultiMap {
  std::vector<SpacePtr> slots;
  SpacePtr dst;
  int degree = 0;
  std::map<Tuple, SparseVec> table;
  std::function<SparseVec(const Tuple&)> rule;  // consulted iff set

  int arity() const { return static_cast<int>(slots.size()); }
  bool rule_backed() const { return static_cast<bool>(rule); }
  SparseVec eval(const Tuple& t) const;
  // multilinear extension; xs.size() == arity()
  SparseVec eval_vectors(const std::vector<const SparseVec*>& xs) const;
  void add(const Tuple& t, Index out, const Scalar& c);
  bool is_zero() const;
  int deg_in(const Tuple& t) const;  // sum of slot degrees
};

MultiMap make_multi(std::vector<SpacePtr> slots, SpacePtr dst, int degree);
MultiMap make_multi_uniform(const SpacePtr& slot, int arity, SpacePtr dst, int degree);

// every stored entry respects degree (and aux shift when given)
void check_multi_degrees(const MultiMap& f, std::optional<int> aux_shift = std::nullopt);

// Koszul rule for applying a tensor product of maps: moving a degree-|f| map
// past an argument block of degree d costs (-1)^(|f| d). Exponent for
// f_1 ⊗ ... ⊗ f_r applied to blocks X_1,...,X_r is sum_{i<j} |f_j| |X_i|.
//
// apply_inner: evaluate id^{⊗pre} ⊗ g ⊗ id^{⊗post} on the tuple t over
// space `slotspace`, returning the signed results as (tuple, coefficient,
// replaced-slot value) expansions assembled into a list.
struct InnerApplication {
  Tuple tuple;   // t with slots [pre, pre+g.arity) replaced by one output index
  Scalar coeff;  // includes the Koszul sign
};
std::vector<InnerApplication> apply_inner(const MultiMap& g, const Tuple& t, int pre,
                                          const std::vector<SpacePtr>& slot_spaces);

// spec-level tensor_map on materialized spaces: (f⊗g)(x⊗y) =
// (-1)^(|g||x|) f(x)⊗g(y), extended associatively; degree = sum of degrees.
GradedMap tensor_map(const std::vector<GradedMap>& maps);

// iterate all tuples of given arity whose total degree lands in the degree
// set of `target` shifted by `degree`; calls fn(tuple). Prunes by degree
// reachability, which matters on spaces with few distinct degrees.
void for_each_admissible_tuple(const std::vector<SpacePtr>& slots, const SpacePtr& target,
                               int degree, const std::function<void(const Tuple&)>& fn);

}  // namespace ainfty
