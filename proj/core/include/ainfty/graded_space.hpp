#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ainfty {

using Index = int;

// Finite basis with integer cohomological degree and an optional auxiliary
// degree. Immutable after construction; shared freely via SpacePtr.
class GradedSpace {
 public:
  GradedSpace(std::vector<std::string> labels, std::vector<int> degrees,
              std::optional<std::vector<int>> aux = std::nullopt);

  int dim() const { return static_cast<int>(labels_.size()); }
  const std::string& label(Index i) const { return labels_.at(i); }
  int deg(Index i) const { return degrees_.at(i); }
  bool has_aux() const { return aux_.has_value(); }
  int aux(Index i) const;
  Index index_of(const std::string& label) const;       // -1 if absent
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& degrees() const { return degrees_; }
  const std::optional<std::vector<int>>& aux_degrees() const { return aux_; }

  // degrees present in this space, ascending
  std::vector<int> degree_set() const;
  bool has_element_of(int degree, std::optional<int> aux) const;

 private:
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
  std::optional<std::vector<int>> aux_;
  std::map<std::string, Index> by_label_;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

SpacePtr make_space(std::vector<std::string> labels, std::vector<int> degrees,
                    std::optional<std::vector<int>> aux = std::nullopt);

// structural equality: labels, degrees and aux all coincide
bool same_space(const SpacePtr& a, const SpacePtr& b);

// (sV)^i = V^{i+1}: same labels, every degree lowered by one, aux unchanged.
SpacePtr suspend(const SpacePtr& v);
SpacePtr unsuspend(const SpacePtr& v);

SpacePtr shift_degrees(const SpacePtr& v, int delta);
SpacePtr shift_aux(const SpacePtr& v, int delta);

// degree-wise dual: label "x" becomes "x*", degree and aux negated
SpacePtr dual_space(const SpacePtr& v);

SpacePtr direct_sum(const SpacePtr& a, const SpacePtr& b);

// basis of the k-fold tensor power; labels joined with "|"
SpacePtr tensor_power(const SpacePtr& v, int k);
SpacePtr tensor_product(const std::vector<SpacePtr>& factors);

}  // namespace ainfty
