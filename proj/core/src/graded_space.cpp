#include "ainfty/graded_space.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ainfty {

GradedSpace::GradedSpace(std::vector<std::string> labels, std::vector<int> degrees,
                         std::optional<std::vector<int>> aux)
    : labels_(std::move(labels)), degrees_(std::move(degrees)), aux_(std::move(aux)) {
  if (labels_.size() != degrees_.size())
    throw std::invalid_argument("GradedSpace: label/degree count mismatch");
  if (aux_ && aux_->size() != labels_.size())
    throw std::invalid_argument("GradedSpace: aux degree map not total");
  for (Index i = 0; i < dim(); ++i) {
    auto [it, fresh] = by_label_.emplace(labels_[i], i);
    if (!fresh) throw std::invalid_argument("GradedSpace: duplicate label " + labels_[i]);
  }
}

int GradedSpace::aux(Index i) const {
  if (!aux_) throw std::logic_error("GradedSpace: no auxiliary grading");
  return aux_->at(i);
}

Index GradedSpace::index_of(const std::string& label) const {
  auto it = by_label_.find(label);
  return it == by_label_.end() ? -1 : it->second;
}

std::vector<int> GradedSpace::degree_set() const {
  std::set<int> s(degrees_.begin(), degrees_.end());
  return {s.begin(), s.end()};
}

bool GradedSpace::has_element_of(int degree, std::optional<int> aux) const {
  for (Index i = 0; i < dim(); ++i) {
    if (degrees_[i] != degree) continue;
    if (aux && aux_ && (*aux_)[i] != *aux) continue;
    return true;
  }
  return false;
}

SpacePtr make_space(std::vector<std::string> labels, std::vector<int> degrees,
                    std::optional<std::vector<int>> aux) {
  return std::make_shared<GradedSpace>(std::move(labels), std::move(degrees), std::move(aux));
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->labels() == b->labels() && a->degrees() == b->degrees() &&
         a->aux_degrees() == b->aux_degrees();
}

SpacePtr shift_degrees(const SpacePtr& v, int delta) {
  std::vector<int> degs = v->degrees();
  for (int& d : degs) d += delta;
  return make_space(v->labels(), std::move(degs), v->aux_degrees());
}

SpacePtr suspend(const SpacePtr& v) { return shift_degrees(v, -1); }
SpacePtr unsuspend(const SpacePtr& v) { return shift_degrees(v, +1); }

SpacePtr shift_aux(const SpacePtr& v, int delta) {
  if (!v->has_aux()) throw std::invalid_argument("shift_aux: no auxiliary grading");
  std::vector<int> aux = *v->aux_degrees();
  for (int& a : aux) a += delta;
  return make_space(v->labels(), v->degrees(), std::move(aux));
}

SpacePtr dual_space(const SpacePtr& v) {
  std::vector<std::string> labels;
  std::vector<int> degs;
  labels.reserve(v->dim());
  for (Index i = 0; i < v->dim(); ++i) {
    labels.push_back(v->label(i) + "*");
    degs.push_back(-v->deg(i));
  }
  std::optional<std::vector<int>> aux;
  if (v->has_aux()) {
    aux.emplace();
    for (Index i = 0; i < v->dim(); ++i) aux->push_back(-v->aux(i));
  }
  return make_space(std::move(labels), std::move(degs), std::move(aux));
}

SpacePtr direct_sum(const SpacePtr& a, const SpacePtr& b) {
  std::vector<std::string> labels = a->labels();
  labels.insert(labels.end(), b->labels().begin(), b->labels().end());
  std::vector<int> degs = a->degrees();
  degs.insert(degs.end(), b->degrees().begin(), b->degrees().end());
  std::optional<std::vector<int>> aux;
  if (a->has_aux() != b->has_aux())
    throw std::invalid_argument("direct_sum: one summand graded, one not");
  if (a->has_aux()) {
    aux = *a->aux_degrees();
    aux->insert(aux->end(), b->aux_degrees()->begin(), b->aux_degrees()->end());
  }
  return make_space(std::move(labels), std::move(degs), std::move(aux));
}

SpacePtr tensor_product(const std::vector<SpacePtr>& factors) {
  if (factors.empty()) return make_space({"()"}, {0});
  std::vector<std::string> labels{""};
  std::vector<int> degs{0};
  std::vector<int> aux{0};
  bool graded = true;
  for (const auto& f : factors) graded = graded && f->has_aux();
  for (const auto& f : factors) {
    std::vector<std::string> nl;
    std::vector<int> nd, na;
    for (size_t w = 0; w < labels.size(); ++w)
      for (Index i = 0; i < f->dim(); ++i) {
        nl.push_back(labels[w].empty() ? f->label(i) : labels[w] + "|" + f->label(i));
        nd.push_back(degs[w] + f->deg(i));
        if (graded) na.push_back(aux[w] + f->aux(i));
      }
    labels = std::move(nl);
    degs = std::move(nd);
    aux = std::move(na);
  }
  return make_space(std::move(labels), std::move(degs),
                    graded ? std::optional<std::vector<int>>(std::move(aux)) : std::nullopt);
}

SpacePtr tensor_power(const SpacePtr& v, int k) {
  return tensor_product(std::vector<SpacePtr>(k, v));
}

}  // namespace ainfty
