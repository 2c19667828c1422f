#include "ainfty/pairing.hpp"

#include <stdexcept>

namespace ainfty {

Scalar Pairing::at(Index i, Index j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? Scalar(0) : it->second;
}

Pairing make_pairing(SpacePtr space, int pair_dim,
                     std::map<std::pair<Index, Index>, Scalar> entries,
                     std::optional<SparseVec> trace) {
  Pairing p;
  p.space = std::move(space);
  p.pair_dim = pair_dim;
  p.trace = std::move(trace);
  for (auto& [ij, c] : entries)
    if (!is_zero(c)) p.entries.emplace(ij, c);
  for (const auto& [ij, c] : p.entries) {
    auto [i, j] = ij;
    if (p.space->deg(i) + p.space->deg(j) != pair_dim)
      throw std::invalid_argument("pairing: entry (" + p.space->label(i) + "," +
                                  p.space->label(j) + ") off degree " + std::to_string(pair_dim));
    Scalar mirror = p.at(j, i);
    if (koszul_sign(p.space->deg(i), p.space->deg(j)) * mirror != c)
      throw std::invalid_argument("pairing: not graded symmetric at (" + p.space->label(i) +
                                  "," + p.space->label(j) + ")");
  }
  return p;
}

std::map<Tuple, Scalar> cyclicity_defect(const AInfStructure& a, const Pairing& p, int n) {
  if (n > a.max_arity) throw std::invalid_argument("cyclicity_defect: arity overflow");
  if (!same_space(p.space, a.space))
    throw std::invalid_argument("cyclicity_defect: pairing lives on a different space");
  std::vector<MultiMap> m = convert_b_to_m(a);
  const SpacePtr& V = a.space;

  auto pair_with = [&](const SparseVec& v, Index x) {
    Scalar s(0);
    for (const auto& [i, c] : v) s += c * p.at(i, x);
    return s;
  };

  std::map<Tuple, Scalar> defect;
  // tuples (a_0,...,a_n) with total degree d + n - 2
  int want = p.pair_dim + n - 2;
  Tuple t(n + 1);
  std::function<void(int, int)> rec = [&](int s, int acc) {
    if (s == n + 1) {
      if (acc != want) return;
      Tuple head(t.begin(), t.end() - 1);
      SparseVec mh = m[n].eval(head);
      Scalar lhs = pair_with(mh, t[n]);
      Tuple tail(t.begin() + 1, t.end());
      SparseVec mt = m[n].eval(tail);
      Scalar rhs = pair_with(mt, t[0]);
      long rest = 0;
      for (int i = 1; i <= n; ++i) rest += V->deg(t[i]);
      Scalar sgn(parity_sign(n + static_cast<long>(V->deg(t[0])) * rest));
      Scalar val = lhs - sgn * rhs;
      if (!is_zero(val)) defect[t] = val;
      return;
    }
    for (Index i = 0; i < V->dim(); ++i) {
      t[s] = i;
      rec(s + 1, acc + V->deg(i));
    }
  };
  rec(0, 0);
  return defect;
}

Pairing induced_cohomology_pairing(const Pairing& p, const Splitting& s) {
  // splitting lives on the suspended space; pairing on the unsuspended one
  std::map<std::pair<Index, Index>, Scalar> entries;
  int hn = s.homology->dim();
  for (Index x = 0; x < hn; ++x)
    for (Index y = 0; y < hn; ++y) {
      Scalar acc(0);
      for (const auto& [i, ci] : s.h_basis[x])
        for (const auto& [j, cj] : s.h_basis[y]) acc += ci * cj * p.at(i, j);
      if (!is_zero(acc)) entries[{x, y}] = acc;
    }
  return make_pairing(unsuspend(s.homology), p.pair_dim, std::move(entries));
}

bool cohomologically_nondegenerate(const AInfStructure& a, const Pairing& p) {
  Splitting s = homology_splitting(b1_as_map(a));
  Pairing hp = induced_cohomology_pairing(p, s);
  int hn = s.homology->dim();
  if (hn == 0) return true;
  GradedMap m = make_map(hp.space, dual_space(hp.space), -hp.pair_dim);
  for (const auto& [ij, c] : hp.entries) m.set(ij.second, ij.first, c);
  return map_rank(m) == hn;
}

bool pairing_has_aux_degree(const Pairing& p, int value) {
  if (!p.space->has_aux()) return false;
  for (const auto& [ij, c] : p.entries) {
    (void)c;
    if (p.space->aux(ij.first) + p.space->aux(ij.second) != value) return false;
  }
  return true;
}

}  // namespace ainfty
