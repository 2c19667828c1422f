#include "ainfty/trivial_extension.hpp"

#include <stdexcept>

namespace ainfty {

extern int g_pair_bits;

AInfStructure trivial_extension_ainf(const AInfStructure& a, const Bimodule& m) {
  if (!same_space(a.space, m.algebra.space))
    throw std::invalid_argument("trivial_extension: module is over a different algebra");
  SpacePtr E = direct_sum(a.space, m.space);
  int na = a.space->dim();
  int K = std::min(a.max_arity, m.max_arity);
  bool aux = E->has_aux();
  AInfStructure ext = make_ainf(E, K, aux);

  for (int n = 1; n <= K; ++n) {
    MultiMap& target = ext.b(n);
    const MultiMap& ba = a.b(n);
    if (ba.rule_backed()) throw std::invalid_argument("trivial_extension: rule-backed algebra");
    target.table = ba.table;  // pure-A inputs, indices shared with E
    for (int k = 0; k + 1 <= n; ++k) {
      int l = n - 1 - k;
      if (!m.has(k, l)) continue;
      for (const auto& [t, v] : m.b(k, l).table) {
        Tuple u = t;
        u[k] += na;
        SparseVec shifted;
        for (const auto& [i, c] : v) shifted[i + na] = c;
        target.table[u] = std::move(shifted);
      }
    }
  }
  return ext;
}

std::vector<Index> extension_module_indices(const AInfStructure& a, const Bimodule& m) {
  std::vector<Index> idx;
  for (int i = 0; i < m.space->dim(); ++i) idx.push_back(a.space->dim() + i);
  return idx;
}

Pairing canonical_extension_pairing(const AInfStructure& ext, int algebra_dim) {
  const SpacePtr& E = ext.space;
  int na = algebra_dim, nm = E->dim() - algebra_dim;
  if (nm != na)
    throw std::invalid_argument("canonical_extension_pairing: module is not a dual of the algebra");
  int d = E->deg(0) + E->deg(na);  // |e| + |e*[shift]| is constant
  std::map<std::pair<Index, Index>, Scalar> entries;
  for (Index i = 0; i < na; ++i) {
    if (E->deg(i) + E->deg(na + i) != d)
      throw std::invalid_argument("canonical_extension_pairing: dual degrees not aligned");
    long q = E->deg(i);
    long e = 0;
    if (g_pair_bits & 1) e += q;
    if (g_pair_bits & 2) e += q * (q + 1) / 2;
    if (g_pair_bits & 4) e += 1;
    Scalar v(parity_sign(e));
    entries[{i, na + i}] = v;
    entries[{na + i, i}] = koszul_sign(E->deg(i), E->deg(na + i)) * v;
  }
  return make_pairing(E, d, std::move(entries));
}

std::pair<DgAlgebra, Pairing> dg_trivial_extension_with_pairing(const DgAlgebra& a) {
  AInfStructure ai = from_dg(a);
  Bimodule dual = dual_bimodule(diagonal_bimodule(ai));
  AInfStructure ext = trivial_extension_ainf(ai, dual);
  std::vector<MultiMap> m = convert_b_to_m(ext);

  DgAlgebra out = make_dg(ext.space);
  for (const auto& [t, v] : m[1].table) out.m1.cols[t[0]] = v;
  out.m2 = m[2];
  out.unit = a.unit;
  Pairing p = canonical_extension_pairing(ext, a.space->dim());
  return {std::move(out), std::move(p)};
}

namespace {

// coordinates of each basis vector of `space` in the column system
// [embed columns | complement unit vectors]; dense exact solve
std::vector<SparseVec> adapted_coordinates(const SpacePtr& space, const GradedMap& embed,
                                           const std::vector<Index>& complement) {
  int n = space->dim();
  int ns = embed.src->dim();
  if (ns + static_cast<int>(complement.size()) != n)
    throw std::invalid_argument("recognize: splitting does not span");
  std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(2 * n, Scalar(0)));
  for (Index j = 0; j < ns; ++j)
    for (const auto& [i, c] : embed.column(j)) a[i][j] = c;
  for (size_t j = 0; j < complement.size(); ++j) a[complement[j]][ns + j] = Scalar(1);
  for (int i = 0; i < n; ++i) a[i][n + i] = Scalar(1);

  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!is_zero(a[r][col])) { piv = r; break; }
    if (piv < 0) throw std::invalid_argument("recognize: splitting is singular");
    std::swap(a[col], a[piv]);
    Scalar lead = a[col][col];
    for (int c = 0; c < 2 * n; ++c) a[col][c] /= lead;
    for (int r = 0; r < n; ++r) {
      if (r == col || is_zero(a[r][col])) continue;
      Scalar f = a[r][col];
      for (int c = col; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<SparseVec> coords(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (!is_zero(a[i][n + j])) coords[j][i] = a[i][n + j];
  return coords;
}

}  // namespace

RecognitionResult recognize_trivial_extension(const AInfStructure& aprime,
                                              const AInfStructure& a_sub,
                                              const GradedMap& embed,
                                              const std::vector<Index>& complement,
                                              const Pairing& p) {
  RecognitionResult res;
  auto fail = [&](const std::string& why) {
    res.ok = false;
    res.failure = why;
    return res;
  };

  if (!aprime.b(1).table.empty()) return fail("input structure is not minimal (b_1 != 0)");
  if (!same_space(p.space, aprime.space)) return fail("pairing lives on a different space");
  if (!aprime.space->has_aux()) return fail("splitting not aux-graded");
  if (!pairing_has_aux_degree(p, 1)) return fail("pairing does not have auxiliary degree one");
  if (!same_space(embed.src, a_sub.space)) return fail("embedding source mismatch");
  if (!same_space(embed.dst, aprime.space)) return fail("embedding target mismatch");

  for (int n = 1; n <= aprime.max_arity; ++n)
    if (!cyclicity_defect(aprime, p, n).empty())
      return fail("pairing not cyclic at arity " + std::to_string(n));
  if (!cohomologically_nondegenerate(aprime, p)) return fail("pairing degenerate");

  // certifies the splitting [A_sub | I] spans
  try {
    adapted_coordinates(aprime.space, embed, complement);
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  if (!a_sub.space->has_aux()) return fail("subalgebra not aux-graded");

  // pairing-induced identification of I with the dual of A_sub
  int ns = a_sub.space->dim();
  int ni = static_cast<int>(complement.size());
  if (ni != ns) return fail("complement dimension differs from dim A_sub");
  int d = p.pair_dim;
  std::vector<std::vector<Scalar>> psi(ns, std::vector<Scalar>(ni, Scalar(0)));
  for (int c = 0; c < ni; ++c)
    for (int x = 0; x < ns; ++x) {
      Scalar acc(0);
      for (const auto& [i, ci] : embed.column(x)) acc += ci * p.at(complement[c], i);
      psi[x][c] = acc;
    }

  // model: A_sub ⊕ A_sub*[-d]. The dual carries aux -aux(e); the module part
  // of the extension sits in aux 1-aux(e), one up.
  Bimodule model_mod = shift_bimodule(dual_bimodule(diagonal_bimodule(a_sub)), -d);
  model_mod.space = shift_aux(model_mod.space, +1);
  model_mod.sspace = suspend(model_mod.space);
  for (auto& [kl, mm] : model_mod.ops) {
    mm.slots = model_mod.slots_for(kl.first, kl.second);
    mm.dst = model_mod.sspace;
  }
  AInfStructure model = trivial_extension_ainf(a_sub, model_mod);

  // witness: embed on the algebra part, psi^{-1} (dual basis) on the module part
  GradedMap phi = make_map(model.space, aprime.space, 0);
  for (Index x = 0; x < ns; ++x) phi.cols[x] = embed.column(x);
  // solve psi z = e_x for each dual generator x*
  {
    int n = ns;
    std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(2 * n, Scalar(0)));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) a[r][c] = psi[r][c];
    for (int i = 0; i < n; ++i) a[i][n + i] = Scalar(1);
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (!is_zero(a[r][col])) { piv = r; break; }
      if (piv < 0) return fail("pairing degenerate between complement and image of A_sub");
      std::swap(a[col], a[piv]);
      Scalar lead = a[col][col];
      for (int c = 0; c < 2 * n; ++c) a[col][c] /= lead;
      for (int r = 0; r < n; ++r) {
        if (r == col || is_zero(a[r][col])) continue;
        Scalar f = a[r][col];
        for (int c = col; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
      }
    }
    for (int x = 0; x < n; ++x) {
      SparseVec col;
      for (int c = 0; c < n; ++c)
        if (!is_zero(a[c][n + x])) add_term(col, complement[c], a[c][n + x]);
      phi.cols[ns + x] = std::move(col);
    }
  }

  // structure constants must agree under phi at every arity with data
  int K = std::min(model.max_arity, aprime.max_arity);
  const SpacePtr& sM = model.sspace;
  for (int n = 1; n <= K; ++n) {
    bool mismatch = false;
    std::string where;
    for_each_admissible_tuple(std::vector<SpacePtr>(n, sM), aprime.sspace, +1,
                              [&](const Tuple& t) {
                                if (mismatch) return;
                                SparseVec lhs = phi.apply(model.b(n).eval(t));
                                std::vector<SparseVec> imgs(n);
                                std::vector<const SparseVec*> ptrs(n);
                                for (int s = 0; s < n; ++s) {
                                  imgs[s] = phi.column(t[s]);
                                  ptrs[s] = &imgs[s];
                                }
                                SparseVec rhs = aprime.b(n).eval_vectors(ptrs);
                                axpy(lhs, Scalar(-1), rhs);
                                if (!lhs.empty()) {
                                  mismatch = true;
                                  int mods = 0;
                                  for (int s = 0; s < n; ++s)
                                    if (t[s] >= ns) ++mods;
                                  where = "b_" + std::to_string(n) + " with " +
                                          std::to_string(mods) + " module slots at (";
                                  for (int s = 0; s < n; ++s)
                                    where += (s ? "," : "") + sM->label(t[s]);
                                  where += ")";
                                }
                              });
    if (mismatch) return fail("structure constants differ: " + where);
  }

  res.ok = true;
  res.witness = phi;
  return res;
}

}  // namespace ainfty
