#include "ainfty/bimodule.hpp"

#include <stdexcept>

namespace ainfty {

const MultiMap& Bimodule::b(int k, int l) const {
  auto it = ops.find({k, l});
  if (it == ops.end())
    throw std::out_of_range("bimodule: b_{" + std::to_string(k) + "," + std::to_string(l) +
                            "} outside structure data");
  return it->second;
}

std::vector<SpacePtr> Bimodule::slots_for(int k, int l) const {
  std::vector<SpacePtr> s;
  s.insert(s.end(), k, algebra.sspace);
  s.push_back(sspace);
  s.insert(s.end(), l, algebra.sspace);
  return s;
}

MultiMap& Bimodule::ensure(int k, int l) {
  auto it = ops.find({k, l});
  if (it == ops.end())
    it = ops.emplace(std::make_pair(k, l), make_multi(slots_for(k, l), sspace, +1)).first;
  return it->second;
}

Bimodule make_bimodule(AInfStructure algebra, SpacePtr mspace, int max_arity) {
  Bimodule m;
  m.algebra = std::move(algebra);
  m.space = std::move(mspace);
  m.sspace = suspend(m.space);
  m.max_arity = max_arity;
  for (int k = 0; k < max_arity; ++k)
    for (int l = 0; k + l + 1 <= max_arity; ++l) m.ensure(k, l);
  return m;
}

Bimodule diagonal_bimodule(const AInfStructure& a) {
  Bimodule m = make_bimodule(a, a.space, a.max_arity);
  for (int k = 0; k < a.max_arity; ++k)
    for (int l = 0; k + l + 1 <= a.max_arity; ++l) {
      const MultiMap& src = a.b(k + l + 1);
      if (src.rule_backed())
        throw std::invalid_argument("diagonal_bimodule: rule-backed algebra");
      m.ensure(k, l).table = src.table;
    }
  return m;
}

SparseVec bimodule_relation_defect_at(const Bimodule& m, int k, int l, const Tuple& t) {
  const auto slots = m.slots_for(k, l);
  SparseVec acc;
  // inner b_j inside the left algebra block
  for (int j = 1; j <= k; ++j) {
    if (j > m.algebra.max_arity) break;
    const MultiMap& bj = m.algebra.b(j);
    for (int i = 0; i + j <= k; ++i)
      for (const auto& app : apply_inner(bj, t, i, slots))
        axpy(acc, app.coeff, m.b(k - j + 1, l).eval(app.tuple));
  }
  // inner b_{i,j} absorbing the module slot
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= l; ++j) {
      if (i + j + 1 > m.max_arity) continue;
      const MultiMap& bij = m.b(i, j);
      for (const auto& app : apply_inner(bij, t, k - i, slots))
        axpy(acc, app.coeff, m.b(k - i, l - j).eval(app.tuple));
    }
  // inner b_j inside the right algebra block
  for (int j = 1; j <= l; ++j) {
    if (j > m.algebra.max_arity) break;
    const MultiMap& bj = m.algebra.b(j);
    for (int s = 0; s + j <= l; ++s)
      for (const auto& app : apply_inner(bj, t, k + 1 + s, slots))
        axpy(acc, app.coeff, m.b(k, l - j + 1).eval(app.tuple));
  }
  return acc;
}

MultiMap bimodule_relation_defect(const Bimodule& m, int k, int l) {
  if (k + l + 1 > m.max_arity)
    throw std::invalid_argument("bimodule_relation_defect: arity overflow");
  MultiMap defect = make_multi(m.slots_for(k, l), m.sspace, +2);
  for_each_admissible_tuple(defect.slots, m.sspace, +2, [&](const Tuple& t) {
    SparseVec v = bimodule_relation_defect_at(m, k, l, t);
    if (!v.empty()) defect.table[t] = std::move(v);
  });
  return defect;
}

// calibration hook; see dev_calibrate
int g_dual_sign_bits = 1 | 4;
int g_kappa_bits = 1;
int g_pair_bits = 1;

namespace {

// Sign exponent of the dual structure maps, on suspended degrees.
//   alpha  = Σ degrees of the k left algebra letters (dual input order)
//   alphap = Σ degrees of the l right algebra letters
//   phi    = degree of the dual module letter
//   mu     = degree of the module argument being evaluated
//   tau    = Σ_{j<i} |a_j||a_i| over the left letters, taup the same on the right
long dual_sign_exponent(long alpha, long alphap, long phi, long mu, long tau, long taup) {
  int b = g_dual_sign_bits;
  long e = alpha * (phi + alphap);
  if (b & 1) e += phi;
  if (b & 2) e += mu;
  if (b & 4) e += alpha * mu;
  if (b & 8) e += alphap * mu;
  if (b & 16) e += tau;
  if (b & 32) e += taup;
  if (b & 64) e += alphap * phi;
  if (b & 128) e += alpha;
  if (b & 256) e += alphap;
  return e;
}

}  // namespace

Bimodule dual_bimodule(const Bimodule& m) {
  Bimodule d;
  d.algebra = m.algebra;
  d.space = dual_space(m.space);
  d.sspace = suspend(d.space);
  d.max_arity = m.max_arity;
  for (int k = 0; k < d.max_arity; ++k)
    for (int l = 0; k + l + 1 <= d.max_arity; ++l) d.ensure(k, l);

  const SpacePtr& sA = m.algebra.sspace;
  const SpacePtr& sM = m.sspace;
  const SpacePtr& sMd = d.sspace;

  for (const auto& [kl, mm] : m.ops) {
    int l = kl.first, k = kl.second;  // source op is b_{l,k}
    if (mm.rule_backed()) throw std::invalid_argument("dual_bimodule: rule-backed module");
    MultiMap& target = d.ensure(k, l);
    for (const auto& [u, vec] : mm.table) {
      // u = (c_1..c_l, m', d_1..d_k), vec = Σ coeff_μ e_μ
      Tuple cs(u.begin(), u.begin() + l);
      Index mprime = u[l];
      Tuple ds(u.begin() + l + 1, u.end());
      long alpha = 0, tau = 0;
      for (int j = 0; j < k; ++j) {
        for (int i = j + 1; i < k; ++i) tau += static_cast<long>(sA->deg(ds[j])) * sA->deg(ds[i]);
        alpha += sA->deg(ds[j]);
      }
      long alphap = 0, taup = 0;
      for (int tpos = 0; tpos < l; ++tpos) {
        for (int i = tpos + 1; i < l; ++i)
          taup += static_cast<long>(sA->deg(cs[tpos])) * sA->deg(cs[i]);
        alphap += sA->deg(cs[tpos]);
      }
      long mu = sM->deg(mprime);
      for (const auto& [miu, coeff] : vec) {
        long phi = sMd->deg(miu);
        Tuple in;
        in.reserve(k + 1 + l);
        in.insert(in.end(), ds.begin(), ds.end());
        in.push_back(miu);
        in.insert(in.end(), cs.begin(), cs.end());
        Scalar sgn(parity_sign(dual_sign_exponent(alpha, alphap, phi, mu, tau, taup)));
        target.add(in, mprime, sgn * coeff);
      }
    }
  }
  return d;
}

Bimodule shift_bimodule(const Bimodule& m, int r) {
  Bimodule s;
  s.algebra = m.algebra;
  s.space = shift_degrees(m.space, -r);
  s.sspace = suspend(s.space);
  s.max_arity = m.max_arity;
  for (const auto& [kl, mm] : m.ops) {
    MultiMap& target = s.ensure(kl.first, kl.second);
    Scalar sgn(parity_sign(static_cast<long>(r) * kl.first));
    for (const auto& [t, v] : mm.table) target.table[t] = scaled(v, sgn);
  }
  return s;
}

GradedMap double_dual_iso(const Bimodule& m) {
  SpacePtr dd = suspend(dual_space(dual_space(m.space)));
  GradedMap kappa = make_map(m.sspace, dd, 0);
  for (Index i = 0; i < m.sspace->dim(); ++i) {
    long d = m.sspace->deg(i);
    long e = 0;
    if (g_kappa_bits & 1) e += d;
    if (g_kappa_bits & 2) e += d * (d + 1) / 2;
    if (g_kappa_bits & 4) e += 1;
    kappa.cols[i] = SparseVec{{i, Scalar(parity_sign(e))}};
  }
  return kappa;
}

}  // namespace ainfty
