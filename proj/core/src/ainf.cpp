#include "ainfty/ainf.hpp"

#include <set>
#include <stdexcept>

namespace ainfty {

const MultiMap& AInfStructure::b(int k) const {
  if (k < 1 || k > max_arity) throw std::out_of_range("b_k: arity outside structure data");
  return ops[k];
}

MultiMap& AInfStructure::b(int k) {
  if (k < 1 || k > max_arity) throw std::out_of_range("b_k: arity outside structure data");
  return ops[k];
}

AInfStructure make_ainf(SpacePtr space, int max_arity, bool aux_flag) {
  AInfStructure a;
  a.space = space;
  a.sspace = suspend(space);
  a.max_arity = max_arity;
  a.aux_flag = aux_flag;
  a.ops.resize(max_arity + 1);
  for (int k = 1; k <= max_arity; ++k)
    a.ops[k] = make_multi_uniform(a.sspace, k, a.sspace, +1);
  return a;
}

DgAlgebra make_dg(SpacePtr space) {
  DgAlgebra d;
  d.space = space;
  d.m1 = make_map(space, space, +1);
  d.m2 = make_multi_uniform(space, 2, space, 0);
  return d;
}

void check_dg(const DgAlgebra& a) {
  if (a.m2.rule_backed())
    throw std::invalid_argument("check_dg: rule-backed product, check on a finite core instead");
  check_map_degrees(a.m1);
  check_multi_degrees(a.m2);
  if (!compose(a.m1, a.m1).is_zero()) throw std::invalid_argument("dg: m1² != 0");
  const SpacePtr& V = a.space;
  int n = V->dim();
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      // m1 m2(x,y) = m2(m1 x, y) + (-1)^|x| m2(x, m1 y)
      SparseVec lhs = a.m1.apply(a.m2.eval({x, y}));
      SparseVec m1x = a.m1.column(x), m1y = a.m1.column(y);
      SparseVec uy = unit_vec(y), ux = unit_vec(x);
      SparseVec rhs = a.m2.eval_vectors({&m1x, &uy});
      axpy(rhs, Scalar(parity_sign(V->deg(x))), a.m2.eval_vectors({&ux, &m1y}));
      axpy(lhs, Scalar(-1), rhs);
      if (!lhs.empty())
        throw std::invalid_argument("dg: Leibniz fails at (" + V->label(x) + "," + V->label(y) + ")");
    }
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z) {
        SparseVec xy = a.m2.eval({x, y}), yz = a.m2.eval({y, z});
        SparseVec uz = unit_vec(z), ux = unit_vec(x);
        SparseVec lhs = a.m2.eval_vectors({&xy, &uz});
        axpy(lhs, Scalar(-1), a.m2.eval_vectors({&ux, &yz}));
        if (!lhs.empty())
          throw std::invalid_argument("dg: associativity fails at (" + V->label(x) + "," +
                                      V->label(y) + "," + V->label(z) + ")");
      }
}

namespace {

// diagonal sign of the b <-> m conversion on a basis tuple, unsuspended degrees
int conversion_sign(const SpacePtr& unsusp, const Tuple& t) {
  int k = static_cast<int>(t.size());
  long e = 0;
  for (int i = 0; i < k; ++i) e += static_cast<long>(k - 1 - i) * unsusp->deg(t[i]);
  return parity_sign(e);
}

}  // namespace

AInfStructure from_dg(const DgAlgebra& a) {
  if (!a.m2.rule_backed()) check_dg(a);
  bool aux = a.space->has_aux();
  AInfStructure r = make_ainf(a.space, 2, aux);
  for (const auto& [j, col] : a.m1.cols) r.b(1).table[{j}] = col;
  if (a.m2.rule_backed()) {
    const MultiMap m2 = a.m2;
    const SpacePtr unsusp = a.space;
    r.b(2).rule = [m2, unsusp](const Tuple& t) {
      return scaled(m2.eval(t), Scalar(conversion_sign(unsusp, t)));
    };
  } else {
    for (const auto& [t, v] : a.m2.table)
      r.b(2).table[t] = scaled(v, Scalar(conversion_sign(a.space, t)));
  }
  return r;
}

std::vector<MultiMap> convert_b_to_m(const AInfStructure& a) {
  std::vector<MultiMap> m(a.max_arity + 1);
  for (int k = 1; k <= a.max_arity; ++k) {
    m[k] = make_multi_uniform(a.space, k, a.space, 2 - k);
    if (a.b(k).rule_backed())
      throw std::invalid_argument("convert_b_to_m: rule-backed structure");
    for (const auto& [t, v] : a.b(k).table)
      m[k].table[t] = scaled(v, Scalar(conversion_sign(a.space, t)));
  }
  return m;
}

AInfStructure ainf_from_m(const SpacePtr& space, const std::vector<MultiMap>& m, bool aux_flag) {
  int K = static_cast<int>(m.size()) - 1;
  AInfStructure r = make_ainf(space, K, aux_flag);
  for (int k = 1; k <= K; ++k)
    for (const auto& [t, v] : m[k].table)
      r.b(k).table[t] = scaled(v, Scalar(conversion_sign(space, t)));
  return r;
}

SparseVec stasheff_defect_at(const AInfStructure& a, const Tuple& t) {
  int n = static_cast<int>(t.size());
  std::vector<SpacePtr> slotspaces(n, a.sspace);
  SparseVec acc;
  for (int j = 1; j <= n; ++j) {
    int outer = n - j + 1;
    if (j > a.max_arity || outer > a.max_arity) continue;
    const MultiMap& bj = a.b(j);
    const MultiMap& bout = a.b(outer);
    for (int i = 0; i + j <= n; ++i)
      for (const auto& app : apply_inner(bj, t, i, slotspaces))
        axpy(acc, app.coeff, bout.eval(app.tuple));
  }
  return acc;
}

MultiMap stasheff_defect(const AInfStructure& a, int n) {
  if (n > a.max_arity)
    throw std::invalid_argument("stasheff_defect: arity " + std::to_string(n) +
                                " exceeds structure data");
  MultiMap defect = make_multi_uniform(a.sspace, n, a.sspace, +2);
  for_each_admissible_tuple(defect.slots, a.sspace, +2, [&](const Tuple& t) {
    SparseVec v = stasheff_defect_at(a, t);
    if (!v.empty()) defect.table[t] = std::move(v);
  });
  return defect;
}

const MultiMap* AInfMorphism::f(int k) const {
  if (k < 1 || k > max_arity()) return nullptr;
  return &fs[k];
}

AInfMorphism identity_morphism(const AInfStructure& a) {
  AInfMorphism m;
  m.src = a;
  m.dst = a;
  m.fs.resize(2);
  m.fs[1] = make_multi_uniform(a.sspace, 1, a.sspace, 0);
  for (Index i = 0; i < a.sspace->dim(); ++i) m.fs[1].table[{i}] = unit_vec(i);
  return m;
}

namespace {

void compositions(int n, int r, std::vector<int>& part, const std::function<void()>& fn) {
  if (r == 1) {
    if (n >= 1) {
      part.push_back(n);
      fn();
      part.pop_back();
    }
    return;
  }
  for (int first = 1; first + (r - 1) <= n; ++first) {
    part.push_back(first);
    compositions(n - first, r - 1, part, fn);
    part.pop_back();
  }
}

}  // namespace

SparseVec morphism_defect_at(const AInfMorphism& f, const Tuple& t) {
  int n = static_cast<int>(t.size());
  std::vector<SpacePtr> slotspaces(n, f.src.sspace);
  SparseVec acc;
  // F_{n-j+1}(id ⊗ b_j ⊗ id)
  for (int j = 1; j <= std::min(n, f.src.max_arity); ++j) {
    const MultiMap* fout = f.f(n - j + 1);
    if (!fout) continue;
    const MultiMap& bj = f.src.b(j);
    for (int i = 0; i + j <= n; ++i)
      for (const auto& app : apply_inner(bj, t, i, slotspaces))
        axpy(acc, app.coeff, fout->eval(app.tuple));
  }
  // - b_r(F_{i_1} ⊗ ... ⊗ F_{i_r}); all F components have degree zero
  for (int r = 1; r <= std::min(n, f.dst.max_arity); ++r) {
    std::vector<int> part;
    compositions(n, r, part, [&]() {
      std::vector<SparseVec> pieces(r);
      int at = 0;
      for (int s = 0; s < r; ++s) {
        const MultiMap* fk = f.f(part[s]);
        if (!fk) return;
        Tuple block(t.begin() + at, t.begin() + at + part[s]);
        pieces[s] = fk->eval(block);
        at += part[s];
        if (pieces[s].empty()) return;
      }
      std::vector<const SparseVec*> ptrs;
      for (auto& p : pieces) ptrs.push_back(&p);
      axpy(acc, Scalar(-1), f.dst.b(r).eval_vectors(ptrs));
    });
  }
  return acc;
}

MultiMap morphism_defect(const AInfMorphism& f, int n) {
  if (n > f.src.max_arity)
    throw std::invalid_argument("morphism_defect: arity exceeds structure data");
  MultiMap defect = make_multi_uniform(f.src.sspace, n, f.dst.sspace, +1);
  for_each_admissible_tuple(defect.slots, f.dst.sspace, +1, [&](const Tuple& t) {
    SparseVec v = morphism_defect_at(f, t);
    if (!v.empty()) defect.table[t] = std::move(v);
  });
  return defect;
}

GradedMap b1_as_map(const AInfStructure& a) {
  GradedMap d = make_map(a.sspace, a.sspace, +1);
  if (a.b(1).rule_backed()) {
    for (Index j = 0; j < a.sspace->dim(); ++j) {
      SparseVec v = a.b(1).eval({j});
      if (!v.empty()) d.cols[j] = std::move(v);
    }
  } else {
    for (const auto& [t, v] : a.b(1).table) d.cols[t[0]] = v;
  }
  return d;
}

bool is_quasi_isomorphism(const AInfMorphism& f) {
  Splitting ss = homology_splitting(b1_as_map(f.src));
  Splitting sd = homology_splitting(b1_as_map(f.dst));
  if (ss.homology->dim() != sd.homology->dim()) return false;
  if (f.fs.size() < 2) return ss.homology->dim() == 0;
  GradedMap f1 = make_map(f.src.sspace, f.dst.sspace, 0);
  for (const auto& [t, v] : f.fs[1].table) f1.cols[t[0]] = v;
  GradedMap induced = compose(sd.project, compose(f1, ss.include));
  return map_rank(induced) == ss.homology->dim();
}

bool arity_excluded_by_grading(const SpacePtr& slot, int arity, const SpacePtr& dst,
                               int degree, bool use_aux, int aux_shift) {
  use_aux = use_aux && slot->has_aux() && dst->has_aux();
  std::set<std::pair<int, int>> classes;
  for (Index i = 0; i < slot->dim(); ++i)
    classes.insert({slot->deg(i), use_aux ? slot->aux(i) : 0});
  if (classes.size() > 8) return false;  // too many classes to certify cheaply
  std::set<std::pair<int, int>> targets;
  for (Index i = 0; i < dst->dim(); ++i)
    targets.insert({dst->deg(i), use_aux ? dst->aux(i) : 0});

  std::vector<std::pair<int, int>> cls(classes.begin(), classes.end());
  bool reachable = false;
  std::function<void(size_t, int, int, int)> rec = [&](size_t ci, int left, int dsum, int asum) {
    if (reachable) return;
    if (ci + 1 == cls.size()) {
      int d = dsum + left * cls[ci].first + degree;
      int a = asum + left * cls[ci].second + aux_shift;
      if (targets.count({d, use_aux ? a : 0})) reachable = true;
      return;
    }
    for (int take = 0; take <= left; ++take)
      rec(ci + 1, left - take, dsum + take * cls[ci].first, asum + take * cls[ci].second);
  };
  if (cls.empty()) return true;
  rec(0, arity, 0, 0);
  return !reachable;
}

}  // namespace ainfty
