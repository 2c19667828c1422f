#include "ainfty/multi_map.hpp"

#include <stdexcept>

namespace ainfty {

SparseVec MultiMap::eval(const Tuple& t) const {
  if (static_cast<int>(t.size()) != arity())
    throw std::invalid_argument("MultiMap::eval: arity mismatch");
  if (rule) return rule(t);
  auto it = table.find(t);
  return it == table.end() ? SparseVec{} : it->second;
}

SparseVec MultiMap::eval_vectors(const std::vector<const SparseVec*>& xs) const {
  if (static_cast<int>(xs.size()) != arity())
    throw std::invalid_argument("MultiMap::eval_vectors: arity mismatch");
  SparseVec out;
  Tuple t(arity());
  Scalar c;
  std::function<void(int, const Scalar&)> rec = [&](int slot, const Scalar& acc) {
    if (slot == arity()) {
      axpy(out, acc, eval(t));
      return;
    }
    for (const auto& [i, ci] : *xs[slot]) {
      t[slot] = i;
      rec(slot + 1, acc * ci);
    }
  };
  rec(0, Scalar(1));
  return out;
}

void MultiMap::add(const Tuple& t, Index out, const Scalar& c) {
  if (ainfty::is_zero(c)) return;
  auto& v = table[t];
  add_term(v, out, c);
  if (v.empty()) table.erase(t);
}

bool MultiMap::is_zero() const {
  for (const auto& [t, v] : table)
    if (!v.empty()) return false;
  return true;
}

int MultiMap::deg_in(const Tuple& t) const {
  int d = 0;
  for (int s = 0; s < arity(); ++s) d += slots[s]->deg(t[s]);
  return d;
}

MultiMap make_multi(std::vector<SpacePtr> slots, SpacePtr dst, int degree) {
  MultiMap m;
  m.slots = std::move(slots);
  m.dst = std::move(dst);
  m.degree = degree;
  return m;
}

MultiMap make_multi_uniform(const SpacePtr& slot, int arity, SpacePtr dst, int degree) {
  return make_multi(std::vector<SpacePtr>(arity, slot), std::move(dst), degree);
}

void check_multi_degrees(const MultiMap& f, std::optional<int> aux_shift) {
  for (const auto& [t, v] : f.table) {
    int din = f.deg_in(t);
    int ain = 0;
    bool graded = f.dst->has_aux();
    for (int s = 0; s < f.arity() && graded; ++s) {
      if (!f.slots[s]->has_aux()) graded = false;
      else ain += f.slots[s]->aux(t[s]);
    }
    for (const auto& [i, c] : v) {
      (void)c;
      if (f.dst->deg(i) != din + f.degree)
        throw std::invalid_argument("multilinear entry violates degree at output " +
                                    f.dst->label(i));
      if (aux_shift && graded && f.dst->aux(i) != ain + *aux_shift)
        throw std::invalid_argument("multilinear entry violates aux degree at output " +
                                    f.dst->label(i));
    }
  }
}

std::vector<InnerApplication> apply_inner(const MultiMap& g, const Tuple& t, int pre,
                                          const std::vector<SpacePtr>& slot_spaces) {
  int ga = g.arity();
  int prefix_deg = 0;
  for (int s = 0; s < pre; ++s) prefix_deg += slot_spaces[s]->deg(t[s]);
  Scalar sign = koszul_sign(g.degree, prefix_deg);

  Tuple inner(t.begin() + pre, t.begin() + pre + ga);
  SparseVec gv = g.eval(inner);

  std::vector<InnerApplication> out;
  out.reserve(gv.size());
  for (const auto& [y, c] : gv) {
    Tuple nt;
    nt.reserve(t.size() - ga + 1);
    nt.insert(nt.end(), t.begin(), t.begin() + pre);
    nt.push_back(y);
    nt.insert(nt.end(), t.begin() + pre + ga, t.end());
    out.push_back({std::move(nt), sign * c});
  }
  return out;
}

GradedMap tensor_map(const std::vector<GradedMap>& maps) {
  if (maps.empty()) throw std::invalid_argument("tensor_map: empty factor list");
  std::vector<SpacePtr> srcs, dsts;
  int degree = 0;
  for (const auto& f : maps) {
    srcs.push_back(f.src);
    dsts.push_back(f.dst);
    degree += f.degree;
  }
  SpacePtr S = tensor_product(srcs), D = tensor_product(dsts);
  GradedMap r = make_map(S, D, degree);

  int n = static_cast<int>(maps.size());
  std::vector<int> dims(n);
  for (int s = 0; s < n; ++s) dims[s] = srcs[s]->dim();

  // enumerate source tuples by mixed radix over factor bases
  Tuple t(n, 0);
  std::vector<int> ddims(n);
  for (int s = 0; s < n; ++s) ddims[s] = dsts[s]->dim();
  auto flat_src = [&](const Tuple& u) {
    long f = 0;
    for (int s = 0; s < n; ++s) f = f * dims[s] + u[s];
    return static_cast<Index>(f);
  };
  auto flat_dst = [&](const Tuple& u) {
    long f = 0;
    for (int s = 0; s < n; ++s) f = f * ddims[s] + u[s];
    return static_cast<Index>(f);
  };

  std::function<void(int)> rec = [&](int slot) {
    if (slot == n) {
      // sign exponent sum_{i<j} |f_j| |x_i|
      long se = 0;
      {
        long run = 0;
        for (int j = 0; j < n; ++j) {
          se += static_cast<long>(maps[j].degree & 1) * (run & 1);
          run += srcs[j]->deg(t[j]);
        }
      }
      Scalar sign((se & 1) ? -1 : 1);
      // expand product of columns
      SparseVec acc;  // over flattened dst
      std::vector<SparseVec> colv(n);
      for (int s = 0; s < n; ++s) {
        colv[s] = maps[s].column(t[s]);
        if (colv[s].empty()) return;
      }
      Tuple o(n, 0);
      std::function<void(int, const Scalar&)> expand = [&](int s, const Scalar& c) {
        if (s == n) {
          add_term(acc, flat_dst(o), c);
          return;
        }
        for (const auto& [y, cy] : colv[s]) {
          o[s] = y;
          expand(s + 1, c * cy);
        }
      };
      expand(0, sign);
      if (!acc.empty()) r.cols[flat_src(t)] = std::move(acc);
      return;
    }
    for (int i = 0; i < dims[slot]; ++i) {
      t[slot] = i;
      rec(slot + 1);
    }
  };
  rec(0);
  return r;
}

void for_each_admissible_tuple(const std::vector<SpacePtr>& slots, const SpacePtr& target,
                               int degree, const std::function<void(const Tuple&)>& fn) {
  int n = static_cast<int>(slots.size());
  std::vector<int> lo(n + 1, 0), hi(n + 1, 0);  // partial min/max degree of slots s..n-1
  for (int s = n - 1; s >= 0; --s) {
    auto ds = slots[s]->degree_set();
    if (ds.empty()) return;  // empty slot space: no tuples at all
    lo[s] = lo[s + 1] + ds.front();
    hi[s] = hi[s + 1] + ds.back();
  }
  auto tds = target->degree_set();
  if (tds.empty()) return;
  int tlo = tds.front() - degree, thi = tds.back() - degree;

  Tuple t(n);
  std::function<void(int, int)> rec = [&](int slot, int acc) {
    if (slot == n) {
      if (target->has_element_of(acc + degree, std::nullopt)) fn(t);
      return;
    }
    if (acc + lo[slot] > thi || acc + hi[slot] < tlo) return;
    for (Index i = 0; i < slots[slot]->dim(); ++i) {
      t[slot] = i;
      rec(slot + 1, acc + slots[slot]->deg(i));
    }
  };
  rec(0, 0);
}

}  // namespace ainfty
