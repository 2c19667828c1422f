#include "ainfty/transfer.hpp"

#include <set>
#include <stdexcept>

namespace ainfty {

namespace {

void tuples_with_degsum(const SpacePtr& slot, int arity, const std::set<int>& sums,
                        const std::function<void(const Tuple&)>& fn) {
  if (sums.empty()) return;
  auto ds = slot->degree_set();
  if (ds.empty()) return;
  int lo = ds.front(), hi = ds.back();
  int tlo = *sums.begin(), thi = *sums.rbegin();
  Tuple t(arity);
  std::function<void(int, int)> rec = [&](int s, int acc) {
    if (s == arity) {
      if (sums.count(acc)) fn(t);
      return;
    }
    int rem = arity - s;
    if (acc + rem * lo > thi || acc + rem * hi < tlo) return;
    for (Index i = 0; i < slot->dim(); ++i) {
      t[s] = i;
      rec(s + 1, acc + slot->deg(i));
    }
  };
  rec(0, 0);
}

void compositions(int n, int k, std::vector<int>& part, const std::function<void()>& fn) {
  if (k == 1) {
    part.push_back(n);
    fn();
    part.pop_back();
    return;
  }
  for (int first = 1; first + (k - 1) <= n; ++first) {
    part.push_back(first);
    compositions(n - first, k - 1, part, fn);
    part.pop_back();
  }
}

}  // namespace

TransferResult transfer(const AInfStructure& a, const Splitting& s, const TransferOptions& opt) {
  if (opt.max_arity < 2) throw std::invalid_argument("transfer: max_arity must be >= 2");
  if (!same_space(s.space, a.sspace))
    throw std::invalid_argument("transfer: splitting is not over sA");

  const SpacePtr& sH = s.homology;
  const SpacePtr& sA = a.sspace;
  bool aux = a.aux_flag && sA->has_aux();
  int K = opt.max_arity;

  TransferResult out;
  out.minimal = make_ainf(unsuspend(sH), K, aux);
  out.project = s.project;

  std::vector<std::map<Tuple, SparseVec>> lambda(K + 2);
  for (Index i = 0; i < sH->dim(); ++i) lambda[1][{i}] = s.include.column(i);

  // degree sums that can matter: lambda targets sA at degree 0, b' targets sH
  // at degree +1 (and at K+1 only the b' side, for the truncation probe)
  std::set<int> lam_sums, bp_sums;
  for (int d : sA->degree_set()) lam_sums.insert(d);
  for (int d : sH->degree_set()) bp_sums.insert(d - 1);

  auto beta_at = [&](int n, const Tuple& t) {
    SparseVec acc;
    for (int k = 2; k <= std::min(n, a.max_arity); ++k) {
      std::vector<int> part;
      compositions(n, k, part, [&]() {
        std::vector<const SparseVec*> ptrs(k);
        int at = 0;
        for (int b = 0; b < k; ++b) {
          Tuple block(t.begin() + at, t.begin() + at + part[b]);
          at += part[b];
          auto it = lambda[part[b]].find(block);
          if (it == lambda[part[b]].end() || it->second.empty()) return;
          ptrs[b] = &it->second;
        }
        axpy(acc, Scalar(1), a.b(k).eval_vectors(ptrs));
      });
    }
    return acc;
  };

  int top = opt.check_truncation ? K + 1 : K;
  for (int n = 2; n <= top; ++n) {
    bool want_bp = true, want_lam = (n <= K);
    if (opt.grading_certificate) {
      if (arity_excluded_by_grading(sH, n, sH, +1, aux)) {
        want_bp = false;
        if (n <= K) out.certified_arities.push_back(n);
      }
      if (want_lam && arity_excluded_by_grading(sH, n, sA, 0, aux)) want_lam = false;
    }
    if (!want_bp && !want_lam) continue;

    std::set<int> sums;
    if (want_lam) sums.insert(lam_sums.begin(), lam_sums.end());
    if (want_bp) sums.insert(bp_sums.begin(), bp_sums.end());

    bool truncated_here = false;
    tuples_with_degsum(sH, n, sums, [&](const Tuple& t) {
      SparseVec beta = beta_at(n, t);
      if (beta.empty()) return;
      if (want_lam) {
        SparseVec lv = s.homotopy.apply(beta);
        if (!lv.empty()) lambda[n][t] = std::move(lv);
      }
      if (want_bp) {
        SparseVec bp = s.project.apply(beta);
        if (!bp.empty()) {
          if (n <= K) out.minimal.b(n).table[t] = std::move(bp);
          else truncated_here = true;
        }
      }
    });
    if (n == K + 1 && truncated_here) out.minimal.truncated = true;
  }

  if (aux) {
    for (int k = 2; k <= K; ++k) check_multi_degrees(out.minimal.b(k), 0);
    for (int n = 2; n <= K; ++n) {
      MultiMap lam = make_multi_uniform(sH, n, sA, 0);
      lam.table = lambda[n];
      check_multi_degrees(lam, 0);
    }
  }

  out.include.src = out.minimal;
  out.include.dst = a;
  out.include.fs.resize(K + 1);
  for (int n = 1; n <= K; ++n) {
    out.include.fs[n] = make_multi_uniform(sH, n, sA, 0);
    out.include.fs[n].table = std::move(lambda[n]);
  }
  return out;
}

TransferResult transfer(const AInfStructure& a, const TransferOptions& opt) {
  return transfer(a, homology_splitting(b1_as_map(a)), opt);
}

}  // namespace ainfty
