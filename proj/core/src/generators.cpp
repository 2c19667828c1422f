#include "ainfty/generators.hpp"

#include "ainfty/transfer.hpp"

namespace ainfty {

namespace {

// paths in a small acyclic quiver, concatenation product, length ideal
DgAlgebra random_path_algebra(std::mt19937_64& rng, const DgGenOptions& opt) {
  int nv = 2 + static_cast<int>(rng() % 2);
  struct Arrow { int from, to, deg; };
  std::vector<Arrow> arrows;
  int na = 2 + static_cast<int>(rng() % 3);
  for (int i = 0; i < na; ++i) {
    int from = static_cast<int>(rng() % nv);
    int to = static_cast<int>(rng() % nv);
    if (from >= to) continue;  // acyclic
    arrows.push_back({from, to, static_cast<int>(rng() % (opt.max_degree + 1))});
  }
  // paths: (start, end, arrow word); includes the trivial idempotent at each vertex
  struct Path { int from, to, deg; std::vector<int> word; };
  std::vector<Path> paths;
  for (int v = 0; v < nv; ++v) paths.push_back({v, v, 0, {}});
  size_t head = 0;
  while (head < paths.size() && static_cast<int>(paths.size()) <= opt.max_dim) {
    Path p = paths[head++];
    if (p.word.size() >= 3) continue;
    for (size_t ai = 0; ai < arrows.size(); ++ai) {
      if (arrows[ai].from != p.to) continue;
      Path q = p;
      q.to = arrows[ai].to;
      q.deg += arrows[ai].deg;
      q.word.push_back(static_cast<int>(ai));
      paths.push_back(q);
    }
  }
  if (static_cast<int>(paths.size()) > opt.max_dim) paths.resize(opt.max_dim);

  std::vector<std::string> labels;
  std::vector<int> degs;
  for (const auto& p : paths) {
    std::string l = "v" + std::to_string(p.from);
    for (int a : p.word) l += "a" + std::to_string(a);
    labels.push_back(l);
    degs.push_back(p.deg);
  }
  SpacePtr V = make_space(labels, degs);
  DgAlgebra d = make_dg(V);
  auto find_path = [&](const Path& p) -> int {
    for (size_t i = 0; i < paths.size(); ++i)
      if (paths[i].from == p.from && paths[i].word == p.word) return static_cast<int>(i);
    return -1;
  };
  for (size_t i = 0; i < paths.size(); ++i)
    for (size_t j = 0; j < paths.size(); ++j) {
      if (paths[i].to != paths[j].from) continue;
      Path prod = paths[i];
      prod.to = paths[j].to;
      prod.deg += paths[j].deg;
      prod.word.insert(prod.word.end(), paths[j].word.begin(), paths[j].word.end());
      int k = find_path(prod);
      if (k >= 0) d.m2.add({static_cast<Index>(i), static_cast<Index>(j)}, k, Scalar(1));
    }
  return d;
}

DgAlgebra interval_algebra() {
  // cochains on an interval: two vertices, one edge
  SpacePtr V = make_space({"e0", "e1", "h"}, {0, 0, 1});
  DgAlgebra d = make_dg(V);
  d.m2.add({0, 0}, 0, Scalar(1));
  d.m2.add({1, 1}, 1, Scalar(1));
  d.m2.add({0, 2}, 2, Scalar(1));
  d.m2.add({2, 1}, 2, Scalar(1));
  d.m1.set(2, 0, Scalar(-1));
  d.m1.set(2, 1, Scalar(1));
  return d;
}

DgAlgebra truncated_poly(int deg_x, int power) {
  std::vector<std::string> labels{"1"};
  std::vector<int> degs{0};
  for (int i = 1; i < power; ++i) {
    labels.push_back("x" + std::to_string(i));
    degs.push_back(i * deg_x);
  }
  SpacePtr V = make_space(labels, degs);
  DgAlgebra d = make_dg(V);
  d.unit = 0;
  for (int i = 0; i < power; ++i)
    for (int j = 0; i + j < power; ++j) {
      if ((deg_x % 2) && i % 2 && j % 2) continue;  // odd powers square to zero
      d.m2.add({i, j}, i + j, Scalar(1));
    }
  return d;
}

}  // namespace

DgAlgebra random_dg_algebra(std::mt19937_64& rng, const DgGenOptions& opt) {
  for (int attempt = 0;; ++attempt) {
    DgAlgebra cand;
    switch (rng() % 5) {
      case 0: cand = interval_algebra(); break;
      case 1:
        cand = truncated_poly(1 + static_cast<int>(rng() % 2), 2 + static_cast<int>(rng() % 2));
        break;
      default: cand = random_path_algebra(rng, opt); break;
    }
    if (opt.with_differential && cand.m1.is_zero() && cand.space->dim() > 1) {
      // inner differential by a random odd element with square zero
      SparseVec e;
      for (Index i = 0; i < cand.space->dim(); ++i)
        if (cand.space->deg(i) == 1 && rng() % 2) add_term(e, i, Scalar(1 + (long)(rng() % 2)));
      SparseVec ee = cand.m2.eval_vectors({&e, &e});
      if (ee.empty() && !e.empty()) {
        for (Index x = 0; x < cand.space->dim(); ++x) {
          SparseVec ux = unit_vec(x);
          SparseVec dx = cand.m2.eval_vectors({&e, &ux});
          axpy(dx, Scalar(-parity_sign(cand.space->deg(x))), cand.m2.eval_vectors({&ux, &e}));
          if (!dx.empty()) cand.m1.cols[x] = std::move(dx);
        }
      }
    }
    try {
      check_dg(cand);
      return cand;
    } catch (const std::exception&) {
      if (attempt > 200) throw;
    }
  }
}

AInfStructure random_minimal_ainf(std::mt19937_64& rng, int max_arity) {
  DgAlgebra d = random_dg_algebra(rng);
  TransferOptions opt;
  opt.max_arity = max_arity;
  return transfer(from_dg(d), opt).minimal;
}

Bimodule random_bimodule(std::mt19937_64& rng, int max_dim) {
  DgGenOptions gopt;
  gopt.max_dim = max_dim;
  for (;;) {
    AInfStructure a;
    if (rng() % 2) {
      a = from_dg(random_dg_algebra(rng, gopt));
    } else {
      DgAlgebra d = random_dg_algebra(rng, gopt);
      TransferOptions topt;
      topt.max_arity = 4;
      a = transfer(from_dg(d), topt).minimal;
      if (a.space->dim() > max_dim || a.space->dim() == 0) continue;
    }
    Bimodule m = diagonal_bimodule(a);
    switch (rng() % 3) {
      case 0: return m;
      case 1: return dual_bimodule(m);
      default: return shift_bimodule(m, static_cast<int>(rng() % 5) - 2);
    }
  }
}

}  // namespace ainfty
