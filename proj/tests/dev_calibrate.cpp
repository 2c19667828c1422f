// development-only sign calibration; not part of the test suite
#include <cstdio>
#include <random>

#include "ainfty/generators.hpp"
#include "ainfty/pairing.hpp"
#include "ainfty/transfer.hpp"
#include "ainfty/trivial_extension.hpp"

using namespace ainfty;

namespace ainfty {
extern int g_dual_sign_bits;
extern int g_kappa_bits;
extern int g_pair_bits;
}

namespace {

bool dual_relations_ok(const Bimodule& dual) {
  for (int k = 0; k < dual.max_arity; ++k)
    for (int l = 0; k + l + 1 <= dual.max_arity; ++l)
      if (!bimodule_relation_defect(dual, k, l).is_zero()) return false;
  return true;
}

bool unital_ok(const AInfStructure& a, Index unit) {
  Bimodule dual = dual_bimodule(diagonal_bimodule(a));
  AInfStructure ext = trivial_extension_ainf(a, dual);
  std::vector<MultiMap> m = convert_b_to_m(ext);
  int na = a.space->dim();
  for (Index f = na; f < ext.space->dim(); ++f) {
    if (m[2].eval({unit, f}) != unit_vec(f)) return false;
    if (m[2].eval({f, unit}) != unit_vec(f)) return false;
  }
  return true;
}

bool double_dual_ok(const Bimodule& m) {
  Bimodule dual = dual_bimodule(m);
  Bimodule dd = dual_bimodule(dual);
  GradedMap kappa = double_dual_iso(m);
  for (const auto& [kl, mm] : m.ops) {
    auto [k, l] = kl;
    for (const auto& [t, v] : mm.table) {
      SparseVec lhs = kappa.apply(v);
      SparseVec kin = kappa.column(t[k]);
      SparseVec rhs;
      for (const auto& [mi, mc] : kin) {
        Tuple u = t;
        u[k] = mi;
        axpy(rhs, mc, dd.b(k, l).eval(u));
      }
      if (lhs != rhs) return false;
    }
    // converse: dd entries not reached above must not exist outside m's support
    for (const auto& [t, v] : dd.b(k, l).table)
      if (!mm.table.count(t) && !v.empty()) {
        // kappa is diagonal, so tuples coincide
        return false;
      }
  }
  return true;
}

bool pairing_ok(const DgAlgebra& base) {
  auto [ext, p] = dg_trivial_extension_with_pairing(base);
  AInfStructure ea = from_dg(ext);
  for (int ar = 1; ar <= 2; ++ar)
    if (!cyclicity_defect(ea, p, ar).empty()) return false;
  return true;
}

}  // namespace

int main() {
  std::mt19937_64 rng(12345);

  // a fixed bench of structures with sign-rich degrees
  std::vector<AInfStructure> bench;
  std::vector<Index> units;
  {
    SpacePtr k1 = make_space({"1"}, {0});
    DgAlgebra g = make_dg(k1);
    g.m2.add({0, 0}, 0, Scalar(1));
    g.unit = 0;
    bench.push_back(from_dg(g));
    units.push_back(0);
  }
  for (int deg = 1; deg <= 3; ++deg) {
    SpacePtr v = make_space({"1", "x"}, {0, deg});
    DgAlgebra a = make_dg(v);
    a.m2.add({0, 0}, 0, Scalar(1));
    a.m2.add({0, 1}, 1, Scalar(1));
    a.m2.add({1, 0}, 1, Scalar(1));
    a.unit = 0;
    bench.push_back(from_dg(a));
    units.push_back(0);
  }

  // transferred structures with higher products (tau-sensitive)
  std::vector<AInfStructure> higher;
  int with_b3 = 0;
  for (int seed = 0; seed < 400 && with_b3 < 6; ++seed) {
    std::mt19937_64 r2(seed);
    DgAlgebra d = random_dg_algebra(r2);
    TransferOptions topt;
    topt.max_arity = 4;
    topt.check_truncation = false;
    AInfStructure m = transfer(from_dg(d), topt).minimal;
    bool b3 = !m.b(3).is_zero() || !m.b(4).is_zero();
    if (b3 && m.space->dim() <= 5) {
      higher.push_back(m);
      ++with_b3;
    }
  }
  std::printf("bench: %zu unital, %zu with higher products\n", bench.size(), higher.size());

  std::vector<DgAlgebra> pair_bench;
  {
    SpacePtr v = make_space({"e11", "e22", "e12"}, {0, 0, 1});
    DgAlgebra ut = make_dg(v);
    ut.m2.add({0, 0}, 0, Scalar(1));
    ut.m2.add({1, 1}, 1, Scalar(1));
    ut.m2.add({0, 2}, 2, Scalar(1));
    ut.m2.add({2, 1}, 2, Scalar(1));
    pair_bench.push_back(ut);
    SpacePtr w = make_space({"1", "x"}, {0, 1});
    DgAlgebra dn = make_dg(w);
    dn.m2.add({0, 0}, 0, Scalar(1));
    dn.m2.add({0, 1}, 1, Scalar(1));
    dn.m2.add({1, 0}, 1, Scalar(1));
    dn.unit = 0;
    pair_bench.push_back(dn);
    std::mt19937_64 r3(99);
    for (int i = 0; i < 4; ++i) pair_bench.push_back(random_dg_algebra(r3));
  }

  for (int bits = 0; bits < 512; ++bits) {
    g_dual_sign_bits = bits;
    bool ok = true;
    for (size_t i = 0; i < bench.size() && ok; ++i) {
      Bimodule dual = dual_bimodule(diagonal_bimodule(bench[i]));
      ok = dual_relations_ok(dual) && unital_ok(bench[i], units[i]);
    }
    for (size_t i = 0; i < higher.size() && ok; ++i)
      ok = dual_relations_ok(dual_bimodule(diagonal_bimodule(higher[i])));
    if (!ok) continue;

    // shifted duals must also satisfy relations
    for (size_t i = 0; i < higher.size() && ok; ++i)
      ok = dual_relations_ok(dual_bimodule(shift_bimodule(diagonal_bimodule(higher[i]), -2)));
    if (!ok) continue;

    for (int kb = 0; kb < 8 && ok; ++kb) {
      g_kappa_bits = kb;
      bool kok = true;
      for (size_t i = 0; i < bench.size() && kok; ++i)
        kok = double_dual_ok(diagonal_bimodule(bench[i]));
      for (size_t i = 0; i < higher.size() && kok; ++i)
        kok = double_dual_ok(diagonal_bimodule(higher[i]));
      if (kok) {
        for (int pb = 0; pb < 8; ++pb) {
          g_pair_bits = pb;
          bool pok = true;
          for (const auto& d : pair_bench)
            if (!pairing_ok(d)) { pok = false; break; }
          if (pok) std::printf("PASS dual_bits=%d kappa_bits=%d pair_bits=%d\n", bits, kb, pb);
        }
      }
    }
  }
  std::puts("calibration sweep complete");
  return 0;
}
