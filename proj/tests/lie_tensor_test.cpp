#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quasitri/catalog.hpp"
#include "quasitri/rng.hpp"
#include "quasitri/tensor.hpp"
#include "support/oracles.hpp"

using namespace quasitri;

namespace {

CoefTensor2 tensor_of(const AlgebraPtr& alg, std::initializer_list<std::tuple<int, int, cplx>> entries) {
  Mat c = Mat::Zero(alg->dim(), alg->dim());
  for (const auto& [i, j, v] : entries) c(i, j) = v;
  return {alg, std::move(c)};
}

Vec unit(int d, int k) {
  Vec e = Vec::Zero(d);
  e(k) = 1.0;
  return e;
}

}  // namespace

TEST_CASE("structure constants of the catalog algebras") {
  const auto su2 = pauli_su2().algebra;
  CHECK(su2->dim() == 3);
  CHECK(su2->n() == 2);
  CHECK(su2->closure_residual() <= 1e-12);
  CHECK(su2->jacobi_identity_residual() <= 1e-12);
  // [sigma_1, sigma_2] = 2i sigma_3 and cyclic
  CHECK(std::abs(su2->c(0, 1, 2) - cplx(0, 2)) <= 1e-12);
  CHECK(std::abs(su2->c(1, 2, 0) - cplx(0, 2)) <= 1e-12);
  CHECK(std::abs(su2->c(2, 0, 1) - cplx(0, 2)) <= 1e-12);
  // antisymmetry holds exactly by construction
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) CHECK(su2->c(i, j, k) == -su2->c(j, i, k));

  const auto sl2 = sl2_real().algebra;
  CHECK(std::abs(sl2->c(0, 1, 1) - 2.0) <= 1e-12);   // [H,E] = 2E
  CHECK(std::abs(sl2->c(0, 2, 2) + 2.0) <= 1e-12);   // [H,F] = -2F
  CHECK(std::abs(sl2->c(1, 2, 0) - 1.0) <= 1e-12);   // [E,F] = H
}

TEST_CASE("closure violation is rejected") {
  Mat e11(2, 2), s1(2, 2);
  e11 << 1, 0, 0, 0;
  s1 << 0, 1, 1, 0;
  // [E11, sigma_1] is off-diagonal antisymmetric, outside span{E11, sigma_1}
  CHECK_THROWS_AS(LieAlgebraRep({e11, s1}), InputError);
}

TEST_CASE("bracket against the direct commutator oracle") {
  const auto alg = pauli_su2().algebra;
  const int d = alg->dim();

  SUBCASE("bracket of an element with itself vanishes") {
    CHECK(max_abs(alg->bracket(unit(d, 0), unit(d, 0))) == 0.0);
  }
  SUBCASE("pauli pairs") {
    // oracle: expand the 2x2 matrix commutator over the basis
    for (const auto& [i, j] : std::vector<std::pair<int, int>>{{0, 1}, {2, 0}, {1, 2}}) {
      const Mat comm = alg->basis(i) * alg->basis(j) - alg->basis(j) * alg->basis(i);
      const auto ex = alg->expand(comm);
      REQUIRE(ex.residual <= 1e-13);
      CHECK(max_abs(Vec(alg->bracket(unit(d, i), unit(d, j)) - ex.coeffs)) <= 1e-13);
    }
    // frozen expectations: [s1,s2] = 2i s3, [s3,s1] = 2i s2
    CHECK(std::abs(alg->bracket(unit(d, 0), unit(d, 1))(2) - cplx(0, 2)) <= 1e-13);
    CHECK(std::abs(alg->bracket(unit(d, 2), unit(d, 0))(1) - cplx(0, 2)) <= 1e-13);
  }
  SUBCASE("antisymmetry at random coefficients") {
    SampleRng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
      Vec x(d), y(d);
      for (int k = 0; k < d; ++k) {
        x(k) = cplx(rng.uniform_signed(), rng.uniform_signed());
        y(k) = cplx(rng.uniform_signed(), rng.uniform_signed());
      }
      CHECK(max_abs(Vec(alg->bracket(x, y) + alg->bracket(y, x))) <= 1e-12);
    }
  }
  SUBCASE("dimension mismatch is an input error") {
    CHECK_THROWS_AS(alg->bracket(Vec::Zero(2), Vec::Zero(3)), InputError);
  }
}

TEST_CASE("split_sym_anti") {
  const auto entry = pauli_su2();
  const auto alg = entry.algebra;

  const CoefTensor2 wedge = tensor_of(alg, {{0, 1, 1.0}, {1, 0, -1.0}});
  auto [sym_w, anti_w] = split_sym_anti(wedge);
  CHECK(sym_w.max_abs_coeff() == 0.0);
  CHECK(max_abs(Mat(anti_w.coeffs - wedge.coeffs)) == 0.0);

  const CoefTensor2& s = entry.tensor("s");
  auto [sym_s, anti_s] = split_sym_anti(s);
  CHECK(anti_s.max_abs_coeff() == 0.0);
  CHECK(max_abs(Mat(sym_s.coeffs - s.coeffs)) == 0.0);

  const CoefTensor2 single = tensor_of(alg, {{0, 1, 1.0}});
  auto [sym1, anti1] = split_sym_anti(single);
  CHECK(std::abs(sym1.coeffs(0, 1) - 0.5) <= 1e-15);
  CHECK(std::abs(sym1.coeffs(1, 0) - 0.5) <= 1e-15);
  CHECK(std::abs(anti1.coeffs(0, 1) - 0.5) <= 1e-15);
  CHECK(std::abs(anti1.coeffs(1, 0) + 0.5) <= 1e-15);

  SUBCASE("parts sum to the input and the split is idempotent") {
    SampleRng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      const CoefTensor2 t = random_tensor2(alg, rng);
      auto [sym, anti] = split_sym_anti(t);
      CHECK(max_abs(Mat(sym.coeffs + anti.coeffs - t.coeffs)) <= 1e-15);
      auto [ss, sa] = split_sym_anti(sym);
      CHECK(sa.max_abs_coeff() <= 1e-15);
      auto [as, aa] = split_sym_anti(anti);
      CHECK(as.max_abs_coeff() <= 1e-15);
    }
  }
}

TEST_CASE("adjoint_action2") {
  const auto entry = pauli_su2();
  const auto alg = entry.algebra;
  const CoefTensor2& casimir = entry.tensor("s");

  SUBCASE("identity leaves tensors unchanged") {
    SampleRng rng(3);
    const CoefTensor2 t = random_tensor2(alg, rng);
    const CoefTensor2 out = adjoint_action2(Mat::Identity(2, 2), t);
    CHECK(max_abs(Mat(out.coeffs - t.coeffs)) <= 1e-13);
  }
  SUBCASE("casimir is invariant under unitaries, against the conjugation oracle") {
    SampleRng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
      Mat x = Mat::Zero(2, 2);
      for (int k = 0; k < 3; ++k) x += cplx(0, rng.uniform_signed()) * alg->basis(k);
      const GroupPoint g(Mat(x.exp()));
      const CoefTensor2 moved = adjoint_action2(g.mat, casimir);
      CHECK(max_abs(Mat(moved.coeffs - casimir.coeffs)) <= 1e-12);
      // direct conjugation of the matrix form
      const Mat gg = kron(g.mat, g.mat);
      const Mat direct = gg * casimir.matrix_form() * gg.inverse();
      CHECK(max_abs(Mat(moved.matrix_form() - direct)) <= 1e-11);
    }
  }
  SUBCASE("diagonal conjugation fixes sigma3 x sigma3") {
    Mat g(2, 2);
    g << 1.7, 0, 0, 1.0 / 1.7;
    const CoefTensor2 t = tensor_of(alg, {{2, 2, 1.0}});
    const CoefTensor2 out = adjoint_action2(g, t);
    CHECK(max_abs(Mat(out.coeffs - t.coeffs)) <= 1e-13);
  }
  SUBCASE("conjugation that leaves the algebra is an error") {
    Mat s3(2, 2);
    s3 << 1, 0, 0, -1;
    const auto tiny = std::make_shared<LieAlgebraRep>(std::vector<Mat>{s3});
    const CoefTensor2 t{tiny, Mat::Ones(1, 1)};
    Mat s1(2, 2);
    s1 << 0, 1, 1, 0;
    const Mat g = Mat(s1 * 0.8).exp();
    CHECK_THROWS_AS(adjoint_action2(g, t), NumericsError);
  }
}

TEST_CASE("ad_invariance_residual") {
  const auto entry = pauli_su2();
  const auto alg = entry.algebra;
  CHECK(ad_invariance_residual(CoefTensor2{alg, Mat::Zero(3, 3)}) == 0.0);
  CHECK(ad_invariance_residual(entry.tensor("s")) <= 1e-12);
  CHECK(ad_invariance_residual(tensor_of(alg, {{0, 0, 1.0}})) > 1.0);
}

TEST_CASE("cybe against the kron-commutator oracle") {
  const auto su2 = pauli_su2();
  const auto sl2 = sl2_real();

  SUBCASE("zero tensor") {
    CHECK(cybe(CoefTensor2{su2.algebra, Mat::Zero(3, 3)}).max_abs_coeff() == 0.0);
  }
  SUBCASE("solutions vanish, violators do not, oracle agrees entrywise") {
    for (const auto* entry : {&su2, &sl2}) {
      const CoefTensor2& w = entry->tensor("w");
      const CoefTensor2& r = entry->tensor("r");
      const CoefTensor3 tw = cybe(w);
      CHECK(tw.max_abs_coeff() <= 1e-13);
      CHECK(max_abs(Mat(tw.matrix_form() - oracles::cybe_matrix(w))) <= 1e-13);
      const CoefTensor3 tr = cybe(r);
      CHECK(tr.max_abs_coeff() > 0.1);
      CHECK(max_abs(Mat(tr.matrix_form() - oracles::cybe_matrix(r))) <= 1e-13);
    }
  }
  SUBCASE("quadratic scaling") {
    SampleRng rng(17);
    const CoefTensor2 w = random_tensor2(su2.algebra, rng);
    const CoefTensor3 one = cybe(w);
    const CoefTensor3 scaled = cybe(w * cplx(3.0, 0.0));
    CHECK(max_abs(Vec(scaled.coeffs - 9.0 * one.coeffs)) <= 1e-12);
  }
  SUBCASE("equivariance under the adjoint action") {
    for (const auto* entry : {&su2, &sl2}) {
      SampleRng rng(23);
      for (int trial = 0; trial < 5; ++trial) {
        const CoefTensor2 w = random_tensor2(entry->algebra, rng);
        const GroupPoint g(random_group_point(*entry->algebra, rng));
        const Mat moved = cybe(adjoint_action2(g.mat, w)).matrix_form();
        const Mat ggg = oracles::kron3(g.mat, g.mat, g.mat);
        const Mat conjugated = ggg * cybe(w).matrix_form() * ggg.inverse();
        CHECK(max_abs(Mat(moved - conjugated)) <= 1e-9);
      }
    }
  }
}

TEST_CASE("mixed_obstructions") {
  const auto sl2 = sl2_real();
  const auto alg = sl2.algebra;
  const CoefTensor2& r = sl2.tensor("r");
  const CoefTensor2& w = sl2.tensor("w");

  SUBCASE("zero case") {
    const CoefTensor2 zero{alg, Mat::Zero(3, 3)};
    auto [t1, t2] = mixed_obstructions(zero, zero);
    CHECK(t1.max_abs_coeff() == 0.0);
    CHECK(t2.max_abs_coeff() == 0.0);
  }
  SUBCASE("substituting w = r reproduces cybe(r)") {
    auto [t1, t2] = mixed_obstructions(r, r);
    const CoefTensor3 c = cybe(r);
    CHECK(max_abs(Vec(t1.coeffs - c.coeffs)) <= 1e-13);
    CHECK(max_abs(Vec(t2.coeffs - c.coeffs)) <= 1e-13);
  }
  SUBCASE("the catalog solution annihilates both, against the matrix oracle") {
    auto [t1, t2] = mixed_obstructions(r, w);
    CHECK(t1.max_abs_coeff() <= 1e-13);
    CHECK(t2.max_abs_coeff() <= 1e-13);
    auto [m1, m2] = oracles::mixed_matrix(r, w);
    CHECK(max_abs(Mat(t1.matrix_form() - m1)) <= 1e-13);
    CHECK(max_abs(Mat(t2.matrix_form() - m2)) <= 1e-13);
  }
  SUBCASE("non-antisymmetric r is rejected") {
    CHECK_THROWS_AS(mixed_obstructions(w, w), InputError);
  }
  SUBCASE("equivalence with cybe over random instances with invariant symmetric part") {
    // w - r is a multiple of the invariant symmetric catalog tensor.
    for (const auto* entry : {&sl2}) {
      const CoefTensor2& s_inv = entry->tensor("s");
      SampleRng rng(41);
      int checked = 0;
      for (int trial = 0; trial < 60; ++trial) {
        SampleRng sub = rng.split(static_cast<std::uint64_t>(trial));
        CoefTensor2 rr = random_antisym_tensor2(entry->algebra, sub);
        CoefTensor2 ww = rr + s_inv * cplx(sub.uniform(0.3, 1.5), 0.0);
        if (trial % 3 == 0) {  // exact solutions, adjoint-conjugated
          const GroupPoint g(random_group_point(*entry->algebra, sub));
          const cplx lam(sub.uniform(0.3, 1.5), 0.0);
          ww = adjoint_action2(g.mat, entry->tensor("w") * lam);
          rr = adjoint_action2(g.mat, entry->tensor("r") * lam);
        }
        auto [t1, t2] = mixed_obstructions(rr, ww);
        const bool algebraic = t1.max_abs_coeff() <= 1e-10 && t2.max_abs_coeff() <= 1e-10;
        const bool classical = cybe(ww).max_abs_coeff() <= 1e-10;
        CHECK(algebraic == classical);
        ++checked;
      }
      CHECK(checked == 60);
    }
  }
}
