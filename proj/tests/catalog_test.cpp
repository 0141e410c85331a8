#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quasitri/catalog.hpp"
#include "support/oracles.hpp"

using namespace quasitri;

TEST_CASE("pauli_su2") {
  const CatalogEntry entry = pauli_su2();
  CHECK(entry.algebra->dim() == 3);
  CHECK(entry.algebra->n() == 2);

  const Mat& s1 = entry.algebra->basis(0);
  const Mat& s2 = entry.algebra->basis(1);
  const Mat& s3 = entry.algebra->basis(2);
  CHECK(s1(0, 1) == cplx(1, 0));
  CHECK(s2(0, 1) == cplx(0, -1));
  CHECK(s3(1, 1) == cplx(-1, 0));
  CHECK(max_abs(Mat(s1 * s2 - s2 * s1 - cplx(0, 2) * s3)) == 0.0);

  // X± = (sigma_1 ± i sigma_2) / 2
  CHECK(max_abs(Mat(entry.matrices.at("X+") - 0.5 * (s1 + cplx(0, 1) * s2))) == 0.0);
  CHECK(max_abs(Mat(entry.matrices.at("X-") - 0.5 * (s1 - cplx(0, 1) * s2))) == 0.0);
}

TEST_CASE("standard_r_su2 frozen values") {
  SUBCASE("q = 1 is the identity") {
    CHECK(max_abs(Mat(standard_r_su2(1.0).entries - Mat::Identity(4, 4))) == 0.0);
  }
  SUBCASE("q = 2 entries") {
    const Mat r = standard_r_su2(2.0).entries;
    CHECK(std::abs(r(0, 0) - 1.4142135623730951) <= 1e-15);
    CHECK(std::abs(r(1, 1) - 0.7071067811865476) <= 1e-15);
    CHECK(std::abs(r(2, 2) - 0.7071067811865476) <= 1e-15);
    CHECK(std::abs(r(3, 3) - 1.4142135623730951) <= 1e-15);
    CHECK(std::abs(r(2, 1) - 1.0606601717798214) <= 1e-15);
    int nonzeros = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (r(i, j) != cplx(0, 0)) ++nonzeros;
    CHECK(nonzeros == 5);
  }
  SUBCASE("q = 2 satisfies the Yang-Baxter equation") {
    CHECK(qybe_residual(standard_r_su2(2.0)) <= 1e-12);
  }
  CHECK_THROWS_AS(standard_r_su2(0.0), InputError);
}

TEST_CASE("su2_semiclassical_reference") {
  const Su2SemiclassicalReference ref = su2_semiclassical_reference();
  const CatalogEntry su2 = pauli_su2();

  SUBCASE("first-order matrix") {
    Mat expected = Mat::Zero(4, 4);
    expected(0, 0) = 0.5;
    expected(1, 1) = -0.5;
    expected(2, 2) = -0.5;
    expected(3, 3) = 0.5;
    expected(2, 1) = 2.0;
    CHECK(max_abs(Mat(ref.first_order - expected)) == 0.0);
    // and it equals 2 X- ⊗ X+ + (1/2) sigma_3 ⊗ sigma_3
    const Mat built = 2.0 * kron(su2.matrices.at("X-"), su2.matrices.at("X+")) +
                      0.5 * kron(su2.algebra->basis(2), su2.algebra->basis(2));
    CHECK(max_abs(Mat(ref.first_order - built)) == 0.0);
  }
  SUBCASE("tensor shapes and the i(r - is) identity") {
    CHECK(ref.r.is_antisymmetric(1e-15));
    CHECK(ref.s.is_symmetric(1e-15));
    // expand M over sigma ⊗ sigma and compare with i(r - i s)
    std::vector<Mat> span;
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) span.push_back(kron(su2.algebra->basis(k), su2.algebra->basis(l)));
    const SpanSolver solver(span);
    const auto expansion = solver.expand(ref.first_order);
    REQUIRE(expansion.residual <= 1e-13);
    const Mat expected = cplx(0, 1) * (ref.r.coeffs - cplx(0, 1) * ref.s.coeffs);
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l)
        CHECK(std::abs(expansion.coeffs(k * 3 + l) - expected(k, l)) <= 1e-13);
  }
  SUBCASE("w = r - i s solves the classical Yang-Baxter equation") {
    const CoefTensor2 w = ref.r + ref.s * cplx(0, -1);
    CHECK(cybe(w).max_abs_coeff() <= 1e-13);
    CHECK(max_abs(oracles::cybe_matrix(w)) <= 1e-13);
    CHECK(max_abs(Mat(w.coeffs - su2.tensor("w").coeffs)) == 0.0);
  }
}

TEST_CASE("sl2_real") {
  const CatalogEntry entry = sl2_real();
  const CoefTensor2& w = entry.tensor("w");
  const CoefTensor2& r = entry.tensor("r");
  const CoefTensor2& s = entry.tensor("s");

  SUBCASE("the designated brute-force check: w solves the classical Yang-Baxter equation") {
    CHECK(max_abs(oracles::cybe_matrix(w)) <= 1e-13);
    CHECK(cybe(w).max_abs_coeff() <= 1e-13);
  }
  SUBCASE("split recovers the stored parts") {
    auto [sym, anti] = split_sym_anti(w);
    CHECK(max_abs(Mat(sym.coeffs - s.coeffs)) <= 1e-15);
    CHECK(max_abs(Mat(anti.coeffs - r.coeffs)) <= 1e-15);
  }
  SUBCASE("the symmetric part is invariant and real") {
    CHECK(ad_invariance_residual(s) <= 1e-12);
    CHECK(s.max_imag_coeff() == 0.0);
  }
}

TEST_CASE("semiclassical extraction reproduces the reference tensors") {
  const CatalogEntry su2 = pauli_su2();
  REQUIRE(su2.rmatrix_family.has_value());
  const SemiclassicalResult got = semiclassical_w(*su2.rmatrix_family, su2.algebra);
  const Su2SemiclassicalReference ref = su2_semiclassical_reference();
  CHECK(max_abs(Mat(got.first_order - ref.first_order)) <= 1e-6);
  CHECK(max_abs(Mat(got.r.coeffs - ref.r.coeffs)) <= 1e-6);
  CHECK(max_abs(Mat(got.s.coeffs - ref.s.coeffs)) <= 1e-6);
}

TEST_CASE("star report reproduces the final-remarks claims at q = 2") {
  const StarReport star = star_report(hat_from_plain(standard_r_su2(2.0)));
  CHECK(star.self_adjoint);
  CHECK_FALSE(star.unitary);
  CHECK_FALSE(star.involutive);
}

TEST_CASE("catalog lookup") {
  CHECK(catalog_entry("su2-standard").name == "su2-standard");
  CHECK(catalog_entry("sl2-real").name == "sl2-real");
  CHECK_THROWS_AS(catalog_entry("nope"), InputError);
  CHECK(catalog_names().size() == 2);
}
