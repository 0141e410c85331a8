#include "quasitri/catalog.hpp"

#include <cmath>

namespace quasitri {

namespace {

const cplx kI(0.0, 1.0);

Mat pauli(int j) {
  Mat m(2, 2);
  switch (j) {
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      m << 0, -kI, kI, 0;
      break;
    default:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

}  // namespace

const CoefTensor2& CatalogEntry::tensor(const std::string& key) const {
  const auto it = tensors.find(key);
  if (it == tensors.end()) throw InputError("catalog entry '" + name + "' has no tensor '" + key + "'");
  return it->second;
}

CatalogEntry pauli_su2() {
  CatalogEntry entry;
  entry.name = "su2-standard";
  entry.algebra = std::make_shared<LieAlgebraRep>(std::vector<Mat>{pauli(1), pauli(2), pauli(3)});

  Mat r = Mat::Zero(3, 3);
  r(0, 1) = 0.5;
  r(1, 0) = -0.5;
  Mat s = 0.5 * Mat::Identity(3, 3);
  entry.tensors.emplace("r", CoefTensor2{entry.algebra, r});
  entry.tensors.emplace("s", CoefTensor2{entry.algebra, s});
  entry.tensors.emplace("w", CoefTensor2{entry.algebra, Mat(r - kI * s)});

  Mat xp(2, 2), xm(2, 2);
  xp << 0, 1, 0, 0;
  xm << 0, 0, 1, 0;
  entry.matrices.emplace("X+", xp);
  entry.matrices.emplace("X-", xm);
  entry.rmatrix_family = [](double q) { return standard_r_su2(q).entries; };
  return entry;
}

RMat standard_r_su2(double q) {
  if (q == 0.0) throw InputError("standard_r_su2: q must be nonzero");
  Mat m = Mat::Zero(4, 4);
  const double rq = std::sqrt(q);
  m(0, 0) = rq;
  m(1, 1) = 1.0 / rq;
  m(2, 2) = 1.0 / rq;
  m(3, 3) = rq;
  m(2, 1) = rq - std::pow(q, -1.5);
  return RMat(2, std::move(m), RConvention::kPlain);
}

Su2SemiclassicalReference su2_semiclassical_reference() {
  const CatalogEntry su2 = pauli_su2();
  Mat m = Mat::Zero(4, 4);
  m(0, 0) = 0.5;
  m(1, 1) = -0.5;
  m(2, 2) = -0.5;
  m(3, 3) = 0.5;
  m(2, 1) = 2.0;
  return {std::move(m), su2.tensor("r"), su2.tensor("s")};
}

CatalogEntry sl2_real() {
  CatalogEntry entry;
  entry.name = "sl2-real";
  Mat h(2, 2), e(2, 2), f(2, 2);
  h << 1, 0, 0, -1;
  e << 0, 1, 0, 0;
  f << 0, 0, 1, 0;
  entry.algebra = std::make_shared<LieAlgebraRep>(std::vector<Mat>{h, e, f});

  Mat w = Mat::Zero(3, 3);
  w(1, 2) = 1.0;   // E ⊗ F
  w(0, 0) = 0.25;  // (1/4) H ⊗ H
  Mat r = Mat::Zero(3, 3);
  r(1, 2) = 0.5;
  r(2, 1) = -0.5;
  entry.tensors.emplace("w", CoefTensor2{entry.algebra, w});
  entry.tensors.emplace("r", CoefTensor2{entry.algebra, r});
  entry.tensors.emplace("s", CoefTensor2{entry.algebra, Mat(w - r)});
  return entry;
}

CatalogEntry catalog_entry(const std::string& name) {
  if (name == "su2-standard") return pauli_su2();
  if (name == "sl2-real") return sl2_real();
  throw InputError("unknown catalog entry '" + name + "'");
}

std::vector<std::string> catalog_names() { return {"su2-standard", "sl2-real"}; }

}  // namespace quasitri
