#pragma once

#include <map>
#include <optional>
#include <string>

#include "quasitri/rmatrix.hpp"

namespace quasitri {

/// A named reference instance: algebra, named tensors and, when available, a
/// q-parameterized R-matrix family with extra reference matrices.
struct CatalogEntry {
  std::string name;
  AlgebraPtr algebra;
  std::map<std::string, CoefTensor2> tensors;
  std::map<std::string, Mat> matrices;  // auxiliary reference matrices
  std::optional<RFamily> rmatrix_family;

  const CoefTensor2& tensor(const std::string& key) const;
};

/// su(2) in the Pauli basis (sigma_1, sigma_2, sigma_3) with the ladder matrices
/// X_+ and X_- as derived elements.
CatalogEntry pauli_su2();

/// The standard 4x4 SU(2) R-matrix (plain convention):
/// diag(q^{1/2}, q^{-1/2}, q^{-1/2}, q^{1/2}) with the single entry
/// q^{1/2} - q^{-3/2} at row (2,1), column (1,2).
RMat standard_r_su2(double q);

struct Su2SemiclassicalReference {
  Mat first_order;  // 4x4 coefficient of q-1
  CoefTensor2 r;    // (1/2) sigma_1 ∧ sigma_2
  CoefTensor2 s;    // (1/2) sum_j sigma_j ⊗ sigma_j
};
Su2SemiclassicalReference su2_semiclassical_reference();

/// sl(2,R) in the (H, E, F) basis with the real quasitriangular tensors
/// w = E⊗F + (1/4) H⊗H, r = (1/2)(E⊗F - F⊗E), s = w - r.
CatalogEntry sl2_real();

/// Entry lookup by name ("su2-standard", "sl2-real"); throws InputError on
/// unknown names.
CatalogEntry catalog_entry(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace quasitri
