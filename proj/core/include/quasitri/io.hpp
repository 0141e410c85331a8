#pragma once

#include <filesystem>

#include <nlohmann/json.hpp>

#include "quasitri/catalog.hpp"
#include "quasitri/poisson.hpp"

namespace quasitri {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

/// File formats (complex numbers are [re, im] pairs, matrices row-major):
///   algebra:  { "dim": d, "n": n, "basis": [ n x n matrix, ... ] }
///   tensor:   { "coeffs": d x d matrix }
///   rmatrix:  { "N": n, "convention": "plain"|"hat", "entries": N^2 x N^2 matrix }
///   two-link: { "algebra": <path or inline algebra>, "r": <tensor>,
///               "phi": { "kind": "constant"|"ad_b_f", "tensor": <tensor>,
///                        "f_scale": number } }

json load_json_file(const std::filesystem::path& path);

AlgebraPtr parse_algebra(const json& j);
CoefTensor2 parse_tensor(const json& j, AlgebraPtr algebra);
RMat parse_rmat(const json& j);

/// Resolves an "algebra" field that is either an inline object or a path
/// relative to base_dir.
AlgebraPtr resolve_algebra(const json& j, const std::filesystem::path& base_dir);

TwoLinkSpec parse_two_link_spec(const json& j, const std::filesystem::path& base_dir);

ordered_json algebra_to_json(const LieAlgebraRep& alg);
ordered_json tensor_to_json(const CoefTensor2& t);
ordered_json rmat_to_json(const RMat& r);
ordered_json matrix_to_json(const Mat& m);

/// Full catalog entry export (algebra, tensors, optional R-matrix at a given q).
ordered_json entry_to_json(const CatalogEntry& entry, double q);

}  // namespace quasitri
