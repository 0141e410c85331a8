#include "quasitri/io.hpp"

#include <fstream>

namespace quasitri {

namespace {

cplx parse_complex(const json& j) {
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return cplx(j[0].get<double>(), j[1].get<double>());
  throw InputError("expected a number or an [re, im] pair");
}

Mat parse_matrix(const json& j, Eigen::Index rows, Eigen::Index cols, const char* what) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows)
    throw InputError(std::string(what) + ": expected " + std::to_string(rows) + " rows");
  Mat out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw InputError(std::string(what) + ": expected " + std::to_string(cols) + " columns");
    for (Eigen::Index k = 0; k < cols; ++k) out(i, k) = parse_complex(row[static_cast<std::size_t>(k)]);
  }
  return out;
}

ordered_json complex_to_json(const cplx& c) { return ordered_json::array({c.real(), c.imag()}); }

}  // namespace

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in '" + path.string() + "': " + e.what());
  }
  return j;
}

AlgebraPtr parse_algebra(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("n") || !j.contains("basis"))
    throw InputError("algebra: expected fields dim, n, basis");
  const int d = j.at("dim").get<int>();
  const Eigen::Index n = j.at("n").get<Eigen::Index>();
  if (d < 1 || n < 1) throw InputError("algebra: dim and n must be positive");
  const json& basis = j.at("basis");
  if (!basis.is_array() || static_cast<int>(basis.size()) != d)
    throw InputError("algebra: basis must list dim matrices");
  std::vector<Mat> mats;
  mats.reserve(static_cast<std::size_t>(d));
  for (const json& b : basis) mats.push_back(parse_matrix(b, n, n, "algebra basis matrix"));
  return std::make_shared<LieAlgebraRep>(std::move(mats));
}

CoefTensor2 parse_tensor(const json& j, AlgebraPtr algebra) {
  if (!j.is_object() || !j.contains("coeffs")) throw InputError("tensor: expected field coeffs");
  const int d = algebra->dim();
  Mat c = parse_matrix(j.at("coeffs"), d, d, "tensor coeffs");
  return {std::move(algebra), std::move(c)};
}

RMat parse_rmat(const json& j) {
  if (!j.is_object() || !j.contains("N") || !j.contains("convention") || !j.contains("entries"))
    throw InputError("rmatrix: expected fields N, convention, entries");
  const Eigen::Index n = j.at("N").get<Eigen::Index>();
  if (n < 1) throw InputError("rmatrix: N must be positive");
  const std::string conv = j.at("convention").get<std::string>();
  RConvention c;
  if (conv == "plain")
    c = RConvention::kPlain;
  else if (conv == "hat")
    c = RConvention::kHat;
  else
    throw InputError("rmatrix: convention must be \"plain\" or \"hat\"");
  Mat entries = parse_matrix(j.at("entries"), n * n, n * n, "rmatrix entries");
  return RMat(n, std::move(entries), c);
}

AlgebraPtr resolve_algebra(const json& j, const std::filesystem::path& base_dir) {
  if (j.is_string()) {
    std::filesystem::path p = j.get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    return parse_algebra(load_json_file(p));
  }
  return parse_algebra(j);
}

TwoLinkSpec parse_two_link_spec(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object() || !j.contains("algebra") || !j.contains("r"))
    throw InputError("two-link spec: expected fields algebra, r");
  AlgebraPtr alg = resolve_algebra(j.at("algebra"), base_dir);
  CoefTensor2 r = parse_tensor(j.at("r"), alg);
  if (!r.is_antisymmetric()) throw InputError("two-link spec: r must be antisymmetric");

  if (!j.contains("phi")) return TwoLinkSpec::constant(r, CoefTensor2{alg, Mat(-r.coeffs)});

  const json& phi = j.at("phi");
  if (!phi.is_object() || !phi.contains("kind")) throw InputError("two-link spec: phi needs a kind");
  const std::string kind = phi.at("kind").get<std::string>();
  CoefTensor2 t = parse_tensor(phi.at("tensor"), alg);
  if (kind == "constant") return TwoLinkSpec::constant(std::move(r), std::move(t));
  if (kind == "ad_b_f") {
    const double f_scale = phi.value("f_scale", 1.0);
    return TwoLinkSpec::ad_b_trace(std::move(r), std::move(t), f_scale);
  }
  throw InputError("two-link spec: unknown phi kind '" + kind + "'");
}

ordered_json matrix_to_json(const Mat& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json algebra_to_json(const LieAlgebraRep& alg) {
  ordered_json j;
  j["dim"] = alg.dim();
  j["n"] = alg.n();
  ordered_json basis = ordered_json::array();
  for (const Mat& b : alg.basis()) basis.push_back(matrix_to_json(b));
  j["basis"] = std::move(basis);
  return j;
}

ordered_json tensor_to_json(const CoefTensor2& t) {
  ordered_json j;
  j["coeffs"] = matrix_to_json(t.coeffs);
  return j;
}

ordered_json rmat_to_json(const RMat& r) {
  ordered_json j;
  j["N"] = r.N;
  j["convention"] = r.convention == RConvention::kPlain ? "plain" : "hat";
  j["entries"] = matrix_to_json(r.entries);
  return j;
}

ordered_json entry_to_json(const CatalogEntry& entry, double q) {
  ordered_json j;
  j["name"] = entry.name;
  j["algebra"] = algebra_to_json(*entry.algebra);
  ordered_json tensors;
  for (const auto& [key, t] : entry.tensors) tensors[key] = tensor_to_json(t);
  j["tensors"] = std::move(tensors);
  if (entry.rmatrix_family) {
    Mat r = (*entry.rmatrix_family)(q);
    Eigen::Index n = 1;
    while (n * n < r.rows()) ++n;
    j["q"] = q;
    j["rmatrix"] = rmat_to_json(RMat(n, std::move(r), RConvention::kPlain));
  }
  return j;
}

}  // namespace quasitri
