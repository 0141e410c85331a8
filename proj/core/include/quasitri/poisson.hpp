#pragma once

#include <functional>
#include <vector>

#include "quasitri/rng.hpp"
#include "quasitri/tensor.hpp"

namespace quasitri {

/// An invertible group element (any invertible complex matrix of the algebra's size).
struct GroupPoint {
  Mat mat;

  GroupPoint() = default;
  GroupPoint(Mat m, double singularity_threshold = kSingularityThreshold);

  Eigen::Index n() const { return mat.rows(); }
  Mat inverse() const;
};

/// Coordinate bracket tables. Entry B[(i,j),(k,l)] = {first (i,j)-coordinate,
/// second (k,l)-coordinate} at the given point, with (i,j) flattened to i*n+j.
/// Same-factor tables are antisymmetric under swapping the two coordinate labels.
using BracketTable = Mat;

/// Sklyanin coboundary bracket: B = sum r^{mn} [(X_m g)(X_n g) - (g X_m)(g X_n)].
BracketTable bracket_sklyanin(const CoefTensor2& r, const GroupPoint& g, double tol = kDefaultTol);

/// Companion plus bracket: B = sum r^{mn} [(X_m g)(X_n g) + (g X_m)(g X_n)].
BracketTable bracket_plus(const CoefTensor2& r, const GroupPoint& g, double tol = kDefaultTol);

/// Cross block between an a-factor and a b-factor:
/// B[(i,j),(k,l)] = sum phi^{mn} (a X_m)_{ij} (X_n b)_{kl}.
BracketTable bracket_cross(const CoefTensor2& phi_value, const GroupPoint& a, const GroupPoint& b);

/// Two-link data: the antisymmetric tensor behind the link brackets and the
/// cross-term coefficient function phi(a, b).
struct TwoLinkSpec {
  AlgebraPtr algebra;
  CoefTensor2 r;
  std::function<CoefTensor2(const GroupPoint&, const GroupPoint&)> phi;

  static TwoLinkSpec constant(CoefTensor2 r, CoefTensor2 phi_value);
  /// phi(a,b) = -r + Ad_b ⊗ Ad_b (f_scale * trace(ab) * t).
  static TwoLinkSpec ad_b_trace(CoefTensor2 r, CoefTensor2 t, double f_scale = 1.0);
};

/// Full 2n^2 x 2n^2 table of the braided two-link structure
/// [[plus(a), cross(phi(a,b))], [-cross^T, plus(b)]].
BracketTable assemble_two_link(const TwoLinkSpec& spec, const GroupPoint& a, const GroupPoint& b);

/// A point map between products of group factors together with its Jacobian in
/// matrix-entry coordinates (row-major flattening, factors concatenated).
struct MapResult {
  std::vector<GroupPoint> value;
  Mat jacobian;  // (#out * n^2) x (#in * n^2)
};

/// (x, y, z) -> x y z^{-1}.
MapResult map_one_link(const GroupPoint& x, const GroupPoint& y, const GroupPoint& z);
/// (a, g, b) -> (a g^{-1}, g b).
MapResult map_two_link(const GroupPoint& a, const GroupPoint& g, const GroupPoint& b);
/// (a, b) -> a b.
MapResult map_multiply(const GroupPoint& a, const GroupPoint& b);

using TableFn = std::function<BracketTable(const std::vector<GroupPoint>&)>;
using MapFn = std::function<MapResult(const std::vector<GroupPoint>&)>;

/// ‖J Pi_source J^T - Pi_target(map(point))‖_max.
double poisson_map_residual(const TableFn& source, const MapFn& map, const TableFn& target,
                            const std::vector<GroupPoint>& point);

/// One-link gauge map (x,y,z) -> xyz^{-1} from (sklyanin, plus, sklyanin) to plus.
double one_link_residual(const CoefTensor2& r, const GroupPoint& x, const GroupPoint& y,
                         const GroupPoint& z);

/// Two-link gauge map (a,g,b) -> (ag^{-1}, gb) from the braided two-link structure
/// with the gauge factor in the middle (plus on the links, sklyanin on the gauge
/// factor, cross term between the links) to the braided two-link structure.
double two_link_residual(const TwoLinkSpec& spec, const GroupPoint& a, const GroupPoint& g,
                         const GroupPoint& b);

/// Multiplication (a,b) -> ab from the two-link structure to plus.
double multiplication_residual(const TwoLinkSpec& spec, const GroupPoint& a, const GroupPoint& b);
/// Max over seeded random point pairs.
double multiplication_residual(const TwoLinkSpec& spec, int samples, std::uint64_t seed);

struct PhiCheckReport {
  double max_cocycle_residual = 0.0;  // psi(ag^{-1}, gb) vs Ad_g ⊗ Ad_g psi(a,b), psi = phi + r
  double max_map_residual = 0.0;
  bool pass(double tol) const { return max_cocycle_residual <= tol && max_map_residual <= tol; }
};

/// Verifies the cross-term condition over seeded random triples (a, g, b).
PhiCheckReport phi_condition_check(const TwoLinkSpec& spec, int samples, std::uint64_t seed,
                                   double tol = kDefaultTol);

/// Max over seeded random triples of the one-link map residual.
double one_link_residual(const CoefTensor2& r, int samples, std::uint64_t seed);

/// Jacobiator of the two-link structure at (a, b), evaluated for all coordinate
/// triples with central finite differences of the bracket fields. phi must be
/// constant for the table field to be well-defined off the sampled points.
double jacobi_residual(const TwoLinkSpec& spec, const GroupPoint& a, const GroupPoint& b,
                       double fd_step = 1e-5);
double jacobi_residual(const TwoLinkSpec& spec, int samples, std::uint64_t seed,
                       double fd_step = 1e-5);

/// Compares the closed-form pushforward of the right-translated bivector rg under
/// the two-link gauge map (first-leg block ag^{-1}·r left-translated, second-leg
/// block r·gb right-translated, cross block -(ag^{-1}) r (gb)) against the Jacobian
/// pushforward of the middle-factor table. Returns the max difference.
double pushforward_formula_check(const CoefTensor2& r, const GroupPoint& a, const GroupPoint& g,
                                 const GroupPoint& b);
double pushforward_formula_check(const CoefTensor2& r, int samples, std::uint64_t seed);

}  // namespace quasitri
