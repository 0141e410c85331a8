#include "quasitri/poisson.hpp"

namespace quasitri {

namespace {

// Columns vec(X_m g) and vec(g X_m) over the basis; every bracket table is a
// congruence of the coefficient matrix by these frames.
struct Frames {
  Mat right;  // columns vec(X_m g)
  Mat left;   // columns vec(g X_m)
};

Frames frames(const LieAlgebraRep& alg, const Mat& g) {
  const Eigen::Index n2 = g.rows() * g.cols();
  Frames f{Mat(n2, alg.dim()), Mat(n2, alg.dim())};
  for (int m = 0; m < alg.dim(); ++m) {
    f.right.col(m) = vec_rm(Mat(alg.basis(m) * g));
    f.left.col(m) = vec_rm(Mat(g * alg.basis(m)));
  }
  return f;
}

Mat translated_frame(const LieAlgebraRep& alg, const Mat& g, bool left) {
  const Eigen::Index n2 = g.rows() * g.cols();
  Mat out(n2, alg.dim());
  for (int m = 0; m < alg.dim(); ++m)
    out.col(m) = vec_rm(Mat(left ? g * alg.basis(m) : alg.basis(m) * g));
  return out;
}

void require_antisymmetric(const CoefTensor2& r, double tol, const char* who) {
  if (!r.is_antisymmetric(tol)) throw InputError(std::string(who) + ": r must be antisymmetric");
}

// Jacobian of M -> A M B in row-major coordinates: kron(A, B^T).
Mat jac_sandwich(const Mat& a, const Mat& b) { return kron(a, b.transpose()); }

}  // namespace

GroupPoint::GroupPoint(Mat m, double singularity_threshold) : mat(std::move(m)) {
  if (mat.rows() != mat.cols()) throw InputError("GroupPoint: matrix must be square");
  Eigen::FullPivLU<Mat> lu(mat);
  lu.setThreshold(singularity_threshold);
  if (!lu.isInvertible()) throw NumericsError("GroupPoint: matrix is singular");
}

Mat GroupPoint::inverse() const { return mat.inverse(); }

BracketTable bracket_sklyanin(const CoefTensor2& r, const GroupPoint& g, double tol) {
  require_antisymmetric(r, tol, "bracket_sklyanin");
  const Frames f = frames(*r.algebra, g.mat);
  return f.right * r.coeffs * f.right.transpose() - f.left * r.coeffs * f.left.transpose();
}

BracketTable bracket_plus(const CoefTensor2& r, const GroupPoint& g, double tol) {
  require_antisymmetric(r, tol, "bracket_plus");
  const Frames f = frames(*r.algebra, g.mat);
  return f.right * r.coeffs * f.right.transpose() + f.left * r.coeffs * f.left.transpose();
}

BracketTable bracket_cross(const CoefTensor2& phi_value, const GroupPoint& a, const GroupPoint& b) {
  const auto& alg = *phi_value.algebra;
  const Mat la = translated_frame(alg, a.mat, /*left=*/true);
  const Mat rb = translated_frame(alg, b.mat, /*left=*/false);
  return la * phi_value.coeffs * rb.transpose();
}

TwoLinkSpec TwoLinkSpec::constant(CoefTensor2 r, CoefTensor2 phi_value) {
  TwoLinkSpec spec;
  spec.algebra = r.algebra;
  spec.r = std::move(r);
  spec.phi = [phi_value = std::move(phi_value)](const GroupPoint&, const GroupPoint&) {
    return phi_value;
  };
  return spec;
}

TwoLinkSpec TwoLinkSpec::ad_b_trace(CoefTensor2 r, CoefTensor2 t, double f_scale) {
  TwoLinkSpec spec;
  spec.algebra = r.algebra;
  spec.r = r;
  spec.phi = [r = std::move(r), t = std::move(t), f_scale](const GroupPoint& a, const GroupPoint& b) {
    const cplx f = f_scale * (a.mat * b.mat).trace();
    return CoefTensor2{r.algebra, Mat(-r.coeffs)} + adjoint_action2(b.mat, t * f);
  };
  return spec;
}

BracketTable assemble_two_link(const TwoLinkSpec& spec, const GroupPoint& a, const GroupPoint& b) {
  const Eigen::Index n2 = a.n() * a.n();
  BracketTable out = Mat::Zero(2 * n2, 2 * n2);
  out.topLeftCorner(n2, n2) = bracket_plus(spec.r, a);
  out.bottomRightCorner(n2, n2) = bracket_plus(spec.r, b);
  const Mat c = bracket_cross(spec.phi(a, b), a, b);
  out.topRightCorner(n2, n2) = c;
  out.bottomLeftCorner(n2, n2) = -c.transpose();
  return out;
}

MapResult map_one_link(const GroupPoint& x, const GroupPoint& y, const GroupPoint& z) {
  const Eigen::Index n = x.n();
  const Eigen::Index n2 = n * n;
  const Mat zi = z.inverse();
  const Mat value = x.mat * y.mat * zi;
  Mat jac = Mat::Zero(n2, 3 * n2);
  jac.middleCols(0, n2) = jac_sandwich(Mat::Identity(n, n), Mat(y.mat * zi));
  jac.middleCols(n2, n2) = jac_sandwich(x.mat, zi);
  jac.middleCols(2 * n2, n2) = -jac_sandwich(value, zi);
  return {{GroupPoint(value)}, std::move(jac)};
}

MapResult map_two_link(const GroupPoint& a, const GroupPoint& g, const GroupPoint& b) {
  const Eigen::Index n = a.n();
  const Eigen::Index n2 = n * n;
  const Mat gi = g.inverse();
  const Mat agi = a.mat * gi;
  const Mat gb = g.mat * b.mat;
  Mat jac = Mat::Zero(2 * n2, 3 * n2);
  jac.block(0, 0, n2, n2) = jac_sandwich(Mat::Identity(n, n), gi);
  jac.block(0, n2, n2, n2) = -jac_sandwich(agi, gi);
  jac.block(n2, n2, n2, n2) = jac_sandwich(Mat::Identity(n, n), b.mat);
  jac.block(n2, 2 * n2, n2, n2) = jac_sandwich(g.mat, Mat::Identity(n, n));
  return {{GroupPoint(agi), GroupPoint(gb)}, std::move(jac)};
}

MapResult map_multiply(const GroupPoint& a, const GroupPoint& b) {
  const Eigen::Index n = a.n();
  const Eigen::Index n2 = n * n;
  Mat jac = Mat::Zero(n2, 2 * n2);
  jac.middleCols(0, n2) = jac_sandwich(Mat::Identity(n, n), b.mat);
  jac.middleCols(n2, n2) = jac_sandwich(a.mat, Mat::Identity(n, n));
  return {{GroupPoint(a.mat * b.mat)}, std::move(jac)};
}

double poisson_map_residual(const TableFn& source, const MapFn& map, const TableFn& target,
                            const std::vector<GroupPoint>& point) {
  const BracketTable src = source(point);
  const MapResult m = map(point);
  const BracketTable tgt = target(m.value);
  return max_abs(Mat(m.jacobian * src * m.jacobian.transpose() - tgt));
}

double one_link_residual(const CoefTensor2& r, const GroupPoint& x, const GroupPoint& y,
                         const GroupPoint& z) {
  const Eigen::Index n2 = x.n() * x.n();
  const TableFn source = [&](const std::vector<GroupPoint>& p) {
    Mat s = Mat::Zero(3 * n2, 3 * n2);
    s.block(0, 0, n2, n2) = bracket_sklyanin(r, p[0]);
    s.block(n2, n2, n2, n2) = bracket_plus(r, p[1]);
    s.block(2 * n2, 2 * n2, n2, n2) = bracket_sklyanin(r, p[2]);
    return s;
  };
  const MapFn map = [](const std::vector<GroupPoint>& p) { return map_one_link(p[0], p[1], p[2]); };
  const TableFn target = [&](const std::vector<GroupPoint>& p) { return bracket_plus(r, p[0]); };
  return poisson_map_residual(source, map, target, {x, y, z});
}

double two_link_residual(const TwoLinkSpec& spec, const GroupPoint& a, const GroupPoint& g,
                         const GroupPoint& b) {
  const Eigen::Index n2 = a.n() * a.n();
  const TableFn source = [&](const std::vector<GroupPoint>& p) {
    // The links carry the braided structure (cross term between the outer
    // factors); the gauge factor in the middle carries the coboundary bracket.
    Mat s = Mat::Zero(3 * n2, 3 * n2);
    s.block(0, 0, n2, n2) = bracket_plus(spec.r, p[0]);
    s.block(n2, n2, n2, n2) = bracket_sklyanin(spec.r, p[1]);
    s.block(2 * n2, 2 * n2, n2, n2) = bracket_plus(spec.r, p[2]);
    const Mat c = bracket_cross(spec.phi(p[0], p[2]), p[0], p[2]);
    s.block(0, 2 * n2, n2, n2) = c;
    s.block(2 * n2, 0, n2, n2) = -c.transpose();
    return s;
  };
  const MapFn map = [](const std::vector<GroupPoint>& p) { return map_two_link(p[0], p[1], p[2]); };
  const TableFn target = [&](const std::vector<GroupPoint>& p) {
    return assemble_two_link(spec, p[0], p[1]);
  };
  return poisson_map_residual(source, map, target, {a, g, b});
}

double multiplication_residual(const TwoLinkSpec& spec, const GroupPoint& a, const GroupPoint& b) {
  const TableFn source = [&](const std::vector<GroupPoint>& p) {
    return assemble_two_link(spec, p[0], p[1]);
  };
  const MapFn map = [](const std::vector<GroupPoint>& p) { return map_multiply(p[0], p[1]); };
  const TableFn target = [&](const std::vector<GroupPoint>& p) { return bracket_plus(spec.r, p[0]); };
  return poisson_map_residual(source, map, target, {a, b});
}

double multiplication_residual(const TwoLinkSpec& spec, int samples, std::uint64_t seed) {
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    SampleRng rng(seed, static_cast<std::uint64_t>(s));
    const GroupPoint a(random_group_point(*spec.algebra, rng));
    const GroupPoint b(random_group_point(*spec.algebra, rng));
    worst = std::max(worst, multiplication_residual(spec, a, b));
  }
  return worst;
}

PhiCheckReport phi_condition_check(const TwoLinkSpec& spec, int samples, std::uint64_t seed,
                                   double tol) {
  PhiCheckReport report;
  for (int s = 0; s < samples; ++s) {
    SampleRng rng(seed, static_cast<std::uint64_t>(s));
    const GroupPoint a(random_group_point(*spec.algebra, rng));
    const GroupPoint g(random_group_point(*spec.algebra, rng));
    const GroupPoint b(random_group_point(*spec.algebra, rng));

    const CoefTensor2 psi = spec.phi(a, b) + spec.r;
    const GroupPoint a2(a.mat * g.inverse());
    const GroupPoint b2(g.mat * b.mat);
    const CoefTensor2 lhs = spec.phi(a2, b2) + spec.r;
    const CoefTensor2 rhs = adjoint_action2(g.mat, psi, tol);
    report.max_cocycle_residual =
        std::max(report.max_cocycle_residual, max_abs(Mat(lhs.coeffs - rhs.coeffs)));
    report.max_map_residual = std::max(report.max_map_residual, two_link_residual(spec, a, g, b));
  }
  return report;
}

double one_link_residual(const CoefTensor2& r, int samples, std::uint64_t seed) {
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    SampleRng rng(seed, static_cast<std::uint64_t>(s));
    const GroupPoint x(random_group_point(*r.algebra, rng));
    const GroupPoint y(random_group_point(*r.algebra, rng));
    const GroupPoint z(random_group_point(*r.algebra, rng));
    worst = std::max(worst, one_link_residual(r, x, y, z));
  }
  return worst;
}

double jacobi_residual(const TwoLinkSpec& spec, const GroupPoint& a, const GroupPoint& b,
                       double fd_step) {
  const Eigen::Index n = a.n();
  const Eigen::Index n2 = n * n;
  const Eigen::Index m = 2 * n2;
  const CoefTensor2 phi0 = spec.phi(a, b);

  const auto table_at = [&](const Vec& coords) {
    Mat am(n, n), bm(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        am(i, j) = coords(i * n + j);
        bm(i, j) = coords(n2 + i * n + j);
      }
    // Tables are polynomial in the entries, so off-group perturbations are fine.
    Mat out = Mat::Zero(m, m);
    const GroupPoint ap(am), bp(bm);
    out.topLeftCorner(n2, n2) = bracket_plus(spec.r, ap);
    out.bottomRightCorner(n2, n2) = bracket_plus(spec.r, bp);
    const Mat c = bracket_cross(phi0, ap, bp);
    out.topRightCorner(n2, n2) = c;
    out.bottomLeftCorner(n2, n2) = -c.transpose();
    return out;
  };

  Vec coords(m);
  coords.head(n2) = vec_rm(a.mat);
  coords.tail(n2) = vec_rm(b.mat);
  const Mat base = table_at(coords);

  std::vector<Mat> deriv(static_cast<std::size_t>(m));
  for (Eigen::Index d = 0; d < m; ++d) {
    Vec up = coords, dn = coords;
    up(d) += fd_step;
    dn(d) -= fd_step;
    deriv[static_cast<std::size_t>(d)] = (table_at(up) - table_at(dn)) / (2.0 * fd_step);
  }

  double worst = 0.0;
  for (Eigen::Index al = 0; al < m; ++al)
    for (Eigen::Index be = al + 1; be < m; ++be)
      for (Eigen::Index ga = be + 1; ga < m; ++ga) {
        cplx sum(0, 0);
        for (Eigen::Index d = 0; d < m; ++d) {
          const Mat& dd = deriv[static_cast<std::size_t>(d)];
          sum += base(al, d) * dd(be, ga) + base(be, d) * dd(ga, al) + base(ga, d) * dd(al, be);
        }
        worst = std::max(worst, std::abs(sum));
      }
  return worst;
}

double jacobi_residual(const TwoLinkSpec& spec, int samples, std::uint64_t seed, double fd_step) {
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    SampleRng rng(seed, static_cast<std::uint64_t>(s));
    const GroupPoint a(random_group_point(*spec.algebra, rng));
    const GroupPoint b(random_group_point(*spec.algebra, rng));
    worst = std::max(worst, jacobi_residual(spec, a, b, fd_step));
  }
  return worst;
}

double pushforward_formula_check(const CoefTensor2& r, const GroupPoint& a, const GroupPoint& g,
                                 const GroupPoint& b) {
  const auto& alg = *r.algebra;
  const Eigen::Index n2 = a.n() * a.n();

  // Jacobian pushforward of the right-translated middle-factor bivector.
  const Frames fg = frames(alg, g.mat);
  Mat src = Mat::Zero(3 * n2, 3 * n2);
  src.block(n2, n2, n2, n2) = fg.right * r.coeffs * fg.right.transpose();
  const MapResult m = map_two_link(a, g, b);
  const Mat pushed = m.jacobian * src * m.jacobian.transpose();

  // Closed form at the image point.
  const Mat a2 = a.mat * g.inverse();
  const Mat b2 = g.mat * b.mat;
  const Mat la = translated_frame(alg, a2, /*left=*/true);    // vec(ag^{-1} X_m)
  const Mat rb = translated_frame(alg, b2, /*left=*/false);   // vec(X_m gb)
  Mat analytic = Mat::Zero(2 * n2, 2 * n2);
  analytic.topLeftCorner(n2, n2) = la * r.coeffs * la.transpose();
  analytic.bottomRightCorner(n2, n2) = rb * r.coeffs * rb.transpose();
  const Mat cross = -la * r.coeffs * rb.transpose();
  analytic.topRightCorner(n2, n2) = cross;
  analytic.bottomLeftCorner(n2, n2) = -cross.transpose();

  return max_abs(Mat(pushed - analytic));
}

double pushforward_formula_check(const CoefTensor2& r, int samples, std::uint64_t seed) {
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    SampleRng rng(seed, static_cast<std::uint64_t>(s));
    const GroupPoint a(random_group_point(*r.algebra, rng));
    const GroupPoint g(random_group_point(*r.algebra, rng));
    const GroupPoint b(random_group_point(*r.algebra, rng));
    worst = std::max(worst, pushforward_formula_check(r, a, g, b));
  }
  return worst;
}

}  // namespace quasitri
