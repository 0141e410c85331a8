#pragma once

#include <optional>

#include "quasitri/ncpoly.hpp"
#include "quasitri/rmatrix.hpp"

namespace quasitri {

/// The N^4 quadratic relations R̂(x⊗x) = (x⊗x)R̂_21 for one generator family,
/// indexed by (p,q,l,m) at ((p-1)N+(q-1))N^2 + (l-1)N + (m-1).
struct RelationSet {
  GenFamily family;
  Eigen::Index N = 0;
  std::vector<NCPoly> elements;

  const NCPoly& at(int p, int q, int l, int m) const;
};

RelationSet plus_relations(const RMat& rhat, GenFamily family);

/// Exchange rules moving a w-family generator to the right of a v-family one:
///   w^a_l · v^k_b  ->  sum_{s,t} R̂^{sa}_{tb} v^k_s w^t_l.
class CrossRules {
 public:
  explicit CrossRules(const RMat& rhat);

  Eigen::Index N() const { return n_; }
  const Mat& rhat() const { return rhat_; }

  struct Replacement {
    cplx coeff;
    GenSymbol v;
    GenSymbol w;
  };
  /// All nonzero replacements for the adjacent pair (w, v).
  std::vector<Replacement> apply(const GenSymbol& w, const GenSymbol& v) const;

 private:
  Eigen::Index n_;
  Mat rhat_;
};

struct StraightenStats {
  std::size_t rewrites = 0;
  std::size_t max_depth = 0;  // per-monomial rewrite chain length
};

/// Normal-orders a polynomial in v and w symbols (every v left of every w).
/// Each rewrite removes exactly one inversion, so every chain terminates after
/// at most the initial inversion count of its monomial. Terms with coefficients
/// below drop_eps are pruned from the result.
NCPoly straighten(const CrossRules& rules, const NCPoly& p, StraightenStats* stats = nullptr,
                  double drop_eps = 1e-14);

/// The composed generators (vw)^i_j = sum_a v^i_a w^a_j, indexed by (i-1)*N + (j-1).
std::vector<NCPoly> compose_generators(Eigen::Index n);

struct CertificateEntry {
  GenFamily rel_family;
  int rel_index;     // flat (p,q,l,m) index into the RelationSet
  Monomial left;     // multiplier on the left
  Monomial right;    // multiplier on the right
  cplx coeff;
};

struct MembershipResult {
  bool member = false;
  double distance = 0.0;  // max-norm distance to the span
  std::vector<CertificateEntry> certificate;
};

/// Degree-bounded membership of a normal-ordered homogeneous polynomial in the
/// span of {m_L · rel · m_R} with rel from the v- and w-family plus relations and
/// the multipliers chosen so every product is normal-ordered as written
/// (v-monomials left of a v-relation, mixed normal-ordered words elsewhere).
/// Least-squares over the normal-ordered monomial basis of each bidegree
/// component; certificate entries with |coeff| <= 1e-12 are dropped.
MembershipResult ideal_membership(const NCPoly& p, const RMat& rhat, int max_degree = 4,
                                  double tol = 1e-10);

struct HomomorphismResult {
  double braid_residual = 0.0;
  double max_distance = 0.0;
  std::vector<MembershipResult> defects;  // one per (p,q,l,m)
};

/// Checks that the composed generators satisfy the plus relations modulo the
/// relation ideal: builds the N^4 defect polynomials, straightens them and runs
/// ideal_membership on each. The braid residual of R̂ is reported alongside.
HomomorphismResult homomorphism_residual(const RMat& rhat, double tol = 1e-10);

/// Stability of the one-sided relation spans under the exchange rules: distance
/// of straighten(rho_w · v-gen) to span{v-gen · rho_w} and of
/// straighten(w-gen · rho_v) to span{rho_v · w-gen}; vanishes exactly when the
/// braid relation holds.
double straightening_consistency(const RMat& rhat);

}  // namespace quasitri
