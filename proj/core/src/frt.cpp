#include "quasitri/frt.hpp"

#include <algorithm>

namespace quasitri {

namespace {

Eigen::Index pair_index(Eigen::Index n, int i, int j) {
  return static_cast<Eigen::Index>(i - 1) * n + (j - 1);
}

void require_hat(const RMat& r, const char* who) {
  if (r.convention != RConvention::kHat)
    throw InputError(std::string(who) + ": expects the hat convention");
}

/// All words of the given length over one family's N^2 generators, in
/// lexicographic order.
std::vector<Monomial> family_words(GenFamily f, Eigen::Index n, int length) {
  std::vector<Monomial> out{Monomial{}};
  for (int step = 0; step < length; ++step) {
    std::vector<Monomial> next;
    next.reserve(out.size() * static_cast<std::size_t>(n * n));
    for (const Monomial& m : out)
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
          Monomial ext = m;
          ext.push_back(GenSymbol{f, a, b});
          next.push_back(std::move(ext));
        }
    out = std::move(next);
  }
  return out;
}

Monomial concat(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

/// Dense coefficient vector of a normal-ordered polynomial over the full
/// normal-ordered monomial basis of one bidegree.
struct MonomialBasis {
  std::vector<Monomial> monomials;
  std::map<Monomial, Eigen::Index> index;

  MonomialBasis(Eigen::Index n, int dv, int dw) {
    const auto vs = family_words(GenFamily::kV, n, dv);
    const auto ws = family_words(GenFamily::kW, n, dw);
    monomials.reserve(vs.size() * ws.size());
    for (const Monomial& mv : vs)
      for (const Monomial& mw : ws) {
        monomials.push_back(concat(mv, mw));
        index.emplace(monomials.back(), static_cast<Eigen::Index>(monomials.size()) - 1);
      }
  }

  Vec coefficients(const NCPoly& p) const {
    Vec out = Vec::Zero(static_cast<Eigen::Index>(monomials.size()));
    for (const auto& [m, c] : p.terms()) {
      // u-family symbols participate as v-like generators only in pure
      // one-family relation sets, never in mixed membership problems.
      const auto it = index.find(m);
      if (it == index.end()) throw InputError("ideal_membership: monomial outside the bidegree basis");
      out(it->second) += c;
    }
    return out;
  }
};

struct GeneratorColumn {
  CertificateEntry tag;
  Vec coeffs;
};

}  // namespace

const NCPoly& RelationSet::at(int p, int q, int l, int m) const {
  const std::size_t idx =
      ((static_cast<std::size_t>(p - 1) * N + (q - 1)) * N + (l - 1)) * N + (m - 1);
  return elements[idx];
}

RelationSet plus_relations(const RMat& rhat, GenFamily family) {
  require_hat(rhat, "plus_relations");
  const Eigen::Index n = rhat.N;
  const Mat r21 = r21_of_hat(rhat.entries, n);
  RelationSet out{family, n, {}};
  out.elements.reserve(static_cast<std::size_t>(n * n * n * n));
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q)
      for (int l = 1; l <= n; ++l)
        for (int m = 1; m <= n; ++m) {
          NCPoly rel;
          for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
              const cplx c1 = rhat.entries(pair_index(n, p, q), pair_index(n, j, k));
              if (c1 != cplx(0, 0))
                rel.add_term({GenSymbol{family, j, l}, GenSymbol{family, k, m}}, c1);
              const cplx c2 = r21(pair_index(n, j, k), pair_index(n, l, m));
              if (c2 != cplx(0, 0))
                rel.add_term({GenSymbol{family, p, j}, GenSymbol{family, q, k}}, -c2);
            }
          out.elements.push_back(std::move(rel));
        }
  return out;
}

CrossRules::CrossRules(const RMat& rhat) : n_(rhat.N), rhat_(rhat.entries) {
  require_hat(rhat, "cross_relations");
}

std::vector<CrossRules::Replacement> CrossRules::apply(const GenSymbol& w, const GenSymbol& v) const {
  if (!w.w_like() || v.w_like()) throw InputError("CrossRules: rule applies to a (w, v) pair");
  std::vector<Replacement> out;
  for (int s = 1; s <= n_; ++s)
    for (int t = 1; t <= n_; ++t) {
      const cplx c = rhat_(pair_index(n_, s, w.upper), pair_index(n_, t, v.lower));
      if (c == cplx(0, 0)) continue;
      out.push_back({c, GenSymbol{v.family, v.upper, s}, GenSymbol{w.family, t, w.lower}});
    }
  return out;
}

NCPoly straighten(const CrossRules& rules, const NCPoly& p, StraightenStats* stats, double drop_eps) {
  NCPoly out;
  struct Item {
    Monomial m;
    cplx c;
    std::size_t depth;
  };
  std::vector<Item> work;
  work.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) work.push_back({m, c, 0});

  while (!work.empty()) {
    Item item = std::move(work.back());
    work.pop_back();

    std::size_t pos = item.m.size();
    for (std::size_t i = 0; i + 1 < item.m.size(); ++i)
      if (item.m[i].w_like() && !item.m[i + 1].w_like()) {
        pos = i;
        break;
      }
    if (pos == item.m.size()) {
      if (stats) stats->max_depth = std::max(stats->max_depth, item.depth);
      out.add_term(item.m, item.c);
      continue;
    }

    if (stats) ++stats->rewrites;
    for (const auto& rep : rules.apply(item.m[pos], item.m[pos + 1])) {
      Monomial m = item.m;
      m[pos] = rep.v;
      m[pos + 1] = rep.w;
      work.push_back({std::move(m), item.c * rep.coeff, item.depth + 1});
    }
  }
  return out.pruned(drop_eps);
}

std::vector<NCPoly> compose_generators(Eigen::Index n) {
  if (n < 1) throw InputError("compose_generators: N must be >= 1");
  std::vector<NCPoly> out;
  out.reserve(static_cast<std::size_t>(n * n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      NCPoly p;
      for (int a = 1; a <= n; ++a)
        p.add_term({GenSymbol{GenFamily::kV, i, a}, GenSymbol{GenFamily::kW, a, j}}, cplx(1, 0));
      out.push_back(std::move(p));
    }
  return out;
}

MembershipResult ideal_membership(const NCPoly& p, const RMat& rhat, int max_degree, double tol) {
  require_hat(rhat, "ideal_membership");
  if (p.empty()) return {true, 0.0, {}};

  int degree = 0;
  if (!p.is_homogeneous(&degree)) throw InputError("ideal_membership: polynomial must be homogeneous");
  if (degree > max_degree) throw InputError("ideal_membership: degree exceeds the configured bound");
  if (!p.is_normal_ordered()) throw InputError("ideal_membership: polynomial must be normal-ordered");

  const Eigen::Index n = rhat.N;
  const auto [dv, dw] = p.bidegree();
  const RelationSet rels_v = plus_relations(rhat, GenFamily::kV);
  const RelationSet rels_w = plus_relations(rhat, GenFamily::kW);
  const MonomialBasis basis(n, dv, dw);

  std::vector<GeneratorColumn> columns;
  const auto add_columns = [&](const RelationSet& rels, bool v_family) {
    // Multipliers keep the product normal-ordered as written: pure v-words to
    // the left of a v-relation and mixed (v then w) words to its right; the
    // mirror image for a w-relation.
    const int rel_deg_v = v_family ? 2 : 0;
    const int rel_deg_w = v_family ? 0 : 2;
    const int free_v = dv - rel_deg_v;
    const int free_w = dw - rel_deg_w;
    if (free_v < 0 || free_w < 0) return;
    for (int av = 0; av <= free_v; ++av) {
      const int bv = free_v - av;
      for (int aw = 0; aw <= free_w; ++aw) {
        const int bw = free_w - aw;
        if (v_family && aw > 0) continue;  // nothing may precede v-relations but v's
        if (!v_family && bv > 0) continue; // nothing may follow w-relations but w's
        for (const Monomial& lv : family_words(GenFamily::kV, n, av))
          for (const Monomial& lw : family_words(GenFamily::kW, n, aw))
            for (const Monomial& rv : family_words(GenFamily::kV, n, bv))
              for (const Monomial& rw : family_words(GenFamily::kW, n, bw)) {
                const Monomial left = concat(lv, lw);
                const Monomial right = concat(rv, rw);
                for (std::size_t idx = 0; idx < rels.elements.size(); ++idx) {
                  const NCPoly prod = NCPoly::monomial(left) * rels.elements[idx] * NCPoly::monomial(right);
                  columns.push_back({{rels.family, static_cast<int>(idx), left, right, cplx(0, 0)},
                                     basis.coefficients(prod)});
                }
              }
      }
    }
  };
  add_columns(rels_v, true);
  add_columns(rels_w, false);

  const Vec b = basis.coefficients(p);
  if (columns.empty()) return {max_abs(b) <= tol, max_abs(b), {}};

  Mat a(b.size(), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t k = 0; k < columns.size(); ++k) a.col(static_cast<Eigen::Index>(k)) = columns[k].coeffs;

  Eigen::CompleteOrthogonalDecomposition<Mat> cod(a);
  cod.setThreshold(kSvdThreshold);
  const Vec x = cod.solve(b);
  const double distance = max_abs(Vec(a * x - b));

  MembershipResult out;
  out.distance = distance;
  out.member = distance <= tol;
  if (out.member) {
    for (std::size_t k = 0; k < columns.size(); ++k) {
      const cplx coeff = x(static_cast<Eigen::Index>(k));
      if (std::abs(coeff) > 1e-12) {
        CertificateEntry entry = columns[k].tag;
        entry.coeff = coeff;
        out.certificate.push_back(std::move(entry));
      }
    }
  }
  return out;
}

HomomorphismResult homomorphism_residual(const RMat& rhat, double tol) {
  require_hat(rhat, "homomorphism_residual");
  const Eigen::Index n = rhat.N;
  const Mat r21 = r21_of_hat(rhat.entries, n);
  const CrossRules rules(rhat);
  const std::vector<NCPoly> vw = compose_generators(n);
  const auto vw_at = [&](int i, int j) -> const NCPoly& { return vw[static_cast<std::size_t>(pair_index(n, i, j))]; };

  HomomorphismResult out;
  out.braid_residual = braid_residual(rhat);
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q)
      for (int l = 1; l <= n; ++l)
        for (int m = 1; m <= n; ++m) {
          NCPoly defect;
          for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
              const cplx c1 = rhat.entries(pair_index(n, p, q), pair_index(n, j, k));
              if (c1 != cplx(0, 0)) defect = defect + (vw_at(j, l) * vw_at(k, m)) * c1;
              const cplx c2 = r21(pair_index(n, j, k), pair_index(n, l, m));
              if (c2 != cplx(0, 0)) defect = defect - (vw_at(p, j) * vw_at(q, k)) * c2;
            }
          MembershipResult res = ideal_membership(straighten(rules, defect), rhat, 4, tol);
          out.max_distance = std::max(out.max_distance, res.distance);
          out.defects.push_back(std::move(res));
        }
  return out;
}

double straightening_consistency(const RMat& rhat) {
  require_hat(rhat, "straightening_consistency");
  const Eigen::Index n = rhat.N;
  const CrossRules rules(rhat);
  const RelationSet rels_v = plus_relations(rhat, GenFamily::kV);
  const RelationSet rels_w = plus_relations(rhat, GenFamily::kW);
  const auto gens = [&](GenFamily f) { return family_words(f, n, 1); };

  double worst = 0.0;
  const auto side = [&](const RelationSet& rels, GenFamily other, bool rel_on_left) {
    const int dv = rel_on_left ? 1 : 2;
    const int dw = rel_on_left ? 2 : 1;
    const MonomialBasis basis(n, dv, dw);

    std::vector<Vec> cols;
    for (const NCPoly& rel : rels.elements)
      for (const Monomial& g : gens(other)) {
        const NCPoly prod = rel_on_left ? NCPoly::monomial(g) * rel : rel * NCPoly::monomial(g);
        cols.push_back(basis.coefficients(prod));
      }
    Mat a(static_cast<Eigen::Index>(basis.monomials.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k) a.col(static_cast<Eigen::Index>(k)) = cols[k];
    Eigen::CompleteOrthogonalDecomposition<Mat> cod(a);
    cod.setThreshold(kSvdThreshold);

    for (const NCPoly& rel : rels.elements)
      for (const Monomial& g : gens(other)) {
        const NCPoly prod = rel_on_left ? rel * NCPoly::monomial(g) : NCPoly::monomial(g) * rel;
        const Vec b = basis.coefficients(straighten(rules, prod));
        const Vec x = cod.solve(b);
        worst = std::max(worst, max_abs(Vec(a * x - b)));
      }
  };
  // rho_w moved past a v-generator vs the span of v · rho_w.
  side(rels_w, GenFamily::kV, /*rel_on_left=*/true);
  // w-generator moved past rho_v vs the span of rho_v · w.
  side(rels_v, GenFamily::kW, /*rel_on_left=*/false);
  return worst;
}

}  // namespace quasitri
