#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quasitri/common.hpp"

namespace quasitri {

/// Matrix-entry generator x^upper_lower of one of the three families. The u
/// family is an alias of v for single-link relation sets; straightening only
/// distinguishes v-like (u, v) from w.
enum class GenFamily : std::uint8_t { kU = 0, kV = 1, kW = 2 };

struct GenSymbol {
  GenFamily family;
  int upper;  // 1..N
  int lower;  // 1..N

  auto operator<=>(const GenSymbol&) const = default;
  bool w_like() const { return family == GenFamily::kW; }
};

using Monomial = std::vector<GenSymbol>;

std::string to_string(const GenSymbol& s);
std::string to_string(const Monomial& m);

/// Number of (w ... v) inversions: pairs with a w-family symbol before a v-family one.
int inversion_count(const Monomial& m);
bool is_normal_ordered(const Monomial& m);

/// Noncommutative polynomial: canonical term order via lexicographic symbol
/// comparison, no exactly-zero coefficients kept.
class NCPoly {
 public:
  NCPoly() = default;
  static NCPoly monomial(Monomial m, cplx coeff = cplx(1, 0));
  static NCPoly generator(GenFamily f, int upper, int lower);

  const std::map<Monomial, cplx>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(const Monomial& m, cplx coeff);

  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly operator*(const NCPoly& o) const;
  NCPoly operator*(cplx s) const;

  /// Drop terms with |coeff| <= eps.
  NCPoly pruned(double eps) const;

  double max_abs_coeff() const;
  /// Max coefficient magnitude of (*this - o).
  double distance(const NCPoly& o) const;

  bool is_homogeneous(int* degree = nullptr) const;
  /// (#v-like, #w) of every term; throws unless all terms agree.
  std::pair<int, int> bidegree() const;
  bool is_normal_ordered() const;

  std::string to_string() const;

 private:
  std::map<Monomial, cplx> terms_;
};

}  // namespace quasitri
