#include "quasitri/ncpoly.hpp"

#include <sstream>

namespace quasitri {

std::string to_string(const GenSymbol& s) {
  static const char* names[] = {"u", "v", "w"};
  std::ostringstream os;
  os << names[static_cast<int>(s.family)] << "^" << s.upper << "_" << s.lower;
  return os.str();
}

std::string to_string(const Monomial& m) {
  if (m.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) os << "·";
    os << to_string(m[i]);
  }
  return os.str();
}

int inversion_count(const Monomial& m) {
  int count = 0;
  int w_seen = 0;
  for (const GenSymbol& s : m) {
    if (s.w_like())
      ++w_seen;
    else
      count += w_seen;
  }
  return count;
}

bool is_normal_ordered(const Monomial& m) { return inversion_count(m) == 0; }

NCPoly NCPoly::monomial(Monomial m, cplx coeff) {
  NCPoly p;
  p.add_term(m, coeff);
  return p;
}

NCPoly NCPoly::generator(GenFamily f, int upper, int lower) {
  return monomial({GenSymbol{f, upper, lower}});
}

void NCPoly::add_term(const Monomial& m, cplx coeff) {
  if (coeff == cplx(0, 0)) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == cplx(0, 0)) terms_.erase(it);
  }
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  NCPoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
  NCPoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
  NCPoly out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m = m1;
      m.insert(m.end(), m2.begin(), m2.end());
      out.add_term(m, c1 * c2);
    }
  return out;
}

NCPoly NCPoly::operator*(cplx s) const {
  NCPoly out;
  if (s == cplx(0, 0)) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, s * c);
  return out;
}

NCPoly NCPoly::pruned(double eps) const {
  NCPoly out;
  for (const auto& [m, c] : terms_)
    if (std::abs(c) > eps) out.terms_.emplace(m, c);
  return out;
}

double NCPoly::max_abs_coeff() const {
  double out = 0.0;
  for (const auto& [m, c] : terms_) out = std::max(out, std::abs(c));
  return out;
}

double NCPoly::distance(const NCPoly& o) const { return (*this - o).max_abs_coeff(); }

bool NCPoly::is_homogeneous(int* degree) const {
  if (terms_.empty()) {
    if (degree) *degree = 0;
    return true;
  }
  const std::size_t d = terms_.begin()->first.size();
  for (const auto& [m, c] : terms_)
    if (m.size() != d) return false;
  if (degree) *degree = static_cast<int>(d);
  return true;
}

std::pair<int, int> NCPoly::bidegree() const {
  if (terms_.empty()) return {0, 0};
  auto count = [](const Monomial& m) {
    int v = 0, w = 0;
    for (const GenSymbol& s : m) (s.w_like() ? w : v)++;
    return std::pair<int, int>{v, w};
  };
  const auto first = count(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (count(m) != first) throw InputError("NCPoly: polynomial is not bidegree-homogeneous");
  return first;
}

bool NCPoly::is_normal_ordered() const {
  for (const auto& [m, c] : terms_)
    if (!quasitri::is_normal_ordered(m)) return false;
  return true;
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.real();
    if (c.imag() != 0.0) os << (c.imag() > 0 ? "+" : "") << c.imag() << "i";
    os << ")·" << quasitri::to_string(m);
    first = false;
  }
  return os.str();
}

}  // namespace quasitri
