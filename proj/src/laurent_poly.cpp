#include "agpoly/laurent_poly.hpp"

#include <algorithm>
#include <sstream>

namespace agpoly {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(Exponent{0, 0}, Integer(constant));
}

LaurentPoly::LaurentPoly(std::initializer_list<std::tuple<int, int, long>> terms) {
  for (const auto& [i, j, c] : terms) add_term({i, j}, Integer(c));
}

LaurentPoly LaurentPoly::monomial(int q_exp, int z_exp, const Integer& coeff) {
  LaurentPoly p;
  p.add_term({q_exp, z_exp}, coeff);
  return p;
}

Integer LaurentPoly::coefficient(int q_exp, int z_exp) const {
  auto it = terms_.find({q_exp, z_exp});
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(Exponent e, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  Integer prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      prod = ca * cb;
      out.add_term({ea.q + eb.q, ea.z + eb.z}, prod);
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::shifted(int dq, int dz) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), Exponent{e.q + dq, e.z + dz}, c);
  return out;
}

LaurentPoly LaurentPoly::truncated(int max_q) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    if (e.q > max_q) break;
    out.terms_.emplace_hint(out.terms_.end(), e, c);
  }
  return out;
}

Integer LaurentPoly::evaluate_at_one() const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

std::optional<int> LaurentPoly::min_q() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.q;
}

std::optional<int> LaurentPoly::max_q() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.q;
}

std::optional<int> LaurentPoly::min_z() const {
  if (terms_.empty()) return std::nullopt;
  int best = terms_.begin()->first.z;
  for (const auto& [e, c] : terms_) best = std::min(best, e.z);
  return best;
}

std::optional<int> LaurentPoly::max_z() const {
  if (terms_.empty()) return std::nullopt;
  int best = terms_.begin()->first.z;
  for (const auto& [e, c] : terms_) best = std::max(best, e.z);
  return best;
}

bool LaurentPoly::all_coefficients_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

namespace {

void render_power(std::ostringstream& out, char var, int exp, bool& need_star) {
  if (exp == 0) return;
  if (need_star) out << '*';
  out << var;
  if (exp != 1) out << '^' << exp;
  need_star = true;
}

}  // namespace

std::string LaurentPoly::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    bool need_star = false;
    if (e.q == 0 && e.z == 0) {
      out << c.get_str();
      continue;
    }
    if (c == -1) {
      out << '-';
    } else if (c != 1) {
      out << c.get_str();
      need_star = true;
    }
    render_power(out, 'q', e.q, need_star);
    render_power(out, 'z', e.z, need_star);
  }
  return out.str();
}

LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

std::optional<CoefficientDiff> first_difference(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  auto a = lhs.terms().begin();
  auto b = rhs.terms().begin();
  const auto a_end = lhs.terms().end();
  const auto b_end = rhs.terms().end();
  while (a != a_end || b != b_end) {
    if (b == b_end || (a != a_end && a->first < b->first)) return CoefficientDiff{a->first, a->second, 0};
    if (a == a_end || b->first < a->first) return CoefficientDiff{b->first, 0, b->second};
    if (a->second != b->second) return CoefficientDiff{a->first, a->second, b->second};
    ++a;
    ++b;
  }
  return std::nullopt;
}

std::string describe(const CoefficientDiff& diff) {
  std::ostringstream out;
  out << "coefficient of q^" << diff.at.q << "*z^" << diff.at.z << ": " << diff.lhs.get_str()
      << " != " << diff.rhs.get_str();
  return out.str();
}

}  // namespace agpoly
