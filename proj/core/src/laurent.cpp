#include "cellkit/laurent.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cellkit {

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

LaurentPoly::LaurentPoly(Coefficient c) {
  if (c != 0) terms_.push_back({0, c});
}

LaurentPoly LaurentPoly::monomial(int exponent, Coefficient coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.push_back({exponent, coeff});
  return p;
}

LaurentPoly LaurentPoly::v_plus_v_inverse() {
  LaurentPoly p;
  p.terms_ = {{-1, 1}, {1, 1}};
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  LaurentPoly p;
  for (const Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponent == t.exponent) {
      p.terms_.back().coeff = checked_add(p.terms_.back().coeff, t.coeff);
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(t);
    }
  }
  return p;
}

LaurentPoly LaurentPoly::from_dense(int low, std::span<const Coefficient> coeffs) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) p.terms_.push_back({low + static_cast<int>(i), coeffs[i]});
  return p;
}

Degree LaurentPoly::degree() const noexcept {
  if (terms_.empty()) return std::nullopt;
  return terms_.back().exponent;
}

Degree LaurentPoly::min_degree() const noexcept {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().exponent;
}

Coefficient LaurentPoly::coefficient(int exponent) const noexcept {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.exponent < e; });
  return (it != terms_.end() && it->exponent == exponent) ? it->coeff : 0;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) p.terms_.push_back({-it->exponent, it->coeff});
  return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  for (Term& t : p.terms_) t.exponent += k;
  return p;
}

bool LaurentPoly::is_bar_invariant() const { return bar() == *this; }

bool LaurentPoly::has_nonnegative_coefficients() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff > 0; });
}

LaurentPoly& LaurentPoly::add_scaled(const LaurentPoly& other, Coefficient c, int shift) {
  if (c == 0 || other.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->exponent < b->exponent + shift)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->exponent + shift < a->exponent) {
      merged.push_back({b->exponent + shift, checked_mul(b->coeff, c)});
      ++b;
    } else {
      Coefficient sum = checked_add(a->coeff, checked_mul(b->coeff, c));
      if (sum != 0) merged.push_back({a->exponent, sum});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) { return add_scaled(other, 1); }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return add_scaled(other, -1); }

LaurentPoly& LaurentPoly::operator*=(Coefficient c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coeff = checked_mul(t.coeff, c);
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a) { return a * Coefficient{-1}; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& t : a.terms_) r.add_scaled(b, t.coeff, t.exponent);
  return r;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(), [](const auto& x, const auto& y) {
        return x.exponent != y.exponent ? x.exponent < y.exponent : x.coeff < y.coeff;
      });
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    Coefficient mag = t.coeff < 0 ? -t.coeff : t.coeff;
    if (first) {
      if (t.coeff < 0) out += "-";
    } else {
      out += t.coeff < 0 ? " - " : " + ";
    }
    first = false;
    if (t.exponent == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += "v";
    if (t.exponent != 1) out += "^" + std::to_string(t.exponent);
  }
  return out;
}

}  // namespace cellkit
