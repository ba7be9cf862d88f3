#include "cmrees/hbar.hpp"

#include <algorithm>
#include <sstream>

namespace cmrees {

bool HbarSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

HbarSeries HbarSeries::operator-() const {
  HbarSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

HbarSeries operator+(const HbarSeries& a, const HbarSeries& b) {
  int n = std::min(a.order(), b.order());
  HbarSeries r(n);
  for (int k = 0; k <= n; ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return r;
}

HbarSeries operator-(const HbarSeries& a, const HbarSeries& b) {
  int n = std::min(a.order(), b.order());
  HbarSeries r(n);
  for (int k = 0; k <= n; ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return r;
}

HbarSeries operator*(const HbarSeries& a, const HbarSeries& b) {
  int n = std::min(a.order(), b.order());
  HbarSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

HbarSeries operator/(const HbarSeries& a, const HbarSeries& b) {
  if (b.coeffs_[0].is_zero())
    throw std::runtime_error("HbarSeries: division by series with zero constant term");
  int n = std::min(a.order(), b.order());
  HbarSeries r(n);
  Cyc inv0 = b.coeffs_[0].inverse();
  for (int k = 0; k <= n; ++k) {
    Cyc acc = a.coeffs_[k];
    for (int j = 1; j <= k; ++j) acc -= b.coeffs_[j] * r.coeffs_[k - j];
    r.coeffs_[k] = acc * inv0;
  }
  return r;
}

bool HbarSeries::operator==(const HbarSeries& o) const {
  int n = std::min(order(), o.order());
  for (int k = 0; k <= n; ++k)
    if (coeffs_[k] != o.coeffs_[k]) return false;
  return true;
}

HbarSeries HbarSeries::hbar_shifted(int k) const {
  HbarSeries r(order());
  for (int i = std::max(0, -k); i <= order() && i + k <= order(); ++i)
    r.coeffs_[i + k] = coeffs_[i];
  return r;
}

std::string HbarSeries::str() const {
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= order(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << coeffs_[k].str() << ")";
    if (k > 0) out << "*h^" << k;
  }
  if (first) out << "0";
  out << " + O(h^" << order() + 1 << ")";
  return out.str();
}

namespace {
HbarSeries& add_mul(HbarSeries& acc, const HbarSeries& x, const Cyc& c) {
  for (int k = 0; k <= acc.order(); ++k) acc.set(k, acc.coeff(k) + x.coeff(k) * c);
  return acc;
}
}  // namespace

HbarSeries expand_exp(const LaurentQ& f, int order) {
  if (order < 0) throw std::invalid_argument("expand_exp: negative order");
  HbarSeries result(order);
  for (const auto& [j, c] : f.terms()) {
    // exp(j*hbar): coefficient of hbar^k is j^k / k!
    HbarSeries e(order);
    Rat term(1);
    for (int k = 0; k <= order; ++k) {
      e.set(k, Cyc(term));
      term *= j;
      term /= (k + 1);
    }
    add_mul(result, e, c);
  }
  return result;
}

}  // namespace cmrees
