#ifndef CMREES_HBAR_HPP
#define CMREES_HBAR_HPP

#include <string>
#include <vector>

#include "cmrees/laurent.hpp"

namespace cmrees {

/// Power series in hbar truncated at a fixed order N; coefficients of
/// hbar^0 .. hbar^N. Mixing two series truncates to the minimum order.
class HbarSeries {
 public:
  explicit HbarSeries(int order = 0) : coeffs_(order + 1, Cyc(0)) {}
  HbarSeries(int order, const Cyc& constant) : coeffs_(order + 1, Cyc(0)) {
    coeffs_[0] = constant;
  }

  int order() const { return (int)coeffs_.size() - 1; }
  const Cyc& coeff(int k) const { return coeffs_.at(k); }
  void set(int k, const Cyc& c) { coeffs_.at(k) = c; }
  bool is_zero() const;

  HbarSeries operator-() const;
  friend HbarSeries operator+(const HbarSeries& a, const HbarSeries& b);
  friend HbarSeries operator-(const HbarSeries& a, const HbarSeries& b);
  friend HbarSeries operator*(const HbarSeries& a, const HbarSeries& b);
  // Division; requires nonzero constant term in b.
  friend HbarSeries operator/(const HbarSeries& a, const HbarSeries& b);
  bool operator==(const HbarSeries& o) const;
  bool operator!=(const HbarSeries& o) const { return !(*this == o); }

  // Multiplication by hbar^k (shifts coefficients up, same order).
  HbarSeries hbar_shifted(int k) const;

  std::string str() const;

 private:
  std::vector<Cyc> coeffs_;
};

// Substitutes q = exp(hbar) and truncates at hbar^N:
// coefficient of hbar^k is sum_j f_j j^k / k!.
HbarSeries expand_exp(const LaurentQ& f, int order);

}  // namespace cmrees

#endif
