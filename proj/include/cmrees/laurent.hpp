#ifndef CMREES_LAURENT_HPP
#define CMREES_LAURENT_HPP

#include <map>
#include <string>

#include "cmrees/cyclotomic.hpp"

namespace cmrees {

/// Laurent polynomial in q with Cyc coefficients. Zero coefficients
/// are never stored.
class LaurentQ {
 public:
  LaurentQ() = default;
  LaurentQ(const Cyc& constant) { set(0, constant); }
  LaurentQ(long constant) { set(0, Cyc(constant)); }

  static LaurentQ q_power(int k, const Cyc& coeff = Cyc(1)) {
    LaurentQ f;
    f.set(k, coeff);
    return f;
  }

  const std::map<int, Cyc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Cyc coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Cyc(0) : it->second;
  }
  void set(int k, const Cyc& c) {
    if (c.is_zero())
      terms_.erase(k);
    else
      terms_[k] = c;
  }
  int min_degree() const;  // throws on zero
  int max_degree() const;

  LaurentQ operator-() const;
  LaurentQ& operator+=(const LaurentQ& o);
  LaurentQ& operator-=(const LaurentQ& o);
  LaurentQ& operator*=(const LaurentQ& o);
  friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
  friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
  friend LaurentQ operator*(LaurentQ a, const LaurentQ& b) { return a *= b; }

  bool operator==(const LaurentQ& o) const;
  bool operator!=(const LaurentQ& o) const { return !(*this == o); }

  // Shift by q^k.
  LaurentQ shifted(int k) const;

  // Exact division; throws if the division leaves a remainder.
  LaurentQ divide_exact(const LaurentQ& divisor) const;

  // Substitution q -> 1.
  Cyc at_one() const;

  std::string str() const;

 private:
  std::map<int, Cyc> terms_;
};

}  // namespace cmrees

#endif
