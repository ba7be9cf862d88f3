#ifndef CMREES_CYCLOTOMIC_HPP
#define CMREES_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace cmrees {

using Rat = mpq_class;
using Int = mpz_class;

// Conductors above this bound are rejected everywhere.
inline constexpr int kMaxConductor = 120;

int euler_phi(int m);

// Coefficients of the m-th cyclotomic polynomial, low degree first,
// length euler_phi(m)+1, monic. Cached for m <= kMaxConductor.
const std::vector<Int>& cyclotomic_polynomial(int m);

/// Exact element of Q(zeta_m), stored in the power basis
/// {zeta_m^i : 0 <= i < phi(m)} reduced modulo Phi_m.
class Cyc {
 public:
  Cyc() : conductor_(1), coeffs_(1, Rat(0)) {}
  Cyc(long v) : conductor_(1), coeffs_(1, Rat(v)) {}
  Cyc(const Rat& v) : conductor_(1), coeffs_(1, v) {}
  Cyc(const Int& v) : conductor_(1), coeffs_(1, Rat(v)) {}

  // zeta_m^power
  static Cyc zeta(int m, long power = 1);
  // Reduces the given coefficient vector (any length) modulo Phi_m.
  static Cyc from_coeffs(int m, std::vector<Rat> coeffs);

  int conductor() const { return conductor_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // throws unless is_rational()

  // Rewrites the element in Q(zeta_m2); requires conductor() | m2.
  Cyc promoted(int m2) const;
  // Smallest conductor representation (divisor of conductor()).
  Cyc reduced() const;

  Cyc operator-() const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  Cyc& operator/=(const Cyc& o);
  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
  friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }

  Cyc inverse() const;  // throws on zero

  bool operator==(const Cyc& o) const { return compare(*this, o) == 0; }
  bool operator!=(const Cyc& o) const { return compare(*this, o) != 0; }

  // Deterministic total order (conductor-merged lexicographic compare).
  static int compare(const Cyc& a, const Cyc& b);

  // Literal syntax "c0 + c1*z + c2*z^2" with z = zeta_conductor.
  std::string str() const;

 private:
  int conductor_;
  std::vector<Rat> coeffs_;  // length euler_phi(conductor_)
};

// Parses the literal syntax; z denotes zeta_conductor.
Cyc parse_cyc(const std::string& text, int conductor);

int lcm_conductor(int a, int b);

}  // namespace cmrees

#endif
