#include "cmrees/laurent.hpp"

#include <sstream>

namespace cmrees {

int LaurentQ::min_degree() const {
  if (terms_.empty()) throw std::runtime_error("LaurentQ::min_degree of zero");
  return terms_.begin()->first;
}

int LaurentQ::max_degree() const {
  if (terms_.empty()) throw std::runtime_error("LaurentQ::max_degree of zero");
  return terms_.rbegin()->first;
}

LaurentQ LaurentQ::operator-() const {
  LaurentQ r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
  for (const auto& [k, c] : o.terms_) set(k, coeff(k) + c);
  return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& o) {
  for (const auto& [k, c] : o.terms_) set(k, coeff(k) - c);
  return *this;
}

LaurentQ& LaurentQ::operator*=(const LaurentQ& o) {
  LaurentQ r;
  for (const auto& [i, a] : terms_)
    for (const auto& [j, b] : o.terms_) r.set(i + j, r.coeff(i + j) + a * b);
  return *this = std::move(r);
}

bool LaurentQ::operator==(const LaurentQ& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin(), jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt)
    if (it->first != jt->first || it->second != jt->second) return false;
  return true;
}

LaurentQ LaurentQ::shifted(int k) const {
  LaurentQ r;
  for (const auto& [i, c] : terms_) r.terms_.emplace(i + k, c);
  return r;
}

LaurentQ LaurentQ::divide_exact(const LaurentQ& divisor) const {
  if (divisor.is_zero()) throw std::runtime_error("LaurentQ: division by zero");
  if (is_zero()) return LaurentQ();
  // Normalize both to ordinary polynomials and divide top-down; the q-shift
  // difference is re-applied to the quotient.
  int shift = min_degree() - divisor.min_degree();
  LaurentQ rem = shifted(-min_degree());
  LaurentQ den = divisor.shifted(-divisor.min_degree());
  int dlead = den.max_degree();
  Cyc dcoef = den.coeff(dlead);
  LaurentQ quot;
  while (!rem.is_zero() && rem.max_degree() >= dlead) {
    int rlead = rem.max_degree();
    Cyc c = rem.coeff(rlead) / dcoef;
    quot.set(rlead - dlead, c);
    LaurentQ sub;
    for (const auto& [k, v] : den.terms_) sub.set(k + rlead - dlead, v * c);
    rem -= sub;
  }
  if (!rem.is_zero()) throw std::runtime_error("LaurentQ::divide_exact: remainder");
  return quot.shifted(shift);
}

Cyc LaurentQ::at_one() const {
  Cyc r(0);
  for (const auto& [k, c] : terms_) r += c;
  return r;
}

std::string LaurentQ::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.str() << ")";
    if (k != 0) out << "*q^" << k;
  }
  return out.str();
}

}  // namespace cmrees
