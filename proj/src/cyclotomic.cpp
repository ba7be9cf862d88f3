#include "cmrees/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace cmrees {

int euler_phi(int m) {
  if (m <= 0) throw std::invalid_argument("euler_phi: m must be positive");
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

int lcm_conductor(int a, int b) {
  long l = std::lcm((long)a, (long)b);
  if (l > kMaxConductor)
    throw std::runtime_error("cyclotomic conductor " + std::to_string(l) +
                             " exceeds bound " + std::to_string(kMaxConductor));
  return (int)l;
}

namespace {

// Exact division of integer polynomials, num / den, den monic-leading.
// Throws if the division leaves a remainder.
std::vector<Int> poly_divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
  while (!num.empty() && num.back() == 0) num.pop_back();
  std::vector<Int> d = den;
  while (!d.empty() && d.back() == 0) d.pop_back();
  if (d.empty()) throw std::runtime_error("poly_divide_exact: zero divisor");
  if (num.size() < d.size()) {
    for (const auto& c : num)
      if (c != 0) throw std::runtime_error("poly_divide_exact: remainder");
    return {Int(0)};
  }
  std::vector<Int> q(num.size() - d.size() + 1, Int(0));
  for (int k = (int)q.size() - 1; k >= 0; --k) {
    Int lead = num[k + d.size() - 1];
    if (lead % d.back() != 0) throw std::runtime_error("poly_divide_exact: remainder");
    Int c = lead / d.back();
    q[k] = c;
    if (c != 0)
      for (size_t i = 0; i < d.size(); ++i) num[k + i] -= c * d[i];
  }
  for (const auto& c : num)
    if (c != 0) throw std::runtime_error("poly_divide_exact: remainder");
  return q;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(int m) {
  if (m < 1 || m > kMaxConductor)
    throw std::runtime_error("cyclotomic_polynomial: conductor " + std::to_string(m) +
                             " out of range [1," + std::to_string(kMaxConductor) + "]");
  static std::map<int, std::vector<Int>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
  std::function<const std::vector<Int>&(int)> get = [&](int k) -> const std::vector<Int>& {
    auto jt = cache.find(k);
    if (jt != cache.end()) return jt->second;
    std::vector<Int> num(k + 1, Int(0));
    num[0] = -1;
    num[k] = 1;
    for (int d = 1; d < k; ++d)
      if (k % d == 0) num = poly_divide_exact(num, get(d));
    return cache.emplace(k, std::move(num)).first->second;
  };
  return get(m);
}

Cyc Cyc::from_coeffs(int m, std::vector<Rat> coeffs) {
  if (m < 1 || m > kMaxConductor)
    throw std::runtime_error("conductor out of range: " + std::to_string(m));
  const auto& phi = cyclotomic_polynomial(m);
  size_t deg = phi.size() - 1;  // euler_phi(m)
  // Reduce modulo the monic polynomial Phi_m.
  for (size_t k = coeffs.size(); k-- > deg;) {
    Rat c = coeffs[k];
    if (c == 0) continue;
    coeffs[k] = 0;
    for (size_t i = 0; i < deg; ++i) coeffs[k - deg + i] -= c * Rat(phi[i]);
  }
  coeffs.resize(deg, Rat(0));
  for (auto& c : coeffs) c.canonicalize();
  Cyc r;
  r.conductor_ = m;
  r.coeffs_ = std::move(coeffs);
  return r;
}

Cyc Cyc::zeta(int m, long power) {
  long p = ((power % m) + m) % m;
  std::vector<Rat> c(p + 1, Rat(0));
  c[p] = 1;
  return from_coeffs(m, std::move(c));
}

bool Cyc::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  Cyc r = reduced();
  return r.conductor_ == 1;
}

Rat Cyc::rational_value() const {
  Cyc r = reduced();
  if (r.conductor_ != 1) throw std::runtime_error("Cyc::rational_value: not rational");
  return r.coeffs_[0];
}

Cyc Cyc::promoted(int m2) const {
  if (m2 == conductor_) return *this;
  if (m2 % conductor_ != 0)
    throw std::runtime_error("Cyc::promoted: " + std::to_string(conductor_) +
                             " does not divide " + std::to_string(m2));
  int k = m2 / conductor_;
  // zeta_m = zeta_{m2}^k
  std::vector<Rat> c((coeffs_.size() - 1) * k + 1, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i * k] = coeffs_[i];
  return from_coeffs(m2, std::move(c));
}

namespace {

// Solves M x = b over the rationals; M given column-major as vectors of
// length rows. Returns false if inconsistent.
bool solve_rational(std::vector<std::vector<Rat>> cols, std::vector<Rat> b,
                    std::vector<Rat>* out) {
  size_t rows = b.size(), ncols = cols.size();
  std::vector<int> pivot_of_col(ncols, -1);
  size_t prow = 0;
  for (size_t j = 0; j < ncols && prow < rows; ++j) {
    size_t sel = prow;
    while (sel < rows && cols[j][sel] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != prow) {
      for (size_t jj = 0; jj < ncols; ++jj) std::swap(cols[jj][sel], cols[jj][prow]);
      std::swap(b[sel], b[prow]);
    }
    Rat inv = 1 / cols[j][prow];
    for (size_t jj = 0; jj < ncols; ++jj) cols[jj][prow] *= inv;
    b[prow] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == prow) continue;
      Rat f = cols[j][r];
      if (f == 0) continue;
      for (size_t jj = 0; jj < ncols; ++jj) cols[jj][r] -= f * cols[jj][prow];
      b[r] -= f * b[prow];
    }
    pivot_of_col[j] = (int)prow;
    ++prow;
  }
  for (size_t r = prow; r < rows; ++r)
    if (b[r] != 0) return false;
  out->assign(ncols, Rat(0));
  for (size_t j = 0; j < ncols; ++j)
    if (pivot_of_col[j] >= 0) (*out)[j] = b[pivot_of_col[j]];
  return true;
}

}  // namespace

Cyc Cyc::reduced() const {
  int m = conductor_;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    // Does the element lie in Q(zeta_d)?  Express it in the promoted
    // power basis of Q(zeta_d) inside Q(zeta_m).
    int phid = euler_phi(d);
    std::vector<std::vector<Rat>> cols;
    cols.reserve(phid);
    for (int i = 0; i < phid; ++i) cols.push_back(zeta(d, i).promoted(m).coeffs_);
    std::vector<Rat> sol;
    if (solve_rational(std::move(cols), coeffs_, &sol)) {
      Cyc r;
      r.conductor_ = d;
      r.coeffs_ = std::move(sol);
      return r;
    }
  }
  return *this;
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  int m = lcm_conductor(conductor_, o.conductor_);
  Cyc a = promoted(m), b = o.promoted(m);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  return *this = std::move(a);
}

Cyc& Cyc::operator-=(const Cyc& o) { return *this += -o; }

Cyc& Cyc::operator*=(const Cyc& o) {
  int m = lcm_conductor(conductor_, o.conductor_);
  Cyc a = promoted(m), b = o.promoted(m);
  std::vector<Rat> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return *this = from_coeffs(m, std::move(prod));
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw std::runtime_error("cyclotomic division by zero");
  int m = conductor_;
  const auto& phim = cyclotomic_polynomial(m);
  // Extended Euclid in Q[x]: u * this + v * Phi_m = gcd (a nonzero constant,
  // since Phi_m is irreducible and this != 0 mod Phi_m).
  std::vector<Rat> r0(phim.begin(), phim.end());
  std::vector<Rat> r1(coeffs_.begin(), coeffs_.end());
  std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};  // coefficients of `this`
  auto trim = [](std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  trim(r0);
  trim(r1);
  while (true) {
    if (r1.empty()) throw std::runtime_error("cyclotomic inverse: unexpected zero remainder");
    if (r1.size() == 1) break;  // nonzero constant gcd reached
    // r0 = q*r1 + r2
    std::vector<Rat> rem = r0, q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, Rat(0));
    Rat lead_inv = 1 / r1.back();
    for (int k = (int)rem.size() - (int)r1.size(); k >= 0; --k) {
      Rat c = rem[k + r1.size() - 1] * lead_inv;
      q[k] = c;
      if (c == 0) continue;
      for (size_t i = 0; i < r1.size(); ++i) rem[k + i] -= c * r1[i];
    }
    trim(rem);
    // s2 = s0 - q*s1
    std::vector<Rat> s2 = s0;
    s2.resize(std::max(s0.size(), q.size() + s1.size() - 1), Rat(0));
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  Rat scale = 1 / r1[0];
  for (auto& c : s1) c *= scale;
  return from_coeffs(m, std::move(s1));
}

Cyc& Cyc::operator/=(const Cyc& o) { return *this *= o.inverse(); }

int Cyc::compare(const Cyc& a, const Cyc& b) {
  int m = lcm_conductor(a.conductor_, b.conductor_);
  Cyc pa = a.promoted(m), pb = b.promoted(m);
  for (size_t i = 0; i < pa.coeffs_.size(); ++i) {
    int c = cmp(pa.coeffs_[i], pb.coeffs_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Cyc::str() const {
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rat& c = coeffs_[i];
    if (c == 0) continue;
    Rat a = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str() << "*";
      out << "z";
      if (i > 1) out << "^" << i;
    }
  }
  if (first) out << "0";
  return out.str();
}

Cyc parse_cyc(const std::string& text, int conductor) {
  // Terms of the form [+-] [rat *] z [^k], separated by + / -.
  std::vector<Rat> coeffs;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  };
  skip_ws();
  if (i == text.size()) throw std::runtime_error("parse_cyc: empty literal");
  bool expect_term = true;
  int sign = 1;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    char ch = text[i];
    if (ch == '+' || ch == '-') {
      if (expect_term && ch == '+') {
        ++i;
        continue;
      }
      sign = (ch == '-') ? -sign : sign;
      expect_term = true;
      ++i;
      continue;
    }
    // coefficient and/or power of z
    Rat coef(1);
    bool have_coef = false;
    if (std::isdigit((unsigned char)ch)) {
      size_t j = i;
      while (j < text.size() && (std::isdigit((unsigned char)text[j]) || text[j] == '/')) ++j;
      coef = Rat(text.substr(i, j - i));
      coef.canonicalize();
      have_coef = true;
      i = j;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    long power = 0;
    if (i < text.size() && text[i] == 'z') {
      ++i;
      power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        size_t j = i;
        while (j < text.size() && std::isdigit((unsigned char)text[j])) ++j;
        if (j == i) throw std::runtime_error("parse_cyc: missing exponent");
        power = std::stol(text.substr(i, j - i));
        i = j;
      }
    } else if (!have_coef) {
      throw std::runtime_error("parse_cyc: unexpected character '" + std::string(1, ch) + "'");
    }
    if ((size_t)power >= coeffs.size()) coeffs.resize(power + 1, Rat(0));
    coeffs[power] += sign * coef;
    sign = 1;
    expect_term = false;
  }
  if (expect_term) throw std::runtime_error("parse_cyc: dangling sign");
  return Cyc::from_coeffs(conductor, std::move(coeffs));
}

}  // namespace cmrees
