#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cmrees/hbar.hpp"
#include "cmrees/linalg.hpp"

using namespace cmrees;

TEST_CASE("euler phi and cyclotomic polynomials") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(120) == 32);
  // Phi_12 = x^4 - x^2 + 1
  const auto& p12 = cyclotomic_polynomial(12);
  std::vector<Int> expect{1, 0, -1, 0, 1};
  CHECK(p12 == expect);
  // Phi_1 = x - 1, Phi_2 = x + 1
  CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<Int>{1, 1});
}

TEST_CASE("cyclotomic arithmetic") {
  Cyc z = Cyc::zeta(3);
  CHECK(z * z * z == Cyc(1));
  CHECK(z + z * z == Cyc(-1));  // 1 + z + z^2 = 0
  // (1+2z)(1+2z^2) = 1 + 2(z+z^2) + 4 = 3
  CHECK((Cyc(1) + Cyc(2) * z) * (Cyc(1) + Cyc(2) * z * z) == Cyc(3));
  // mixed conductors: zeta_4 * zeta_3 has conductor 12
  Cyc w = Cyc::zeta(4) * z;
  CHECK(w.conductor() == 12);
  CHECK(w == Cyc::zeta(12, 7));  // 1/4 + 1/3 = 7/12
  // inverse round trip
  Cyc a = Cyc(2) + Cyc::zeta(5, 2) - Cyc::zeta(5, 4);
  CHECK(a * a.inverse() == Cyc(1));
  CHECK_THROWS(Cyc(0).inverse());
}

TEST_CASE("cyclotomic conductor reduction and rationality") {
  // zeta_6 = 1 + zeta_3 reduces nowhere, but zeta_6^3 = -1 is rational
  Cyc z6 = Cyc::zeta(6);
  Cyc cube = z6 * z6 * z6;
  CHECK(cube.is_rational());
  CHECK(cube.rational_value() == Rat(-1));
  CHECK(cube.reduced().conductor() == 1);
  // promotion round trip
  Cyc z3 = Cyc::zeta(3);
  CHECK(z3.promoted(12).reduced() == z3);
  CHECK(z3.promoted(12).reduced().conductor() == 3);
  CHECK_THROWS(lcm_conductor(121, 1));
}

TEST_CASE("cyclotomic literal round trip") {
  Cyc v = parse_cyc("1/2 + 3*z - z^2", 7);
  CHECK(v == Cyc(Rat(1, 2)) + Cyc(3) * Cyc::zeta(7) - Cyc::zeta(7, 2));
  CHECK(parse_cyc(v.str(), v.conductor()) == v);
}

TEST_CASE("cyclotomic deterministic compare") {
  Cyc a = Cyc::zeta(3), b = Cyc::zeta(4);
  CHECK(Cyc::compare(a, a) == 0);
  CHECK(Cyc::compare(a, b) == -Cyc::compare(b, a));
  CHECK(Cyc::compare(Cyc(0), Cyc(1)) != 0);
}

TEST_CASE("laurent arithmetic and exact division") {
  LaurentQ one_minus_q = LaurentQ(1) - LaurentQ::q_power(1);
  LaurentQ f = LaurentQ(1) - LaurentQ::q_power(4);  // (1-q)(1+q+q^2+q^3)
  LaurentQ g = f.divide_exact(one_minus_q);
  LaurentQ expect;
  for (int i = 0; i < 4; ++i) expect += LaurentQ::q_power(i);
  CHECK(g == expect);
  CHECK(g.at_one() == Cyc(4));
  CHECK_THROWS(LaurentQ(1).divide_exact(one_minus_q));
  // Laurent shifts divide exactly too
  CHECK(f.shifted(-3).divide_exact(one_minus_q) == expect.shifted(-3));
  CHECK(f.shifted(-3).min_degree() == -3);
  // no zero terms stored
  CHECK((f - f).is_zero());
}

TEST_CASE("hbar series expansion of q = exp(hbar)") {
  HbarSeries e = expand_exp(LaurentQ::q_power(1), 4);
  CHECK(e.coeff(0) == Cyc(1));
  CHECK(e.coeff(1) == Cyc(1));
  CHECK(e.coeff(2) == Cyc(Rat(1, 2)));
  CHECK(e.coeff(3) == Cyc(Rat(1, 6)));
  CHECK(e.coeff(4) == Cyc(Rat(1, 24)));
  HbarSeries em = expand_exp(LaurentQ::q_power(-1), 4);
  CHECK(em.coeff(1) == Cyc(-1));
  CHECK(em.coeff(2) == Cyc(Rat(1, 2)));
  // exp(h) exp(-h) = 1
  HbarSeries prod = e * em;
  CHECK(prod.coeff(0) == Cyc(1));
  for (int k = 1; k <= 4; ++k) CHECK(prod.coeff(k) == Cyc(0));
  // division inverts multiplication
  CHECK(prod / e == em);
  CHECK_THROWS(e / HbarSeries(4));  // zero constant term
  // shift by hbar
  HbarSeries sh = e.hbar_shifted(2);
  CHECK(sh.coeff(0) == Cyc(0));
  CHECK(sh.coeff(2) == Cyc(1));
  CHECK(sh.coeff(3) == Cyc(1));
}

TEST_CASE("matrix inverse, determinant, characteristic factor") {
  CycMatrix m(2, 2);
  m.at(0, 0) = Cyc(0);
  m.at(0, 1) = Cyc(1);
  m.at(1, 0) = Cyc(1);
  m.at(1, 1) = Cyc(0);
  CHECK(m.det() == Cyc(-1));
  CHECK(m * m == CycMatrix::identity(2));
  CHECK(m.inverse() == m);
  // det(1 - q swap) = 1 - q^2
  CHECK(m.char_factor_q() == LaurentQ(1) - LaurentQ::q_power(2));
  CycMatrix d(2, 2);
  d.at(0, 0) = Cyc::zeta(3);
  d.at(1, 1) = Cyc(1);
  LaurentQ expect = (LaurentQ(1) - LaurentQ::q_power(1, Cyc::zeta(3))) *
                    (LaurentQ(1) - LaurentQ::q_power(1));
  CHECK(d.char_factor_q() == expect);
  CHECK_THROWS(CycMatrix(2, 2).inverse());
}

TEST_CASE("rref, rank, kernel") {
  CycMatrix m(2, 3);
  m.at(0, 0) = Cyc(1);
  m.at(0, 1) = Cyc(2);
  m.at(0, 2) = Cyc(3);
  m.at(1, 0) = Cyc(2);
  m.at(1, 1) = Cyc(4);
  m.at(1, 2) = Cyc(6);
  CHECK(m.rank() == 1);
  CycMatrix k = m.kernel();
  CHECK(k.rows() == 2);
  // kernel vectors satisfy m v = 0
  for (int r = 0; r < k.rows(); ++r) {
    Cyc acc(0);
    for (int c = 0; c < 3; ++c) acc += m.at(0, c) * k.at(r, c);
    CHECK(acc == Cyc(0));
  }
}

TEST_CASE("subspace sum, intersection, membership") {
  auto vec = [](std::vector<long> v) {
    CycMatrix m(1, (int)v.size());
    for (size_t i = 0; i < v.size(); ++i) m.at(0, (int)i) = Cyc(v[i]);
    return m;
  };
  Subspace u = Subspace::span(vec({1, 0, 0})).sum(Subspace::span(vec({0, 1, 0})));
  Subspace w = Subspace::span(vec({0, 1, 0})).sum(Subspace::span(vec({0, 0, 1})));
  CHECK(u.dim() == 2);
  Subspace inter = u.intersect(w);
  CHECK(inter.dim() == 1);
  CHECK(inter.contains({Cyc(0), Cyc(5), Cyc(0)}));
  CHECK(u.sum(w).dim() == 3);
  CHECK(u.contains(inter));
  CHECK(!inter.contains(u));
  CHECK(u.intersect(w) == w.intersect(u));
}
