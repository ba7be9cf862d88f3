#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cmrees/g4.hpp"
#include "cmrees/registry.hpp"

using namespace cmrees;

TEST_CASE("fixture loads and round-trips") {
  const auto& fx = g4_fixture();
  CHECK(fx.version == 1);
  CHECK(fx.group->size() == 24);
  CHECK(fx.z_degrees == std::vector<int>{0, 4, -4, 2, -2, -6, 6, 0});
  CHECK(fx.b_degrees == std::vector<int>{2, 6, 0, 12, 8, 4});
  CHECK(fx.fixed_points ==
        std::vector<std::string>{"q2+", "q2-", "q3+", "q3o", "q3-", "q4", "q6"});
  // psi bijection onto the seven characters
  CHECK(fx.psi.at("q4") == "1");
  CHECK(fx.psi.at("q6") == "theta");
  CHECK(fx.psi.at("q2+") == "chi_eps");
  CHECK(fx.psi.at("q2-") == "chi_eps2");
  CHECK(fx.psi.at("q3+") == "eps2");
  CHECK(fx.psi.at("q3o") == "chi");
  CHECK(fx.psi.at("q3-") == "eps");
  // checksum guards against drift
  std::ifstream in("data/g4_fixture.txt");
  std::string line, body;
  while (std::getline(in, line) && line.rfind("checksum", 0) != 0) body += line + "\n";
  CHECK(("checksum " + fixture_checksum(body)) == line);
}

TEST_CASE("fixture checksum detects tampering") {
  std::string path = "/tmp/cmrees_test_fixture.txt";
  {
    std::ifstream in("data/g4_fixture.txt");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto pos = text.find("zdegrees 0 4");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 12, "zdegrees 1 4");
    std::ofstream out(path);
    out << text;
  }
  CHECK_THROWS_WITH_AS(load_g4_fixture(path), doctest::Contains("checksum"), std::runtime_error);
  std::remove(path.c_str());
}

TEST_CASE("blowup classes") {
  const auto& fx = g4_fixture();
  auto t = character_table(fx.group);
  ImageClass d = blowup_class(fx, fx.diamond_weights, 4);
  CHECK(d.coords[t->index_of("chi_eps")].coeff(1) == Cyc(-6));
  CHECK(d.coords[t->index_of("chi_eps2")].coeff(1) == Cyc(-6));
  CHECK(d.coords[t->index_of("1")].coeff(1) == Cyc(-12));
  CHECK(d.coords[t->index_of("theta")].coeff(1) == Cyc(-4));
  CHECK(d.coords[t->index_of("eps")].is_zero());
  for (const auto& c : d.coords) CHECK(c.coeff(0) == Cyc(0));
  ImageClass h = blowup_class(fx, fx.heart_weights, 4);
  CHECK(h.coords[t->index_of("chi_eps2")].coeff(1) == Cyc(6));
  CHECK(h.coords[t->index_of("eps")].coeff(1) == Cyc(12));
  CHECK(h.coords[t->index_of("eps2")].coeff(1) == Cyc(-12));
  CHECK(blowup_class(fx, {}, 4).is_zero());
  CHECK_THROWS(blowup_class(fx, {{"q9", 1}}, 4));
}

TEST_CASE("class-sum expressions of the divisor classes") {
  const auto& fx = g4_fixture();
  const auto& g = fx.group;
  auto t = character_table(g);
  int s = g->generator_indices()[0];
  // 12 e_1 + 6 e_{chi eps} + 6 e_{chi eps2} + 4 e_theta = 4 + S(s) + S(s^2)
  std::vector<Cyc> omega(t->size(), Cyc(0));
  omega[t->index_of("1")] = Cyc(12);
  omega[t->index_of("chi_eps")] = Cyc(6);
  omega[t->index_of("chi_eps2")] = Cyc(6);
  omega[t->index_of("theta")] = Cyc(4);
  CenterElement got = express_in_class_sums(g, omega);
  CenterElement expect =
      center_unit(g).scaled(Cyc(4)) + class_sum(g, s) + class_sum(g, g->mul(s, s));
  CHECK(got == expect);
  // 12 e_{eps2} - 12 e_eps + 6 e_{chi eps} - 6 e_{chi eps2}
  //   = (1+2z) S(s) + (1+2z^2) S(s^2)
  std::vector<Cyc> omega2(t->size(), Cyc(0));
  omega2[t->index_of("eps2")] = Cyc(12);
  omega2[t->index_of("eps")] = Cyc(-12);
  omega2[t->index_of("chi_eps")] = Cyc(6);
  omega2[t->index_of("chi_eps2")] = Cyc(-6);
  Cyc z3 = Cyc::zeta(3);
  CenterElement expect2 = class_sum(g, s).scaled(Cyc(1) + Cyc(2) * z3) +
                          class_sum(g, g->mul(s, s)).scaled(Cyc(1) + Cyc(2) * z3 * z3);
  CHECK(express_in_class_sums(g, omega2) == expect2);
  // sum of all idempotents is the unit
  CHECK(express_in_class_sums(g, std::vector<Cyc>(t->size(), Cyc(1))) == center_unit(g));
}

TEST_CASE("theorem B verification") {
  const auto& fx = g4_fixture();
  auto rep = verify_theorem_b(fx, 8);
  CHECK(rep.pass);
  CHECK(rep.sign_variant == "all-plus");
  CHECK(rep.witnesses.empty());
  CHECK(rep.dims_image == std::vector<int>{1, 3, 7, 7, 7, 7, 7, 7, 7});
  CHECK(rep.dims_rees == rep.dims_image);
}

TEST_CASE("weighted degrees") {
  // 4a^3 + 27b^2 with weights (4, 6)
  CHECK(weighted_degree({{Rat(4), {3, 0}}, {Rat(27), {0, 2}}}, {4, 6}) == 12);
  CHECK(weighted_degree({{Rat(5), {}}}, {4, 6}) == 0);  // constant
  CHECK(weighted_degree({}, {4, 6}) == 0);
  CHECK(weighted_degree({{Rat(1), {1, 1}}}, {4, -6}) == -2);  // a c
  CHECK_THROWS(weighted_degree({{Rat(1), {1, 0}}, {Rat(1), {0, 1}}}, {4, 6}));
  // zero coefficients are ignored
  CHECK(weighted_degree({{Rat(0), {1, 0}}, {Rat(1), {0, 1}}}, {4, 6}) == 6);
  // all fixture degree tables are consistent with the weighted-degree rule:
  // deg(4a^3+27b^2) = 12 matches the recorded b-degree entry 12
  const auto& fx = g4_fixture();
  CHECK(fx.b_degrees[3] == 12);
}
