#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "cmrees/registry.hpp"

using namespace cmrees;

TEST_CASE("registry orders and reflection counts") {
  struct Row {
    const char* name;
    size_t order;
    int reflections;
  };
  // reflection counts: sum of (d_i - 1) checked independently below
  for (Row row : {Row{"Cyc2", 2, 1}, Row{"Cyc6", 6, 5}, Row{"S3", 6, 3}, Row{"G2_1_2", 8, 4},
                  Row{"G3_1_2", 18, 7}, Row{"G4", 24, 8}}) {
    auto g = registry_group(row.name);
    CHECK(g->size() == row.order);
    CHECK(g->reflection_count() == row.reflections);
  }
  CHECK_THROWS(registry_group("nonsense"));
}

TEST_CASE("group table consistency") {
  auto g = registry_group("G4");
  // identity at index 0, inverses and orders consistent with mul
  CHECK(g->element(0) == CycMatrix::identity(2));
  for (int i = 0; i < (int)g->size(); ++i) {
    CHECK(g->mul(i, g->inv(i)) == 0);
    int p = 0, o = 0;
    do {
      p = g->mul(p, i);
      ++o;
    } while (p != 0);
    CHECK(o == g->order_of(i));
  }
}

TEST_CASE("G4 conjugacy classes") {
  auto g = registry_group("G4");
  const auto& cls = g->classes();
  REQUIRE(cls.size() == 7);
  std::vector<int> codims, orders, sizes;
  for (const auto& c : cls) {
    codims.push_back(c.codim);
    orders.push_back(c.order);
    sizes.push_back((int)c.members.size());
    // members share codim and order
    for (int m : c.members) {
      CHECK(g->codim_of(m) == c.codim);
      CHECK(g->order_of(m) == c.order);
      CHECK(g->class_of(m) == g->class_of(c.representative));
    }
    // inverse_class contains the inverses
    CHECK(g->class_of(g->inv(c.representative)) == c.inverse_class);
  }
  CHECK(codims == std::vector<int>{0, 1, 1, 2, 2, 2, 2});
  CHECK(orders == std::vector<int>{1, 3, 3, 2, 4, 6, 6});
  CHECK(sizes == std::vector<int>{1, 4, 4, 1, 6, 4, 4});
}

TEST_CASE("invariant degrees") {
  for (int d = 1; d <= 12; ++d) {
    auto g = registry_group("Cyc" + std::to_string(d));
    CHECK(g->invariant_degrees() == std::vector<int>{d});
  }
  CHECK(registry_group("G2_1_2")->invariant_degrees() == std::vector<int>{2, 4});
  CHECK(registry_group("S3")->invariant_degrees() == std::vector<int>{2, 3});
  CHECK(registry_group("G3_1_2")->invariant_degrees() == std::vector<int>{3, 6});
  CHECK(registry_group("G4")->invariant_degrees() == std::vector<int>{4, 6});
  for (const char* nm : {"Cyc5", "S3", "G2_1_2", "G3_1_2", "G4"}) {
    auto g = registry_group(nm);
    long prod = 1;
    int refl = 0;
    for (int d : g->invariant_degrees()) {
      prod *= d;
      refl += d - 1;
    }
    CHECK(prod == (long)g->size());
    CHECK(refl == g->reflection_count());
  }
}

TEST_CASE("molien series of mu2 is 1/(1-q^2)") {
  auto g = registry_group("Cyc2");
  auto m = molien_series(*g, 6);
  for (int k = 0; k <= 6; ++k) CHECK(m[k] == (k % 2 == 0 ? Rat(1) : Rat(0)));
}

TEST_CASE("flats and parabolics of G4") {
  auto g = registry_group("G4");
  const auto& flats = g->flats();
  REQUIRE(flats.size() == 6);  // V, four hyperplanes, {0}
  std::vector<int> codims;
  for (const auto& f : flats) codims.push_back(f.codim);
  CHECK(codims == std::vector<int>{0, 1, 1, 1, 1, 2});
  CHECK(g->flat_orbit_reps().size() == 3);
  for (size_t i = 0; i < flats.size(); ++i) {
    const auto& sub = g->flat_subgroup((int)i);
    if (flats[i].codim == 0) CHECK(sub.group->size() == 1);
    if (flats[i].codim == 1) CHECK(sub.group->size() == 3);
    if (flats[i].codim == 2) CHECK(sub.group->size() == 24);
    // embedding consistency
    for (size_t a = 0; a < sub.group->size(); ++a)
      for (size_t b = 0; b < sub.group->size(); ++b)
        CHECK(sub.to_ambient[sub.group->mul((int)a, (int)b)] ==
              g->mul(sub.to_ambient[a], sub.to_ambient[b]));
  }
}

TEST_CASE("flats of mu_d and S3") {
  auto m3 = registry_group("Cyc3");
  REQUIRE(m3->flats().size() == 2);  // V and {0}
  CHECK(m3->flats()[1].codim == 1);
  CHECK(m3->flat_subgroup(1).group->size() == 3);
  auto s3 = registry_group("S3");
  // V, three reflecting lines, {0}
  REQUIRE(s3->flats().size() == 5);
  CHECK(s3->flat_orbit_reps().size() == 3);
}

TEST_CASE("order bound and reflection generation errors") {
  CycMatrix minus = CycMatrix::identity(2);
  minus.at(0, 0) = Cyc(-1);
  minus.at(1, 1) = Cyc(-1);
  // -id has codim 2: not a reflection group on its own
  CHECK_THROWS_WITH_AS(ReflGroup::generate({minus}, "central"), doctest::Contains("reflections"),
                       std::runtime_error);
  auto g4gens = std::vector<CycMatrix>{registry_group("G4")->element(1),
                                       registry_group("G4")->element(2)};
  CHECK(ReflGroup::default_order_bound() == 10000);
  setenv("CMREES_MAX_GROUP_ORDER", "7", 1);
  CHECK(ReflGroup::default_order_bound() == 7);
  unsetenv("CMREES_MAX_GROUP_ORDER");
  CHECK_THROWS_WITH_AS(ReflGroup::generate({registry_group("G4")->element(1)}, "bounded", 2),
                       doctest::Contains("bound"), std::runtime_error);
}

TEST_CASE("group definition file round trip") {
  std::string path = "/tmp/cmrees_test_group.txt";
  {
    std::ofstream f(path);
    f << "# cyclic group of order 4 on C\n";
    f << "name mu4\nconductor 4\ndim 1\ngenerator z\n";
  }
  auto g = load_group_file(path);
  CHECK(g->size() == 4);
  CHECK(g->name() == "mu4");
  CHECK(g->invariant_degrees() == std::vector<int>{4});
  std::remove(path.c_str());
  CHECK_THROWS(load_group_file("/nonexistent/group.txt"));
  // resolve_group prefers the registry
  CHECK(resolve_group("G4")->size() == 24);
}

TEST_CASE("two dimensional group file with matrix generators") {
  std::string path = "/tmp/cmrees_test_b2.txt";
  {
    std::ofstream f(path);
    f << "name B2copy\nconductor 2\ndim 2\n";
    f << "generator 0, 1 ; 1, 0\n";
    f << "generator z, 0 ; 0, 1\n";  // z = zeta_2 = -1
  }
  auto g = load_group_file(path);
  CHECK(g->size() == 8);
  CHECK(g->invariant_degrees() == std::vector<int>{2, 4});
  std::remove(path.c_str());
}
