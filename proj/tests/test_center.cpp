#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "cmrees/center.hpp"
#include "cmrees/registry.hpp"

using namespace cmrees;

TEST_CASE("class sums") {
  auto g = registry_group("G4");
  int s = g->generator_indices()[0];
  CHECK(class_sum(g, 0) == center_unit(g));
  // |class(s)| = 24/|C(s)| = 4
  CHECK(g->classes()[g->class_of(s)].members.size() == 4);
  Cyc v = central_character(character_table(g)->by_name("theta"), class_sum(g, s));
  CHECK(v == Cyc(0));  // 4 theta(s)/theta(1) with theta(s) = 0
}

TEST_CASE("central character values on 4 + S(s) + S(s^2)") {
  auto g = registry_group("G4");
  auto t = character_table(g);
  int s = g->generator_indices()[0];
  CenterElement z = center_unit(g).scaled(Cyc(4)) + class_sum(g, s) + class_sum(g, g->mul(s, s));
  CHECK(central_character(t->by_name("chi_eps"), z) == Cyc(6));
  std::map<std::string, long> expect{{"1", 12},       {"eps", 0},      {"eps2", 0}, {"chi", 0},
                                     {"chi_eps", 6},  {"chi_eps2", 6}, {"theta", 4}};
  for (const auto& [name, val] : expect)
    CHECK(central_character(t->by_name(name), z) == Cyc(val));
}

TEST_CASE("central characters are multiplicative and separate points") {
  auto g = registry_group("S3");
  auto t = character_table(g);
  CenterElement a = class_sum(g, g->generator_indices()[0]);
  CenterElement b = class_sum(g, g->mul(g->generator_indices()[0], g->generator_indices()[1]));
  CenterElement prod = multiply(a, b);
  for (const auto& chi : t->irreducibles) {
    CHECK(central_character(chi, prod) ==
          central_character(chi, a) * central_character(chi, b));
    CHECK(central_character(chi, center_unit(g)) == Cyc(1));
  }
  // separation: the idempotent-coordinate map is injective (round trip)
  CHECK(from_idempotent_coords(g, idempotent_coords(a)) == a);
  CHECK(from_idempotent_coords(g, idempotent_coords(b)) == b);
}

TEST_CASE("idempotents") {
  auto m2 = registry_group("Cyc2");
  auto t2 = character_table(m2);
  // e_1 = (1 + S(-1))/2
  CenterElement e1 = idempotent(m2, t2->by_name("1"));
  CHECK(e1.coords == std::vector<Cyc>{Cyc(Rat(1, 2)), Cyc(Rat(1, 2))});
  for (const char* nm : {"Cyc1", "Cyc2", "Cyc5", "S3", "G2_1_2", "G3_1_2", "G4"}) {
    auto g = registry_group(nm);
    auto t = character_table(g);
    CenterElement total{g, std::vector<Cyc>(g->classes().size(), Cyc(0))};
    for (int i = 0; i < t->size(); ++i) {
      CenterElement ei = idempotent(g, t->irreducibles[i]);
      total = total + ei;
      CHECK(multiply(ei, ei) == ei);
      // omega_chi(e_psi) = delta
      for (int j = 0; j < t->size(); ++j)
        CHECK(central_character(t->irreducibles[j], ei) == Cyc(i == j ? 1 : 0));
    }
    CHECK(total == center_unit(g));
  }
}

TEST_CASE("filtration dimensions") {
  CHECK(filtration(registry_group("G4")).dims == std::vector<int>{1, 3, 7});
  CHECK(filtration(registry_group("G2_1_2")).dims == std::vector<int>{1, 3, 5});
  CHECK(filtration(registry_group("S3")).dims == std::vector<int>{1, 2, 3});
  for (int d = 2; d <= 6; ++d) {
    auto g = registry_group("Cyc" + std::to_string(d));
    CHECK(filtration(g).dims == std::vector<int>{1, d});
  }
  // chain increasing, dim gr_i = #classes of codim i
  auto g = registry_group("G4");
  auto f = filtration(g);
  for (size_t i = 1; i < f.pieces.size(); ++i) CHECK(f.pieces[i].contains(f.pieces[i - 1]));
}

TEST_CASE("transfer basics") {
  auto g = registry_group("G4");
  // Tr_G^G is the identity
  std::vector<int> all;
  for (int i = 0; i < (int)g->size(); ++i) all.push_back(i);
  auto full = make_subgroup(g, all, "full");
  for (const auto& cl : g->classes()) {
    CenterElement z = class_sum(g, cl.representative);
    CenterElement zz{full.group, std::vector<Cyc>(full.group->classes().size(), Cyc(0))};
    zz.coords[full.group->class_of(full.from_ambient[cl.representative])] = Cyc(1);
    CHECK(transfer(full, zz) == z);
  }
  // Tr_1^G(1) = |G| 1
  auto triv = make_subgroup(g, {0}, "triv");
  CHECK(transfer(triv, center_unit(triv.group)) == center_unit(g).scaled(Cyc((long)g->size())));
  // Tr_{<s>}^{G4}(S(s)) = 2 S(s): |C_G(s)| = 6, |C_H(s)| = 3
  int fi = -1;
  for (size_t i = 0; i < g->flats().size(); ++i)
    if (g->flats()[i].codim == 1) fi = (int)i;
  const auto& sub = g->flat_subgroup(fi);
  int hs = -1;
  for (size_t k = 0; k < sub.group->size(); ++k)
    if (sub.group->order_of((int)k) == 3) {
      hs = (int)k;
      break;
    }
  CenterElement raw = transfer(sub, class_sum(sub.group, hs));
  CHECK(raw == class_sum(g, sub.to_ambient[hs]).scaled(Cyc(2)));
}

TEST_CASE("transfer closed formulas for every parabolic") {
  for (const char* nm : {"Cyc3", "S3", "G2_1_2", "G4"}) {
    auto g = registry_group(nm);
    for (int fi : g->flat_orbit_reps()) {
      const auto& sub = g->flat_subgroup(fi);
      for (const auto& cl : sub.group->classes())
        CHECK(transfer(sub, class_sum(sub.group, cl.representative)) ==
              transfer_class_sum_formula(sub, cl.representative));
      auto ts = character_table(sub.group);
      for (const auto& eta : ts->irreducibles)
        CHECK(transfer(sub, idempotent(sub.group, eta)) ==
              transfer_idempotent_formula(sub, eta));
    }
  }
}

TEST_CASE("family partitions") {
  auto g = registry_group("Cyc3");
  auto fam = parse_family_partition(g, "blocks = [[\"1\"],[\"eps\",\"eps2\"]]");
  CHECK(fam.blocks.size() == 2);
  CHECK_THROWS(parse_family_partition(g, "[[\"1\"]]"));                       // not covering
  CHECK_THROWS(parse_family_partition(g, "[[\"1\",\"bogus\"],[\"eps\"]]"));   // unknown name
  CHECK_THROWS(parse_family_partition(g, "[[\"1\",\"1\"],[\"eps\",\"eps2\"]]"));  // duplicate
  std::string path = "/tmp/cmrees_test_fam.txt";
  {
    std::ofstream f(path);
    f << "blocks = [[\"1\"],[\"eps\",\"eps2\"]]\n";
  }
  auto loaded = load_family_partition(g, path);
  CHECK(loaded.blocks == fam.blocks);
  std::remove(path.c_str());
  CHECK(discrete_partition(g).blocks.size() == 3);
}

TEST_CASE("rees lattice") {
  auto g4 = registry_group("G4");
  // one block per character reproduces the filtration
  auto rl = rees_lattice(g4, discrete_partition(g4));
  CHECK(rl.dims == filtration(g4).dims);
  CHECK(rl.gr_dims == std::vector<int>{1, 2, 4});
  // single block: C * 1, concentrated in degree 0
  FamilyPartition single{g4, {character_table(g4)->names}};
  auto rs = rees_lattice(g4, single);
  CHECK(rs.dims == std::vector<int>{1, 1, 1});
  CHECK(rs.gr_dims == std::vector<int>{1, 0, 0});
  // mu3 with {{1},{eps,eps2}}: gr dims (1, 1)
  auto m3 = registry_group("Cyc3");
  auto fam = parse_family_partition(m3, "[[\"1\"],[\"eps\",\"eps2\"]]");
  auto rm = rees_lattice(m3, fam);
  CHECK(rm.gr_dims == std::vector<int>{1, 1});
  int total = 0;
  for (int d : rm.gr_dims) total += d;
  CHECK(total == (int)fam.blocks.size());
}
