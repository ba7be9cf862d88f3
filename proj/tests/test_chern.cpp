#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cmrees/chern.hpp"
#include "cmrees/registry.hpp"

using namespace cmrees;

namespace {

ImageClass unit_class(const GroupPtr& g, int order) {
  ImageClass one(g, order);
  for (auto& c : one.coords) c.set(0, Cyc(1));
  return one;
}

HbarSeries exp_series(int order, long k) {  // exp(k hbar)
  return expand_exp(LaurentQ::q_power((int)k), order);
}

}  // namespace

TEST_CASE("ch_c of the trivial character is 1") {
  for (const char* nm : {"Cyc1", "Cyc2", "Cyc5", "S3", "G2_1_2", "G3_1_2", "G4"}) {
    auto g = registry_group(nm);
    int n = default_hbar_order(g);
    CHECK(ch_c(g, to_graded(trivial_character(g)), n) == unit_class(g, n));
  }
}

TEST_CASE("ch_c on mu2") {
  auto g = registry_group("Cyc2");
  auto t = character_table(g);
  int n = default_hbar_order(g);
  ImageClass z = ch_c(g, to_graded(t->by_name("eps")), n);
  // q e_1 + q^{-1} e_eps at q = exp(hbar)
  CHECK(z.coords[t->index_of("1")] == exp_series(n, 1));
  CHECK(z.coords[t->index_of("eps")] == exp_series(n, -1));
}

TEST_CASE("ch_c of the regular character") {
  for (const char* nm : {"Cyc3", "S3", "G4"}) {
    auto g = registry_group(nm);
    auto t = character_table(g);
    int n = default_hbar_order(g);
    // regular character: |W| at the identity class
    std::vector<Cyc> vals(g->classes().size(), Cyc(0));
    vals[0] = Cyc((long)g->size());
    ImageClass z = ch_c(g, to_graded(ClassFunction{g, vals}), n);
    // (prod (1-q^{d_i})/(1-q)^n) sum_chi chi(1)/fake_chi e_chi
    LaurentQ num(1), den(1);
    for (int d : g->invariant_degrees()) num *= LaurentQ(1) - LaurentQ::q_power(d);
    for (int i = 0; i < g->dim(); ++i) den *= LaurentQ(1) - LaurentQ::q_power(1);
    LaurentQ grdim = num.divide_exact(den);
    for (int i = 0; i < t->size(); ++i) {
      HbarSeries expect = expand_exp(grdim * LaurentQ(t->irreducibles[i].degree()), n) /
                          expand_exp(fake_degree(g, t->irreducibles[i]), n);
      CHECK(z.coords[i] == expect);
    }
  }
}

TEST_CASE("ch_c is multiplicative under q-shifts") {
  auto g = registry_group("S3");
  auto t = character_table(g);
  int n = default_hbar_order(g);
  for (const auto& chi : t->irreducibles) {
    GradedCharacter e = to_graded(chi);
    ImageClass base = ch_c(g, e, n);
    ImageClass shifted = ch_c(g, e.scaled(LaurentQ::q_power(3)), n);
    HbarSeries e3h = exp_series(n, 3);
    for (size_t i = 0; i < base.coords.size(); ++i)
      CHECK(shifted.coords[i] == base.coords[i] * e3h);
  }
}

TEST_CASE("twisted induction identity at the Laurent level") {
  for (const char* nm : {"Cyc2", "Cyc3", "Cyc5", "S3", "G2_1_2", "G3_1_2", "G4"}) {
    auto g = registry_group(nm);
    int n = default_hbar_order(g);
    for (int fi : g->flat_orbit_reps()) {
      const auto& sub = g->flat_subgroup(fi);
      auto ts = character_table(sub.group);
      for (const auto& ep : ts->irreducibles) {
        CorIdentity cor = chern_induced(sub, to_graded(ep), n);
        CHECK(cor.laurent_equal);
        CHECK(cor.lhs == cor.rhs);
        CHECK((cor.lhs - cor.rhs).is_zero());
      }
    }
  }
}

TEST_CASE("twisted induction on mu2 full flat") {
  auto g = registry_group("Cyc2");
  auto t = character_table(g);
  int n = default_hbar_order(g);
  int zero_flat = -1;
  for (size_t i = 0; i < g->flats().size(); ++i)
    if (g->flats()[i].codim == 1) zero_flat = (int)i;
  const auto& sub = g->flat_subgroup(zero_flat);
  auto ts = character_table(sub.group);
  CorIdentity cor = chern_induced(sub, to_graded(ts->by_name("eps")), n);
  // both sides equal ch_c(eps - q) = (exp(-h) - exp(h)) e_eps
  HbarSeries diff = exp_series(n, -1) - exp_series(n, 1);
  CHECK(cor.lhs.coords[t->index_of("eps")] == diff);
  CHECK(cor.lhs.coords[t->index_of("1")].is_zero());
  // for chi' = 1 the class is (1 - exp(2h)) e_1
  CorIdentity cor1 = chern_induced(sub, to_graded(ts->by_name("1")), n);
  HbarSeries one(n);
  one.set(0, Cyc(1));
  CHECK(cor1.lhs.coords[t->index_of("1")] == one - exp_series(n, 2));
  CHECK(cor1.lhs.coords[t->index_of("eps")].is_zero());
  // W' = 1: lhs = ch_c(regular)
  int v_flat = -1;
  for (size_t i = 0; i < g->flats().size(); ++i)
    if (g->flats()[i].codim == 0) v_flat = (int)i;
  const auto& triv = g->flat_subgroup(v_flat);
  CorIdentity reg = chern_induced(triv, to_graded(trivial_character(triv.group)), n);
  std::vector<Cyc> vals{Cyc(2), Cyc(0)};
  CHECK(reg.lhs == ch_c(g, to_graded(ClassFunction{g, vals}), n));
}

TEST_CASE("star generators") {
  auto m2 = registry_group("Cyc2");
  auto t2 = character_table(m2);
  int zero_flat = -1;
  for (size_t i = 0; i < m2->flats().size(); ++i)
    if (m2->flats()[i].codim == 1) zero_flat = (int)i;
  const auto& sub = m2->flat_subgroup(zero_flat);
  auto ts = character_table(sub.group);
  // mu2, chi' = eps, r = 1: -e_eps
  CenterElement z = star_generator(sub, ts->by_name("eps"), 6);
  CHECK(z == idempotent(m2, t2->by_name("eps")).scaled(Cyc(-1)));
  // chi' = trivial at r = n: proportional to e_1 with sign (-1)^n
  CenterElement z1 = star_generator(sub, ts->by_name("1"), 6);
  CHECK(z1 == idempotent(m2, t2->by_name("1")).scaled(Cyc(-1)));
  CHECK_THROWS(star_generator(sub, ts->by_name("eps"), 0));  // order below codim
}

TEST_CASE("generated components lie in the filtration") {
  for (const char* nm : {"S3", "G4"}) {
    auto g = registry_group(nm);
    int n = default_hbar_order(g);
    FiltrationLattice filt = filtration(g);
    for (int fi : g->flat_orbit_reps()) {
      const auto& sub = g->flat_subgroup(fi);
      auto ts = character_table(sub.group);
      for (const auto& ep : ts->irreducibles) {
        ImageClass z = chern_induced(sub, to_graded(ep), n).lhs;
        for (int j = 0; j <= g->dim(); ++j)
          CHECK(filt.pieces[j].contains(z.component(j).coords));
      }
    }
  }
}

TEST_CASE("theorem A span equality") {
  for (int d = 2; d <= 8; ++d) {
    auto g = registry_group("Cyc" + std::to_string(d));
    auto rep = verify_theorem_a(g, default_hbar_order(g));
    CHECK(rep.equal);
    std::vector<int> expect(rep.dims_image.size(), d);
    expect[0] = 1;
    CHECK(rep.dims_image == expect);
  }
  auto s3 = verify_theorem_a(registry_group("S3"), 8);
  CHECK(s3.equal);
  CHECK(s3.dims_image == std::vector<int>{1, 2, 3, 3, 3, 3, 3, 3, 3});
  auto b2 = verify_theorem_a(registry_group("G2_1_2"), 8);
  CHECK(b2.equal);
  CHECK(b2.dims_image == std::vector<int>{1, 3, 5, 5, 5, 5, 5, 5, 5});
  auto g4 = verify_theorem_a(registry_group("G4"), 8);
  CHECK(g4.equal);
  CHECK(g4.dims_image == std::vector<int>{1, 3, 7, 7, 7, 7, 7, 7, 7});
  CHECK(g4.dims_rees == g4.dims_image);
  CHECK(g4.witnesses.empty());
}

TEST_CASE("image lattice shift closure") {
  auto g = registry_group("Cyc3");
  ImageLattice lat(g, 4);
  CenterElement z = class_sum(g, g->generator_indices()[0]);
  lat.add_component(z, 1);
  CHECK(lat.degrees[0].dim() == 0);
  for (int j = 1; j <= 4; ++j) {
    CHECK(lat.degrees[j].dim() == 1);
    CHECK(lat.degrees[j].contains(z.coords));
  }
}
