#include "cmrees/g4.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "cmrees/registry.hpp"

namespace cmrees {

std::string fixture_checksum(const std::string& content) {
  uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a 64
  for (unsigned char c : content) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

G4Fixture load_g4_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file: " + path);
  G4Fixture fx;
  std::string line, body;
  bool checksum_seen = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw == "checksum") {
      ls >> fx.checksum;
      checksum_seen = true;
      break;
    }
    body += line + "\n";
    if (kw.empty() || kw[0] == '#') continue;
    if (kw == "version") {
      ls >> fx.version;
    } else if (kw == "zdegrees") {
      int v;
      while (ls >> v) fx.z_degrees.push_back(v);
    } else if (kw == "bdegrees") {
      int v;
      while (ls >> v) fx.b_degrees.push_back(v);
    } else if (kw == "fixedpoint") {
      std::string name, chi;
      ls >> name >> chi;
      fx.fixed_points.push_back(name);
      fx.psi[name] = chi;
    } else if (kw == "diamond" || kw == "heart") {
      std::string name;
      int w;
      ls >> name >> w;
      (kw == "diamond" ? fx.diamond_weights : fx.heart_weights)[name] = w;
    } else {
      throw std::runtime_error("fixture: unknown keyword '" + kw + "'");
    }
  }
  if (!checksum_seen) throw std::runtime_error("fixture: missing checksum line");
  std::string expect = fixture_checksum(body);
  if (fx.checksum != expect)
    throw std::runtime_error("fixture: checksum mismatch (file " + fx.checksum + ", content " +
                             expect + ")");
  if (fx.version != 1) throw std::runtime_error("fixture: unsupported version");
  if (fx.z_degrees.size() != 8 || fx.b_degrees.size() != 6 || fx.fixed_points.size() != 7)
    throw std::runtime_error("fixture: wrong table sizes");

  fx.group = registry_group("G4");
  auto t = character_table(fx.group);
  std::set<std::string> targets;
  for (const auto& [name, chi] : fx.psi) {
    t->index_of(chi);  // throws on unknown names
    targets.insert(chi);
  }
  if ((int)targets.size() != t->size())
    throw std::runtime_error("fixture: psi is not a bijection onto the characters");
  return fx;
}

const G4Fixture& g4_fixture() {
  static G4Fixture fx = [] {
    if (const char* env = std::getenv("CMREES_G4_FIXTURE")) return load_g4_fixture(env);
    std::string rel = "data/g4_fixture.txt";
    for (int up = 0; up < 4; ++up) {
      std::ifstream probe(rel);
      if (probe) return load_g4_fixture(rel);
      rel = "../" + rel;
    }
    throw std::runtime_error("g4_fixture: data/g4_fixture.txt not found (set CMREES_G4_FIXTURE)");
  }();
  return fx;
}

ImageClass blowup_class(const G4Fixture& fx, const std::map<std::string, int>& weights,
                        int order) {
  auto t = character_table(fx.group);
  ImageClass z(fx.group, order);
  for (const auto& [name, w] : weights) {
    auto it = fx.psi.find(name);
    if (it == fx.psi.end())
      throw std::invalid_argument("blowup_class: unknown fixed point '" + name + "'");
    int chi = t->index_of(it->second);
    z.coords[chi].set(1, z.coords[chi].coeff(1) - Cyc((long)w));
  }
  return z;
}

CenterElement express_in_class_sums(const GroupPtr& g, const std::vector<Cyc>& idem_coords) {
  return from_idempotent_coords(g, idem_coords);
}

namespace {

std::string coords_str(const CenterElement& z) {
  std::string out = "[";
  for (size_t i = 0; i < z.coords.size(); ++i)
    out += (i ? ", " : "") + z.coords[i].str();
  return out + "]";
}

}  // namespace

TheoremBReport verify_theorem_b(const G4Fixture& fx, int order) {
  TheoremBReport rep;
  const auto& g = fx.group;
  auto t = character_table(g);
  rep.pass = true;
  auto check = [&](bool ok, const std::string& label, const std::string& witness) {
    if (ok) {
      rep.checks.push_back(label);
    } else {
      rep.pass = false;
      rep.witnesses.push_back(label + ": " + witness);
    }
  };

  int s = g->generator_indices()[0];
  int s2 = g->mul(s, s);
  CenterElement sum_s = class_sum(g, s), sum_s2 = class_sum(g, s2);

  // Divisor classes and the displayed class-sum identities. The text source
  // displays the first identity with a minus sign on one idempotent while
  // its own weight table has all plus signs; both variants are evaluated
  // and the central-character oracle picks the consistent one.
  ImageClass diamond = blowup_class(fx, fx.diamond_weights, order);
  ImageClass heart = blowup_class(fx, fx.heart_weights, order);
  CenterElement d_plus = diamond.scaled(Cyc(-1)).component(1);
  std::vector<Cyc> flipped(t->size(), Cyc(0));
  for (int i = 0; i < t->size(); ++i) flipped[i] = diamond.coords[i].coeff(1) * Cyc(-1);
  flipped[t->index_of("chi_eps2")] = -flipped[t->index_of("chi_eps2")];
  CenterElement d_minus = from_idempotent_coords(g, flipped);

  CenterElement target = center_unit(g).scaled(Cyc(4)) + sum_s + sum_s2;
  bool plus_ok = d_plus == target, minus_ok = d_minus == target;
  check(plus_ok != minus_ok, "diamond sign adjudication is unambiguous",
        plus_ok ? "both variants match" : "neither variant matches 4 + S(s) + S(s^2)");
  rep.sign_variant = plus_ok ? "all-plus" : (minus_ok ? "minus-on-chi_eps2" : "none");
  check(plus_ok, "diamond/(-h) equals 4 + S(s) + S(s^2)", coords_str(d_plus));

  Cyc z3 = Cyc::zeta(3);
  CenterElement heart_target =
      sum_s.scaled(Cyc(1) + Cyc(2) * z3) + sum_s2.scaled(Cyc(1) + Cyc(2) * z3 * z3);
  CenterElement h_val = heart.scaled(Cyc(-1)).component(1);
  check(h_val == heart_target, "heart/(-h) equals (1+2z)S(s) + (1+2z^2)S(s^2)",
        coords_str(h_val));

  // The 2x2 extraction step: ((1,1),(1+2z,1+2z^2)) must be invertible.
  CycMatrix m(2, 2);
  m.at(0, 0) = Cyc(1);
  m.at(0, 1) = Cyc(1);
  m.at(1, 0) = Cyc(1) + Cyc(2) * z3;
  m.at(1, 1) = Cyc(1) + Cyc(2) * z3 * z3;
  check(!m.det().is_zero(), "coefficient matrix ((1,1),(1+2z,1+2z^2)) invertible", m.det().str());

  // Candidate lattice: unit, the two divisor classes at degree 1, and the
  // whole center at degree 2, closed under hbar shifts.
  ImageLattice lattice(g, order);
  lattice.add_component(center_unit(g), 0);
  lattice.add_component(diamond.component(1), 1);
  lattice.add_component(heart.component(1), 1);
  for (size_t c = 0; c < g->classes().size(); ++c) {
    std::vector<Cyc> e(g->classes().size(), Cyc(0));
    e[c] = Cyc(1);
    lattice.add_component(CenterElement{g, std::move(e)}, 2);
  }

  auto as_vec = [](const CenterElement& z) { return z.coords; };
  check(lattice.degrees[1].contains(as_vec(sum_s)), "degree-1 span contains h S(s)",
        coords_str(sum_s));
  check(lattice.degrees[1].contains(as_vec(sum_s2)), "degree-1 span contains h S(s^2)",
        coords_str(sum_s2));

  FiltrationLattice filt = filtration(g);
  rep.dims_image = lattice.dims();
  bool dims_ok = true;
  for (int j = 0; j <= order; ++j) {
    const Subspace& rees = filt.pieces[std::min(j, g->dim())];
    rep.dims_rees.push_back(rees.dim());
    if (!(lattice.degrees[j] == rees)) {
      dims_ok = false;
      rep.witnesses.push_back("degree " + std::to_string(j) + " span mismatch");
    }
  }
  if (dims_ok) rep.checks.push_back("degree-wise spans equal Rees filtration (1,3,7,7,...)");
  rep.pass = rep.pass && dims_ok;
  return rep;
}

int weighted_degree(const std::vector<Monomial>& poly, const std::vector<int>& weights) {
  bool have = false;
  int deg = 0;
  for (const auto& m : poly) {
    if (m.coeff == 0) continue;
    if (m.exponents.size() > weights.size())
      throw std::invalid_argument("weighted_degree: more variables than weights");
    int d = 0;
    for (size_t i = 0; i < m.exponents.size(); ++i) d += m.exponents[i] * weights[i];
    if (have && d != deg)
      throw std::invalid_argument("weighted_degree: polynomial is not weighted-homogeneous");
    deg = d;
    have = true;
  }
  return have ? deg : 0;
}

}  // namespace cmrees
