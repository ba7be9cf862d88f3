#include "cmrees/center.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace cmrees {

namespace {

void check_same_group(const GroupPtr& a, const GroupPtr& b, const char* op) {
  if (a.get() != b.get()) throw std::invalid_argument(std::string(op) + ": group mismatch");
}

}  // namespace

CenterElement CenterElement::operator+(const CenterElement& o) const {
  check_same_group(group, o.group, "CenterElement::+");
  std::vector<Cyc> c(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) c[i] = coords[i] + o.coords[i];
  return {group, std::move(c)};
}

CenterElement CenterElement::operator-(const CenterElement& o) const {
  check_same_group(group, o.group, "CenterElement::-");
  std::vector<Cyc> c(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) c[i] = coords[i] - o.coords[i];
  return {group, std::move(c)};
}

CenterElement CenterElement::scaled(const Cyc& s) const {
  std::vector<Cyc> c(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) c[i] = coords[i] * s;
  return {group, std::move(c)};
}

bool CenterElement::operator==(const CenterElement& o) const {
  return group.get() == o.group.get() && coords == o.coords;
}

CenterElement class_sum(const GroupPtr& g, int element) {
  std::vector<Cyc> c(g->classes().size(), Cyc(0));
  c[g->class_of(element)] = Cyc(1);
  return {g, std::move(c)};
}

CenterElement center_unit(const GroupPtr& g) { return class_sum(g, 0); }

Cyc central_character(const ClassFunction& chi, const CenterElement& z) {
  check_same_group(chi.group, z.group, "central_character");
  const auto& classes = z.group->classes();
  Cyc acc(0);
  Cyc deg_inv = chi.degree().inverse();
  for (size_t c = 0; c < classes.size(); ++c) {
    if (z.coords[c].is_zero()) continue;
    acc += z.coords[c] * Cyc((long)classes[c].members.size()) * chi.values[c] * deg_inv;
  }
  return acc;
}

CenterElement idempotent(const GroupPtr& g, const ClassFunction& chi) {
  check_same_group(g, chi.group, "idempotent");
  const auto& classes = g->classes();
  Cyc scale = chi.degree() * Cyc(Rat(1, (long)g->size()));
  std::vector<Cyc> c(classes.size());
  for (size_t i = 0; i < classes.size(); ++i) c[i] = scale * chi.values[classes[i].inverse_class];
  return {g, std::move(c)};
}

CenterElement family_idempotent(const GroupPtr& g, const std::vector<int>& block) {
  auto t = character_table(g);
  CenterElement acc{g, std::vector<Cyc>(g->classes().size(), Cyc(0))};
  for (int i : block) acc = acc + idempotent(g, t->irreducibles[i]);
  return acc;
}

std::vector<Cyc> idempotent_coords(const CenterElement& z) {
  auto t = character_table(z.group);
  std::vector<Cyc> omega;
  for (const auto& chi : t->irreducibles) omega.push_back(central_character(chi, z));
  return omega;
}

CenterElement from_idempotent_coords(const GroupPtr& g, const std::vector<Cyc>& omega) {
  auto t = character_table(g);
  if ((int)omega.size() != t->size())
    throw std::invalid_argument("from_idempotent_coords: wrong length");
  CenterElement acc{g, std::vector<Cyc>(g->classes().size(), Cyc(0))};
  for (int i = 0; i < t->size(); ++i)
    acc = acc + idempotent(g, t->irreducibles[i]).scaled(omega[i]);
  return acc;
}

CenterElement multiply(const CenterElement& a, const CenterElement& b) {
  check_same_group(a.group, b.group, "multiply");
  std::vector<Cyc> oa = idempotent_coords(a), ob = idempotent_coords(b);
  for (size_t i = 0; i < oa.size(); ++i) oa[i] *= ob[i];
  return from_idempotent_coords(a.group, oa);
}

FiltrationLattice filtration(const GroupPtr& g) {
  const auto& classes = g->classes();
  int n = g->dim();
  FiltrationLattice lat;
  lat.group = g;
  for (int i = 0; i <= n; ++i) {
    std::vector<std::vector<Cyc>> rows;
    for (size_t c = 0; c < classes.size(); ++c) {
      if (classes[c].codim > i) continue;
      std::vector<Cyc> row(classes.size(), Cyc(0));
      row[c] = Cyc(1);
      rows.push_back(std::move(row));
    }
    CycMatrix m((int)rows.size(), (int)classes.size());
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t c = 0; c < classes.size(); ++c) m.at((int)r, (int)c) = rows[r][c];
    lat.pieces.push_back(Subspace::span(m));
    lat.dims.push_back(lat.pieces.back().dim());
  }
  return lat;
}

CenterElement transfer(const Subgroup& sub, const CenterElement& z) {
  check_same_group(sub.group, z.group, "transfer");
  const auto& g = sub.ambient;
  const auto& h = sub.group;
  size_t gn = g->size();
  // Expand z over ambient element coefficients.
  std::vector<Cyc> coeff(gn, Cyc(0));
  for (size_t i = 0; i < h->size(); ++i)
    coeff[sub.to_ambient[i]] = z.coords[h->class_of((int)i)];
  // One representative per left coset xH, then sum the conjugates x z x^-1.
  std::vector<bool> covered(gn, false);
  std::vector<Cyc> out(gn, Cyc(0));
  for (int x = 0; x < (int)gn; ++x) {
    if (covered[x]) continue;
    for (int a : sub.to_ambient) covered[g->mul(x, a)] = true;
    int xi = g->inv(x);
    for (int a : sub.to_ambient) {
      if (coeff[a].is_zero()) continue;
      out[g->mul(g->mul(x, a), xi)] += coeff[a];
    }
  }
  // The result is central; fold to class coordinates and verify constancy.
  std::vector<Cyc> coords(g->classes().size());
  for (size_t c = 0; c < g->classes().size(); ++c) {
    const auto& cl = g->classes()[c];
    coords[c] = out[cl.representative];
    for (int m : cl.members)
      if (out[m] != coords[c]) throw std::logic_error("transfer: result is not central");
  }
  return {g, std::move(coords)};
}

CenterElement transfer_class_sum_formula(const Subgroup& sub, int sub_element) {
  const auto& g = sub.ambient;
  const auto& h = sub.group;
  int a = sub.to_ambient[sub_element];
  long cg = (long)g->size() / (long)g->classes()[g->class_of(a)].members.size();
  long ch = (long)h->size() / (long)h->classes()[h->class_of(sub_element)].members.size();
  return class_sum(g, a).scaled(Cyc(Rat(cg, ch)));
}

CenterElement transfer_idempotent_formula(const Subgroup& sub, const ClassFunction& eta) {
  const auto& g = sub.ambient;
  auto t = character_table(g);
  ClassFunction ind = induce(sub, eta);
  Cyc scale = eta.degree() * Cyc(Rat(1, (long)sub.group->size()));
  CenterElement acc{g, std::vector<Cyc>(g->classes().size(), Cyc(0))};
  for (const auto& gamma : t->irreducibles) {
    Cyc mult = inner_product(ind, gamma);
    if (mult.is_zero()) continue;
    Cyc factor = scale * Cyc((long)g->size()) * gamma.degree().inverse() * mult;
    acc = acc + idempotent(g, gamma).scaled(factor);
  }
  return acc;
}

FamilyPartition parse_family_partition(const GroupPtr& g, const std::string& text) {
  auto eq = text.find('=');
  std::string payload = (eq == std::string::npos) ? text : text.substr(eq + 1);
  nlohmann::json j = nlohmann::json::parse(payload);
  if (!j.is_array()) throw std::invalid_argument("family partition: expected an array of blocks");
  FamilyPartition fam;
  fam.group = g;
  auto t = character_table(g);
  std::set<std::string> seen;
  for (const auto& jb : j) {
    if (!jb.is_array() || jb.empty())
      throw std::invalid_argument("family partition: blocks must be non-empty arrays");
    std::vector<std::string> block;
    for (const auto& jn : jb) {
      std::string name = jn.get<std::string>();
      t->index_of(name);  // throws on unknown names
      if (!seen.insert(name).second)
        throw std::invalid_argument("family partition: duplicate character '" + name + "'");
      block.push_back(name);
    }
    fam.blocks.push_back(std::move(block));
  }
  if ((int)seen.size() != t->size())
    throw std::invalid_argument("family partition: blocks must cover Irr(W)");
  return fam;
}

FamilyPartition load_family_partition(const GroupPtr& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open family partition file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_family_partition(g, buf.str());
}

FamilyPartition discrete_partition(const GroupPtr& g) {
  FamilyPartition fam;
  fam.group = g;
  for (const auto& name : character_table(g)->names) fam.blocks.push_back({name});
  return fam;
}

ReesLattice rees_lattice(const GroupPtr& g, const FamilyPartition& fam) {
  check_same_group(g, fam.group, "rees_lattice");
  auto t = character_table(g);
  int nc = (int)g->classes().size();
  CycMatrix basis((int)fam.blocks.size(), nc);
  for (size_t b = 0; b < fam.blocks.size(); ++b) {
    std::vector<int> idx;
    for (const auto& name : fam.blocks[b]) idx.push_back(t->index_of(name));
    CenterElement e = family_idempotent(g, idx);
    for (int c = 0; c < nc; ++c) basis.at((int)b, c) = e.coords[c];
  }
  Subspace a = Subspace::span(basis);
  FiltrationLattice filt = filtration(g);
  ReesLattice lat;
  lat.group = g;
  int prev = 0;
  for (const auto& f : filt.pieces) {
    lat.pieces.push_back(a.intersect(f));
    lat.dims.push_back(lat.pieces.back().dim());
    lat.gr_dims.push_back(lat.dims.back() - prev);
    prev = lat.dims.back();
  }
  return lat;
}

}  // namespace cmrees
