#include "cmrees/chern.hpp"

#include <sstream>

namespace cmrees {

ImageClass::ImageClass(GroupPtr g, int order) {
  group = std::move(g);
  coords.assign(character_table(group)->size(), HbarSeries(order));
}

ImageClass ImageClass::operator+(const ImageClass& o) const {
  std::vector<HbarSeries> c;
  for (size_t i = 0; i < coords.size(); ++i) c.push_back(coords[i] + o.coords[i]);
  return {group, std::move(c)};
}

ImageClass ImageClass::operator-(const ImageClass& o) const {
  std::vector<HbarSeries> c;
  for (size_t i = 0; i < coords.size(); ++i) c.push_back(coords[i] - o.coords[i]);
  return {group, std::move(c)};
}

ImageClass ImageClass::scaled(const Cyc& s) const {
  std::vector<HbarSeries> c;
  HbarSeries f(order(), s);
  for (const auto& x : coords) c.push_back(x * f);
  return {group, std::move(c)};
}

ImageClass ImageClass::hbar_shifted(int k) const {
  std::vector<HbarSeries> c;
  for (const auto& x : coords) c.push_back(x.hbar_shifted(k));
  return {group, std::move(c)};
}

bool ImageClass::is_zero() const {
  for (const auto& x : coords)
    if (!x.is_zero()) return false;
  return true;
}

bool ImageClass::operator==(const ImageClass& o) const {
  return group.get() == o.group.get() && coords == o.coords;
}

CenterElement ImageClass::component(int j) const {
  std::vector<Cyc> omega;
  for (const auto& x : coords) omega.push_back(x.coeff(j));
  return from_idempotent_coords(group, omega);
}

ImageLattice::ImageLattice(GroupPtr g, int order)
    : group(std::move(g)),
      degrees(order + 1, Subspace((int)0)) {
  int nc = (int)group->classes().size();
  for (auto& d : degrees) d = Subspace(nc);
}

void ImageLattice::add_component(const CenterElement& z, int j) {
  CycMatrix row(1, (int)z.coords.size());
  for (size_t c = 0; c < z.coords.size(); ++c) row.at(0, (int)c) = z.coords[c];
  Subspace v = Subspace::span(row);
  for (size_t k = (size_t)j; k < degrees.size(); ++k) degrees[k] = degrees[k].sum(v);
}

void ImageLattice::add_class(const ImageClass& z) {
  for (int j = 0; j <= z.order() && j < (int)degrees.size(); ++j)
    add_component(z.component(j), j);
}

std::vector<int> ImageLattice::dims() const {
  std::vector<int> d;
  for (const auto& s : degrees) d.push_back(s.dim());
  return d;
}

ImageClass ch_c(const GroupPtr& g, const GradedCharacter& e, int order) {
  auto t = character_table(g);
  GradedCharacter coinv = coinvariant_character(g);
  GradedCharacter product = coinv * e;
  std::vector<HbarSeries> coords;
  for (const auto& chi : t->irreducibles) {
    LaurentQ num = graded_pairing(to_graded(chi), product);
    LaurentQ den = graded_pairing(to_graded(chi), coinv);  // fake degree
    coords.push_back(expand_exp(num, order) / expand_exp(den, order));
  }
  return {g, std::move(coords)};
}

int parabolic_codim(const Subgroup& sub) {
  const auto& g = sub.ambient;
  int n = g->dim();
  CycMatrix stacked((int)sub.to_ambient.size() * n, n);
  CycMatrix id = CycMatrix::identity(n);
  for (size_t k = 0; k < sub.to_ambient.size(); ++k) {
    CycMatrix d = g->element(sub.to_ambient[k]) - id;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) stacked.at((int)k * n + i, j) = d.at(i, j);
  }
  return stacked.rank();
}

CorIdentity chern_induced(const Subgroup& sub, const GradedCharacter& e_sub, int order) {
  const auto& g = sub.ambient;
  auto t = character_table(g);
  int n = g->dim();
  int r = parabolic_codim(sub);

  GradedCharacter twisted = induce(sub, exterior_class(sub) * e_sub);
  GradedCharacter induced = induce(sub, e_sub);
  GradedCharacter coinv = coinvariant_character(g);

  LaurentQ prefactor(1);
  for (int d : g->invariant_degrees()) prefactor *= LaurentQ(1) - LaurentQ::q_power(d);
  LaurentQ one_minus_q = LaurentQ(1) - LaurentQ::q_power(1);
  for (int i = 0; i < n - r; ++i) prefactor = prefactor.divide_exact(one_minus_q);

  CorIdentity out;
  out.laurent_equal = true;
  std::vector<HbarSeries> lhs_coords, rhs_coords;
  for (const auto& chi : t->irreducibles) {
    LaurentQ fake = graded_pairing(to_graded(chi), coinv);
    LaurentQ lhs_num = graded_pairing(to_graded(chi), coinv * twisted);
    LaurentQ rhs_num = prefactor * graded_pairing(to_graded(chi), induced);
    out.laurent_equal = out.laurent_equal && (lhs_num == rhs_num);
    out.lhs_num.push_back(lhs_num);
    out.rhs_num.push_back(rhs_num);
    HbarSeries den = expand_exp(fake, order);
    lhs_coords.push_back(expand_exp(lhs_num, order) / den);
    rhs_coords.push_back(expand_exp(rhs_num, order) / den);
  }
  out.lhs = {g, std::move(lhs_coords)};
  out.rhs = {g, std::move(rhs_coords)};
  return out;
}

CenterElement star_generator(const Subgroup& sub, const ClassFunction& chi_sub, int order) {
  const auto& g = sub.ambient;
  int r = parabolic_codim(sub);
  if (order < r) throw std::invalid_argument("star_generator: order below the flat codimension");
  Cyc scale = chi_sub.degree() * Cyc(Rat(1, (long)sub.group->size()));

  // Internal series check on the prefactor: vanishing to order r at q = 1
  // with leading coefficient (-1)^r d_1...d_n.
  int n = g->dim();
  LaurentQ prefactor(1);
  long degprod = 1;
  for (int d : g->invariant_degrees()) {
    prefactor *= LaurentQ(1) - LaurentQ::q_power(d);
    degprod *= d;
  }
  LaurentQ one_minus_q = LaurentQ(1) - LaurentQ::q_power(1);
  for (int i = 0; i < n - r; ++i) prefactor = prefactor.divide_exact(one_minus_q);
  HbarSeries pre = expand_exp(prefactor, r);
  for (int j = 0; j < r; ++j)
    if (!pre.coeff(j).is_zero())
      throw std::runtime_error("star_generator: prefactor not flat to order r at q=1");
  Cyc lead((r % 2 == 0) ? degprod : -degprod);
  if (pre.coeff(r) != lead)
    throw std::runtime_error("star_generator: prefactor leading coefficient mismatch");

  CorIdentity cor = chern_induced(sub, to_graded(chi_sub), order);
  ImageClass z = cor.lhs.scaled(scale);
  for (int j = 0; j < r; ++j) {
    std::vector<Cyc> low(z.coords.size());
    for (size_t i = 0; i < z.coords.size(); ++i) low[i] = z.coords[i].coeff(j);
    for (const auto& c : low)
      if (!c.is_zero())
        throw std::runtime_error("star_generator: nonzero component below degree r");
  }
  CenterElement out = z.component(r);

  // Closed coefficient formula (-1)^r (chi'(1)/|W'|) sum_chi |W|<chi,Ind chi'>/chi(1) e_chi.
  auto t = character_table(g);
  ClassFunction ind = induce(sub, chi_sub);
  std::vector<Cyc> omega;
  Cyc sign((r % 2 == 0) ? 1L : -1L);
  for (const auto& chi : t->irreducibles)
    omega.push_back(sign * scale * Cyc((long)g->size()) * inner_product(chi, ind) *
                    chi.degree().inverse());
  if (!(out == from_idempotent_coords(g, omega)))
    throw std::runtime_error("star_generator: closed formula mismatch");
  // (-1)^r times the raw transfer of the parabolic idempotent.
  CenterElement tr = transfer(sub, idempotent(sub.group, chi_sub)).scaled(sign);
  if (!(out == tr)) throw std::runtime_error("star_generator: transfer comparison mismatch");
  return out;
}

int default_hbar_order(const GroupPtr& g) { return 2 * g->dim() + 4; }

TheoremAReport verify_theorem_a(const GroupPtr& g, int order) {
  TheoremAReport rep;
  rep.group = g->name();
  rep.order = order;

  ImageLattice lattice(g, order);
  lattice.add_component(center_unit(g), 0);
  const auto& flats = g->flats();
  for (int fi : g->flat_orbit_reps()) {
    const auto& sub = g->flat_subgroup(fi);
    auto ts = character_table(sub.group);
    for (const auto& chi : ts->irreducibles)
      lattice.add_component(star_generator(sub, chi, order), flats[fi].codim);
  }

  FiltrationLattice filt = filtration(g);
  int n = g->dim();
  rep.dims_image = lattice.dims();
  rep.equal = true;
  for (int j = 0; j <= order; ++j) {
    const Subspace& rees = filt.pieces[std::min(j, n)];
    rep.dims_rees.push_back(rees.dim());
    if (!(lattice.degrees[j] == rees)) {
      rep.equal = false;
      std::ostringstream w;
      w << "degree " << j << ": image dim " << lattice.degrees[j].dim() << ", rees dim "
        << rees.dim();
      rep.witnesses.push_back(w.str());
    }
  }
  return rep;
}

}  // namespace cmrees
