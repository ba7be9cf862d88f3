#include "cmrees/chartab.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace cmrees {

namespace {

void check_same_group(const GroupPtr& a, const GroupPtr& b, const char* op) {
  if (a.get() != b.get()) throw std::invalid_argument(std::string(op) + ": group mismatch");
}

}  // namespace

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  check_same_group(group, o.group, "ClassFunction::+");
  std::vector<Cyc> v(values.size());
  for (size_t i = 0; i < values.size(); ++i) v[i] = values[i] + o.values[i];
  return {group, std::move(v)};
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
  check_same_group(group, o.group, "ClassFunction::-");
  std::vector<Cyc> v(values.size());
  for (size_t i = 0; i < values.size(); ++i) v[i] = values[i] - o.values[i];
  return {group, std::move(v)};
}

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
  check_same_group(group, o.group, "ClassFunction::*");
  std::vector<Cyc> v(values.size());
  for (size_t i = 0; i < values.size(); ++i) v[i] = values[i] * o.values[i];
  return {group, std::move(v)};
}

ClassFunction ClassFunction::scaled(const Cyc& c) const {
  std::vector<Cyc> v(values.size());
  for (size_t i = 0; i < values.size(); ++i) v[i] = values[i] * c;
  return {group, std::move(v)};
}

bool ClassFunction::is_zero() const {
  for (const auto& v : values)
    if (!v.is_zero()) return false;
  return true;
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  return group.get() == o.group.get() && values == o.values;
}

Cyc inner_product(const ClassFunction& a, const ClassFunction& b) {
  check_same_group(a.group, b.group, "inner_product");
  const auto& classes = a.group->classes();
  Cyc acc(0);
  for (size_t c = 0; c < classes.size(); ++c)
    acc += Cyc((long)classes[c].members.size()) * a.values[c] *
           b.values[classes[c].inverse_class];
  return acc * Cyc(Rat(1, (long)a.group->size()));
}

GradedCharacter GradedCharacter::operator+(const GradedCharacter& o) const {
  check_same_group(group, o.group, "GradedCharacter::+");
  std::vector<LaurentQ> v(values.size());
  for (size_t i = 0; i < values.size(); ++i) v[i] = values[i] + o.values[i];
  return {group, std::move(v)};
}

GradedCharacter GradedCharacter::operator-(const GradedCharacter& o) const {
  check_same_group(group, o.group, "GradedCharacter::-");
  std::vector<LaurentQ> v(values.size());
  for (size_t i = 0; i < values.size(); ++i) v[i] = values[i] - o.values[i];
  return {group, std::move(v)};
}

GradedCharacter GradedCharacter::operator*(const GradedCharacter& o) const {
  check_same_group(group, o.group, "GradedCharacter::*");
  std::vector<LaurentQ> v(values.size());
  for (size_t i = 0; i < values.size(); ++i) v[i] = values[i] * o.values[i];
  return {group, std::move(v)};
}

GradedCharacter GradedCharacter::scaled(const LaurentQ& f) const {
  std::vector<LaurentQ> v(values.size());
  for (size_t i = 0; i < values.size(); ++i) v[i] = values[i] * f;
  return {group, std::move(v)};
}

bool GradedCharacter::operator==(const GradedCharacter& o) const {
  return group.get() == o.group.get() && values == o.values;
}

GradedCharacter to_graded(const ClassFunction& f) {
  std::vector<LaurentQ> v(f.values.size());
  for (size_t i = 0; i < f.values.size(); ++i) v[i] = LaurentQ(f.values[i]);
  return {f.group, std::move(v)};
}

ClassFunction at_q_one(const GradedCharacter& f) {
  std::vector<Cyc> v(f.values.size());
  for (size_t i = 0; i < f.values.size(); ++i) v[i] = f.values[i].at_one();
  return {f.group, std::move(v)};
}

int CharacterTable::index_of(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return (int)i;
  throw std::invalid_argument("character table: no character named '" + name + "'");
}

std::vector<int> CharacterTable::degrees() const {
  std::vector<int> d;
  for (const auto& chi : irreducibles) d.push_back((int)chi.degree().rational_value().get_num().get_si());
  return d;
}

ClassFunction trivial_character(const GroupPtr& g) {
  return {g, std::vector<Cyc>(g->classes().size(), Cyc(1))};
}

ClassFunction reflection_character(const GroupPtr& g) {
  std::vector<Cyc> v;
  for (const auto& cl : g->classes()) v.push_back(g->element(cl.representative).trace());
  return {g, std::move(v)};
}

ClassFunction det_character(const GroupPtr& g) {
  std::vector<Cyc> v;
  for (const auto& cl : g->classes()) v.push_back(g->element(cl.representative).det());
  return {g, std::move(v)};
}

namespace {

// Greedy small generating set; the stored generator list may be as large
// as the whole group (subgroups are built from their full element list).
std::vector<int> reduced_generators(const GroupPtr& g) {
  std::vector<int> candidates = g->generator_indices();
  for (int i = 1; i < (int)g->size(); ++i) candidates.push_back(i);
  std::vector<int> gens;
  std::vector<bool> span(g->size(), false);
  span[0] = true;
  size_t span_size = 1;
  for (int cand : candidates) {
    if (span_size == g->size()) break;
    if (span[cand]) continue;
    gens.push_back(cand);
    std::deque<int> work;
    for (size_t i = 0; i < g->size(); ++i)
      if (span[i]) work.push_back((int)i);
    while (!work.empty()) {
      int x = work.front();
      work.pop_front();
      for (int s : gens) {
        int y = g->mul(x, s);
        if (!span[y]) {
          span[y] = true;
          ++span_size;
          work.push_back(y);
        }
      }
    }
  }
  return gens;
}

}  // namespace

std::vector<ClassFunction> linear_characters(const GroupPtr& g) {
  const std::vector<int> gens = reduced_generators(g);
  std::vector<int> orders;
  for (int s : gens) orders.push_back(g->order_of(s));

  std::vector<ClassFunction> result;
  std::vector<int> exps(gens.size(), 0);
  size_t n = g->size();
  while (true) {
    // Candidate values on the generators; extend multiplicatively by BFS
    // and reject on any inconsistency.
    std::vector<Cyc> genval(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) genval[i] = Cyc::zeta(orders[i], exps[i]);
    std::vector<Cyc> f(n);
    std::vector<bool> seen(n, false);
    f[0] = Cyc(1);
    seen[0] = true;
    std::deque<int> work{0};
    bool ok = true;
    while (!work.empty() && ok) {
      int x = work.front();
      work.pop_front();
      for (size_t i = 0; i < gens.size(); ++i) {
        int y = g->mul(x, gens[i]);
        Cyc v = f[x] * genval[i];
        if (!seen[y]) {
          f[y] = v;
          seen[y] = true;
          work.push_back(y);
        } else if (f[y] != v) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      std::vector<Cyc> cls;
      for (const auto& c : g->classes()) cls.push_back(f[c.representative]);
      ClassFunction cf{g, std::move(cls)};
      bool dup = false;
      for (const auto& r : result) dup = dup || r == cf;
      if (!dup) result.push_back(std::move(cf));
    }
    // mixed-radix increment over the exponent tuple
    size_t pos = 0;
    while (pos < exps.size() && ++exps[pos] == orders[pos]) exps[pos++] = 0;
    if (pos == exps.size()) break;
  }
  std::sort(result.begin(), result.end(), [](const ClassFunction& a, const ClassFunction& b) {
    for (size_t i = 0; i < a.values.size(); ++i) {
      int c = Cyc::compare(a.values[i], b.values[i]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  return result;
}

namespace {

// f(w) -> f(w^2); sends virtual characters to virtual characters.
ClassFunction adams_square(const ClassFunction& f) {
  const auto& g = f.group;
  std::vector<Cyc> v;
  for (const auto& cl : g->classes())
    v.push_back(f.at_element(g->mul(cl.representative, cl.representative)));
  return {g, std::move(v)};
}

struct Synthesizer {
  GroupPtr g;
  std::vector<ClassFunction> found;
  std::deque<ClassFunction> work;
  std::vector<ClassFunction> stuck;

  bool known(const ClassFunction& chi) const {
    for (const auto& k : found)
      if (k == chi) return true;
    return false;
  }

  void add_irreducible(ClassFunction chi) {
    if (chi.degree().rational_value() < 0) chi = chi.scaled(Cyc(-1));
    if (known(chi)) return;
    // New finds enlarge the product queue and unblock stuck remainders.
    ClassFunction refl = reflection_character(g);
    work.push_back(chi * refl);
    Cyc half(Rat(1, 2));
    ClassFunction sq = chi * chi, ad = adams_square(chi);
    work.push_back((sq + ad).scaled(half));
    work.push_back((sq - ad).scaled(half));
    for (const auto& k : found) work.push_back(chi * k);
    found.push_back(std::move(chi));
    for (auto& s : stuck) work.push_back(std::move(s));
    stuck.clear();
  }

  void decompose(const ClassFunction& f) {
    ClassFunction rem = f;
    for (const auto& chi : found) {
      Cyc m = inner_product(rem, chi);
      if (!m.is_zero()) rem = rem - chi.scaled(m);
    }
    if (rem.is_zero()) return;
    if (inner_product(rem, rem) == Cyc(1))
      add_irreducible(std::move(rem));
    else
      stuck.push_back(std::move(rem));
  }

  std::vector<ClassFunction> run() {
    size_t target = g->classes().size();
    for (auto& chi : linear_characters(g)) add_irreducible(std::move(chi));
    work.push_back(reflection_character(g));
    size_t budget = 200 * target + 200;
    while (found.size() < target && !work.empty() && budget-- > 0) {
      ClassFunction f = std::move(work.front());
      work.pop_front();
      decompose(f);
    }
    if (found.size() != target)
      throw std::runtime_error("character_table: tensor peeling did not reach " +
                               std::to_string(target) + " irreducibles for '" + g->name() + "'");
    return std::move(found);
  }
};

bool all_rational(const ClassFunction& f) {
  for (const auto& v : f.values)
    if (!v.is_rational()) return false;
  return true;
}

std::vector<std::string> assign_names(const GroupPtr& g,
                                      const std::vector<ClassFunction>& irr) {
  std::vector<std::string> names(irr.size());
  auto find = [&](const ClassFunction& f) {
    for (size_t i = 0; i < irr.size(); ++i)
      if (irr[i] == f) return (int)i;
    throw std::logic_error("assign_names: character not in table");
  };

  ClassFunction triv = trivial_character(g);
  ClassFunction det = det_character(g);

  if (g->name() == "G4" && irr.size() == 7) {
    // eps(s) = zeta for the first generator s; chi is the rational-valued
    // degree-2 character; theta the degree-3 one.
    int s_class = g->class_of(g->generator_indices()[0]);
    ClassFunction eps = det;
    if (eps.values[s_class] != Cyc::zeta(3)) eps = det * det;
    ClassFunction eps2 = eps * eps;
    names[find(triv)] = "1";
    names[find(eps)] = "eps";
    names[find(eps2)] = "eps2";
    int chi_i = -1;
    for (size_t i = 0; i < irr.size(); ++i)
      if (irr[i].degree() == Cyc(2) && all_rational(irr[i])) chi_i = (int)i;
    if (chi_i < 0) throw std::logic_error("assign_names: G4 rational degree-2 character missing");
    names[chi_i] = "chi";
    names[find(irr[chi_i] * eps)] = "chi_eps";
    names[find(irr[chi_i] * eps2)] = "chi_eps2";
    for (size_t i = 0; i < irr.size(); ++i)
      if (irr[i].degree() == Cyc(3)) names[i] = "theta";
    return names;
  }

  names[find(triv)] = "1";
  if (!(det == triv)) {
    ClassFunction p = det;
    int k = 1;
    while (!(p == triv)) {
      int i = find(p);
      if (names[i].empty()) names[i] = (k == 1) ? "eps" : ("eps" + std::to_string(k));
      p = p * det;
      ++k;
    }
  }
  std::map<long, int> per_degree;
  for (size_t i = 0; i < irr.size(); ++i) {
    if (!names[i].empty()) continue;
    long d = irr[i].degree().rational_value().get_num().get_si();
    int j = ++per_degree[d];
    names[i] = "chi" + std::to_string(d) + "_" + std::to_string(j);
  }
  return names;
}

}  // namespace

TablePtr character_table(const GroupPtr& g) {
  if (auto cached = g->table_cache()) return cached;
  Synthesizer syn{g};
  auto irr = syn.run();
  std::sort(irr.begin(), irr.end(), [](const ClassFunction& a, const ClassFunction& b) {
    int c = Cyc::compare(a.degree(), b.degree());
    if (c != 0) return c < 0;
    for (size_t i = 0; i < a.values.size(); ++i) {
      c = Cyc::compare(a.values[i], b.values[i]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  auto t = std::make_shared<CharacterTable>();
  t->group = g;
  t->irreducibles = std::move(irr);
  t->names = assign_names(g, t->irreducibles);
  g->set_table_cache(t);
  return t;
}

ClassFunction induce(const Subgroup& sub, const ClassFunction& f) {
  check_same_group(sub.group, f.group, "induce");
  const auto& g = sub.ambient;
  std::vector<Cyc> v;
  for (const auto& cl : g->classes()) {
    Cyc acc(0);
    int w = cl.representative;
    for (int x = 0; x < (int)g->size(); ++x) {
      int y = g->mul(g->mul(g->inv(x), w), x);
      int h = sub.from_ambient[y];
      if (h >= 0) acc += f.values[sub.group->class_of(h)];
    }
    v.push_back(acc * Cyc(Rat(1, (long)sub.group->size())));
  }
  return {g, std::move(v)};
}

GradedCharacter induce(const Subgroup& sub, const GradedCharacter& f) {
  check_same_group(sub.group, f.group, "induce");
  const auto& g = sub.ambient;
  LaurentQ scale(Cyc(Rat(1, (long)sub.group->size())));
  std::vector<LaurentQ> v;
  for (const auto& cl : g->classes()) {
    LaurentQ acc;
    int w = cl.representative;
    for (int x = 0; x < (int)g->size(); ++x) {
      int y = g->mul(g->mul(g->inv(x), w), x);
      int h = sub.from_ambient[y];
      if (h >= 0) acc += f.values[sub.group->class_of(h)];
    }
    v.push_back(acc * scale);
  }
  return {g, std::move(v)};
}

ClassFunction restrict_to(const Subgroup& sub, const ClassFunction& f) {
  check_same_group(sub.ambient, f.group, "restrict_to");
  std::vector<Cyc> v;
  for (const auto& cl : sub.group->classes())
    v.push_back(f.at_element(sub.to_ambient[cl.representative]));
  return {sub.group, std::move(v)};
}

GradedCharacter restrict_to(const Subgroup& sub, const GradedCharacter& f) {
  check_same_group(sub.ambient, f.group, "restrict_to");
  std::vector<LaurentQ> v;
  for (const auto& cl : sub.group->classes())
    v.push_back(f.values[sub.ambient->class_of(sub.to_ambient[cl.representative])]);
  return {sub.group, std::move(v)};
}

LaurentQ graded_pairing(const GradedCharacter& m, const GradedCharacter& n) {
  check_same_group(m.group, n.group, "graded_pairing");
  const auto& classes = m.group->classes();
  LaurentQ acc;
  for (size_t c = 0; c < classes.size(); ++c)
    acc += LaurentQ(Cyc((long)classes[c].members.size())) * m.values[c] *
           n.values[classes[c].inverse_class];
  return acc * LaurentQ(Cyc(Rat(1, (long)m.group->size())));
}

GradedCharacter coinvariant_character(const GroupPtr& g) {
  LaurentQ num(1);
  for (int d : g->invariant_degrees()) num *= LaurentQ(1) - LaurentQ::q_power(d);
  std::vector<LaurentQ> v;
  for (const auto& cl : g->classes()) {
    LaurentQ den = g->element(g->inv(cl.representative)).char_factor_q();
    v.push_back(num.divide_exact(den));
  }
  return {g, std::move(v)};
}

LaurentQ fake_degree(const GroupPtr& g, const ClassFunction& chi) {
  return graded_pairing(to_graded(chi), coinvariant_character(g));
}

GradedCharacter exterior_class(const Subgroup& sub) {
  const auto& g = sub.ambient;
  int n = g->dim();
  // dim V^{W'}: kernel of the stacked (w - 1) over the subgroup's elements.
  CycMatrix stacked((int)sub.to_ambient.size() * n, n);
  CycMatrix id = CycMatrix::identity(n);
  for (size_t k = 0; k < sub.to_ambient.size(); ++k) {
    CycMatrix d = g->element(sub.to_ambient[k]) - id;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) stacked.at((int)k * n + i, j) = d.at(i, j);
  }
  int fixed_dim = n - stacked.rank();
  LaurentQ pow(1);
  for (int i = 0; i < fixed_dim; ++i) pow *= LaurentQ(1) - LaurentQ::q_power(1);
  std::vector<LaurentQ> v;
  for (const auto& cl : sub.group->classes()) {
    int a = sub.to_ambient[cl.representative];
    LaurentQ full = g->element(g->inv(a)).char_factor_q();
    v.push_back(full.divide_exact(pow));
  }
  return {sub.group, std::move(v)};
}

std::string render_table_tsv(const CharacterTable& t) {
  std::ostringstream out;
  const auto& g = t.group;
  out << "group\t" << g->name() << "\torder\t" << g->size() << "\n";
  out << "char";
  for (size_t c = 0; c < g->classes().size(); ++c) out << "\tC" << c;
  out << "\nsize";
  for (const auto& cl : g->classes()) out << "\t" << cl.members.size();
  out << "\norder";
  for (const auto& cl : g->classes()) out << "\t" << cl.order;
  out << "\ncodim";
  for (const auto& cl : g->classes()) out << "\t" << cl.codim;
  out << "\n";
  for (int i = 0; i < t.size(); ++i) {
    out << t.names[i];
    for (const auto& v : t.irreducibles[i].values) out << "\t" << v.str();
    out << "\n";
  }
  return out.str();
}

}  // namespace cmrees
