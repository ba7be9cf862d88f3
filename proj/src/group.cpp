#include "cmrees/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace cmrees {

size_t ReflGroup::default_order_bound() {
  if (const char* env = std::getenv("CMREES_MAX_GROUP_ORDER")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return (size_t)v;
  }
  return 10000;
}

namespace {

int entry_conductor(const std::vector<CycMatrix>& mats) {
  int m = 1;
  for (const auto& mat : mats)
    for (int i = 0; i < mat.rows(); ++i)
      for (int j = 0; j < mat.cols(); ++j) m = lcm_conductor(m, mat.at(i, j).conductor());
  return m;
}

}  // namespace

std::shared_ptr<ReflGroup> ReflGroup::close_and_build(const std::vector<CycMatrix>& generators,
                                                      const std::string& name, size_t bound,
                                                      bool check_reflection_generation) {
  if (bound == 0) bound = default_order_bound();
  auto g = std::shared_ptr<ReflGroup>(new ReflGroup());
  g->name_ = name;
  int n = generators.empty() ? 1 : generators[0].rows();
  for (const auto& m : generators) {
    if (m.rows() != m.cols() || m.rows() != n)
      throw std::invalid_argument("generate_group: generators must be square of equal dimension");
    m.inverse();  // throws on a non-invertible generator
  }
  g->dim_ = n;
  int cond0 = entry_conductor(generators);

  // BFS closure, dedup by canonical key at the entry conductor.
  g->elements_.push_back(CycMatrix::identity(n));
  g->index_[g->elements_[0].key(cond0)] = 0;
  std::deque<int> work{0};
  while (!work.empty()) {
    int i = work.front();
    work.pop_front();
    for (const auto& s : generators) {
      CycMatrix p = g->elements_[i] * s;
      std::string k = p.key(cond0);
      if (g->index_.count(k)) continue;
      if (g->elements_.size() >= bound)
        throw std::runtime_error("generate_group: order bound " + std::to_string(bound) +
                                 " exceeded (group may be infinite)");
      g->index_[k] = (int)g->elements_.size();
      g->elements_.push_back(std::move(p));
      work.push_back((int)g->elements_.size() - 1);
    }
  }
  // Rebuild the index at the final conductor (entry conductors plus all
  // element orders) so later lookups share one field.
  g->conductor_ = cond0;
  g->build_tables();
  for (int o : g->order_) g->conductor_ = lcm_conductor(g->conductor_, o);
  g->index_.clear();
  for (size_t i = 0; i < g->elements_.size(); ++i)
    g->index_[g->elements_[i].key(g->conductor_)] = (int)i;
  for (const auto& s : generators) g->gen_indices_.push_back(g->element_index(s));

  if (check_reflection_generation) {
    std::vector<int> refl;
    for (size_t i = 0; i < g->elements_.size(); ++i)
      if (g->codim_[i] == 1) refl.push_back((int)i);
    // closure of the reflections inside the element set
    std::set<int> span{0};
    std::deque<int> q{0};
    while (!q.empty()) {
      int i = q.front();
      q.pop_front();
      for (int s : refl) {
        int p = g->mul(i, s);
        if (span.insert(p).second) q.push_back(p);
      }
    }
    if (span.size() != g->elements_.size())
      throw std::runtime_error("generate_group: '" + name +
                               "' is not generated by its reflections");
  }
  return g;
}

GroupPtr ReflGroup::generate(const std::vector<CycMatrix>& generators, const std::string& name,
                             size_t bound) {
  return close_and_build(generators, name, bound, true);
}

void ReflGroup::build_tables() {
  size_t sz = elements_.size();
  int cond0 = conductor_;
  mul_.assign(sz * sz, -1);
  for (size_t i = 0; i < sz; ++i)
    for (size_t j = 0; j < sz; ++j) {
      CycMatrix p = elements_[i] * elements_[j];
      auto it = index_.find(p.key(cond0));
      if (it == index_.end()) throw std::runtime_error("group closure violated");
      mul_[i * sz + j] = it->second;
    }
  inv_.assign(sz, -1);
  for (size_t i = 0; i < sz; ++i)
    for (size_t j = 0; j < sz; ++j)
      if (mul_[i * sz + j] == 0) {
        inv_[i] = (int)j;
        break;
      }
  order_.assign(sz, 1);
  for (size_t i = 0; i < sz; ++i) {
    int o = 1, cur = (int)i;
    while (cur != 0) {
      cur = mul_[cur * sz + i];
      ++o;
    }
    order_[i] = o;
  }
  codim_.assign(sz, 0);
  CycMatrix id = CycMatrix::identity(dim_);
  for (size_t i = 0; i < sz; ++i) codim_[i] = (elements_[i] - id).rank();

  // conjugacy classes
  class_of_.assign(sz, -1);
  std::vector<ConjClass> classes;
  for (size_t i = 0; i < sz; ++i) {
    if (class_of_[i] >= 0) continue;
    ConjClass cl;
    cl.representative = (int)i;
    for (size_t gidx = 0; gidx < sz; ++gidx) {
      int conj = mul_[mul_[gidx * sz + i] * sz + inv_[gidx]];
      if (class_of_[conj] < 0) {
        class_of_[conj] = (int)classes.size();
        cl.members.push_back(conj);
      }
    }
    std::sort(cl.members.begin(), cl.members.end());
    cl.representative = cl.members[0];
    cl.codim = codim_[cl.representative];
    cl.order = order_[cl.representative];
    classes.push_back(std::move(cl));
  }
  // Deterministic class order: identity first, then by (codim, order, size,
  // canonical key of representative).
  std::vector<int> perm(classes.size());
  std::iota(perm.begin(), perm.end(), 0);
  auto class_key = [&](int c) {
    const ConjClass& cl = classes[c];
    return std::make_tuple(cl.codim, cl.order, cl.members.size(),
                           elements_[cl.representative].key(conductor_));
  };
  std::sort(perm.begin(), perm.end(), [&](int a, int b) { return class_key(a) < class_key(b); });
  classes_.clear();
  std::vector<int> new_of_old(classes.size());
  for (size_t k = 0; k < perm.size(); ++k) {
    new_of_old[perm[k]] = (int)k;
    classes_.push_back(std::move(classes[perm[k]]));
  }
  for (size_t i = 0; i < sz; ++i) class_of_[i] = new_of_old[class_of_[i]];
  for (auto& cl : classes_) cl.inverse_class = class_of_[inv_[cl.representative]];
}

int ReflGroup::element_index(const CycMatrix& m) const {
  auto it = index_.find(m.key(conductor_));
  return it == index_.end() ? -1 : it->second;
}

int ReflGroup::reflection_count() const {
  int c = 0;
  for (int x : codim_) c += (x == 1);
  return c;
}

void ReflGroup::compute_flats() const {
  // caller holds mu_
  if (flats_done_) return;
  std::vector<Subspace> spaces;
  // the full space V
  spaces.push_back(Subspace::span(CycMatrix::identity(dim_)));
  std::vector<Subspace> hyperplanes;
  CycMatrix id = CycMatrix::identity(dim_);
  for (size_t i = 0; i < elements_.size(); ++i) {
    if (codim_[i] != 1) continue;
    Subspace h = Subspace::span((elements_[i] - id).kernel());
    bool seen = false;
    for (const auto& s : hyperplanes) seen = seen || s == h;
    if (!seen) hyperplanes.push_back(h);
  }
  for (const auto& h : hyperplanes) spaces.push_back(h);
  // incremental pairwise intersection closure against the hyperplanes
  for (size_t i = 0; i < spaces.size(); ++i)
    for (const auto& h : hyperplanes) {
      Subspace inter = spaces[i].intersect(h);
      bool seen = false;
      for (const auto& s : spaces) seen = seen || s == inter;
      if (!seen) spaces.push_back(inter);
    }
  // deterministic order: by (codim, basis key)
  std::sort(spaces.begin(), spaces.end(), [&](const Subspace& a, const Subspace& b) {
    int ca = dim_ - a.dim(), cb = dim_ - b.dim();
    if (ca != cb) return ca < cb;
    return a.basis().key(conductor_) < b.basis().key(conductor_);
  });
  flats_.clear();
  for (auto& s : spaces) {
    Flat f{s, dim_ - s.dim(), {}, 0};
    for (size_t i = 0; i < elements_.size(); ++i) {
      bool fixes = true;
      for (int r = 0; r < s.basis().rows() && fixes; ++r) {
        // column vector v = basis row r; check w v = v
        CycMatrix v(dim_, 1);
        for (int j = 0; j < dim_; ++j) v.at(j, 0) = s.basis().at(r, j);
        fixes = (elements_[i] * v == v);
      }
      if (fixes) f.parabolic.push_back((int)i);
    }
    flats_.push_back(std::move(f));
  }
  // W-orbits on flats
  std::vector<int> orbit(flats_.size(), -1);
  for (size_t fi = 0; fi < flats_.size(); ++fi) {
    if (orbit[fi] >= 0) continue;
    for (size_t gi = 0; gi < elements_.size(); ++gi) {
      // image subspace: rows mapped by g
      const CycMatrix& b = flats_[fi].subspace.basis();
      CycMatrix img(b.rows(), dim_);
      for (int r = 0; r < b.rows(); ++r) {
        CycMatrix v(dim_, 1);
        for (int j = 0; j < dim_; ++j) v.at(j, 0) = b.at(r, j);
        CycMatrix w = elements_[gi] * v;
        for (int j = 0; j < dim_; ++j) img.at(r, j) = w.at(j, 0);
      }
      Subspace image = Subspace::span(img);
      for (size_t fj = 0; fj < flats_.size(); ++fj)
        if (orbit[fj] < 0 && flats_[fj].subspace == image) orbit[fj] = (int)fi;
    }
  }
  for (size_t fi = 0; fi < flats_.size(); ++fi) flats_[fi].orbit_rep = orbit[fi];
  flat_subgroups_.assign(flats_.size(), nullptr);
  flats_done_ = true;
}

const std::vector<Flat>& ReflGroup::flats() const {
  std::lock_guard<std::mutex> lock(mu_);
  compute_flats();
  return flats_;
}

std::vector<int> ReflGroup::flat_orbit_reps() const {
  const auto& fl = flats();
  std::vector<int> reps;
  for (size_t i = 0; i < fl.size(); ++i)
    if (fl[i].orbit_rep == (int)i) reps.push_back((int)i);
  return reps;
}

std::vector<Rat> molien_series(const ReflGroup& g, int order) {
  std::vector<Cyc> total(order + 1, Cyc(0));
  for (size_t i = 0; i < g.size(); ++i) {
    LaurentQ den = g.element(i).char_factor_q();  // det(1 - q w)
    // invert as a power series
    std::vector<Cyc> inv(order + 1, Cyc(0));
    Cyc c0i = den.coeff(0).inverse();
    inv[0] = c0i;
    for (int k = 1; k <= order; ++k) {
      Cyc acc(0);
      for (int j = 1; j <= k && j <= den.max_degree(); ++j) acc += den.coeff(j) * inv[k - j];
      inv[k] = -acc * c0i;
    }
    for (int k = 0; k <= order; ++k)
      if (!inv[k].is_zero()) total[k] += inv[k];
  }
  Rat scale(1, (unsigned long)g.size());
  scale.canonicalize();
  std::vector<Rat> out(order + 1, Rat(0));
  for (int k = 0; k <= order; ++k) {
    out[k] = total[k].rational_value() * scale;  // the averaged sum is rational
    out[k].canonicalize();
  }
  return out;
}

const std::vector<int>& ReflGroup::invariant_degrees() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!degrees_.empty() || dim_ == 0) return degrees_;
  int D = (int)size() + 1;
  std::vector<Rat> t = molien_series(*this, D);
  std::vector<int> degs;
  for (int i = 0; i < dim_; ++i) {
    int d = -1;
    for (int k = 1; k <= D; ++k)
      if (t[k] != 0) {
        d = k;
        break;
      }
    if (d < 0)
      throw std::runtime_error("invariant_degrees: Molien factor extraction failed for " + name_);
    // t *= (1 - q^d)
    for (int k = D; k >= d; --k) t[k] -= t[k - d];
    degs.push_back(d);
  }
  for (int k = 1; k <= D; ++k)
    if (t[k] != 0)
      throw std::runtime_error(
          "invariant_degrees: Molien series is not a product of 1/(1-q^d) factors for " + name_);
  long prod = 1;
  for (int d : degs) prod *= d;
  if (prod != (long)size())
    throw std::runtime_error("invariant_degrees: product of degrees != |W| for " + name_);
  std::sort(degs.begin(), degs.end());
  degrees_ = std::move(degs);
  return degrees_;
}

std::shared_ptr<const CharacterTable> ReflGroup::table_cache() const {
  std::lock_guard<std::mutex> lock(mu_);
  return table_;
}

void ReflGroup::set_table_cache(std::shared_ptr<const CharacterTable> t) const {
  std::lock_guard<std::mutex> lock(mu_);
  table_ = std::move(t);
}

Subgroup make_subgroup(const GroupPtr& g, const std::vector<int>& element_indices,
                       const std::string& name) {
  std::vector<CycMatrix> mats;
  mats.reserve(element_indices.size());
  for (int i : element_indices) mats.push_back(g->element(i));
  auto sub = ReflGroup::close_and_build(mats, name, g->size() + 1, false);
  if (sub->size() != element_indices.size())
    throw std::runtime_error("make_subgroup: element set of '" + name + "' is not closed");
  Subgroup s;
  s.group = sub;
  s.ambient = g;
  s.to_ambient.resize(sub->size());
  s.from_ambient.assign(g->size(), -1);
  for (size_t i = 0; i < sub->size(); ++i) {
    int amb = g->element_index(sub->element((int)i));
    if (amb < 0) throw std::runtime_error("make_subgroup: embedding inconsistent");
    s.to_ambient[i] = amb;
    s.from_ambient[amb] = (int)i;
  }
  return s;
}

const Subgroup& ReflGroup::flat_subgroup(int flat_index) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    compute_flats();
    if (flat_subgroups_[flat_index]) return *flat_subgroups_[flat_index];
  }
  // Build outside the lock; make_subgroup re-enters this group's accessors.
  auto self = shared_from_this();
  Subgroup s =
      make_subgroup(self, flats_[flat_index].parabolic,
                    name_ + "_parabolic" + std::to_string(flat_index));
  std::lock_guard<std::mutex> lock(mu_);
  if (!flat_subgroups_[flat_index])
    flat_subgroups_[flat_index] = std::make_shared<Subgroup>(std::move(s));
  return *flat_subgroups_[flat_index];
}

}  // namespace cmrees
