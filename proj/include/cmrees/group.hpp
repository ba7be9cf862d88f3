#ifndef CMREES_GROUP_HPP
#define CMREES_GROUP_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cmrees/linalg.hpp"

namespace cmrees {

struct CharacterTable;

struct ConjClass {
  int representative = 0;    // element index
  std::vector<int> members;  // element indices, sorted
  int codim = 0;             // n - dim V^w
  int order = 1;             // element order
  int inverse_class = 0;     // class index of representatives' inverses
};

/// Intersection of reflecting hyperplanes together with its pointwise
/// stabilizer. The full space V appears with codim 0 and trivial stabilizer.
struct Flat {
  Subspace subspace;
  int codim = 0;
  std::vector<int> parabolic;  // ambient element indices, sorted
  int orbit_rep = 0;           // index of this flat's W-orbit representative
};

class ReflGroup;
using GroupPtr = std::shared_ptr<const ReflGroup>;

/// A subgroup packaged as its own ReflGroup plus the element embedding.
struct Subgroup {
  GroupPtr group;
  GroupPtr ambient;
  std::vector<int> to_ambient;    // sub element index -> ambient element index
  std::vector<int> from_ambient;  // ambient element index -> sub index or -1
};

class ReflGroup : public std::enable_shared_from_this<ReflGroup> {
 public:
  // BFS closure of the generators. Verifies finiteness (against `bound`),
  // invertibility, and generation by reflections.
  static GroupPtr generate(const std::vector<CycMatrix>& generators, const std::string& name,
                           size_t bound = 0 /* 0 = default/env */);

  static size_t default_order_bound();

  int dim() const { return dim_; }
  size_t size() const { return elements_.size(); }
  const std::string& name() const { return name_; }
  // lcm of generator entry conductors and all element orders
  int conductor() const { return conductor_; }

  const CycMatrix& element(int i) const { return elements_[i]; }
  const std::vector<int>& generator_indices() const { return gen_indices_; }
  int element_index(const CycMatrix& m) const;  // -1 if absent
  int mul(int i, int j) const { return mul_[i * (int)size() + j]; }
  int inv(int i) const { return inv_[i]; }
  int order_of(int i) const { return order_[i]; }
  int codim_of(int i) const { return codim_[i]; }
  bool is_reflection(int i) const { return codim_[i] == 1; }
  int reflection_count() const;

  const std::vector<ConjClass>& classes() const { return classes_; }
  int class_of(int element) const { return class_of_[element]; }

  const std::vector<Flat>& flats() const;        // lazy, deterministic order
  std::vector<int> flat_orbit_reps() const;      // indices into flats()
  const Subgroup& flat_subgroup(int flat_index) const;

  // Invariant degrees d_1 <= ... <= d_n via Molien series factor
  // extraction; verifies prod d_i = |W|.
  const std::vector<int>& invariant_degrees() const;

  // Shared handle used by the character-table module.
  std::shared_ptr<const CharacterTable> table_cache() const;
  void set_table_cache(std::shared_ptr<const CharacterTable> t) const;

 private:
  ReflGroup() = default;
  friend Subgroup make_subgroup(const GroupPtr&, const std::vector<int>&, const std::string&);
  static std::shared_ptr<ReflGroup> close_and_build(const std::vector<CycMatrix>& generators,
                                                    const std::string& name, size_t bound,
                                                    bool check_reflection_generation);
  void build_tables();   // mul/inv/order/codim/classes
  void compute_flats() const;

  int dim_ = 0;
  int conductor_ = 1;
  std::string name_;
  std::vector<CycMatrix> elements_;  // index 0 = identity
  std::map<std::string, int> index_;
  std::vector<int> mul_, inv_, order_, codim_, class_of_;
  std::vector<int> gen_indices_;
  std::vector<ConjClass> classes_;

  mutable std::mutex mu_;
  mutable std::vector<Flat> flats_;
  mutable bool flats_done_ = false;
  mutable std::vector<std::shared_ptr<Subgroup>> flat_subgroups_;
  mutable std::vector<int> degrees_;
  mutable std::shared_ptr<const CharacterTable> table_;
};

// Subgroup spanned by the given ambient element indices (must be closed).
Subgroup make_subgroup(const GroupPtr& g, const std::vector<int>& element_indices,
                       const std::string& name);

// Coefficients 0..order of the Molien series (1/|W|) sum_w 1/det(1-qw).
std::vector<Rat> molien_series(const ReflGroup& g, int order);

}  // namespace cmrees

#endif
