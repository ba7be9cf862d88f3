#ifndef CMREES_CHARTAB_HPP
#define CMREES_CHARTAB_HPP

#include <memory>
#include <string>
#include <vector>

#include "cmrees/group.hpp"
#include "cmrees/laurent.hpp"

namespace cmrees {

/// Class function with cyclotomic values, one per conjugacy class.
struct ClassFunction {
  GroupPtr group;
  std::vector<Cyc> values;

  ClassFunction() = default;
  ClassFunction(GroupPtr g, std::vector<Cyc> v) : group(std::move(g)), values(std::move(v)) {}

  const Cyc& at_class(int c) const { return values[c]; }
  Cyc at_element(int w) const { return values[group->class_of(w)]; }
  Cyc degree() const { return values[0]; }  // class 0 is the identity class

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  ClassFunction operator*(const ClassFunction& o) const;  // pointwise (tensor)
  ClassFunction scaled(const Cyc& c) const;
  bool is_zero() const;
  bool operator==(const ClassFunction& o) const;
};

// (1/|W|) sum_w a(w) b(w^-1), no conjugation.
Cyc inner_product(const ClassFunction& a, const ClassFunction& b);

/// Class function valued in Laurent polynomials: a graded virtual character.
struct GradedCharacter {
  GroupPtr group;
  std::vector<LaurentQ> values;

  GradedCharacter() = default;
  GradedCharacter(GroupPtr g, std::vector<LaurentQ> v) : group(std::move(g)), values(std::move(v)) {}

  const LaurentQ& at_class(int c) const { return values[c]; }
  GradedCharacter operator+(const GradedCharacter& o) const;
  GradedCharacter operator-(const GradedCharacter& o) const;
  GradedCharacter operator*(const GradedCharacter& o) const;  // pointwise
  GradedCharacter scaled(const LaurentQ& f) const;
  bool operator==(const GradedCharacter& o) const;
};

GradedCharacter to_graded(const ClassFunction& f);
ClassFunction at_q_one(const GradedCharacter& f);

struct CharacterTable {
  GroupPtr group;
  std::vector<ClassFunction> irreducibles;  // sorted by (degree, value tuple)
  std::vector<std::string> names;

  int size() const { return (int)irreducibles.size(); }
  int index_of(const std::string& name) const;  // throws if absent
  const ClassFunction& by_name(const std::string& name) const {
    return irreducibles[index_of(name)];
  }
  std::vector<int> degrees() const;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

// Synthesizes the table by peeling tensor products of the reflection and
// determinant characters (seeded with all linear characters); cached on g.
TablePtr character_table(const GroupPtr& g);

ClassFunction trivial_character(const GroupPtr& g);
ClassFunction reflection_character(const GroupPtr& g);
ClassFunction det_character(const GroupPtr& g);

// All homomorphisms W -> C* as class functions, deterministic order.
std::vector<ClassFunction> linear_characters(const GroupPtr& g);

ClassFunction induce(const Subgroup& sub, const ClassFunction& f);
GradedCharacter induce(const Subgroup& sub, const GradedCharacter& f);
ClassFunction restrict_to(const Subgroup& sub, const ClassFunction& f);
GradedCharacter restrict_to(const Subgroup& sub, const GradedCharacter& f);

// <M,N>^gr = sum_{i,j} <M_i,N_j> q^{i+j}; pointwise on Laurent values.
LaurentQ graded_pairing(const GradedCharacter& m, const GradedCharacter& n);

// Value at w: prod_i (1 - q^{d_i}) / det(1 - q w^{-1}).
GradedCharacter coinvariant_character(const GroupPtr& g);

// <chi, coinvariant>^gr; polynomial with non-negative integer coefficients.
LaurentQ fake_degree(const GroupPtr& g, const ClassFunction& chi);

// Alternating sum sum_i (-1)^i q^i [Wedge^i (V')^perp] on the parabolic;
// value at w is det(1 - q w^-1 | V) / (1-q)^{dim V^{W'}}.
GradedCharacter exterior_class(const Subgroup& sub);

std::string render_table_tsv(const CharacterTable& t);

}  // namespace cmrees

#endif
