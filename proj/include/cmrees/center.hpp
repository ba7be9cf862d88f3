#ifndef CMREES_CENTER_HPP
#define CMREES_CENTER_HPP

#include <string>
#include <vector>

#include "cmrees/chartab.hpp"
#include "cmrees/group.hpp"

namespace cmrees {

/// Element of Z(CW) in the class-sum basis {Sigma_W(w)}.
struct CenterElement {
  GroupPtr group;
  std::vector<Cyc> coords;  // one per conjugacy class

  CenterElement() = default;
  CenterElement(GroupPtr g, std::vector<Cyc> c) : group(std::move(g)), coords(std::move(c)) {}

  CenterElement operator+(const CenterElement& o) const;
  CenterElement operator-(const CenterElement& o) const;
  CenterElement scaled(const Cyc& c) const;
  bool operator==(const CenterElement& o) const;
};

CenterElement class_sum(const GroupPtr& g, int element);
CenterElement center_unit(const GroupPtr& g);

// omega_chi(z); multiplicative on products, omega_chi(Sigma(w)) = |cl| chi(w)/chi(1).
Cyc central_character(const ClassFunction& chi, const CenterElement& z);

// e_chi = (chi(1)/|W|) sum_w chi(w^-1) w, in class-sum coordinates.
CenterElement idempotent(const GroupPtr& g, const ClassFunction& chi);
// e_E = sum of e_chi over the block (indices into the character table).
CenterElement family_idempotent(const GroupPtr& g, const std::vector<int>& block);

// Coordinates over the idempotent basis: component chi is omega_chi(z).
std::vector<Cyc> idempotent_coords(const CenterElement& z);
CenterElement from_idempotent_coords(const GroupPtr& g, const std::vector<Cyc>& omega);

// Product in Z(CW): diagonal in the idempotent basis.
CenterElement multiply(const CenterElement& a, const CenterElement& b);

struct FiltrationLattice {
  GroupPtr group;
  std::vector<Subspace> pieces;  // F_0 ... F_n in class coordinates
  std::vector<int> dims;
};

// F_i = span of class sums of codim <= i, for i = 0..dim V.
FiltrationLattice filtration(const GroupPtr& g);

// Tr_H^G(z) = sum over coset representatives g of g z g^-1, raw conjugation.
CenterElement transfer(const Subgroup& sub, const CenterElement& z);

// Closed forms tested against raw transfer:
// Tr(Sigma_H(h)) = (|C_G(h)|/|C_H(h)|) Sigma_G(h)
CenterElement transfer_class_sum_formula(const Subgroup& sub, int sub_element);
// Tr(e_eta^H) = (eta(1)/|H|) sum_gamma (|G|/gamma(1)) <gamma, Ind eta> e_gamma^G
CenterElement transfer_idempotent_formula(const Subgroup& sub, const ClassFunction& eta);

struct FamilyPartition {
  GroupPtr group;
  std::vector<std::vector<std::string>> blocks;
};

// Text form: blocks = [["1","eps"],["eps2"]]; names validated against the
// table; must partition Irr(W).
FamilyPartition parse_family_partition(const GroupPtr& g, const std::string& text);
FamilyPartition load_family_partition(const GroupPtr& g, const std::string& path);
// One block per character.
FamilyPartition discrete_partition(const GroupPtr& g);

struct ReesLattice {
  GroupPtr group;
  std::vector<Subspace> pieces;  // F_i(A) = A cap F_i, class coordinates
  std::vector<int> dims;         // dim F_i(A)
  std::vector<int> gr_dims;      // dims differences; sum = #blocks
};

ReesLattice rees_lattice(const GroupPtr& g, const FamilyPartition& fam);

}  // namespace cmrees

#endif
