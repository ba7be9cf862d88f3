#ifndef CMREES_CHERN_HPP
#define CMREES_CHERN_HPP

#include <string>
#include <vector>

#include "cmrees/center.hpp"
#include "cmrees/chartab.hpp"
#include "cmrees/hbar.hpp"

namespace cmrees {

/// Element of C[[hbar]] (x) Z(CW) in the idempotent basis, truncated at
/// hbar^N: one series per irreducible character.
struct ImageClass {
  GroupPtr group;
  std::vector<HbarSeries> coords;  // indexed like the character table

  ImageClass() = default;
  ImageClass(GroupPtr g, int order);
  ImageClass(GroupPtr g, std::vector<HbarSeries> c) : group(std::move(g)), coords(std::move(c)) {}

  int order() const { return coords.empty() ? 0 : coords[0].order(); }
  ImageClass operator+(const ImageClass& o) const;
  ImageClass operator-(const ImageClass& o) const;
  ImageClass scaled(const Cyc& c) const;
  ImageClass hbar_shifted(int k) const;
  bool is_zero() const;
  bool operator==(const ImageClass& o) const;

  // hbar^j homogeneous component, converted to class-sum coordinates.
  CenterElement component(int j) const;
};

/// Degree-wise spans (class-sum coordinates) of accumulated hbar^j
/// components, closed under multiplication by hbar.
struct ImageLattice {
  GroupPtr group;
  std::vector<Subspace> degrees;  // j = 0..N

  ImageLattice(GroupPtr g, int order);
  // Inserts the vector into every degree >= j (hbar-shift closure).
  void add_component(const CenterElement& z, int j);
  // Inserts every homogeneous component of the class.
  void add_class(const ImageClass& z);
  std::vector<int> dims() const;
};

// ch_c(E) = sum_chi <chi, coinv (x) E>^gr / fake_chi e_chi at q = exp(hbar),
// evaluated per chi as a ratio of exp-expanded series.
ImageClass ch_c(const GroupPtr& g, const GradedCharacter& e, int order);

/// Both sides of the exterior-twisted induction identity, compared at the
/// Laurent level (numerators over the common fake-degree denominators).
struct CorIdentity {
  ImageClass lhs, rhs;                    // hbar-expanded sides
  std::vector<LaurentQ> lhs_num, rhs_num;  // per-chi Laurent numerators
  bool laurent_equal = false;
};

// lhs = ch_c(Ind(ext (x) E')); rhs = prefactor * sum <chi, Ind E'>/fake e_chi
// with prefactor prod(1-q^{d_i})/(1-q)^{n-r}.
CorIdentity chern_induced(const Subgroup& sub, const GradedCharacter& e_sub, int order);

// Codimension of the subgroup's fixed space in V.
int parabolic_codim(const Subgroup& sub);

// hbar^r component of (chi'(1)/|W'|) ch_c(Ind(ext (x) chi')); verified
// against the closed coefficient formula and against the raw transfer
// (-1)^r Tr(e_chi'); throws on any mismatch.
CenterElement star_generator(const Subgroup& sub, const ClassFunction& chi_sub, int order);

struct TheoremAReport {
  std::string group;
  int order = 0;
  std::vector<int> dims_image, dims_rees;
  bool equal = false;
  std::vector<std::string> witnesses;
};

// Builds the image lattice from the unit and all star generators over flat
// orbit representatives and compares it degree-wise with Rees_F(Z(CW)).
TheoremAReport verify_theorem_a(const GroupPtr& g, int order);

int default_hbar_order(const GroupPtr& g);  // 2 dim + 4

}  // namespace cmrees

#endif
