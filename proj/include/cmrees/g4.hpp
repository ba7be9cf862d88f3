#ifndef CMREES_G4_HPP
#define CMREES_G4_HPP

#include <map>
#include <string>
#include <vector>

#include "cmrees/chern.hpp"

namespace cmrees {

/// Fixed-point data for the rank-2 order-24 case: degree tables, the seven
/// torus-fixed points, their idempotent identification, and the two divisor
/// weight vectors. Shipped as a versioned, checksummed text fixture.
struct G4Fixture {
  GroupPtr group;
  int version = 0;
  std::vector<int> z_degrees;               // 8 entries
  std::vector<int> b_degrees;               // 6 entries
  std::vector<std::string> fixed_points;    // file order
  std::map<std::string, std::string> psi;   // fixed point -> character name
  std::map<std::string, int> diamond_weights;
  std::map<std::string, int> heart_weights;
  std::string checksum;
};

// FNV-1a 64 over the fixture content preceding the checksum line.
std::string fixture_checksum(const std::string& content);

G4Fixture load_g4_fixture(const std::string& path);
// Looks at $CMREES_G4_FIXTURE, then data/g4_fixture.txt relative to the
// working directory and its parents.
const G4Fixture& g4_fixture();

// -hbar sum_x weights(x) e_{psi(x)}, concentrated in hbar-degree 1.
ImageClass blowup_class(const G4Fixture& fx, const std::map<std::string, int>& weights,
                        int order);

// Basis change from idempotent coordinates to class-sum coordinates.
CenterElement express_in_class_sums(const GroupPtr& g, const std::vector<Cyc>& idem_coords);

struct TheoremBReport {
  bool pass = false;
  std::string sign_variant;  // displayed identity variant the oracle confirms
  std::vector<int> dims_image, dims_rees;
  std::vector<std::string> checks;
  std::vector<std::string> witnesses;
};

TheoremBReport verify_theorem_b(const G4Fixture& fx, int order);

/// Monomial as coefficient plus exponent vector.
struct Monomial {
  Rat coeff;
  std::vector<int> exponents;
};

// Common weighted degree of all monomials; throws if the polynomial is not
// weighted-homogeneous. Constant polynomials have degree 0.
int weighted_degree(const std::vector<Monomial>& poly, const std::vector<int>& weights);

}  // namespace cmrees

#endif
