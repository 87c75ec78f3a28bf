#ifndef LIEKV_LIE_ALGEBRA_HPP
#define LIEKV_LIE_ALGEBRA_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "liekv/rational.hpp"

namespace liekv {

// A finite-dimensional Lie algebra given by exact rational structure
// constants c_{ij}^k, i.e. [e_i, e_j] = sum_k c_{ij}^k e_k. Antisymmetry and
// the Jacobi identity are verified exactly when the algebra is finalized.
struct LieAlgebra {
  std::string name;
  int dim = 0;
  bool nilpotent = false;  // ad X nilpotent for every X (set on bundled algebras)
  std::vector<Rat> c;       // dense dim^3, index (i*dim + j)*dim + k
  std::vector<double> cd;   // same constants as doubles, for numeric work

  const Rat& sc(int i, int j, int k) const { return c[(i * dim + j) * dim + k]; }
  double scd(int i, int j, int k) const { return cd[(i * dim + j) * dim + k]; }

  // sets c_{ij}^k = v and c_{ji}^k = -v
  void set(int i, int j, int k, const Rat& v);
  // exact antisymmetry + Jacobi check; fills the double table. Throws on failure.
  void finalize();

  // exact bracket in coordinates, for load-time validation and PBW rewriting
  std::vector<Rat> bracket_rat(const std::vector<Rat>& a, const std::vector<Rat>& b) const;
};

// Text format: first line the dimension d, then lines "i j k p/q" giving the
// nonzero c_{ij}^k with 1-based indices; '#' starts a comment. The
// antisymmetric counterpart is implied (it may also be given explicitly, and
// is then checked for consistency).
LieAlgebra load_algebra(std::istream& in, const std::string& name);
LieAlgebra load_algebra_file(const std::string& path);

// abelian2, heisenberg, aff1, sl2, so3
const LieAlgebra& bundled_algebra(const std::string& name);
std::vector<std::string> bundled_algebra_names();

}  // namespace liekv

#endif
