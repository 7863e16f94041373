#pragma once

#include <vector>

#include "spintomo/complex_matrix.hpp"
#include "spintomo/half_int.hpp"
#include "spintomo/su2.hpp"

namespace spintomo {

/// J_z as a diagonal matrix with entries m = j, j-1, ..., -j.
ComplexMatrix jz_matrix(HalfInt j);

/// Rotation matrix u(alpha,beta,gamma) with entries u_{m1 m2} = D^j_{m1 m2}.
/// The pure-state tomogram of |j mu> is then |<j m|u|j mu>|^2 = |D^j_{m mu}|^2.
ComplexMatrix rotation_matrix(HalfInt j, const EulerAngles& angles);

/// Irreducible tensor operator T^{(j)}_{LM}: entry (m2, m1) is
/// (-1)^{j-m1} <j m2; j -m1 | L M>. Real in the |jm> basis.
/// Requires 0 <= L <= 2j and |M| <= L.
ComplexMatrix tensor_operator(HalfInt j, int L, int M);

/// Tr J_z^k = sum_{m=-j}^{j} m^k by direct summation; zero for odd k.
double trace_jz_power(HalfInt j, int k);

/// Orthogonal diagonal basis S_0 ... S_{2j}.
///
/// S_L is a polynomial in J_z of degree L containing only powers of the
/// parity of L; Tr(S_L S_L') = 0 for L != L', and S_L is a positive multiple
/// of T_{L0}. Scale convention: S_0 = I, S_1 = J_z, S_2 = 3 J_z^2 - j(j+1) I,
/// S_3 = 5 J_z^3 - (3j^2+3j-1) J_z; higher L are monic in J_z^L.
struct SLBasis {
  HalfInt j;
  std::vector<ComplexMatrix> ops;            // S_0 ... S_{2j}, diagonal and real
  std::vector<std::vector<double>> coeffs;   // coeffs[L][i] multiplies J_z^(L%2 + 2i)
  std::vector<double> norms;                 // Tr(S_L^2)
  std::vector<double> gram_determinants;     // per-L determinant of the Tr J_z^* system
};
SLBasis sl_basis(HalfInt j);

/// Expansion coefficient f_L(m) of the projector |jm><jm| over the S_L basis:
/// f_L(m) = Tr(S_L^2)^{-1} * (S_L's polynomial evaluated at m).
double f_function(const SLBasis& basis, int L, HalfInt m);

/// |jm><jm|: diagonal matrix with a single 1 at the row of m.
ComplexMatrix projector(HalfInt j, HalfInt m);

}  // namespace spintomo
