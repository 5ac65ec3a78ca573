#pragma once

#include "mib/jordan.hpp"
#include "mib/linearization.hpp"
#include "mib/polymat.hpp"

// Brute-force reference implementations. Nothing here shares code with the
// fast paths beyond the basic containers and the scalar elimination kernel.
namespace mib::oracle {

Matrix striped_krylov(const Matrix& E, const MulMat& M, const std::vector<Degree>& s, std::size_t delta);
PopovBasis oracle_popov(const Matrix& E, const MulMat& M, const std::vector<Degree>& s);
// Sum over d of P_d * (E * M^d), with M^d built by dense products.
Matrix naive_residual(const MulMat& M, const PolyMatrix& P, const Matrix& E);

// Fraction-free (Bareiss) determinant.
Poly determinant(const PolyMatrix& A);
bool module_equivalent(const PolyMatrix& B1, const PolyMatrix& B2, const Matrix& E, const MulMat& M,
                       const std::vector<Degree>& s);

// Rows of F that are independent over K(X), first-found order.
std::vector<std::size_t> poly_row_rank_profile(const PolyMatrix& F);
// Left kernel of F by Cramer's rule over the fraction field, content removed.
PolyMatrix rational_kernel(const PolyMatrix& F);
// s-Popov left kernel basis from the priority-ordered rows X^d * F_c, d <= D.
PolyMatrix kernel_popov(const PolyMatrix& F, const std::vector<Degree>& s);
// Is the row vector v (1 x m) a K[X]-combination of the rows of N (full row rank)?
bool in_row_module(const PolyMatrix& v, const PolyMatrix& N);

}  // namespace mib::oracle
