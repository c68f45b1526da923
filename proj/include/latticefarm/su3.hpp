#pragma once

#include <array>
#include <complex>

#include "latticefarm/rng.hpp"

namespace latticefarm {

using cplx = std::complex<double>;

// Dense complex 3x3, row-major. Also used for gauge links: an SU3Matrix is
// a Complex3x3 kept special-unitary by construction and periodic
// reprojection (see reunitarize).
struct Complex3x3 {
  std::array<cplx, 9> e{};

  cplx& operator()(int r, int c) { return e[3 * r + c]; }
  const cplx& operator()(int r, int c) const { return e[3 * r + c]; }

  static Complex3x3 zero() { return Complex3x3{}; }
  static Complex3x3 identity();

  Complex3x3& operator+=(const Complex3x3& o);
  Complex3x3& operator-=(const Complex3x3& o);
  Complex3x3& operator*=(double s);

  friend Complex3x3 operator+(Complex3x3 a, const Complex3x3& b) { return a += b; }
  friend Complex3x3 operator-(Complex3x3 a, const Complex3x3& b) { return a -= b; }
  friend Complex3x3 operator*(double s, Complex3x3 a) { return a *= s; }
};

using SU3Matrix = Complex3x3;

Complex3x3 mat_mul(const Complex3x3& a, const Complex3x3& b);
inline Complex3x3 operator*(const Complex3x3& a, const Complex3x3& b) {
  return mat_mul(a, b);
}

// Conjugate transpose.
Complex3x3 adjoint(const Complex3x3& a);

double trace_re(const Complex3x3& a);
cplx det(const Complex3x3& a);

// max |entry| of U U^dag - I; 0 for exactly unitary U.
double unitarity_deviation(const Complex3x3& u);
double max_abs_entry(const Complex3x3& a);

// Project back onto SU(3): normalize row 0, Gram-Schmidt row 1 against it,
// rebuild row 2 as conj(row0 x row1). Throws DegenerateMatrix when the
// first two rows are (near-)dependent.
SU3Matrix reunitarize(const Complex3x3& m);

// SU(2) element in quaternion form: a0 + i (a1 s1 + a2 s2 + a3 s3) with
// Pauli matrices s_k; unit norm a0^2+a1^2+a2^2+a3^2 = 1.
struct SU2Params {
  double a0 = 1.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
};

double su2_norm2(const SU2Params& p);
SU2Params su2_conj(const SU2Params& p);
SU2Params su2_mul(const SU2Params& p, const SU2Params& q);

// Row/column pairs of the three SU(2) subgroups of SU(3).
constexpr std::array<std::array<int, 2>, 3> kSu2Subgroups = {{{0, 1}, {1, 2}, {0, 2}}};

// Identity outside the 2x2 block of the chosen subgroup; the block is
// [[a0+i a3, a2+i a1], [-a2+i a1, a0-i a3]].
SU3Matrix embed_su2(const SU2Params& s, int subgroup);

// Haar-uniform on SU(2): uniform point on the 3-sphere.
SU2Params haar_su2(RngStream& rng);

// Product of Haar SU(2) elements embedded in the three subgroups. Used for
// hot starts; mean normalized trace vanishes as for the Haar measure.
SU3Matrix random_su3(RngStream& rng);

}  // namespace latticefarm
