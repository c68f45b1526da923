#include "latticefarm/su3.hpp"

#include <cmath>

#include "latticefarm/errors.hpp"

namespace latticefarm {

Complex3x3 Complex3x3::identity() {
  Complex3x3 m;
  m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
  return m;
}

Complex3x3& Complex3x3::operator+=(const Complex3x3& o) {
  for (int i = 0; i < 9; ++i) e[i] += o.e[i];
  return *this;
}

Complex3x3& Complex3x3::operator-=(const Complex3x3& o) {
  for (int i = 0; i < 9; ++i) e[i] -= o.e[i];
  return *this;
}

Complex3x3& Complex3x3::operator*=(double s) {
  for (int i = 0; i < 9; ++i) e[i] *= s;
  return *this;
}

Complex3x3 mat_mul(const Complex3x3& a, const Complex3x3& b) {
  Complex3x3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
    }
  }
  return r;
}

Complex3x3 adjoint(const Complex3x3& a) {
  Complex3x3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = std::conj(a(j, i));
  return r;
}

double trace_re(const Complex3x3& a) {
  return a(0, 0).real() + a(1, 1).real() + a(2, 2).real();
}

cplx det(const Complex3x3& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

double max_abs_entry(const Complex3x3& a) {
  double m = 0.0;
  for (const cplx& z : a.e) m = std::max(m, std::abs(z));
  return m;
}

double unitarity_deviation(const Complex3x3& u) {
  Complex3x3 d = mat_mul(u, adjoint(u));
  d -= Complex3x3::identity();
  return max_abs_entry(d);
}

namespace {

using Row = std::array<cplx, 3>;

Row row_of(const Complex3x3& m, int r) { return {m(r, 0), m(r, 1), m(r, 2)}; }

double norm2(const Row& r) {
  return std::norm(r[0]) + std::norm(r[1]) + std::norm(r[2]);
}

// <a, b> = sum conj(a_i) b_i
cplx dot(const Row& a, const Row& b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1] + std::conj(a[2]) * b[2];
}

}  // namespace

SU3Matrix reunitarize(const Complex3x3& m) {
  constexpr double kMinNorm = 1e-30;
  Row r0 = row_of(m, 0);
  double n0 = std::sqrt(norm2(r0));
  if (n0 < kMinNorm) fail(ErrorCode::DegenerateMatrix, "row 0 has zero norm");
  for (cplx& z : r0) z /= n0;

  Row r1 = row_of(m, 1);
  cplx proj = dot(r0, r1);
  for (int i = 0; i < 3; ++i) r1[i] -= proj * r0[i];
  double n1 = std::sqrt(norm2(r1));
  if (n1 < kMinNorm)
    fail(ErrorCode::DegenerateMatrix, "rows 0 and 1 are linearly dependent");
  for (cplx& z : r1) z /= n1;

  // Third row: conjugate of the cross product, which completes det = 1.
  Row r2 = {std::conj(r0[1] * r1[2] - r0[2] * r1[1]),
            std::conj(r0[2] * r1[0] - r0[0] * r1[2]),
            std::conj(r0[0] * r1[1] - r0[1] * r1[0])};

  SU3Matrix out;
  for (int i = 0; i < 3; ++i) {
    out(0, i) = r0[i];
    out(1, i) = r1[i];
    out(2, i) = r2[i];
  }
  return out;
}

double su2_norm2(const SU2Params& p) {
  return p.a0 * p.a0 + p.a1 * p.a1 + p.a2 * p.a2 + p.a3 * p.a3;
}

SU2Params su2_conj(const SU2Params& p) { return {p.a0, -p.a1, -p.a2, -p.a3}; }

SU2Params su2_mul(const SU2Params& p, const SU2Params& q) {
  // Product in the matrix representation a0 + i a.sigma; note the cross
  // term enters with a minus sign in this convention.
  return {p.a0 * q.a0 - p.a1 * q.a1 - p.a2 * q.a2 - p.a3 * q.a3,
          p.a0 * q.a1 + q.a0 * p.a1 - (p.a2 * q.a3 - p.a3 * q.a2),
          p.a0 * q.a2 + q.a0 * p.a2 - (p.a3 * q.a1 - p.a1 * q.a3),
          p.a0 * q.a3 + q.a0 * p.a3 - (p.a1 * q.a2 - p.a2 * q.a1)};
}

SU3Matrix embed_su2(const SU2Params& s, int subgroup) {
  const int i = kSu2Subgroups[subgroup][0];
  const int j = kSu2Subgroups[subgroup][1];
  SU3Matrix m = Complex3x3::identity();
  m(i, i) = cplx(s.a0, s.a3);
  m(i, j) = cplx(s.a2, s.a1);
  m(j, i) = cplx(-s.a2, s.a1);
  m(j, j) = cplx(s.a0, -s.a3);
  return m;
}

SU2Params haar_su2(RngStream& rng) {
  // Normalized 4-vector of gaussians is uniform on S^3.
  while (true) {
    SU2Params p{rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
    double n2 = su2_norm2(p);
    if (n2 < 1e-12) continue;
    double inv = 1.0 / std::sqrt(n2);
    return {p.a0 * inv, p.a1 * inv, p.a2 * inv, p.a3 * inv};
  }
}

SU3Matrix random_su3(RngStream& rng) {
  SU3Matrix u = embed_su2(haar_su2(rng), 0);
  u = mat_mul(u, embed_su2(haar_su2(rng), 1));
  u = mat_mul(u, embed_su2(haar_su2(rng), 2));
  return u;
}

}  // namespace latticefarm
