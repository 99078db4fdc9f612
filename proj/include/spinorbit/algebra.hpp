#pragma once

#include <array>
#include <complex>

namespace spinorbit {

using Complex = std::complex<double>;
using Vec4 = std::array<Complex, 4>;
using Mat2 = std::array<std::array<Complex, 2>, 2>;
using Mat4 = std::array<std::array<Complex, 4>, 4>;  // row-major

inline constexpr double kSqrt2 = 1.4142135623730951;
inline constexpr double kInvSqrt2 = 0.7071067811865476;

Mat4 identity4();
Vec4 mul(const Mat4& m, const Vec4& v);
Mat4 mul(const Mat4& a, const Mat4& b);
Mat4 adjoint(const Mat4& m);

// Conjugate-linear in the first argument.
Complex dot(const Vec4& a, const Vec4& b);
double norm2(const Vec4& v);

// Product-space matrix with the transverse factor on the slow index and the
// polarization factor on the fast index: m[2t+p][2t'+p'] = t_block[t][t'] * p_block[p][p'].
Mat4 kron(const Mat2& transverse_block, const Mat2& polarization_block);

double max_abs_diff(const Mat4& a, const Mat4& b);
bool approx_identity(const Mat4& m, double tol);

}  // namespace spinorbit
