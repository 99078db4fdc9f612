#pragma once

#include <random>

#include "spinorbit/algebra.hpp"

namespace spinorbit {

// Tolerance for treating a state as normalized, and the smallest norm
// normalize() accepts before declaring the input degenerate.
inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kMinNorm = 1e-9;

/// A classical spin-orbit mode: four complex amplitudes over the product
/// basis (psi_V e_V, psi_V e_H, psi_H e_V, psi_H e_H). The first index is
/// the transverse mode, the second the polarization.
struct SpinOrbitState {
  Complex a_vv{};
  Complex a_vh{};
  Complex a_hv{};
  Complex a_hh{};

  Vec4 amplitudes() const { return {a_vv, a_vh, a_hv, a_hh}; }
  static SpinOrbitState from_amplitudes(const Vec4& a) {
    return {a[0], a[1], a[2], a[3]};
  }

  double norm2() const;
  double norm() const;
};

/// Factored mode spec: (b1 psi_V + b2 psi_H) (b3 e_V + b4 e_H).
struct SeparableSpec {
  Complex b1, b2;  // transverse coefficients
  Complex b3, b4;  // polarization coefficients
};

/// Analysis-basis angle pair: alpha is the half-wave-plate setting, beta the
/// Dove-prism setting. All basis formulas are pi-periodic in both, so angles
/// are reduced to [0, pi).
class MeasurementSetting {
 public:
  MeasurementSetting(double alpha_rad, double beta_rad);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

 private:
  double alpha_;
  double beta_;
};

/// Amplitudes on the rotated product basis {psi_beta± e_alpha±}, ordered with
/// the transverse (beta) sign first.
struct RotatedExpansion {
  Complex c_pp{};
  Complex c_pm{};
  Complex c_mp{};
  Complex c_mm{};

  Vec4 amplitudes() const { return {c_pp, c_pm, c_mp, c_mm}; }
  double norm2() const;

  /// Reinterpret the rotated amplitudes as a state in the standard basis.
  SpinOrbitState as_state() const { return {c_pp, c_pm, c_mp, c_mm}; }
};

/// The maximally non-separable mode (psi_V e_V + psi_H e_H)/sqrt(2).
SpinOrbitState make_mns();

/// Build and normalize the product mode induced by spec. Throws
/// std::invalid_argument("degenerate separable spec") if either factor is null.
SpinOrbitState make_separable(const SeparableSpec& spec);

/// Divides by the norm; throws std::invalid_argument on norm < kMinNorm.
SpinOrbitState normalize(const SpinOrbitState& state);

bool is_normalized(const SpinOrbitState& state, double tol = kNormTolerance);

/// Non-separability measure 2|a_vh a_hv - a_vv a_hh| in [0, 1].
/// Requires a normalized state; throws std::invalid_argument otherwise.
double concurrence(const SpinOrbitState& state);

/// Hermitian inner product <a|b>, conjugate-linear in the first argument.
Complex inner(const SpinOrbitState& a, const SpinOrbitState& b);

/// One basis state psi_{beta s_t} e_{alpha s_p} of the rotated product basis;
/// signs are +1 or -1.
SpinOrbitState rotated_basis_state(const MeasurementSetting& s, int transverse_sign,
                                   int polarization_sign);

/// Inner products of state against the four rotated basis states.
RotatedExpansion expand_rotated(const SpinOrbitState& state, const MeasurementSetting& s);

/// Even/odd expansion coefficients of the MNS mode in the rotated basis:
/// cos(2a)cos(2b) + sin(2a)sin(2b) and cos(2a)sin(2b) - sin(2a)cos(2b).
double mns_even_amplitude(const MeasurementSetting& s);
double mns_odd_amplitude(const MeasurementSetting& s);

/// Haar-uniform normalized state from 8 independent standard normal draws.
SpinOrbitState random_state(std::mt19937_64& rng);

/// Random product-mode spec; both factors drawn from complex normals.
SeparableSpec random_separable_spec(std::mt19937_64& rng);

}  // namespace spinorbit
