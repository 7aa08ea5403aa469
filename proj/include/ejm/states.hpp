#pragma once

// Parameterized one-qubit kets and the five-parameter two-qubit state
//
//   |Phi> = [(a + e^{i theta}) |m0, m1> + (a - e^{i theta}) |m1, m0>] / sqrt(2a^2 + 2),
//
// together with its concurrence and reduced Bloch vectors.

#include "ejm/linalg.hpp"

namespace ejm::states {

using linalg::Complex;
using linalg::StateVector;

// Which qubit a reduced quantity refers to; `first` is qubit 0 (sigma (x) I).
using Side = linalg::Keep;

// Slack allowed past a closed range boundary before a value is rejected; values
// inside the slack are clamped onto the boundary.
inline constexpr double kRangeSlack = 1e-12;

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
  double dot(const BlochVector& o) const { return x * o.x + y * o.y + z * o.z; }
  BlochVector operator-() const { return {-x, -y, -z}; }
  BlochVector operator+(const BlochVector& o) const { return {x + o.x, y + o.y, z + o.z}; }
  BlochVector operator-(const BlochVector& o) const { return {x - o.x, y - o.y, z - o.z}; }
  friend BlochVector operator*(double s, const BlochVector& v) { return {s * v.x, s * v.y, s * v.z}; }
};

// max(|dx|, |dy|, |dz|)
double max_abs_diff(const BlochVector& a, const BlochVector& b);

// Maps an angle onto [-pi, pi]; values already in range are returned unchanged.
double wrap_angle(double phi);

// Validates |z| <= 1 (clamping within kRangeSlack) and returns the clamped value.
double checked_z(double z);

// Validates angle in [0, pi/2] (clamping within kRangeSlack) and returns it.
double checked_quarter_turn(double angle, const char* name);

class FiveParams {
 public:
  // Throws ParameterRangeError for |z| > 1 or theta0/theta outside [0, pi/2].
  // phi is wrapped onto [-pi, pi]; a is unrestricted.
  static FiveParams make(double a, double z, double phi, double theta0, double theta);

  double a() const noexcept { return a_; }
  double z() const noexcept { return z_; }
  double phi() const noexcept { return phi_; }
  double theta0() const noexcept { return theta0_; }
  double theta() const noexcept { return theta_; }

 private:
  FiveParams(double a, double z, double phi, double theta0, double theta)
      : a_(a), z_(z), phi_(phi), theta0_(theta0), theta_(theta) {}

  double a_, z_, phi_, theta0_, theta_;
};

// (sqrt(1-z^2) cos phi, sqrt(1-z^2) sin phi, z)
BlochVector unit_vector_m(double z, double phi);

// |m> and |-m>, the antipodal kets of unit_vector_m(z, phi).
StateVector ket_m(double z, double phi);
StateVector ket_minus_m(double z, double phi);

// Rotated pair |m0>, |m1>; at theta0 = pi/2 they reduce to |m>, |-m>.
StateVector ket_m0(double z, double phi, double theta0);
StateVector ket_m1(double z, double phi, double theta0);

// Two-qubit state from its computational-basis expansion.
StateVector phi_state(const FiveParams& p);

// The same state assembled from the |m0, m1> and |m1, m0> product kets.
StateVector phi_state_product_form(const FiveParams& p);

// C = sqrt(2 (1 - tr rho^2)) for a normalized pure two-qubit state, clamped to
// [0, 1]. The purity deficit uses 1 - tr rho^2 = 2 det rho = 2 |psi00 psi11 -
// psi01 psi10|^2, which stays accurate near product states.
double concurrence_numeric(const StateVector& s);

// Same quantity evaluated literally from tr rho^2 of the partial trace. Accurate
// to ~1e-8 near C = 0.
double concurrence_from_purity(const StateVector& s);

// Closed form sqrt(1 - 2a^2 (1 + cos 2 theta) / (a^2 + 1)^2), evaluated as
// hypot(a^2 - 1, 2a sin theta) / (a^2 + 1).
double concurrence_closed(double a, double theta);

// Pauli expectations (<sigma_x>, <sigma_y>, <sigma_z>) of one qubit.
BlochVector reduced_bloch(const StateVector& s, Side side);

// Closed-form first-qubit Bloch vector of phi_state(p): 2a cos(theta)/(a^2+1) * m_prime.
BlochVector reduced_bloch_closed(const FiveParams& p);

// Unit direction of the reduced states.
BlochVector m_prime(double z, double phi, double theta0);

}  // namespace ejm::states
