#include "ejm/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "ejm/errors.hpp"

namespace ejm::states {
namespace {

using linalg::kI;
using std::numbers::pi;

void require_two_qubit_pure(const StateVector& s, const char* what) {
  if (s.dim() != 4) {
    throw DimensionError(fmt::format("{}: expected a two-qubit state, got dim {}", what, s.dim()));
  }
  if (!s.is_normalized()) {
    throw NormalizationError(
        fmt::format("{}: state is not normalized (norm^2 = {:.17g})", what, s.norm_squared()));
  }
}

}  // namespace

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

double max_abs_diff(const BlochVector& a, const BlochVector& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

double wrap_angle(double phi) {
  if (!std::isfinite(phi)) throw ParameterRangeError(fmt::format("phi must be finite (got {})", phi));
  if (phi >= -pi && phi <= pi) return phi;
  return std::remainder(phi, 2.0 * pi);
}

double checked_z(double z) {
  if (!std::isfinite(z) || std::abs(z) > 1.0 + kRangeSlack) {
    throw ParameterRangeError(fmt::format("z must satisfy |z| <= 1 (got {:.17g})", z));
  }
  return std::clamp(z, -1.0, 1.0);
}

double checked_quarter_turn(double angle, const char* name) {
  if (!std::isfinite(angle) || angle < -kRangeSlack || angle > pi / 2 + kRangeSlack) {
    throw ParameterRangeError(fmt::format("{} must lie in [0, pi/2] (got {:.17g})", name, angle));
  }
  return std::clamp(angle, 0.0, pi / 2);
}

FiveParams FiveParams::make(double a, double z, double phi, double theta0, double theta) {
  if (!std::isfinite(a)) throw ParameterRangeError(fmt::format("a must be finite (got {})", a));
  return FiveParams(a, checked_z(z), wrap_angle(phi), checked_quarter_turn(theta0, "theta0"),
                    checked_quarter_turn(theta, "theta"));
}

BlochVector unit_vector_m(double z, double phi) {
  z = checked_z(z);
  const double rho = std::sqrt(1.0 - z * z);
  return {rho * std::cos(phi), rho * std::sin(phi), z};
}

StateVector ket_m(double z, double phi) {
  z = checked_z(z);
  const double s = 1.0 / std::sqrt(2.0);
  return {s * std::sqrt(1.0 + z) * std::polar(1.0, -phi / 2),
          s * std::sqrt(1.0 - z) * std::polar(1.0, phi / 2)};
}

StateVector ket_minus_m(double z, double phi) {
  z = checked_z(z);
  const double s = 1.0 / std::sqrt(2.0);
  return {s * std::sqrt(1.0 - z) * std::polar(1.0, -phi / 2),
          -s * std::sqrt(1.0 + z) * std::polar(1.0, phi / 2)};
}

StateVector ket_m0(double z, double phi, double theta0) {
  theta0 = checked_quarter_turn(theta0, "theta0");
  const Complex w = kI * std::polar(1.0, theta0);
  return 0.5 * (1.0 - w) * ket_m(z, phi) + 0.5 * (1.0 + w) * ket_minus_m(z, phi);
}

StateVector ket_m1(double z, double phi, double theta0) {
  theta0 = checked_quarter_turn(theta0, "theta0");
  const Complex w = kI * std::polar(1.0, theta0);
  return 0.5 * (1.0 + w) * ket_m(z, phi) + 0.5 * (1.0 - w) * ket_minus_m(z, phi);
}

StateVector phi_state(const FiveParams& p) {
  const double a = p.a();
  const double z = p.z();
  const Complex e2 = std::polar(1.0, 2.0 * p.theta0());
  const Complex r_plus = (1.0 + e2) / std::sqrt(2.0);
  const Complex r_minus = (1.0 - e2) / std::sqrt(2.0);
  const double rho = std::sqrt(1.0 - z * z);
  const Complex cross = std::sqrt(2.0) * kI * std::polar(1.0, p.theta0() + p.theta());
  const double norm = 1.0 / (2.0 * std::sqrt(a * a + 1.0));

  return {norm * a * (r_plus + rho * r_minus) * std::polar(1.0, -p.phi()),
          -norm * (a * z * r_minus - cross),
          -norm * (a * z * r_minus + cross),
          norm * a * (r_plus - rho * r_minus) * std::polar(1.0, p.phi())};
}

StateVector phi_state_product_form(const FiveParams& p) {
  const StateVector m0 = ket_m0(p.z(), p.phi(), p.theta0());
  const StateVector m1 = ket_m1(p.z(), p.phi(), p.theta0());
  const Complex e = std::polar(1.0, p.theta());
  const double norm = 1.0 / std::sqrt(2.0 * p.a() * p.a() + 2.0);
  return norm * (p.a() + e) * linalg::kron(m0, m1) + norm * (p.a() - e) * linalg::kron(m1, m0);
}

double concurrence_numeric(const StateVector& s) {
  require_two_qubit_pure(s, "concurrence_numeric");
  // det rho_A = |det Psi|^2 with Psi the 2x2 amplitude matrix.
  const double det_rho = std::norm(s[0] * s[3] - s[1] * s[2]);
  const double deficit = 2.0 * det_rho;
  return std::clamp(std::sqrt(2.0 * deficit), 0.0, 1.0);
}

double concurrence_from_purity(const StateVector& s) {
  require_two_qubit_pure(s, "concurrence_from_purity");
  const linalg::Operator rho = linalg::partial_trace(linalg::outer(s, s), Side::first);
  const double purity = linalg::trace(rho * rho).real();
  return std::clamp(std::sqrt(std::max(0.0, 2.0 * (1.0 - purity))), 0.0, 1.0);
}

double concurrence_closed(double a, double theta) {
  theta = checked_quarter_turn(theta, "theta");
  return std::hypot(a * a - 1.0, 2.0 * a * std::sin(theta)) / (a * a + 1.0);
}

BlochVector reduced_bloch(const StateVector& s, Side side) {
  require_two_qubit_pure(s, "reduced_bloch");
  const linalg::Operator rho = linalg::partial_trace(linalg::outer(s, s), side);
  return {linalg::trace(rho * linalg::pauli::x()).real(),
          linalg::trace(rho * linalg::pauli::y()).real(),
          linalg::trace(rho * linalg::pauli::z()).real()};
}

BlochVector reduced_bloch_closed(const FiveParams& p) {
  const double shrink = 2.0 * p.a() * std::cos(p.theta()) / (p.a() * p.a() + 1.0);
  return shrink * m_prime(p.z(), p.phi(), p.theta0());
}

BlochVector m_prime(double z, double phi, double theta0) {
  z = checked_z(z);
  theta0 = checked_quarter_turn(theta0, "theta0");
  const double rho = std::sqrt(1.0 - z * z);
  const double s0 = std::sin(theta0);
  const double c0 = std::cos(theta0);
  return {rho * std::cos(phi) * s0 + std::sin(phi) * c0,
          rho * std::sin(phi) * s0 - std::cos(phi) * c0,
          z * s0};
}

}  // namespace ejm::states
