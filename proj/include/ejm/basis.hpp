#pragma once

// The three-parameter elegant joint measurement basis.
//
// Each basis state is the five-parameter state with a = sqrt(3), theta0 =
// arcsin(1/sqrt(3 z^2)) and the per-index (z_i, phi_i) of ParamAssignment. Three
// construction routes are provided and are expected to agree:
//   build_basis        product kets |m0, m1>, |m1, m0> per index
//   basis_simplified   closed-form amplitudes a_+-, b_{i,+-}
//   basis_phi_z_form   amplitudes written against phi_i - phi_z

#include <array>
#include <cmath>
#include <span>

#include "ejm/linalg.hpp"
#include "ejm/states.hpp"

namespace ejm::basis {

using linalg::Complex;
using linalg::Operator;
using linalg::StateVector;
using states::BlochVector;

// Lower bound on |z|.
inline const double kMinAbsZ = 1.0 / std::sqrt(3.0);

// |3z^2 - 1| at or below this is treated as the |z| = 1/sqrt(3) boundary.
inline constexpr double kBoundarySnap = 1e-12;

class EjmParams {
 public:
  // Throws ParameterRangeError unless 1/sqrt(3) <= |z| <= 1 and theta in [0, pi/2].
  // phi is wrapped onto [-pi, pi]. Inputs within kBoundarySnap of |z| = 1/sqrt(3)
  // or within kRangeSlack of |z| = 1 are moved onto the boundary.
  static EjmParams make(double z, double phi, double theta);

  double z() const noexcept { return z_; }
  double phi() const noexcept { return phi_; }
  double theta() const noexcept { return theta_; }
  // arcsin(1/sqrt(3 z^2)), in [arcsin(1/sqrt(3)), pi/2].
  double theta0() const noexcept { return theta0_; }
  double phi_z() const noexcept { return phi_z_; }
  // sqrt(3z^2 - 1) and sqrt(1 - z^2).
  double q() const noexcept { return q_; }
  double w() const noexcept { return w_; }

 private:
  EjmParams() = default;

  double z_ = 0, phi_ = 0, theta_ = 0, theta0_ = 0, phi_z_ = 0, q_ = 0, w_ = 0;
};

struct ParamAssignment {
  // (phi, phi + pi/2, phi - pi, phi - pi/2), left unwrapped.
  std::array<double, 4> phis{};
  // (z, -z, z, -z)
  std::array<double, 4> zs{};
};

ParamAssignment assignment(const EjmParams& p);

struct CoefficientSet {
  Complex r_plus;   // (1 + e^{2i theta0}) / sqrt(2)
  Complex r_minus;  // (1 - e^{2i theta0}) / sqrt(2)
  Complex a_plus;   // (i sqrt(3z^2-1) + sqrt(1-z^2)) / sqrt(2)
  Complex a_minus;  // (i sqrt(3z^2-1) - sqrt(1-z^2)) / sqrt(2)
  // b[i][0] = b_{i,+}, b[i][1] = b_{i,-}; b_{i,+-} = (z_i +- |z| e^{i theta}) / sqrt(2)
  std::array<std::array<Complex, 2>, 4> b{};
};

CoefficientSet coefficients(const EjmParams& p);

struct EjmBasis {
  EjmParams params;
  std::array<StateVector, 4> states;
  double phi_z;
};

EjmBasis build_basis(const EjmParams& p);
EjmBasis basis_simplified(const EjmParams& p);
EjmBasis basis_phi_z_form(const EjmParams& p);

// The basis state as the five-parameter state of index i (a = sqrt(3)).
states::FiveParams state_params(const EjmParams& p, int index);

// arg[(sqrt(1-z^2) + i sqrt(3z^2-1)) / (sqrt(2)|z|)] in [0, pi/2]. Same range gate as EjmParams.
double phi_z(double z);

// Entries <Phi_i|Phi_j>.
Operator gram_matrix(const EjmBasis& b);

// (1/4)[2 cos(phi_i - phi_j) + sng(z_i z_j) + 1], with sng(0) = +1.
double gram_closed_form(const ParamAssignment& a, int i, int j);

// A^i = |Phi_i><Phi_i|
std::array<Operator, 4> projectors(const EjmBasis& b);

// sum_i A^i
Operator projector_sum(const EjmBasis& b);

// max-abs entry of sum_i A^i - I.
double completeness_residual(const EjmBasis& b);

// table[i][0] is <Phi_i| sigma (x) I |Phi_i>, table[i][1] is <Phi_i| I (x) sigma |Phi_i>.
using ReducedTable = std::array<std::array<BlochVector, 2>, 4>;

ReducedTable reduced_tetrahedron(const EjmBasis& b);

// (cos(theta)/sqrt(2)) (cos(phi_i - phi_z), sin(phi_i - phi_z), sgn(z_i)/sqrt(2)) for
// the first qubit; the second qubit is its negation.
BlochVector reduced_vector_closed(const EjmParams& p, int index);

struct GeometryReport {
  // max_i | |v_i| - (sqrt(3)/2) cos(theta) |
  double modulus_dev = 0.0;
  // max_{i != j} | v_i.v_j / (|v_i||v_j|) + 1/3 |
  double pairwise_dev = 0.0;
};

// Norms below this are treated as zero vectors.
inline constexpr double kDegenerateNorm = 1e-5;

// Throws DegenerateGeometryError if any vector has norm below kDegenerateNorm.
GeometryReport tetrahedron_geometry_check(std::span<const BlochVector, 4> vectors, double theta);

// Basis at phi = phi_z(z) + pi/4, where it coincides with the one-parameter family
// independently of z. For z < 0 phi = phi_z(z) + 3pi/4 is used; state i then equals
// state (i + 1) mod 4 of the z > 0 family up to phase.
EjmBasis single_param_reduction(double z, double theta);

}  // namespace ejm::basis
