#include "ejm/basis.hpp"

#include <algorithm>
#include <numbers>

#include <fmt/format.h>

#include "ejm/errors.hpp"

namespace ejm::basis {
namespace {

using linalg::kI;
using std::numbers::pi;
using std::numbers::sqrt2;

[[noreturn]] void throw_z_range(double z) {
  throw ParameterRangeError(fmt::format("z must satisfy 1/sqrt(3) <= |z| <= 1 (got z = {:.17g})", z));
}

double sng(double x) { return x >= 0.0 ? 1.0 : -1.0; }

void require_index(int index) {
  if (index < 0 || index > 3) throw DimensionError(fmt::format("basis index {} out of range 0..3", index));
}

template <typename F>
std::array<StateVector, 4> four_states(F&& f) {
  return {f(0), f(1), f(2), f(3)};
}

}  // namespace

EjmParams EjmParams::make(double z, double phi, double theta) {
  if (!std::isfinite(z) || std::abs(z) > 1.0 + states::kRangeSlack) throw_z_range(z);
  double excess = 3.0 * z * z - 1.0;
  if (excess < -kBoundarySnap) throw_z_range(z);

  EjmParams p;
  if (std::abs(excess) <= kBoundarySnap) {
    z = std::copysign(kMinAbsZ, z);
    excess = 0.0;
  } else if (std::abs(z) > 1.0) {
    z = std::copysign(1.0, z);
    excess = 2.0;
  }
  p.z_ = z;
  p.phi_ = states::wrap_angle(phi);
  p.theta_ = states::checked_quarter_turn(theta, "theta");
  p.q_ = std::sqrt(excess);
  p.w_ = std::sqrt(std::max(0.0, 1.0 - z * z));
  // sin(theta0) = 1/sqrt(1 + q^2); atan2 keeps full precision where arcsin is flat.
  p.theta0_ = std::atan2(1.0, p.q_);
  p.phi_z_ = std::atan2(p.q_, p.w_);
  return p;
}

ParamAssignment assignment(const EjmParams& p) {
  const double phi = p.phi();
  const double z = p.z();
  return {{phi, phi + pi / 2, phi - pi, phi - pi / 2}, {z, -z, z, -z}};
}

CoefficientSet coefficients(const EjmParams& p) {
  const Complex e2 = std::polar(1.0, 2.0 * p.theta0());
  const Complex et = std::polar(1.0, p.theta());
  const double abs_z = std::abs(p.z());
  CoefficientSet c;
  c.r_plus = (1.0 + e2) / sqrt2;
  c.r_minus = (1.0 - e2) / sqrt2;
  c.a_plus = (kI * p.q() + p.w()) / sqrt2;
  c.a_minus = (kI * p.q() - p.w()) / sqrt2;
  const ParamAssignment a = assignment(p);
  for (int i = 0; i < 4; ++i) {
    const double zi = a.zs[static_cast<std::size_t>(i)];
    c.b[static_cast<std::size_t>(i)] = {(zi + abs_z * et) / sqrt2, (zi - abs_z * et) / sqrt2};
  }
  return c;
}

states::FiveParams state_params(const EjmParams& p, int index) {
  require_index(index);
  const ParamAssignment a = assignment(p);
  const auto k = static_cast<std::size_t>(index);
  return states::FiveParams::make(std::sqrt(3.0), a.zs[k], a.phis[k], p.theta0(), p.theta());
}

EjmBasis build_basis(const EjmParams& p) {
  return {p, four_states([&](int i) { return states::phi_state_product_form(state_params(p, i)); }),
          p.phi_z()};
}

EjmBasis basis_simplified(const EjmParams& p) {
  const CoefficientSet c = coefficients(p);
  const ParamAssignment a = assignment(p);
  const Complex pref = (1.0 - kI * p.q()) / (2.0 * std::sqrt(3.0) * p.z() * p.z());
  return {p,
          four_states([&](int i) {
            const auto k = static_cast<std::size_t>(i);
            const double phi_i = a.phis[k];
            return StateVector{pref * c.a_plus * std::polar(1.0, -phi_i), -pref * c.b[k][0],
                               -pref * c.b[k][1], pref * c.a_minus * std::polar(1.0, phi_i)};
          }),
          p.phi_z()};
}

EjmBasis basis_phi_z_form(const EjmParams& p) {
  const ParamAssignment a = assignment(p);
  const Complex pref = (1.0 - kI * p.q()) / (2.0 * std::sqrt(3.0) * std::abs(p.z()));
  const Complex et = std::polar(1.0, p.theta());
  const Complex r_plus = (1.0 + et) / sqrt2;
  const Complex r_minus = (1.0 - et) / sqrt2;
  return {p,
          four_states([&](int i) {
            const auto k = static_cast<std::size_t>(i);
            const double d = a.phis[k] - p.phi_z();
            const Complex lo = std::polar(1.0, -d);
            const Complex hi = -std::polar(1.0, d);
            if (a.zs[k] >= 0.0) return StateVector{pref * lo, -pref * r_plus, -pref * r_minus, pref * hi};
            return StateVector{pref * lo, pref * r_minus, pref * r_plus, pref * hi};
          }),
          p.phi_z()};
}

double phi_z(double z) { return EjmParams::make(z, 0.0, 0.0).phi_z(); }

Operator gram_matrix(const EjmBasis& b) {
  Operator g(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      g(i, j) = linalg::inner(b.states[static_cast<std::size_t>(i)], b.states[static_cast<std::size_t>(j)]);
  return g;
}

double gram_closed_form(const ParamAssignment& a, int i, int j) {
  require_index(i);
  require_index(j);
  const auto ki = static_cast<std::size_t>(i);
  const auto kj = static_cast<std::size_t>(j);
  return 0.25 * (2.0 * std::cos(a.phis[ki] - a.phis[kj]) + sng(a.zs[ki] * a.zs[kj]) + 1.0);
}

std::array<Operator, 4> projectors(const EjmBasis& b) {
  auto proj = [&](int i) {
    const StateVector& s = b.states[static_cast<std::size_t>(i)];
    return linalg::outer(s, s);
  };
  return {proj(0), proj(1), proj(2), proj(3)};
}

Operator projector_sum(const EjmBasis& b) {
  Operator sum(4);
  for (const Operator& a : projectors(b)) sum = sum + a;
  return sum;
}

double completeness_residual(const EjmBasis& b) {
  return linalg::max_abs_diff(projector_sum(b), Operator::identity(4));
}

ReducedTable reduced_tetrahedron(const EjmBasis& b) {
  ReducedTable t;
  for (std::size_t i = 0; i < 4; ++i) {
    t[i][0] = states::reduced_bloch(b.states[i], states::Side::first);
    t[i][1] = states::reduced_bloch(b.states[i], states::Side::second);
  }
  return t;
}

BlochVector reduced_vector_closed(const EjmParams& p, int index) {
  require_index(index);
  const ParamAssignment a = assignment(p);
  const auto k = static_cast<std::size_t>(index);
  const double c = std::cos(p.theta()) / sqrt2;
  const double d = a.phis[k] - p.phi_z();
  return {c * std::cos(d), c * std::sin(d), c * sng(a.zs[k]) / sqrt2};
}

GeometryReport tetrahedron_geometry_check(std::span<const BlochVector, 4> vectors, double theta) {
  std::array<double, 4> norms{};
  for (std::size_t i = 0; i < 4; ++i) {
    norms[i] = vectors[i].norm();
    if (norms[i] < kDegenerateNorm) {
      throw DegenerateGeometryError(
          fmt::format("reduced vector {} has norm {:.3g}; tetrahedron is degenerate", i, norms[i]));
    }
  }
  const double expected = std::sqrt(3.0) / 2.0 * std::cos(theta);
  GeometryReport r;
  for (std::size_t i = 0; i < 4; ++i) {
    r.modulus_dev = std::max(r.modulus_dev, std::abs(norms[i] - expected));
    for (std::size_t j = i + 1; j < 4; ++j) {
      const double cosine = vectors[i].dot(vectors[j]) / (norms[i] * norms[j]);
      r.pairwise_dev = std::max(r.pairwise_dev, std::abs(cosine + 1.0 / 3.0));
    }
  }
  return r;
}

EjmBasis single_param_reduction(double z, double theta) {
  // For z < 0 the quarter-turn offset lands on a different set; 3pi/4 gives the
  // same set with indices shifted by one.
  const double offset = z < 0.0 ? 3 * pi / 4 : pi / 4;
  return build_basis(EjmParams::make(z, phi_z(z) + offset, theta));
}

}  // namespace ejm::basis
