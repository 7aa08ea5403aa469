#include <gtest/gtest.h>

#include "ejm/errors.hpp"
#include "ejm/states.hpp"
#include "oracle.hpp"

namespace {

using namespace ejm::states;
using ejm::linalg::Complex;
using oracle::pi;

const double kSqrt3 = std::sqrt(3.0);

// Kets written out directly, for use as references.
oracle::Vec ref_m(double z, double phi) {
  return {std::sqrt((1 + z) / 2) * std::exp(-oracle::I * phi / 2.0), std::sqrt((1 - z) / 2) * std::exp(oracle::I * phi / 2.0)};
}
oracle::Vec ref_minus_m(double z, double phi) {
  return {std::sqrt((1 - z) / 2) * std::exp(-oracle::I * phi / 2.0), -std::sqrt((1 + z) / 2) * std::exp(oracle::I * phi / 2.0)};
}

// <sigma> of a one-qubit ket (a, b): (2 Re a*b, 2 Im a*b, |a|^2 - |b|^2).
std::array<double, 3> ref_bloch(const StateVector& k) {
  const Complex ab = std::conj(k[0]) * k[1];
  return {2 * ab.real(), 2 * ab.imag(), std::norm(k[0]) - std::norm(k[1])};
}

double ref_concurrence(const oracle::Vec& s) {
  const oracle::Mat r = oracle::reduced_first(s);
  const double purity = oracle::mul(r, r)(0, 0).real() + oracle::mul(r, r)(1, 1).real();
  return std::sqrt(std::max(0.0, 2 * (1 - purity)));
}

void expect_vec_near(const BlochVector& v, double x, double y, double z, double tol) {
  EXPECT_NEAR(v.x, x, tol);
  EXPECT_NEAR(v.y, y, tol);
  EXPECT_NEAR(v.z, z, tol);
}

TEST(UnitVectorM, TableValues) {
  const double r3 = 1 / kSqrt3;
  expect_vec_near(unit_vector_m(r3, pi / 4), r3, r3, r3, 1e-15);
  expect_vec_near(unit_vector_m(1.0, 0.83), 0, 0, 1, 0.0);
  const double r2 = 1 / std::sqrt(2.0);
  expect_vec_near(unit_vector_m(r2, pi / 2), 0, r2, r2, 1e-15);
}

TEST(UnitVectorM, RejectsLargeZ) {
  EXPECT_THROW(unit_vector_m(1.01, 0.0), ejm::ParameterRangeError);
  EXPECT_THROW(ket_m(-1.5, 0.0), ejm::ParameterRangeError);
}

TEST(KetM, NorthPole) {
  const StateVector k = ket_m(1.0, 0.0);
  EXPECT_EQ(k[0], Complex(1.0));
  EXPECT_EQ(k[1], Complex(0.0));
}

TEST(KetM, MatchesReferenceAndIsOrthogonal) {
  oracle::Gen gen(21);
  for (int trial = 0; trial < 100; ++trial) {
    const double z = gen.uniform(-1, 1);
    const double phi = gen.uniform(-pi, pi);
    EXPECT_LT(oracle::max_diff(oracle::to_vec(ket_m(z, phi)), ref_m(z, phi)), 1e-15);
    EXPECT_LT(oracle::max_diff(oracle::to_vec(ket_minus_m(z, phi)), ref_minus_m(z, phi)), 1e-15);
    EXPECT_LT(std::abs(ejm::linalg::inner(ket_m(z, phi), ket_minus_m(z, phi))), 1e-15);
  }
}

TEST(KetM, BlochVectorIsM) {
  const double r3 = 1 / kSqrt3;
  const auto b = ref_bloch(ket_m(r3, pi / 4));
  EXPECT_NEAR(b[0], r3, 1e-15);
  EXPECT_NEAR(b[1], r3, 1e-15);
  EXPECT_NEAR(b[2], r3, 1e-15);

  oracle::Gen gen(22);
  for (int trial = 0; trial < 100; ++trial) {
    const double z = gen.uniform(-1, 1);
    const double phi = gen.uniform(-pi, pi);
    const auto bm = ref_bloch(ket_m(z, phi));
    const auto bmm = ref_bloch(ket_minus_m(z, phi));
    const BlochVector m = unit_vector_m(z, phi);
    expect_vec_near(m, bm[0], bm[1], bm[2], 1e-14);
    expect_vec_near(-m, bmm[0], bmm[1], bmm[2], 1e-14);
  }
}

TEST(KetM0M1, ReduceToMAtQuarterTurn) {
  oracle::Gen gen(23);
  for (int trial = 0; trial < 50; ++trial) {
    const double z = gen.uniform(-1, 1);
    const double phi = gen.uniform(-pi, pi);
    EXPECT_LT(max_abs_diff(ket_m0(z, phi, pi / 2), ket_m(z, phi)), 1e-15);
    EXPECT_LT(max_abs_diff(ket_m1(z, phi, pi / 2), ket_minus_m(z, phi)), 1e-15);
  }
}

TEST(KetM0M1, OrthonormalPair) {
  oracle::Gen gen(24);
  for (int trial = 0; trial < 100; ++trial) {
    const double z = gen.uniform(-1, 1);
    const double phi = gen.uniform(-pi, pi);
    const double t0 = gen.uniform(0, pi / 2);
    const StateVector a = ket_m0(z, phi, t0);
    const StateVector b = ket_m1(z, phi, t0);
    EXPECT_NEAR(a.norm_squared(), 1.0, 1e-12);
    EXPECT_NEAR(b.norm_squared(), 1.0, 1e-12);
    EXPECT_LT(std::abs(ejm::linalg::inner(a, b)), 1e-12);
  }
}

TEST(KetM0M1, RejectTheta0OutOfRange) {
  EXPECT_THROW(ket_m0(0.2, 0.1, -0.1), ejm::ParameterRangeError);
  EXPECT_THROW(ket_m1(0.2, 0.1, 2.0), ejm::ParameterRangeError);
}

TEST(FiveParams, ValidatesRanges) {
  EXPECT_THROW(FiveParams::make(1, 1.2, 0, 0, 0), ejm::ParameterRangeError);
  EXPECT_THROW(FiveParams::make(1, 0.2, 0, 1.7, 0), ejm::ParameterRangeError);
  EXPECT_THROW(FiveParams::make(1, 0.2, 0, 0.3, -0.2), ejm::ParameterRangeError);
  EXPECT_THROW(FiveParams::make(std::nan(""), 0.2, 0, 0.3, 0.2), ejm::ParameterRangeError);
  EXPECT_NO_THROW(FiveParams::make(-4, -1, pi, pi / 2, pi / 2));
}

TEST(FiveParams, WrapsPhi) {
  const FiveParams p = FiveParams::make(1, 0.2, 3 * pi / 2, 0.3, 0.2);
  EXPECT_NEAR(p.phi(), -pi / 2, 1e-15);
  const FiveParams q = FiveParams::make(1, 0.2, 0.25, 0.3, 0.2);
  EXPECT_EQ(q.phi(), 0.25);
}

TEST(FiveParams, WrappedPhiGivesSameState) {
  const StateVector a = phi_state(FiveParams::make(0.7, 0.3, 3 * pi / 2, 0.4, 0.9));
  const StateVector b = phi_state(FiveParams::make(0.7, 0.3, -pi / 2, 0.4, 0.9));
  EXPECT_LT(max_abs_diff(a, b), 1e-15);
}

TEST(PhiState, SingletAtAZero) {
  const double r = 1 / std::sqrt(2.0);
  const StateVector singlet{0.0, r, -r, 0.0};
  oracle::Gen gen(25);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = FiveParams::make(0, gen.uniform(-1, 1), gen.uniform(-pi, pi), gen.uniform(0, pi / 2), gen.uniform(0, pi / 2));
    EXPECT_NEAR(ejm::linalg::overlap(phi_state(p), singlet), 1.0, 1e-12);
  }
}

TEST(PhiState, ProductStateAtAOneThetaZero) {
  oracle::Gen gen(26);
  for (int trial = 0; trial < 20; ++trial) {
    const double z = gen.uniform(-1, 1);
    const double phi = gen.uniform(-pi, pi);
    const double t0 = gen.uniform(0, pi / 2);
    const StateVector s = phi_state(FiveParams::make(1, z, phi, t0, 0));
    const oracle::Vec expected = oracle::kron(oracle::to_vec(ket_m0(z, phi, t0)), oracle::to_vec(ket_m1(z, phi, t0)));
    EXPECT_LT(oracle::max_diff(oracle::to_vec(s), expected), 1e-12);
    EXPECT_LT(concurrence_numeric(s), 1e-12);
  }
}

TEST(PhiState, ThreeParameterSpecialCase) {
  // a = sqrt(3), theta0 = pi/2:
  // [(sqrt3 + e^{i theta}) |m, -m> + (sqrt3 - e^{i theta}) |-m, m>] / (2 sqrt 2)
  oracle::Gen gen(27);
  for (int trial = 0; trial < 30; ++trial) {
    const double z = gen.uniform(-1, 1);
    const double phi = gen.uniform(-pi, pi);
    const double theta = gen.uniform(0, pi / 2);
    const oracle::C e = std::exp(oracle::I * theta);
    const oracle::Vec mm = oracle::kron(ref_m(z, phi), ref_minus_m(z, phi));
    const oracle::Vec mmr = oracle::kron(ref_minus_m(z, phi), ref_m(z, phi));
    oracle::Vec expected(4);
    for (std::size_t k = 0; k < 4; ++k) expected[k] = ((kSqrt3 + e) * mm[k] + (kSqrt3 - e) * mmr[k]) / (2 * std::sqrt(2.0));
    const StateVector s = phi_state(FiveParams::make(kSqrt3, z, phi, pi / 2, theta));
    EXPECT_LT(oracle::max_diff(oracle::to_vec(s), expected), 1e-12);

    const BlochVector r = reduced_bloch(s, Side::first);
    EXPECT_NEAR(r.norm(), kSqrt3 / 2 * std::cos(theta), 1e-10);
    const BlochVector m = unit_vector_m(z, phi);
    EXPECT_LT(max_abs_diff(r, (kSqrt3 / 2 * std::cos(theta)) * m), 1e-10);
  }
}

TEST(PhiState, PurityAtSqrt3ThetaZero) {
  const StateVector s = phi_state(FiveParams::make(kSqrt3, 0.3, 1.1, 0.8, 0.0));
  const oracle::Mat r = oracle::reduced_first(oracle::to_vec(s));
  const oracle::Mat r2 = oracle::mul(r, r);
  EXPECT_NEAR((r2(0, 0) + r2(1, 1)).real(), 7.0 / 8.0, 1e-12);
}

TEST(PhiState, NormalizedAndBothFormsAgreeOnGrid) {
  const std::vector<double> as = {-2.0, -0.6, 0.0, 1.0, kSqrt3, 2.5};
  for (double a : as)
    for (double z : oracle::grid(-1, 1, 5))
      for (double phi : oracle::grid(-pi, pi, 5))
        for (double t0 : oracle::grid(0, pi / 2, 4))
          for (double theta : oracle::grid(0, pi / 2, 4)) {
            const FiveParams p = FiveParams::make(a, z, phi, t0, theta);
            const StateVector s = phi_state(p);
            ASSERT_NEAR(s.norm_squared(), 1.0, 1e-12);
            ASSERT_LT(max_abs_diff(s, phi_state_product_form(p)), 1e-12)
                << "a=" << a << " z=" << z << " phi=" << phi << " t0=" << t0 << " theta=" << theta;
          }
}

TEST(PhiState, ProductFormMatchesReferenceKets) {
  oracle::Gen gen(28);
  for (int trial = 0; trial < 50; ++trial) {
    const double a = gen.uniform(-3, 3);
    const double z = gen.uniform(-1, 1);
    const double phi = gen.uniform(-pi, pi);
    const double t0 = gen.uniform(0, pi / 2);
    const double theta = gen.uniform(0, pi / 2);
    const oracle::C w = oracle::I * std::exp(oracle::I * t0);
    const oracle::Vec m = ref_m(z, phi);
    const oracle::Vec mm = ref_minus_m(z, phi);
    oracle::Vec m0(2), m1(2);
    for (std::size_t k = 0; k < 2; ++k) {
      m0[k] = ((1.0 - w) * m[k] + (1.0 + w) * mm[k]) / 2.0;
      m1[k] = ((1.0 + w) * m[k] + (1.0 - w) * mm[k]) / 2.0;
    }
    const oracle::C e = std::exp(oracle::I * theta);
    const oracle::Vec k01 = oracle::kron(m0, m1);
    const oracle::Vec k10 = oracle::kron(m1, m0);
    oracle::Vec expected(4);
    for (std::size_t k = 0; k < 4; ++k) expected[k] = ((a + e) * k01[k] + (a - e) * k10[k]) / std::sqrt(2 * a * a + 2);
    EXPECT_LT(oracle::max_diff(oracle::to_vec(phi_state(FiveParams::make(a, z, phi, t0, theta))), expected), 1e-12);
  }
}

TEST(Concurrence, SpotValues) {
  const double r = 1 / std::sqrt(2.0);
  EXPECT_NEAR(concurrence_numeric(StateVector{0.0, r, -r, 0.0}), 1.0, 1e-12);
  EXPECT_EQ(concurrence_numeric(StateVector::basis(4, 0)), 0.0);
  EXPECT_NEAR(concurrence_numeric(phi_state(FiveParams::make(kSqrt3, 0.4, 0.2, 1.0, 0.0))), 0.5, 1e-12);
}

TEST(Concurrence, ClosedFormSpotValues) {
  for (double theta : oracle::grid(0, pi / 2, 7)) EXPECT_NEAR(concurrence_closed(0, theta), 1.0, 1e-12);
  EXPECT_NEAR(concurrence_closed(1, 0), 0.0, 1e-12);
  EXPECT_NEAR(concurrence_closed(kSqrt3, 0), 0.5, 1e-12);
  EXPECT_NEAR(concurrence_closed(kSqrt3, pi / 2), 1.0, 1e-12);
  EXPECT_THROW(concurrence_closed(1, 2.0), ejm::ParameterRangeError);
}

TEST(Concurrence, ClosedFormMatchesLiteralExpression) {
  for (double a : oracle::grid(-2, 2, 21))
    for (double theta : oracle::grid(0, pi / 2, 11)) {
      const double literal = 1 - 2 * a * a * (1 + std::cos(2 * theta)) / std::pow(a * a + 1, 2);
      EXPECT_NEAR(concurrence_closed(a, theta), std::sqrt(std::max(0.0, literal)), 1e-8);
      EXPECT_NEAR(concurrence_closed(a, theta) * concurrence_closed(a, theta), literal, 1e-14);
    }
}

TEST(Concurrence, NumericMatchesClosedOnFiveAxisGrid) {
  for (double a : {-1.5, 0.0, 0.5, 1.0, kSqrt3})
    for (double z : oracle::grid(-1, 1, 4))
      for (double phi : oracle::grid(-pi, pi, 4))
        for (double t0 : oracle::grid(0, pi / 2, 4))
          for (double theta : oracle::grid(0, pi / 2, 5)) {
            const StateVector s = phi_state(FiveParams::make(a, z, phi, t0, theta));
            ASSERT_NEAR(concurrence_numeric(s), concurrence_closed(a, theta), 1e-10);
            ASSERT_NEAR(ref_concurrence(oracle::to_vec(s)), concurrence_closed(a, theta), 1e-7);
          }
}

TEST(Concurrence, PurityRouteAgreesAwayFromProductStates) {
  oracle::Gen gen(29);
  for (int trial = 0; trial < 100; ++trial) {
    const StateVector s(std::span<const Complex>(gen.state(4)));
    if (concurrence_numeric(s) < 1e-3) continue;
    EXPECT_NEAR(concurrence_from_purity(s), concurrence_numeric(s), 1e-12);
  }
}

TEST(Concurrence, RejectsUnnormalizedInput) {
  EXPECT_THROW(concurrence_numeric(StateVector{1.0, 1.0, 0.0, 0.0}), ejm::NormalizationError);
  EXPECT_THROW(concurrence_from_purity(StateVector{1.0, 1.0, 0.0, 0.0}), ejm::NormalizationError);
  EXPECT_THROW(concurrence_numeric(StateVector{1.0, 0.0}), ejm::DimensionError);
}

TEST(ReducedBloch, SingletVanishes) {
  const double r = 1 / std::sqrt(2.0);
  const StateVector singlet{0.0, r, -r, 0.0};
  expect_vec_near(reduced_bloch(singlet, Side::first), 0, 0, 0, 1e-15);
  expect_vec_near(reduced_bloch(singlet, Side::second), 0, 0, 0, 1e-15);
}

TEST(ReducedBloch, MatchesPauliExpectations) {
  oracle::Gen gen(30);
  const oracle::Mat paulis[3] = {oracle::sx(), oracle::sy(), oracle::sz()};
  for (int trial = 0; trial < 50; ++trial) {
    const oracle::Vec v = gen.state(4);
    const StateVector s(std::span<const Complex>(v.data(), v.size()));
    const BlochVector a = reduced_bloch(s, Side::first);
    const BlochVector b = reduced_bloch(s, Side::second);
    const double ea[3] = {a.x, a.y, a.z};
    const double eb[3] = {b.x, b.y, b.z};
    for (int k = 0; k < 3; ++k) {
      EXPECT_NEAR(ea[k], oracle::expect(oracle::on0(paulis[k]), v), 1e-14);
      EXPECT_NEAR(eb[k], oracle::expect(oracle::on1(paulis[k]), v), 1e-14);
    }
  }
}

TEST(ReducedBloch, RejectsUnnormalizedInput) {
  EXPECT_THROW(reduced_bloch(StateVector{2.0, 0.0, 0.0, 0.0}, Side::first), ejm::NormalizationError);
}

TEST(ReducedBloch, AntisymmetryClosedFormAndModulusOnGrid) {
  for (double a : {-2.0, -0.5, 0.0, 0.8, kSqrt3})
    for (double z : oracle::grid(-1, 1, 4))
      for (double phi : oracle::grid(-pi, pi, 4))
        for (double t0 : oracle::grid(0, pi / 2, 4))
          for (double theta : oracle::grid(0, pi / 2, 4)) {
            const FiveParams p = FiveParams::make(a, z, phi, t0, theta);
            const StateVector s = phi_state(p);
            const BlochVector first = reduced_bloch(s, Side::first);
            const BlochVector second = reduced_bloch(s, Side::second);
            ASSERT_LT(max_abs_diff(first, -second), 1e-12);
            ASSERT_LT(max_abs_diff(first, reduced_bloch_closed(p)), 1e-10);
            ASSERT_NEAR(first.norm(), 2 * std::abs(a) * std::cos(theta) / (a * a + 1), 1e-10);
          }
}

TEST(ReducedBloch, DirectionFollowsSignOfA) {
  oracle::Gen gen(31);
  for (int trial = 0; trial < 50; ++trial) {
    const double a = gen.uniform(0.1, 3);
    const double z = gen.uniform(-1, 1);
    const double phi = gen.uniform(-pi, pi);
    const double t0 = gen.uniform(0, pi / 2);
    const double theta = gen.uniform(0, 1.4);
    const BlochVector pos = reduced_bloch(phi_state(FiveParams::make(a, z, phi, t0, theta)), Side::first);
    const BlochVector neg = reduced_bloch(phi_state(FiveParams::make(-a, z, phi, t0, theta)), Side::first);
    const BlochVector mp = m_prime(z, phi, t0);
    EXPECT_LT(max_abs_diff((1 / pos.norm()) * pos, mp), 1e-10);
    EXPECT_LT(max_abs_diff((1 / neg.norm()) * neg, -mp), 1e-10);
  }
}

TEST(MPrime, QuarterTurnGivesM) {
  oracle::Gen gen(32);
  for (int trial = 0; trial < 50; ++trial) {
    const double z = gen.uniform(-1, 1);
    const double phi = gen.uniform(-pi, pi);
    EXPECT_LT(max_abs_diff(m_prime(z, phi, pi / 2), unit_vector_m(z, phi)), 1e-15);
  }
  const double r3 = 1 / kSqrt3;
  expect_vec_near(m_prime(r3, pi / 4, pi / 2), r3, r3, r3, 1e-15);
}

TEST(MPrime, UnitNorm) {
  for (double z : oracle::grid(-1, 1, 9))
    for (double phi : oracle::grid(-pi, pi, 9))
      for (double t0 : oracle::grid(0, pi / 2, 9)) EXPECT_NEAR(m_prime(z, phi, t0).norm(), 1.0, 1e-12);
}

TEST(MPrime, AlternateRotationPointsAtCubeDiagonals) {
  // theta0 = arcsin(sqrt(2/3)) with z = +-1/sqrt(2) and phi = pi/2, pi, -pi/2, 0.
  const double t0 = std::asin(std::sqrt(2.0 / 3.0));
  const double r2 = 1 / std::sqrt(2.0);
  const double zs[4] = {r2, -r2, r2, -r2};
  const double phis[4] = {pi / 2, pi, -pi / 2, 0};
  for (int i = 0; i < 4; ++i) {
    const BlochVector v = m_prime(zs[i], phis[i], t0);
    EXPECT_NEAR(std::abs(v.x), 1 / kSqrt3, 1e-12);
    EXPECT_NEAR(std::abs(v.y), 1 / kSqrt3, 1e-12);
    EXPECT_NEAR(std::abs(v.z), 1 / kSqrt3, 1e-12);
  }
}

TEST(Angles, WrapAndChecks) {
  EXPECT_EQ(wrap_angle(pi), pi);
  EXPECT_EQ(wrap_angle(-pi), -pi);
  EXPECT_NEAR(wrap_angle(5 * pi / 2), pi / 2, 1e-15);
  EXPECT_THROW(wrap_angle(INFINITY), ejm::ParameterRangeError);
  EXPECT_EQ(checked_z(1 + 1e-13), 1.0);
  EXPECT_THROW(checked_z(1 + 1e-9), ejm::ParameterRangeError);
  EXPECT_EQ(checked_quarter_turn(-1e-13, "t"), 0.0);
  EXPECT_EQ(checked_quarter_turn(pi / 2 + 1e-13, "t"), pi / 2);
}

}  // namespace
