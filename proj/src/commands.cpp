#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include <fmt/format.h>

#include "ejm/circuits.hpp"
#include "ejm/cli.hpp"
#include "ejm/errors.hpp"

namespace ejm::cli {
namespace {

using basis::EjmBasis;
using basis::EjmParams;
using linalg::kAlgebraicTol;
using linalg::kTrigTol;
using linalg::StateVector;
using report::Cell;
using std::numbers::pi;

constexpr double kPathTol = 1e-11;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::array<const char*, 4> kComponentLabels = {"00", "01", "10", "11"};

Check make_check(std::string name, double value, double tolerance) {
  return {std::move(name), value, tolerance, value < tolerance ? CheckStatus::pass : CheckStatus::fail};
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::degenerate: return "degenerate";
  }
  return "fail";
}

Cell within_report(const Check& c, const RunConfig& cfg) {
  if (std::isnan(c.value)) return std::monostate{};
  return c.value < cfg.report_tolerance.value_or(c.tolerance);
}

EjmParams params_of(const RunConfig& cfg) { return EjmParams::make(cfg.z, cfg.phi, cfg.theta); }

double max_fidelity_deficit(const EjmBasis& a, const EjmBasis& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < 4; ++i) m = std::max(m, std::abs(1.0 - linalg::overlap(a.states[i], b.states[i])));
  return m;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = lo + (hi - lo) * k / (n - 1);
  v.back() = hi;
  return v;
}

// Onto (-pi, pi] for display.
double display_angle(double phi) {
  const double w = std::remainder(phi, 2.0 * pi);
  return w <= -pi + 1e-15 ? w + 2.0 * pi : w;
}

// Probability matrix P[i][k] of outcome k after preparing state i and detecting.
std::array<std::array<double, 4>, 4> round_trip(const EjmParams& p) {
  const circuits::Circuit detect = circuits::detect_circuit(p);
  std::array<std::array<double, 4>, 4> probs{};
  for (int i = 0; i < 4; ++i) {
    const StateVector prepared = circuits::apply(circuits::prep_circuit_for_index(p, i), StateVector::basis(4, 0));
    probs[static_cast<std::size_t>(i)] = circuits::outcome_probabilities(circuits::apply(detect, prepared));
  }
  return probs;
}

double permutation_deviation(const std::array<std::array<double, 4>, 4>& probs) {
  double m = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t k = 0; k < 4; ++k) {
      const double expected = static_cast<int>(k) == circuits::kDetectOutcome[i] ? 1.0 : 0.0;
      m = std::max(m, std::abs(probs[i][k] - expected));
    }
  }
  return m;
}

struct SignedDeviations {
  double u1, u2, u2u1;
};

SignedDeviations signed_deviations(const EjmParams& p, const EjmBasis& b) {
  const linalg::Operator u1 = circuits::local_unitary_u1(p.phi() - p.phi_z());
  const linalg::Operator u2 = circuits::local_unitary_u2();
  const auto& s = b.states;
  return {linalg::max_abs_diff(u1 * s[0], linalg::Complex(-1.0) * s[1]),
          linalg::max_abs_diff(u2 * s[0], linalg::Complex(-1.0) * s[2]),
          linalg::max_abs_diff(u2 * (u1 * s[0]), s[3])};
}

}  // namespace

std::vector<Check> basis_checks(const EjmParams& p) {
  const EjmBasis b = basis::build_basis(p);
  const EjmBasis b_simplified = basis::basis_simplified(p);
  const EjmBasis b_phi_z = basis::basis_phi_z_form(p);
  const basis::ParamAssignment assign = basis::assignment(p);

  std::vector<Check> checks;
  const linalg::Operator g = basis::gram_matrix(b);
  checks.push_back(make_check("gram_deviation", linalg::max_abs_diff(g, linalg::Operator::identity(4)), kAlgebraicTol));

  double closed_dev = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) closed_dev = std::max(closed_dev, std::abs(g(i, j) - basis::gram_closed_form(assign, i, j)));
  checks.push_back(make_check("gram_closed_form_deviation", closed_dev, kAlgebraicTol));

  checks.push_back(make_check("completeness_residual", basis::completeness_residual(b), kAlgebraicTol));

  const double path_dev = std::max({max_fidelity_deficit(b, b_simplified), max_fidelity_deficit(b, b_phi_z),
                                    max_fidelity_deficit(b_simplified, b_phi_z)});
  checks.push_back(make_check("path_fidelity_deficit", path_dev, kPathTol));

  const basis::ReducedTable t = basis::reduced_tetrahedron(b);
  double antisym = 0.0;
  double closed = 0.0;
  std::array<states::BlochVector, 4> first{};
  for (std::size_t i = 0; i < 4; ++i) {
    first[i] = t[i][0];
    antisym = std::max(antisym, states::max_abs_diff(t[i][0], -t[i][1]));
    closed = std::max(closed, states::max_abs_diff(t[i][0], basis::reduced_vector_closed(p, static_cast<int>(i))));
  }
  checks.push_back(make_check("antisymmetry_deviation", antisym, kAlgebraicTol));
  checks.push_back(make_check("reduced_closed_form_deviation", closed, kTrigTol));

  try {
    const basis::GeometryReport geo = basis::tetrahedron_geometry_check(first, p.theta());
    checks.push_back(make_check("tetrahedron_modulus_deviation", geo.modulus_dev, kTrigTol));
    checks.push_back(make_check("tetrahedron_pairwise_deviation", geo.pairwise_dev, kTrigTol));
  } catch (const DegenerateGeometryError&) {
    checks.push_back({"tetrahedron_modulus_deviation", kNaN, kTrigTol, CheckStatus::degenerate});
    checks.push_back({"tetrahedron_pairwise_deviation", kNaN, kTrigTol, CheckStatus::degenerate});
  }

  const double c_closed = states::concurrence_closed(std::sqrt(3.0), p.theta());
  double c_dev = 0.0;
  for (const StateVector& s : b.states) c_dev = std::max(c_dev, std::abs(states::concurrence_numeric(s) - c_closed));
  checks.push_back(make_check("concurrence_deviation", c_dev, kTrigTol));
  return checks;
}

std::vector<Check> circuit_checks(const EjmParams& p) {
  const EjmBasis b = basis::build_basis(p);
  std::vector<Check> checks;

  double fid = 0.0;
  for (int i = 0; i < 4; ++i) {
    const StateVector s = circuits::apply(circuits::prep_circuit_for_index(p, i), StateVector::basis(4, 0));
    fid = std::max(fid, std::abs(1.0 - linalg::overlap(b.states[static_cast<std::size_t>(i)], s)));
  }
  checks.push_back(make_check("prep_fidelity_deficit", fid, kTrigTol));

  const circuits::Circuit detect = circuits::detect_circuit(p);
  double off_target = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto probs = circuits::outcome_probabilities(circuits::apply(detect, b.states[i]));
    for (std::size_t k = 0; k < 4; ++k)
      if (static_cast<int>(k) != circuits::kDetectOutcome[i]) off_target = std::max(off_target, probs[k]);
  }
  checks.push_back(make_check("detect_off_target_probability", off_target, kTrigTol));
  checks.push_back(make_check("permutation_deviation", permutation_deviation(round_trip(p)), kTrigTol));

  const SignedDeviations sd = signed_deviations(p, b);
  checks.push_back(make_check("u1_signed_deviation", sd.u1, kAlgebraicTol));
  checks.push_back(make_check("u2_signed_deviation", sd.u2, kAlgebraicTol));
  checks.push_back(make_check("u2u1_signed_deviation", sd.u2u1, kAlgebraicTol));
  return checks;
}

CommandResult cmd_basis(const RunConfig& cfg) {
  const EjmParams p = params_of(cfg);
  const EjmBasis b = basis::basis_phi_z_form(p);
  const basis::ParamAssignment assign = basis::assignment(p);
  CommandResult r;
  r.table.command = "basis";
  r.table.columns = {"index", "component", "re", "im", "z_i", "phi_i", "phi_z", "theta0"};
  for (std::size_t i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      const linalg::Complex a = b.states[i][k];
      r.table.add_row({static_cast<long long>(i), std::string(kComponentLabels[static_cast<std::size_t>(k)]), a.real(),
                       a.imag(), assign.zs[i], display_angle(assign.phis[i]), p.phi_z(), p.theta0()});
    }
  }
  return r;
}

CommandResult cmd_verify(const RunConfig& cfg) {
  CommandResult r;
  r.table.command = "verify";
  r.table.columns = {"check", "value", "tolerance", "status", "within_report_tolerance"};
  for (const Check& c : basis_checks(params_of(cfg))) {
    r.table.add_row({c.name, c.value, c.tolerance, std::string(status_name(c.status)), within_report(c, cfg)});
    if (c.status == CheckStatus::fail) r.exit_code = kExitInvariantFailure;
  }
  return r;
}

CommandResult cmd_sweep(const RunConfig& cfg) {
  struct Aggregate {
    double max_value = 0.0;
    double tolerance = 0.0;
    long long points = 0;
    long long degenerate = 0;
    bool failed = false;
  };
  std::vector<std::string> order;
  std::map<std::string, Aggregate> agg;
  auto absorb = [&](const std::vector<Check>& checks) {
    for (const Check& c : checks) {
      auto [it, inserted] = agg.try_emplace(c.name);
      if (inserted) order.push_back(c.name);
      Aggregate& a = it->second;
      a.tolerance = c.tolerance;
      ++a.points;
      if (c.status == CheckStatus::degenerate) {
        ++a.degenerate;
        continue;
      }
      a.max_value = std::max(a.max_value, c.value);
      a.failed = a.failed || c.status == CheckStatus::fail;
    }
  };

  const auto zs = linspace(basis::kMinAbsZ, 1.0, cfg.grid);
  const auto phis = linspace(-pi, pi, cfg.grid);
  const auto thetas = linspace(0.0, pi / 2, cfg.grid);
  for (double sign : {1.0, -1.0}) {
    for (double z : zs) {
      for (double phi : phis) {
        for (double theta : thetas) {
          const EjmParams p = EjmParams::make(sign * z, phi, theta);
          absorb(basis_checks(p));
          absorb(circuit_checks(p));
        }
      }
    }
  }

  CommandResult r;
  r.table.command = "sweep";
  r.table.columns = {"check", "max_value", "tolerance", "status", "points", "degenerate_points",
                     "within_report_tolerance"};
  for (const std::string& name : order) {
    const Aggregate& a = agg.at(name);
    const bool all_degenerate = a.degenerate == a.points;
    const CheckStatus status = a.failed ? CheckStatus::fail : all_degenerate ? CheckStatus::degenerate : CheckStatus::pass;
    const Check summary{name, all_degenerate ? kNaN : a.max_value, a.tolerance, status};
    r.table.add_row({name, summary.value, a.tolerance, std::string(status_name(status)), a.points, a.degenerate,
                     within_report(summary, cfg)});
    if (a.failed) r.exit_code = kExitInvariantFailure;
  }
  return r;
}

CommandResult cmd_table1(const RunConfig& cfg) {
  struct Block {
    const char* label;
    double z;
    double phi;
  };
  const std::array<Block, 3> blocks = {{
      {"1/sqrt(3)", 1.0 / std::sqrt(3.0), pi / 4},
      {"1/sqrt(2)", 1.0 / std::sqrt(2.0), pi / 2},
      {"1", 1.0, 3 * pi / 4},
  }};
  // The direction columns do not depend on theta, so a degenerate theta falls back to 0.
  const double theta = std::cos(cfg.theta) < basis::kDegenerateNorm ? 0.0 : cfg.theta;
  const double half_cos = 0.5 * std::cos(theta);

  CommandResult r;
  r.table.command = "table1";
  r.table.columns = {"block", "z", "phi", "phi_z", "theta", "index", "z_i", "phi_i", "m_x", "m_y", "m_z",
                     "r_x", "r_y", "r_z", "deviation", "status"};
  for (const Block& blk : blocks) {
    const EjmParams p = EjmParams::make(blk.z, blk.phi, theta);
    const EjmBasis b = basis::build_basis(p);
    const basis::ParamAssignment assign = basis::assignment(p);
    const basis::ReducedTable t = basis::reduced_tetrahedron(b);
    for (std::size_t i = 0; i < 4; ++i) {
      const states::BlochVector m = states::unit_vector_m(assign.zs[i], assign.phis[i]);
      const states::BlochVector dir = (1.0 / half_cos) * t[i][0];
      const states::BlochVector closed = (1.0 / half_cos) * basis::reduced_vector_closed(p, static_cast<int>(i));
      const double dev = std::max(states::max_abs_diff(dir, closed),
                                  states::max_abs_diff((1.0 / half_cos) * t[i][1], -closed));
      const bool ok = dev < kTrigTol;
      if (!ok) r.exit_code = kExitInvariantFailure;
      r.table.add_row({std::string(blk.label), p.z(), p.phi(), p.phi_z(), theta, static_cast<long long>(i),
                       assign.zs[i], display_angle(assign.phis[i]), m.x, m.y, m.z, dir.x, dir.y, dir.z, dev,
                       std::string(ok ? "pass" : "fail")});
    }
  }
  return r;
}

CommandResult cmd_concurrence(const RunConfig& cfg) {
  const EjmParams p = params_of(cfg);
  const auto as = linspace(0.0, 2.0, cfg.grid);
  const auto thetas = linspace(0.0, pi / 2, cfg.grid);

  CommandResult r;
  r.table.command = "concurrence";
  r.table.columns = {"series", "a", "theta", "concurrence", "concurrence_numeric"};
  double numeric_dev = 0.0;
  auto emit = [&](const char* series, double a, double theta) {
    const double closed = states::concurrence_closed(a, theta);
    const auto fp = states::FiveParams::make(a, p.z(), p.phi(), pi / 2, theta);
    const double numeric = states::concurrence_numeric(states::phi_state(fp));
    numeric_dev = std::max(numeric_dev, std::abs(closed - numeric));
    r.table.add_row({std::string(series), a, theta, closed, numeric});
    return closed;
  };

  for (double a : as)
    for (double theta : thetas) emit("surface", a, theta);

  double slice_min = 1.0;
  double slice_max = 0.0;
  for (double theta : thetas) {
    const double c = emit("slice", std::sqrt(3.0), theta);
    slice_min = std::min(slice_min, c);
    slice_max = std::max(slice_max, c);
  }
  if (numeric_dev >= kTrigTol || std::abs(slice_min - 0.5) >= kAlgebraicTol || std::abs(slice_max - 1.0) >= kAlgebraicTol) {
    r.exit_code = kExitInvariantFailure;
  }
  return r;
}

CommandResult cmd_circuit(const RunConfig& cfg) {
  const EjmParams p = params_of(cfg);
  const EjmBasis b = basis::build_basis(p);
  CommandResult r;
  r.table.command = "circuit";
  r.table.columns = {"quantity", "index", "outcome", "value", "status"};
  auto row = [&](const char* quantity, Cell index, Cell outcome, double value, bool ok) {
    r.table.add_row({std::string(quantity), std::move(index), std::move(outcome), value, std::string(ok ? "pass" : "fail")});
    if (!ok) r.exit_code = kExitInvariantFailure;
  };

  std::array<StateVector, 4> prepared = b.states;
  for (int i = 0; i < 4; ++i) {
    const auto k = static_cast<std::size_t>(i);
    prepared[k] = circuits::apply(circuits::prep_circuit_for_index(p, i), StateVector::basis(4, 0));
    const double fid = linalg::overlap(b.states[k], prepared[k]);
    row("prep_fidelity", static_cast<long long>(i), std::monostate{}, fid, fid >= 1.0 - kTrigTol);
  }

  const auto probs = round_trip(p);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t k = 0; k < 4; ++k) {
      const bool target = static_cast<int>(k) == circuits::kDetectOutcome[i];
      const double v = probs[i][k];
      row("outcome_probability", static_cast<long long>(i), std::string(kComponentLabels[k]), v,
          target ? std::abs(v - 1.0) < kTrigTol : v < kTrigTol);
    }
  }
  const double perm = permutation_deviation(probs);
  row("permutation_deviation", std::monostate{}, std::monostate{}, perm, perm < kTrigTol);

  const SignedDeviations sd = signed_deviations(p, b);
  row("u1_signed_deviation", 1LL, std::monostate{}, sd.u1, sd.u1 < kAlgebraicTol);
  row("u2_signed_deviation", 2LL, std::monostate{}, sd.u2, sd.u2 < kAlgebraicTol);
  row("u2u1_signed_deviation", 3LL, std::monostate{}, sd.u2u1, sd.u2u1 < kAlgebraicTol);

  const double phi_prime = p.phi() - p.phi_z();
  const bool quarter = p.z() > 0.0 && std::abs(phi_prime - pi / 4) <= kAlgebraicTol;
  const bool bsm = quarter && std::abs(p.theta() - pi / 2) <= kAlgebraicTol;
  auto not_applicable = [&](const char* quantity) {
    r.table.add_row({std::string(quantity), std::monostate{}, std::monostate{}, kNaN, std::string("not_applicable")});
  };

  if (bsm) {
    double dev = 0.0;
    for (const StateVector& s : prepared) dev = std::max(dev, std::abs(states::concurrence_numeric(s) - 1.0));
    row("bsm_equivalence", std::monostate{}, std::monostate{}, dev, dev < kAlgebraicTol);
  } else {
    not_applicable("bsm_equivalence");
  }

  if (quarter) {
    const circuits::Circuit detect = circuits::detect_circuit(p);
    const double dev = circuits::phase_aligned_distance(circuits::unitary(detect),
                                                        circuits::unitary(circuits::without_controlled_ry(detect)));
    row("prior_circuit_equivalence", std::monostate{}, std::monostate{}, dev, dev < kAlgebraicTol);
  } else {
    not_applicable("prior_circuit_equivalence");
  }
  return r;
}

std::string circuit_dump(const EjmParams& p) {
  std::string out = fmt::format("# z={:.17g} phi={:.17g} theta={:.17g}\n", p.z(), p.phi(), p.theta());
  out += "# preparation of state 0 from |00>\n";
  out += circuits::serialize(circuits::prep_circuit(p));
  out += "# detection\n";
  out += circuits::serialize(circuits::detect_circuit(p));
  return out;
}

}  // namespace ejm::cli
