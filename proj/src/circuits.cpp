#include "ejm/circuits.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include <fmt/format.h>

#include "ejm/errors.hpp"

namespace ejm::circuits {
namespace {

using linalg::Complex;
using linalg::kI;
using std::numbers::pi;

struct KindInfo {
  GateKind kind;
  const char* single;
  const char* controlled;
  bool has_angle;
};

constexpr std::array<KindInfo, 7> kKinds = {{
    {GateKind::H, "H", "CH", false},
    {GateKind::X, "X", "CNOT", false},
    {GateKind::Y, "Y", "CY", false},
    {GateKind::S, "S", "CS", false},
    {GateKind::RY, "RY", "CRY", true},
    {GateKind::PHASE, "PHASE", "CPHASE", true},
    {GateKind::PHASEDG, "PHASEDG", "CPHASEDG", true},
}};

const KindInfo& info(GateKind kind) {
  for (const auto& k : kKinds)
    if (k.kind == kind) return k;
  throw std::logic_error("unknown gate kind");
}

void validate(const Gate& g) {
  if (g.target != 0 && g.target != 1) {
    throw DimensionError(fmt::format("gate target qubit {} is not 0 or 1", g.target));
  }
  if (g.control && *g.control != 1 - g.target) {
    throw DimensionError(fmt::format("gate control qubit {} must be the other qubit", *g.control));
  }
  if (!std::isfinite(g.angle)) throw ParameterRangeError("gate angle must be finite");
}

int mask(int qubit) { return qubit == 0 ? 2 : 1; }

// Preparation sequence; yields state 0 for z > 0.
Circuit prep_gates(double phi_prime, double theta) {
  Circuit c;
  c.add(single(GateKind::H, 0)).add(single(GateKind::H, 1));
  c.add(single(GateKind::S, 0)).add(single(GateKind::S, 1));
  c.add(controlled(GateKind::RY, 0, 1, pi / 2 - 2 * phi_prime));
  c.add(single(GateKind::X, 0));
  c.add(controlled(GateKind::PHASEDG, 0, 1, pi / 2 - theta));
  c.add(single(GateKind::H, 1));
  c.add(controlled(GateKind::X, 1, 0));
  c.add(controlled(GateKind::PHASEDG, 0, 1, 2 * phi_prime));
  c.add(single(GateKind::Y, 0)).add(single(GateKind::Y, 1));
  c.add(controlled(GateKind::S, 0, 1));
  return c;
}

// Detection sequence for z > 0.
Circuit detect_gates(double phi_prime, double theta) {
  Circuit c;
  c.add(controlled(GateKind::X, 0, 1));
  c.add(single(GateKind::H, 0));
  c.add(controlled(GateKind::PHASE, 0, 1, pi / 2 - theta));
  c.add(single(GateKind::S, 0)).add(single(GateKind::X, 1));
  c.add(controlled(GateKind::RY, 1, 0, pi / 2 - 2 * phi_prime));
  c.add(single(GateKind::S, 1));
  c.add(single(GateKind::X, 1));
  c.add(single(GateKind::H, 0)).add(single(GateKind::H, 1));
  return c;
}

// For z < 0, state i equals state i+1 (mod 4) of the |z|, phi - pi/2 basis, so both
// circuits run at the shifted angle and are corrected by one extra step.
double circuit_phi_prime(const basis::EjmParams& p) {
  const double shift = p.z() < 0.0 ? pi / 2 : 0.0;
  return p.phi() - shift - p.phi_z();
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_qubit(std::string_view tok, int line_no) {
  tok = trim(tok);
  if (tok == "0") return 0;
  if (tok == "1") return 1;
  throw CircuitParseError(fmt::format("line {}: bad qubit index '{}'", line_no, tok));
}

double parse_angle(std::string_view tok, int line_no) {
  tok = trim(tok);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
    throw CircuitParseError(fmt::format("line {}: bad angle '{}'", line_no, tok));
  }
  return v;
}

}  // namespace

Operator Gate::matrix() const {
  const double h = 1.0 / std::sqrt(2.0);
  switch (kind) {
    case GateKind::H: return Operator(2, {h, h, h, -h});
    case GateKind::X: return Operator(2, {0.0, 1.0, 1.0, 0.0});
    case GateKind::Y: return Operator(2, {0.0, 1.0, -1.0, 0.0});
    case GateKind::S: return Operator(2, {1.0, 0.0, 0.0, kI});
    case GateKind::RY: {
      const double c = std::cos(angle / 2);
      const double s = std::sin(angle / 2);
      return Operator(2, {c, -s, s, c});
    }
    case GateKind::PHASE: return Operator(2, {1.0, 0.0, 0.0, std::polar(1.0, angle)});
    case GateKind::PHASEDG: return Operator(2, {1.0, 0.0, 0.0, std::polar(1.0, -angle)});
  }
  throw std::logic_error("unknown gate kind");
}

Operator Gate::unitary() const { return circuits::unitary(Circuit({*this})); }

std::string Gate::mnemonic() const {
  const KindInfo& k = info(kind);
  return control ? k.controlled : k.single;
}

Gate single(GateKind kind, int target, double angle) {
  Gate g{kind, target, std::nullopt, angle};
  validate(g);
  return g;
}

Gate controlled(GateKind kind, int control, int target, double angle) {
  Gate g{kind, target, control, angle};
  validate(g);
  return g;
}

Circuit::Circuit(std::vector<Gate> gates) : gates_(std::move(gates)) {
  for (const Gate& g : gates_) validate(g);
}

Circuit& Circuit::add(const Gate& g) {
  validate(g);
  gates_.push_back(g);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

StateVector apply(const Circuit& c, const StateVector& input) {
  if (input.dim() != 4) {
    throw DimensionError(fmt::format("apply: expected a two-qubit state, got dim {}", input.dim()));
  }
  std::array<Complex, 4> a{};
  for (int k = 0; k < 4; ++k) a[static_cast<std::size_t>(k)] = input[k];

  for (const Gate& g : c.gates()) {
    const Operator m = g.matrix();
    const int t = mask(g.target);
    for (int idx = 0; idx < 4; ++idx) {
      if (idx & t) continue;
      if (g.control && !(idx & mask(*g.control))) continue;
      const auto i0 = static_cast<std::size_t>(idx);
      const auto i1 = static_cast<std::size_t>(idx | t);
      const Complex a0 = a[i0];
      const Complex a1 = a[i1];
      a[i0] = m(0, 0) * a0 + m(0, 1) * a1;
      a[i1] = m(1, 0) * a0 + m(1, 1) * a1;
    }
  }
  return StateVector(std::span<const Complex>(a));
}

Operator unitary(const Circuit& c) {
  Operator u(4);
  for (int col = 0; col < 4; ++col) {
    const StateVector out = apply(c, StateVector::basis(4, col));
    for (int row = 0; row < 4; ++row) u(row, col) = out[row];
  }
  return u;
}

Circuit prep_circuit(const basis::EjmParams& p) {
  const double phi_prime = circuit_phi_prime(p);
  Circuit c = prep_gates(phi_prime, p.theta());
  if (p.z() < 0.0) c.append(u1_gates(phi_prime));
  return c;
}

Circuit prep_circuit_for_index(const basis::EjmParams& p, int index) {
  if (index < 0 || index > 3) throw DimensionError(fmt::format("basis index {} out of range 0..3", index));
  Circuit c = prep_circuit(p);
  if (index == 1 || index == 3) c.append(u1_gates(p.phi() - p.phi_z()));
  if (index == 2 || index == 3) c.append(u2_gates());
  return c;
}

Circuit detect_circuit(const basis::EjmParams& p) {
  Circuit c = detect_gates(circuit_phi_prime(p), p.theta());
  if (p.z() < 0.0) {
    c.add(controlled(GateKind::X, 0, 1));
    c.add(single(GateKind::X, 0)).add(single(GateKind::X, 1));
  }
  return c;
}

Circuit u1_gates(double phi_prime) {
  const double alpha = 2 * phi_prime + pi / 2;
  Circuit c;
  c.add(single(GateKind::X, 0));
  c.add(single(GateKind::PHASE, 0, alpha)).add(single(GateKind::PHASEDG, 1, alpha));
  c.add(single(GateKind::X, 1));
  return c;
}

Circuit u2_gates() {
  Circuit c;
  c.add(single(GateKind::PHASE, 0, pi)).add(single(GateKind::PHASE, 1, pi));
  return c;
}

Operator local_unitary_u1(double phi_prime) {
  const double alpha = 2 * phi_prime + pi / 2;
  const Operator r(2, {1.0, 0.0, 0.0, std::polar(1.0, alpha)});
  const Operator x = linalg::pauli::x();
  const Operator id = linalg::pauli::identity();
  return linalg::kron(id, x) * linalg::kron(r, linalg::dagger(r)) * linalg::kron(x, id);
}

Operator local_unitary_u2() { return linalg::kron(linalg::pauli::z(), linalg::pauli::z()); }

std::array<double, 4> outcome_probabilities(const StateVector& s) {
  if (s.dim() != 4) {
    throw DimensionError(fmt::format("outcome_probabilities: expected dim 4, got {}", s.dim()));
  }
  if (!s.is_normalized()) {
    throw NormalizationError(
        fmt::format("outcome_probabilities: state is not normalized (norm^2 = {:.17g})", s.norm_squared()));
  }
  return {std::norm(s[0]), std::norm(s[1]), std::norm(s[2]), std::norm(s[3])};
}

Circuit without_controlled_ry(const Circuit& c) {
  Circuit out;
  for (const Gate& g : c.gates())
    if (!(g.kind == GateKind::RY && g.control)) out.add(g);
  return out;
}

double phase_aligned_distance(const Operator& u, const Operator& v) {
  const Complex t = linalg::trace(linalg::dagger(v) * u);
  const Complex phase = std::abs(t) > 0.0 ? t / std::abs(t) : Complex(1.0);
  return linalg::max_abs_diff(u, phase * v);
}

std::string serialize(const Circuit& c) {
  std::string out;
  for (const Gate& g : c.gates()) {
    out += g.mnemonic();
    out += ' ';
    if (g.control) out += fmt::format("{},", *g.control);
    out += fmt::format("{}", g.target);
    if (info(g.kind).has_angle) out += fmt::format(",{:.17g}", g.angle);
    out += '\n';
  }
  return out;
}

Circuit parse(std::string_view text) {
  Circuit c;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto space = line.find_first_of(" \t");
    if (space == std::string_view::npos) {
      throw CircuitParseError(fmt::format("line {}: missing qubit list", line_no));
    }
    const std::string_view name = line.substr(0, space);
    std::vector<std::string_view> fields;
    std::string_view rest = trim(line.substr(space));
    for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos; rest = rest.substr(pos + 1)) {
      fields.push_back(rest.substr(0, pos));
    }
    fields.push_back(rest);

    const KindInfo* kind = nullptr;
    bool is_controlled = false;
    for (const auto& k : kKinds) {
      if (name == k.single) kind = &k;
      if (name == k.controlled) kind = &k, is_controlled = true;
    }
    if (!kind) throw CircuitParseError(fmt::format("line {}: unknown gate '{}'", line_no, name));

    const std::size_t expected = (is_controlled ? 2u : 1u) + (kind->has_angle ? 1u : 0u);
    if (fields.size() != expected) {
      throw CircuitParseError(
          fmt::format("line {}: {} expects {} fields, got {}", line_no, name, expected, fields.size()));
    }
    const double angle = kind->has_angle ? parse_angle(fields.back(), line_no) : 0.0;
    try {
      if (is_controlled) {
        c.add(controlled(kind->kind, parse_qubit(fields[0], line_no), parse_qubit(fields[1], line_no), angle));
      } else {
        c.add(single(kind->kind, parse_qubit(fields[0], line_no), angle));
      }
    } catch (const DimensionError& e) {
      throw CircuitParseError(fmt::format("line {}: {}", line_no, e.what()));
    }
  }
  return c;
}

}  // namespace ejm::circuits
