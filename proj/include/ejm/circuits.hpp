#pragma once

// Two-qubit gate-level statevector simulation of the basis preparation and
// detection circuits.
//
// Gate conventions: Ry(a) = exp(-i a sigma_y / 2), Phase(a) = diag(1, e^{ia}),
// PhaseDagger(a) = diag(1, e^{-ia}), S = diag(1, i), Y = i sigma_y = [[0, 1], [-1, 0]].
// A controlled gate applies its target unitary when the control qubit is 1.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ejm/basis.hpp"
#include "ejm/linalg.hpp"

namespace ejm::circuits {

using linalg::Operator;
using linalg::StateVector;

enum class GateKind { H, X, Y, S, RY, PHASE, PHASEDG };

struct Gate {
  GateKind kind = GateKind::H;
  int target = 0;
  std::optional<int> control;
  double angle = 0.0;

  // 2x2 action on the target qubit.
  Operator matrix() const;
  // Full 4x4 unitary, including the control projection if present.
  Operator unitary() const;
  // Mnemonic used in the text format, e.g. "H", "RY", "CNOT", "CPHASEDG".
  std::string mnemonic() const;

  bool operator==(const Gate&) const = default;
};

Gate single(GateKind kind, int target, double angle = 0.0);
Gate controlled(GateKind kind, int control, int target, double angle = 0.0);

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::vector<Gate> gates);

  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }

  Circuit& add(const Gate& g);
  Circuit& append(const Circuit& other);

  bool operator==(const Circuit&) const = default;

 private:
  std::vector<Gate> gates_;
};

StateVector apply(const Circuit& c, const StateVector& input);

// Product of gate unitaries, last gate leftmost.
Operator unitary(const Circuit& c);

// Preparation circuit acting on |00>; produces basis state 0 up to a global phase.
Circuit prep_circuit(const basis::EjmParams& p);

// prep_circuit followed by the local unitaries that carry state 0 to state `index`.
Circuit prep_circuit_for_index(const basis::EjmParams& p, int index);

// Detection circuit: basis state i lands on computational outcome kDetectOutcome[i].
Circuit detect_circuit(const basis::EjmParams& p);

// Basis index -> computational index (q0 q1 read as a binary number).
inline constexpr std::array<int, 4> kDetectOutcome = {3, 0, 2, 1};

// U1 = (I (x) X)[R(2 phi' + pi/2) (x) R^dagger(2 phi' + pi/2)](X (x) I) and U2 = Z (x) Z.
Operator local_unitary_u1(double phi_prime);
Operator local_unitary_u2();
Circuit u1_gates(double phi_prime);
Circuit u2_gates();

// |amplitude|^2 in computational order. Requires a normalized state.
std::array<double, 4> outcome_probabilities(const StateVector& s);

// Copy of `c` without its controlled-Ry gates.
Circuit without_controlled_ry(const Circuit& c);

// max-abs entry of U - e^{ia} V with a chosen from tr(V^dagger U).
double phase_aligned_distance(const Operator& u, const Operator& v);

// One gate per line: `MNEMONIC q[,q2][,angle]`. For controlled gates q is the
// control and q2 the target. Angles use 17 significant digits.
std::string serialize(const Circuit& c);

// Inverse of serialize. Blank lines and text after '#' are ignored. Throws
// CircuitParseError on malformed input.
Circuit parse(std::string_view text);

}  // namespace ejm::circuits
