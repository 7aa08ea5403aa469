#pragma once

// Dense complex linear algebra on one- and two-qubit spaces.
//
// Only dimensions 2 and 4 are supported. Two-qubit objects use qubit 0 as the
// left tensor factor, so the basis order is |00>, |01>, |10>, |11>.

#include <array>
#include <complex>
#include <initializer_list>
#include <span>

namespace ejm::linalg {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

// Absolute tolerance for algebraic identities.
inline constexpr double kAlgebraicTol = 1e-12;
// Absolute tolerance for quantities that pass through sqrt/arcsin chains.
inline constexpr double kTrigTol = 1e-10;

// Which subsystem survives a partial trace (or which qubit a Pauli acts on).
enum class Keep { first, second };

class StateVector {
 public:
  StateVector(std::initializer_list<Complex> amps);
  explicit StateVector(std::span<const Complex> amps);

  // Computational basis ket |index> of the given dimension.
  static StateVector basis(int dim, int index);

  int dim() const noexcept { return dim_; }
  const Complex& operator[](int k) const { return amps_[static_cast<std::size_t>(k)]; }
  std::span<const Complex> amplitudes() const noexcept {
    return {amps_.data(), static_cast<std::size_t>(dim_)};
  }

  double norm_squared() const noexcept;
  bool is_normalized(double tol = kAlgebraicTol) const noexcept;

  friend StateVector operator+(const StateVector& u, const StateVector& v);
  friend StateVector operator-(const StateVector& u, const StateVector& v);
  friend StateVector operator*(Complex c, const StateVector& v);

 private:
  StateVector() = default;

  std::array<Complex, 4> amps_{};
  int dim_ = 0;
};

class Operator {
 public:
  // Zero operator.
  explicit Operator(int dim);
  // Row-major entries; the list length must be dim*dim.
  Operator(int dim, std::initializer_list<Complex> row_major);

  static Operator identity(int dim);

  int dim() const noexcept { return dim_; }
  Complex operator()(int row, int col) const {
    return m_[static_cast<std::size_t>(row * dim_ + col)];
  }
  Complex& operator()(int row, int col) { return m_[static_cast<std::size_t>(row * dim_ + col)]; }

  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator-(const Operator& a, const Operator& b);
  friend Operator operator*(Complex c, const Operator& a);
  friend Operator operator*(const Operator& a, const Operator& b);
  friend StateVector operator*(const Operator& a, const StateVector& v);

 private:
  std::array<Complex, 16> m_{};
  int dim_ = 0;
};

// Kronecker product with `a` as the left (qubit 0) factor. Both operands must be dim 2.
Operator kron(const Operator& a, const Operator& b);
StateVector kron(const StateVector& a, const StateVector& b);

Operator dagger(const Operator& op);
Complex trace(const Operator& op);

// |u><v|
Operator outer(const StateVector& u, const StateVector& v);

// Reduced operator of one qubit of a 4x4 operator. Keep::first traces out qubit 1.
Operator partial_trace(const Operator& rho, Keep keep);

// <u|v>, conjugate-linear in u.
Complex inner(const StateVector& u, const StateVector& v);

// <s|op|s>
Complex expectation(const Operator& op, const StateVector& s);

// |<u|v>|, which is 1 for equal states up to global phase.
double overlap(const StateVector& u, const StateVector& v);

// max_k |u_k - e^{i a} v_k| where a aligns v's global phase onto u.
double phase_aligned_distance(const StateVector& u, const StateVector& v);

double max_abs(const Operator& op);
double max_abs_diff(const Operator& a, const Operator& b);
double max_abs_diff(const StateVector& a, const StateVector& b);

// Eigenvalues (ascending) of a Hermitian 2x2 operator.
std::array<double, 2> hermitian_eigenvalues(const Operator& op);

namespace pauli {
Operator identity();
Operator x();
Operator y();
Operator z();
}  // namespace pauli

}  // namespace ejm::linalg
