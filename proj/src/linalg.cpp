#include "ejm/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "ejm/errors.hpp"

namespace ejm::linalg {
namespace {

void require_supported_dim(int dim, const char* what) {
  if (dim != 2 && dim != 4) {
    throw DimensionError(fmt::format("{}: dimension {} is not supported (expected 2 or 4)", what, dim));
  }
}

void require_same_dim(int a, int b, const char* what) {
  if (a != b) {
    throw DimensionError(fmt::format("{}: dimension mismatch ({} vs {})", what, a, b));
  }
}

void require_dim(int dim, int expected, const char* what) {
  if (dim != expected) {
    throw DimensionError(fmt::format("{}: expected dimension {}, got {}", what, expected, dim));
  }
}

}  // namespace

StateVector::StateVector(std::initializer_list<Complex> amps)
    : StateVector(std::span<const Complex>(amps.begin(), amps.size())) {}

StateVector::StateVector(std::span<const Complex> amps) : dim_(static_cast<int>(amps.size())) {
  require_supported_dim(dim_, "StateVector");
  std::copy(amps.begin(), amps.end(), amps_.begin());
}

StateVector StateVector::basis(int dim, int index) {
  require_supported_dim(dim, "StateVector::basis");
  if (index < 0 || index >= dim) {
    throw DimensionError(fmt::format("StateVector::basis: index {} out of range for dim {}", index, dim));
  }
  StateVector v;
  v.dim_ = dim;
  v.amps_[static_cast<std::size_t>(index)] = 1.0;
  return v;
}

double StateVector::norm_squared() const noexcept {
  double s = 0.0;
  for (int k = 0; k < dim_; ++k) s += std::norm(amps_[static_cast<std::size_t>(k)]);
  return s;
}

bool StateVector::is_normalized(double tol) const noexcept {
  return std::abs(norm_squared() - 1.0) <= tol;
}

StateVector operator+(const StateVector& u, const StateVector& v) {
  require_same_dim(u.dim_, v.dim_, "StateVector +");
  StateVector r = u;
  for (int k = 0; k < r.dim_; ++k) r.amps_[static_cast<std::size_t>(k)] += v[k];
  return r;
}

StateVector operator-(const StateVector& u, const StateVector& v) {
  return u + Complex(-1.0) * v;
}

StateVector operator*(Complex c, const StateVector& v) {
  StateVector r = v;
  for (auto& a : r.amps_) a *= c;
  return r;
}

Operator::Operator(int dim) : dim_(dim) { require_supported_dim(dim, "Operator"); }

Operator::Operator(int dim, std::initializer_list<Complex> row_major) : Operator(dim) {
  if (static_cast<int>(row_major.size()) != dim * dim) {
    throw DimensionError(
        fmt::format("Operator: {} entries given for a {}x{} operator", row_major.size(), dim, dim));
  }
  std::copy(row_major.begin(), row_major.end(), m_.begin());
}

Operator Operator::identity(int dim) {
  Operator op(dim);
  for (int k = 0; k < dim; ++k) op(k, k) = 1.0;
  return op;
}

Operator operator+(const Operator& a, const Operator& b) {
  require_same_dim(a.dim_, b.dim_, "Operator +");
  Operator r = a;
  for (std::size_t k = 0; k < r.m_.size(); ++k) r.m_[k] += b.m_[k];
  return r;
}

Operator operator-(const Operator& a, const Operator& b) { return a + Complex(-1.0) * b; }

Operator operator*(Complex c, const Operator& a) {
  Operator r = a;
  for (auto& x : r.m_) x *= c;
  return r;
}

Operator operator*(const Operator& a, const Operator& b) {
  require_same_dim(a.dim_, b.dim_, "Operator *");
  const int n = a.dim_;
  Operator r(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < n; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  }
  return r;
}

StateVector operator*(const Operator& a, const StateVector& v) {
  require_same_dim(a.dim_, v.dim(), "Operator * StateVector");
  std::array<Complex, 4> out{};
  for (int i = 0; i < a.dim_; ++i) {
    Complex s = 0.0;
    for (int k = 0; k < a.dim_; ++k) s += a(i, k) * v[k];
    out[static_cast<std::size_t>(i)] = s;
  }
  return StateVector(std::span<const Complex>(out.data(), static_cast<std::size_t>(a.dim_)));
}

Operator kron(const Operator& a, const Operator& b) {
  require_dim(a.dim(), 2, "kron");
  require_dim(b.dim(), 2, "kron");
  Operator r(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

StateVector kron(const StateVector& a, const StateVector& b) {
  require_dim(a.dim(), 2, "kron");
  require_dim(b.dim(), 2, "kron");
  return {a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
}

Operator dagger(const Operator& op) {
  Operator r(op.dim());
  for (int i = 0; i < op.dim(); ++i)
    for (int j = 0; j < op.dim(); ++j) r(i, j) = std::conj(op(j, i));
  return r;
}

Complex trace(const Operator& op) {
  Complex s = 0.0;
  for (int k = 0; k < op.dim(); ++k) s += op(k, k);
  return s;
}

Operator outer(const StateVector& u, const StateVector& v) {
  require_same_dim(u.dim(), v.dim(), "outer");
  Operator r(u.dim());
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < u.dim(); ++j) r(i, j) = u[i] * std::conj(v[j]);
  return r;
}

Operator partial_trace(const Operator& rho, Keep keep) {
  require_dim(rho.dim(), 4, "partial_trace");
  Operator r(2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < 2; ++k) {
        s += keep == Keep::first ? rho(2 * i + k, 2 * j + k) : rho(2 * k + i, 2 * k + j);
      }
      r(i, j) = s;
    }
  }
  return r;
}

Complex inner(const StateVector& u, const StateVector& v) {
  require_same_dim(u.dim(), v.dim(), "inner");
  Complex s = 0.0;
  for (int k = 0; k < u.dim(); ++k) s += std::conj(u[k]) * v[k];
  return s;
}

Complex expectation(const Operator& op, const StateVector& s) { return inner(s, op * s); }

double overlap(const StateVector& u, const StateVector& v) { return std::abs(inner(u, v)); }

double phase_aligned_distance(const StateVector& u, const StateVector& v) {
  const Complex uv = inner(v, u);
  const Complex phase = std::abs(uv) > 0.0 ? uv / std::abs(uv) : Complex(1.0);
  return max_abs_diff(u, phase * v);
}

double max_abs(const Operator& op) {
  double m = 0.0;
  for (int i = 0; i < op.dim(); ++i)
    for (int j = 0; j < op.dim(); ++j) m = std::max(m, std::abs(op(i, j)));
  return m;
}

double max_abs_diff(const Operator& a, const Operator& b) { return max_abs(a - b); }

double max_abs_diff(const StateVector& a, const StateVector& b) {
  require_same_dim(a.dim(), b.dim(), "max_abs_diff");
  double m = 0.0;
  for (int k = 0; k < a.dim(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

std::array<double, 2> hermitian_eigenvalues(const Operator& op) {
  require_dim(op.dim(), 2, "hermitian_eigenvalues");
  const double a = op(0, 0).real();
  const double d = op(1, 1).real();
  const double mean = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), std::abs(op(0, 1)));
  return {mean - radius, mean + radius};
}

namespace pauli {
Operator identity() { return Operator::identity(2); }
Operator x() { return Operator(2, {0.0, 1.0, 1.0, 0.0}); }
Operator y() { return Operator(2, {0.0, -kI, kI, 0.0}); }
Operator z() { return Operator(2, {1.0, 0.0, 0.0, -1.0}); }
}  // namespace pauli

}  // namespace ejm::linalg
