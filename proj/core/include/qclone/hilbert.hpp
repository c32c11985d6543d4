#pragma once

// Dense complex linear algebra for the small Hilbert spaces used by the
// cloning engine: pure states, generic operators, density matrices,
// Kronecker products and partial traces.
//
// Subsystem ordering convention: in every multi-party object the leftmost
// tensor factor is the slowest-varying (most significant) index. A state
// on R (x) A (x) B (x) C with local dimension N has flat index
//   r*N^3 + a*N^2 + b*N + c.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qclone {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;

/// Absolute tolerance for equality assertions on states and matrices.
inline constexpr double kTolerance = 1e-10;
/// Slack on eigenvalues when checking positive semidefiniteness.
inline constexpr double kPsdTolerance = 1e-9;

/// Unit-norm pure state. Construction validates the norm to kTolerance;
/// `renormalize` is the escape hatch for unnormalized amplitudes.
class StateVector {
public:
  explicit StateVector(CVector amplitudes);
  StateVector(std::initializer_list<Complex> amplitudes);

  /// Scales `amplitudes` to unit norm. Throws on a zero vector.
  static StateVector renormalize(CVector amplitudes);
  /// Computational basis state |k> of dimension `dim`.
  static StateVector basis(std::size_t dim, std::size_t k);

  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const CVector& amplitudes() const { return amps_; }
  Complex operator[](std::size_t i) const { return amps_(static_cast<Eigen::Index>(i)); }

  /// <this|other>
  Complex inner(const StateVector& other) const;
  /// Elementwise complex conjugate |psi*>.
  StateVector conjugate() const;

private:
  struct Unchecked {};
  StateVector(CVector amplitudes, Unchecked) : amps_(std::move(amplitudes)) {}

  CVector amps_;
};

/// Square complex matrix with no structural invariant beyond its shape.
class Operator {
public:
  explicit Operator(CMatrix entries);

  static Operator identity(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const CMatrix& entries() const { return m_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  Operator adjoint() const { return Operator(m_.adjoint()); }
  Operator operator*(const Operator& rhs) const;

  /// Applies a norm-preserving operator; throws if the image is not a unit
  /// vector. Use `entries()` for raw products.
  StateVector apply(const StateVector& psi) const;

  bool is_unitary(double tol = kTolerance) const;

private:
  CMatrix m_;
};

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
public:
  /// Validates hermiticity and trace (kTolerance) and eigenvalues
  /// (>= -kPsdTolerance). Throws std::invalid_argument on violation.
  explicit DensityMatrix(CMatrix entries);

  /// No validation; for intermediate arithmetic.
  static DensityMatrix unchecked(CMatrix entries);
  static DensityMatrix from_pure(const StateVector& psi);
  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const CMatrix& entries() const { return m_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }
  Complex trace() const { return m_.trace(); }

  /// True when every density-matrix invariant holds.
  bool is_valid(double tol = kTolerance) const;

private:
  struct Unchecked {};
  DensityMatrix(CMatrix entries, Unchecked) : m_(std::move(entries)) {}

  CMatrix m_;
};

// Kronecker product, left factor slow.
CMatrix kron(const CMatrix& a, const CMatrix& b);
CVector kron(const CVector& a, const CVector& b);

StateVector tensor(const StateVector& a, const StateVector& b);
Operator tensor(const Operator& a, const Operator& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced density matrix over the subsystems listed in `keep` (kept in
/// ascending order). Throws std::invalid_argument when prod(dims) does not
/// match, `keep` is empty, or contains duplicates / out-of-range entries.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

/// Same as above on a raw matrix; no normalization or validation.
CMatrix partial_trace(const CMatrix& m, std::span<const std::size_t> dims,
                      std::span<const std::size_t> keep);

/// Reduced density matrix of the pure (possibly unnormalized) vector `psi`,
/// computed as M M^dagger without forming |psi><psi|.
CMatrix reduced_density(const CVector& psi, std::span<const std::size_t> dims,
                        std::span<const std::size_t> keep);

/// Reorders tensor factors: output factor j is input factor perm[j].
CVector permute_subsystems(const CVector& psi, std::span<const std::size_t> dims,
                           std::span<const std::size_t> perm);

/// <psi|rho|psi>. Throws on dimension mismatch or if the imaginary part
/// exceeds kTolerance.
double fidelity(const StateVector& psi, const DensityMatrix& rho);

/// Shannon entropy in bits, with 0 log 0 = 0. Entries must be >= -1e-12 and
/// sum to 1 within kTolerance.
double shannon_entropy(std::span<const double> p);
double shannon_entropy(const RMatrix& p);

/// |<u|v>| > 1 - tol, i.e. equal up to a global phase.
bool equal_up_to_phase(const StateVector& u, const StateVector& v, double tol = kTolerance);

} // namespace qclone
