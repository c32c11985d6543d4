#pragma once

// Cloning engine for the Fourier-dual family of 1 -> 2 cloners.
//
// A cloner is defined by an N x N amplitude matrix a_{m,n} (row m = shift,
// column n = phase). Clone A is the Weyl mixture with weights p = |a|^2,
// clone B the mixture with q = |b|^2 where b is the 2-D Fourier dual of a.

#include "qclone/hilbert.hpp"
#include "qclone/mub.hpp"

#include <cstddef>

namespace qclone {

class ProbabilityMatrix;

/// Normalized complex amplitudes a_{m,n}; sum |a|^2 == 1 within kTolerance.
class AmplitudeMatrix {
public:
  explicit AmplitudeMatrix(CMatrix a);

  /// a = delta_{m,0} delta_{n,0}: clone A is perfect.
  static AmplitudeMatrix identity(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(a_.rows()); }
  const CMatrix& entries() const { return a_; }
  Complex operator()(std::size_t m, std::size_t n) const {
    return a_(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
  }

  ProbabilityMatrix probabilities() const;

private:
  CMatrix a_;
};

/// Nonnegative real weights over the N^2 Weyl errors, summing to 1.
class ProbabilityMatrix {
public:
  explicit ProbabilityMatrix(RMatrix p);

  /// |a|^2 with negative rounding dust (> -1e-14) clamped to zero.
  static ProbabilityMatrix from_amplitudes(const CMatrix& a);

  std::size_t dim() const { return static_cast<std::size_t>(p_.rows()); }
  const RMatrix& entries() const { return p_; }
  double operator()(std::size_t m, std::size_t n) const {
    return p_(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
  }

private:
  RMatrix p_;
};

struct CloneOutputs {
  DensityMatrix rho_a;
  DensityMatrix rho_b;
  ProbabilityMatrix p;
  ProbabilityMatrix q;
};

/// Pure state of reference R, clones A and B and machine C, in R,A,B,C order.
class JointState {
public:
  JointState(StateVector psi, std::size_t local_dim);

  const StateVector& state() const { return psi_; }
  std::size_t local_dim() const { return n_; }

private:
  StateVector psi_;
  std::size_t n_;
};

enum class FourierDirection { forward, inverse };

/// b_{m,n} = (1/N) sum_{x,y} exp(2 pi i (n x - m y) / N) a_{x,y}
AmplitudeMatrix fourier_dual(const AmplitudeMatrix& a);
/// Inverse of fourier_dual. The dual map squares to the identity, so this
/// applies the same kernel.
AmplitudeMatrix inverse_fourier_dual(const AmplitudeMatrix& b);

/// Row-wise DFT. forward: c^F_{m,n} = N^{-1/2} sum_k exp(-2 pi i n k / N) c_{m,k};
/// inverse uses the opposite sign.
AmplitudeMatrix row_fourier(const AmplitudeMatrix& c, FourierDirection direction);

/// sum_{m,n} p_{m,n} U_{m,n}|psi><psi|U_{m,n}^dagger
DensityMatrix weyl_mixture(const ProbabilityMatrix& p, const StateVector& psi);

/// Clone states from the closed-form Weyl mixtures.
CloneOutputs clone_outputs_mixture(const AmplitudeMatrix& a, const StateVector& psi);

/// sum_{m,n} a_{m,n} |B_{m,n}>_{RA} |B_{m,-n}>_{BC}
JointState joint_state(const AmplitudeMatrix& a);
/// sum_{m,n} b_{m,n} |B_{m,n}>_{RB} |B_{m,-n}>_{AC}, reordered to R,A,B,C.
JointState joint_state_from_dual(const AmplitudeMatrix& b);

/// Projects R of joint_state(a) onto |psi*>, rescales by sqrt(N) and traces
/// out the other parties to obtain both clones.
CloneOutputs clone_by_projection(const AmplitudeMatrix& a, const StateVector& psi);

/// Fidelity and the two disturbances (overlaps with the two error states).
/// For qubits only one disturbance exists and d2 is zero.
struct BasisFidelity {
  double f = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

/// Closed-form sums for cloning any state of basis `basis_number`
/// (1..4 for qutrits, 1..3 = z, x, y for qubits).
BasisFidelity fidelity_in_basis(const ProbabilityMatrix& p, int basis_number);

/// Trigonometric closed forms for the equator states |psi_0>, |psi_1>,
/// |psi_2> of a qutrit (fidelity of |psi_0> and its two disturbances).
BasisFidelity fidelity_equator(const ProbabilityMatrix& p, const EquatorParams& params);

struct EntropicCheck {
  double entropy_sum = 0.0; ///< H[p] + H[q], bits
  double bound = 0.0;       ///< log2(N^2)
  bool satisfied = false;   ///< entropy_sum >= bound - 1e-9
};

EntropicCheck entropic_check(const ProbabilityMatrix& p, const ProbabilityMatrix& q);

} // namespace qclone
