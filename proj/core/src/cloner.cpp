#include "qclone/cloner.hpp"

#include "qclone/weyl_bell.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qclone {

namespace {

constexpr double kDust = 1e-14;

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

void require_square(const auto& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() < 2)
    throw std::invalid_argument(std::string(who) + ": matrix must be square with dimension >= 2");
}

void require_qutrit(const ProbabilityMatrix& p, const char* who) {
  if (p.dim() != 3) throw std::invalid_argument(std::string(who) + ": requires a qutrit (N = 3) probability matrix");
}

CMatrix dual_transform(const CMatrix& a) {
  const auto N = static_cast<std::size_t>(a.rows());
  CMatrix b = CMatrix::Zero(a.rows(), a.cols());
  for (std::size_t m = 0; m < N; ++m)
    for (std::size_t n = 0; n < N; ++n) {
      Complex acc = 0.0;
      for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y) {
          const long long phase = static_cast<long long>(n * x) - static_cast<long long>(m * y);
          acc += root_of_unity(phase, N) * a(idx(x), idx(y));
        }
      b(idx(m), idx(n)) = acc / static_cast<double>(N);
    }
  return b;
}

} // namespace

// ---------------------------------------------------------------- value types

AmplitudeMatrix::AmplitudeMatrix(CMatrix a) : a_(std::move(a)) {
  require_square(a_, "AmplitudeMatrix");
  const double n2 = a_.squaredNorm();
  if (std::abs(n2 - 1.0) > kTolerance)
    throw std::invalid_argument("AmplitudeMatrix: sum of |a_{m,n}|^2 is " + std::to_string(n2) + ", expected 1");
}

AmplitudeMatrix AmplitudeMatrix::identity(std::size_t dim) {
  CMatrix a = CMatrix::Zero(idx(dim), idx(dim));
  a(0, 0) = 1.0;
  return AmplitudeMatrix(std::move(a));
}

ProbabilityMatrix AmplitudeMatrix::probabilities() const {
  return ProbabilityMatrix::from_amplitudes(a_);
}

ProbabilityMatrix::ProbabilityMatrix(RMatrix p) : p_(std::move(p)) {
  require_square(p_, "ProbabilityMatrix");
  if (p_.minCoeff() < 0.0) throw std::invalid_argument("ProbabilityMatrix: negative entry");
  if (std::abs(p_.sum() - 1.0) > kTolerance)
    throw std::invalid_argument("ProbabilityMatrix: entries do not sum to 1");
}

ProbabilityMatrix ProbabilityMatrix::from_amplitudes(const CMatrix& a) {
  RMatrix p = a.cwiseAbs2();
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    double& v = p.data()[i];
    if (v < 0.0 && v > -kDust) v = 0.0;
  }
  return ProbabilityMatrix(std::move(p));
}

JointState::JointState(StateVector psi, std::size_t local_dim) : psi_(std::move(psi)), n_(local_dim) {
  if (n_ < 2 || psi_.dim() != n_ * n_ * n_ * n_)
    throw std::invalid_argument("JointState: state dimension must be N^4");
}

// ------------------------------------------------------------------ transforms

AmplitudeMatrix fourier_dual(const AmplitudeMatrix& a) {
  return AmplitudeMatrix(dual_transform(a.entries()));
}

AmplitudeMatrix inverse_fourier_dual(const AmplitudeMatrix& b) {
  // The kernel is symmetric under (m,n) <-> (x,y), so the map is an involution.
  return AmplitudeMatrix(dual_transform(b.entries()));
}

AmplitudeMatrix row_fourier(const AmplitudeMatrix& c, FourierDirection direction) {
  const std::size_t N = c.dim();
  const int sign = direction == FourierDirection::forward ? -1 : +1;
  const double scale = 1.0 / std::sqrt(static_cast<double>(N));
  CMatrix out = CMatrix::Zero(idx(N), idx(N));
  for (std::size_t m = 0; m < N; ++m)
    for (std::size_t n = 0; n < N; ++n) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < N; ++k)
        acc += root_of_unity(sign * static_cast<long long>(n * k), N) * c(m, k);
      out(idx(m), idx(n)) = scale * acc;
    }
  return AmplitudeMatrix(std::move(out));
}

// --------------------------------------------------------------- clone output

DensityMatrix weyl_mixture(const ProbabilityMatrix& p, const StateVector& psi) {
  const std::size_t N = p.dim();
  if (psi.dim() != N) throw std::invalid_argument("weyl_mixture: state dimension does not match cloner");
  CMatrix rho = CMatrix::Zero(idx(N), idx(N));
  for (std::size_t m = 0; m < N; ++m)
    for (std::size_t n = 0; n < N; ++n) {
      if (p(m, n) == 0.0) continue;
      const CVector moved = weyl_operator(WeylIndex(static_cast<long long>(m), static_cast<long long>(n), N))
                                .entries() *
                            psi.amplitudes();
      rho += p(m, n) * (moved * moved.adjoint());
    }
  return DensityMatrix(std::move(rho));
}

CloneOutputs clone_outputs_mixture(const AmplitudeMatrix& a, const StateVector& psi) {
  if (psi.dim() != a.dim()) throw std::invalid_argument("clone_outputs_mixture: state dimension does not match cloner");
  ProbabilityMatrix p = a.probabilities();
  ProbabilityMatrix q = fourier_dual(a).probabilities();
  DensityMatrix rho_a = weyl_mixture(p, psi);
  DensityMatrix rho_b = weyl_mixture(q, psi);
  return CloneOutputs{std::move(rho_a), std::move(rho_b), std::move(p), std::move(q)};
}

JointState joint_state(const AmplitudeMatrix& a) {
  const std::size_t N = a.dim();
  CVector psi = CVector::Zero(idx(N * N * N * N));
  for (std::size_t m = 0; m < N; ++m)
    for (std::size_t n = 0; n < N; ++n) {
      const WeylIndex w(static_cast<long long>(m), static_cast<long long>(n), N);
      psi += a(m, n) * kron(bell_state(w).amplitudes(), bell_state(w.phase_negated()).amplitudes());
    }
  return JointState(StateVector(std::move(psi)), N);
}

JointState joint_state_from_dual(const AmplitudeMatrix& b) {
  const std::size_t N = b.dim();
  CVector rbac = CVector::Zero(idx(N * N * N * N));
  for (std::size_t m = 0; m < N; ++m)
    for (std::size_t n = 0; n < N; ++n) {
      const WeylIndex w(static_cast<long long>(m), static_cast<long long>(n), N);
      rbac += b(m, n) * kron(bell_state(w).amplitudes(), bell_state(w.phase_negated()).amplitudes());
    }
  const std::array<std::size_t, 4> dims{N, N, N, N};
  // factors are (R, B, A, C); output order R, A, B, C
  const std::array<std::size_t, 4> perm{0, 2, 1, 3};
  return JointState(StateVector(permute_subsystems(rbac, dims, perm)), N);
}

CloneOutputs clone_by_projection(const AmplitudeMatrix& a, const StateVector& psi) {
  const std::size_t N = a.dim();
  if (psi.dim() != N) throw std::invalid_argument("clone_by_projection: state dimension does not match cloner");
  const JointState joint = joint_state(a);
  const CVector& full = joint.state().amplitudes();

  // <psi*|_R has components psi_r.
  const std::size_t rest = N * N * N;
  CVector abc = CVector::Zero(idx(rest));
  for (std::size_t r = 0; r < N; ++r) abc += psi[r] * full.segment(idx(r * rest), idx(rest));
  abc *= std::sqrt(static_cast<double>(N));

  const double n2 = abc.squaredNorm();
  if (!(n2 > 0.5)) throw std::logic_error("clone_by_projection: projected state has vanishing norm");

  const std::array<std::size_t, 3> dims{N, N, N};
  const std::array<std::size_t, 1> keep_a{0};
  const std::array<std::size_t, 1> keep_b{1};
  DensityMatrix rho_a(reduced_density(abc, dims, keep_a));
  DensityMatrix rho_b(reduced_density(abc, dims, keep_b));
  return CloneOutputs{std::move(rho_a), std::move(rho_b), a.probabilities(), fourier_dual(a).probabilities()};
}

// -------------------------------------------------------------- closed forms

BasisFidelity fidelity_in_basis(const ProbabilityMatrix& p, int basis_number) {
  const auto P = [&](std::size_t m, std::size_t n) { return p(m, n); };
  if (p.dim() == 2) {
    double f = 0.0;
    switch (basis_number) {
    case 1: f = P(0, 0) + P(0, 1); break;
    case 2: f = P(0, 0) + P(1, 0); break;
    case 3: f = P(0, 0) + P(1, 1); break;
    default: throw std::invalid_argument("fidelity_in_basis: qubit basis number must be 1, 2 or 3");
    }
    return BasisFidelity{f, 1.0 - f, 0.0};
  }
  require_qutrit(p, "fidelity_in_basis");
  switch (basis_number) {
  case 1:
    return {P(0, 0) + P(0, 1) + P(0, 2), P(1, 0) + P(1, 1) + P(1, 2), P(2, 0) + P(2, 1) + P(2, 2)};
  case 2:
    return {P(0, 0) + P(1, 0) + P(2, 0), P(0, 1) + P(1, 1) + P(2, 1), P(0, 2) + P(1, 2) + P(2, 2)};
  case 3:
    return {P(0, 0) + P(1, 1) + P(2, 2), P(0, 1) + P(1, 2) + P(2, 0), P(0, 2) + P(1, 0) + P(2, 1)};
  case 4:
    return {P(0, 0) + P(1, 2) + P(2, 1), P(0, 1) + P(1, 0) + P(2, 2), P(0, 2) + P(1, 1) + P(2, 0)};
  default:
    throw std::invalid_argument("fidelity_in_basis: qutrit basis number must be 1, 2, 3 or 4");
  }
}

BasisFidelity fidelity_equator(const ProbabilityMatrix& p, const EquatorParams& params) {
  require_qutrit(p, "fidelity_equator");
  const auto P = [&](std::size_t m, std::size_t n) { return p(m, n); };
  const double a = params.alpha;
  const double b = params.beta;
  const double t = 2.0 * std::numbers::pi / 3.0;
  const auto c = [&](double shift) {
    return std::cos(a + b + shift) + std::cos(a - 2.0 * b + shift) + std::cos(b - 2.0 * a + shift);
  };
  const double c0 = c(0.0), cp = c(t), cm = c(-t);

  BasisFidelity r;
  r.f = P(0, 0) + (P(1, 0) + P(2, 0) + P(1, 2) + P(2, 1) + P(1, 1) + P(2, 2)) / 3.0 +
        2.0 / 9.0 * ((P(1, 0) + P(2, 0)) * c0 + (P(1, 2) + P(2, 1)) * cp + (P(1, 1) + P(2, 2)) * cm);
  r.d1 = P(0, 1) + (P(1, 1) + P(2, 1) + P(1, 0) + P(2, 2) + P(1, 2) + P(2, 0)) / 3.0 +
         2.0 / 9.0 * ((P(1, 1) + P(2, 1)) * c0 + (P(1, 0) + P(2, 2)) * cp + (P(1, 2) + P(2, 0)) * cm);
  r.d2 = P(0, 2) + (P(1, 2) + P(2, 2) + P(1, 1) + P(2, 0) + P(1, 0) + P(2, 1)) / 3.0 +
         2.0 / 9.0 * ((P(1, 2) + P(2, 2)) * c0 + (P(1, 1) + P(2, 0)) * cp + (P(1, 0) + P(2, 1)) * cm);
  return r;
}

EntropicCheck entropic_check(const ProbabilityMatrix& p, const ProbabilityMatrix& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("entropic_check: p and q have different dimensions");
  EntropicCheck r;
  r.entropy_sum = shannon_entropy(p.entries()) + shannon_entropy(q.entries());
  r.bound = std::log2(static_cast<double>(p.dim() * p.dim()));
  r.satisfied = r.entropy_sum >= r.bound - 1e-9;
  return r;
}

} // namespace qclone
