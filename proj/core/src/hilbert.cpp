#include "qclone/hilbert.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qclone {

namespace {

void require_unit_norm(const CVector& v) {
  if (v.size() == 0) throw std::invalid_argument("StateVector: empty amplitude list");
  const double n2 = v.squaredNorm();
  if (std::abs(n2 - 1.0) > kTolerance) {
    throw std::invalid_argument("StateVector: squared norm " + std::to_string(n2) +
                                " differs from 1");
  }
}

std::size_t product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>{});
}

// Split subsystem indices into sorted kept / traced lists.
struct Split {
  std::vector<std::size_t> kept;
  std::vector<std::size_t> traced;
};

Split split_subsystems(std::span<const std::size_t> dims, std::span<const std::size_t> keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  std::vector<std::size_t> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end())
    throw std::invalid_argument("partial_trace: duplicate subsystem in keep set");
  if (kept.back() >= dims.size())
    throw std::invalid_argument("partial_trace: subsystem index out of range");
  Split s;
  s.kept = std::move(kept);
  for (std::size_t i = 0; i < dims.size(); ++i)
    if (!std::binary_search(s.kept.begin(), s.kept.end(), i)) s.traced.push_back(i);
  return s;
}

// flat[k][t] = full index whose kept digits encode k and traced digits encode t.
std::vector<std::vector<Eigen::Index>> index_table(std::span<const std::size_t> dims,
                                                   const Split& s) {
  std::size_t dk = 1, dt = 1;
  for (auto i : s.kept) dk *= dims[i];
  for (auto i : s.traced) dt *= dims[i];

  std::vector<std::size_t> stride(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;) stride[i - 1] = stride[i] * dims[i];

  auto offset = [&](std::size_t code, const std::vector<std::size_t>& which) {
    std::size_t off = 0;
    for (std::size_t j = which.size(); j-- > 0;) {
      const std::size_t d = dims[which[j]];
      off += (code % d) * stride[which[j]];
      code /= d;
    }
    return off;
  };

  std::vector<std::vector<Eigen::Index>> table(dk, std::vector<Eigen::Index>(dt));
  for (std::size_t k = 0; k < dk; ++k) {
    const std::size_t ko = offset(k, s.kept);
    for (std::size_t t = 0; t < dt; ++t)
      table[k][t] = static_cast<Eigen::Index>(ko + offset(t, s.traced));
  }
  return table;
}

void check_dims(std::size_t total, std::span<const std::size_t> dims, const char* who) {
  if (dims.empty() || product(dims) != total)
    throw std::invalid_argument(std::string(who) + ": subsystem dims do not match state dimension");
}

} // namespace

// ---------------------------------------------------------------- StateVector

StateVector::StateVector(CVector amplitudes) : amps_(std::move(amplitudes)) {
  require_unit_norm(amps_);
}

StateVector::StateVector(std::initializer_list<Complex> amplitudes)
    : StateVector(CVector(Eigen::Map<const CVector>(amplitudes.begin(),
                                                    static_cast<Eigen::Index>(amplitudes.size())))) {}

StateVector StateVector::renormalize(CVector amplitudes) {
  const double n = amplitudes.norm();
  if (n == 0.0 || !std::isfinite(n)) throw std::invalid_argument("StateVector: cannot renormalize a zero vector");
  amplitudes /= n;
  return StateVector(std::move(amplitudes), Unchecked{});
}

StateVector StateVector::basis(std::size_t dim, std::size_t k) {
  if (k >= dim) throw std::out_of_range("StateVector::basis: index out of range");
  CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(k)) = 1.0;
  return StateVector(std::move(v), Unchecked{});
}

Complex StateVector::inner(const StateVector& other) const {
  if (dim() != other.dim()) throw std::invalid_argument("inner: dimension mismatch");
  return amps_.dot(other.amps_);
}

StateVector StateVector::conjugate() const {
  return StateVector(amps_.conjugate(), Unchecked{});
}

// ------------------------------------------------------------------- Operator

Operator::Operator(CMatrix entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) throw std::invalid_argument("Operator: matrix must be square and non-empty");
}

Operator Operator::identity(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return Operator(CMatrix::Identity(d, d));
}

Operator Operator::operator*(const Operator& rhs) const {
  if (dim() != rhs.dim()) throw std::invalid_argument("Operator product: dimension mismatch");
  return Operator(m_ * rhs.m_);
}

StateVector Operator::apply(const StateVector& psi) const {
  if (dim() != psi.dim()) throw std::invalid_argument("Operator::apply: dimension mismatch");
  return StateVector(CVector(m_ * psi.amplitudes()));
}

bool Operator::is_unitary(double tol) const {
  const CMatrix prod = m_.adjoint() * m_;
  return (prod - CMatrix::Identity(m_.rows(), m_.cols())).cwiseAbs().maxCoeff() < tol;
}

// -------------------------------------------------------------- DensityMatrix

DensityMatrix::DensityMatrix(CMatrix entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0)
    throw std::invalid_argument("DensityMatrix: matrix must be square and non-empty");
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kTolerance)
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
  if (std::abs(m_.trace() - Complex(1.0)) > kTolerance)
    throw std::invalid_argument("DensityMatrix: trace differs from 1");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kPsdTolerance)
    throw std::invalid_argument("DensityMatrix: matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::unchecked(CMatrix entries) {
  return DensityMatrix(std::move(entries), Unchecked{});
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
  const CVector& v = psi.amplitudes();
  return DensityMatrix(CMatrix(v * v.adjoint()), Unchecked{});
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return DensityMatrix(CMatrix(CMatrix::Identity(d, d) / static_cast<double>(dim)), Unchecked{});
}

bool DensityMatrix::is_valid(double tol) const {
  if (m_.rows() != m_.cols() || m_.rows() == 0) return false;
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(m_.trace() - Complex(1.0)) > tol) return false;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -kPsdTolerance;
}

// --------------------------------------------------------------------- tensor

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CVector kron(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  return StateVector(kron(a.amplitudes(), b.amplitudes()));
}

Operator tensor(const Operator& a, const Operator& b) {
  return Operator(kron(a.entries(), b.entries()));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix::unchecked(kron(a.entries(), b.entries()));
}

// -------------------------------------------------------------- partial trace

CMatrix partial_trace(const CMatrix& m, std::span<const std::size_t> dims,
                      std::span<const std::size_t> keep) {
  if (m.rows() != m.cols()) throw std::invalid_argument("partial_trace: matrix must be square");
  check_dims(static_cast<std::size_t>(m.rows()), dims, "partial_trace");
  const Split s = split_subsystems(dims, keep);
  const auto table = index_table(dims, s);
  const auto dk = static_cast<Eigen::Index>(table.size());
  CMatrix out = CMatrix::Zero(dk, dk);
  for (Eigen::Index i = 0; i < dk; ++i)
    for (Eigen::Index j = 0; j < dk; ++j) {
      Complex acc = 0.0;
      const auto& ri = table[static_cast<std::size_t>(i)];
      const auto& rj = table[static_cast<std::size_t>(j)];
      for (std::size_t t = 0; t < ri.size(); ++t) acc += m(ri[t], rj[t]);
      out(i, j) = acc;
    }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  return DensityMatrix(partial_trace(rho.entries(), dims, keep));
}

CMatrix reduced_density(const CVector& psi, std::span<const std::size_t> dims,
                        std::span<const std::size_t> keep) {
  check_dims(static_cast<std::size_t>(psi.size()), dims, "reduced_density");
  const Split s = split_subsystems(dims, keep);
  const auto table = index_table(dims, s);
  const auto dk = static_cast<Eigen::Index>(table.size());
  const auto dt = static_cast<Eigen::Index>(table.front().size());
  CMatrix amp(dk, dt);
  for (Eigen::Index k = 0; k < dk; ++k)
    for (Eigen::Index t = 0; t < dt; ++t)
      amp(k, t) = psi(table[static_cast<std::size_t>(k)][static_cast<std::size_t>(t)]);
  return amp * amp.adjoint();
}

CVector permute_subsystems(const CVector& psi, std::span<const std::size_t> dims,
                           std::span<const std::size_t> perm) {
  check_dims(static_cast<std::size_t>(psi.size()), dims, "permute_subsystems");
  if (perm.size() != dims.size()) throw std::invalid_argument("permute_subsystems: permutation size mismatch");
  std::vector<std::size_t> sorted(perm.begin(), perm.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw std::invalid_argument("permute_subsystems: not a permutation");

  const std::size_t n = dims.size();
  std::vector<std::size_t> out_dims(n);
  for (std::size_t j = 0; j < n; ++j) out_dims[j] = dims[perm[j]];

  CVector out(psi.size());
  std::vector<std::size_t> digits(n);
  for (Eigen::Index idx = 0; idx < psi.size(); ++idx) {
    auto code = static_cast<std::size_t>(idx);
    for (std::size_t i = n; i-- > 0;) {
      digits[i] = code % dims[i];
      code /= dims[i];
    }
    std::size_t o = 0;
    for (std::size_t j = 0; j < n; ++j) o = o * out_dims[j] + digits[perm[j]];
    out(static_cast<Eigen::Index>(o)) = psi(idx);
  }
  return out;
}

// ------------------------------------------------------------ scalar measures

double fidelity(const StateVector& psi, const DensityMatrix& rho) {
  if (psi.dim() != rho.dim()) throw std::invalid_argument("fidelity: dimension mismatch");
  const CVector& v = psi.amplitudes();
  const Complex f = v.dot(rho.entries() * v);
  if (std::abs(f.imag()) > kTolerance)
    throw std::runtime_error("fidelity: <psi|rho|psi> has a non-negligible imaginary part");
  return f.real();
}

double shannon_entropy(std::span<const double> p) {
  double total = 0.0;
  for (double x : p) {
    if (x < -1e-12) throw std::invalid_argument("shannon_entropy: negative probability");
    total += x;
  }
  if (std::abs(total - 1.0) > kTolerance)
    throw std::invalid_argument("shannon_entropy: probabilities do not sum to 1");
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log2(x);
  return h;
}

double shannon_entropy(const RMatrix& p) {
  return shannon_entropy(std::span<const double>(p.data(), static_cast<std::size_t>(p.size())));
}

bool equal_up_to_phase(const StateVector& u, const StateVector& v, double tol) {
  if (u.dim() != v.dim()) return false;
  return std::abs(u.inner(v)) > 1.0 - tol;
}

} // namespace qclone
