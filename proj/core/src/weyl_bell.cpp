#include "qclone/weyl_bell.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qclone {

namespace {

std::size_t reduce(long long v, std::size_t dim) {
  const auto d = static_cast<long long>(dim);
  return static_cast<std::size_t>(((v % d) + d) % d);
}

} // namespace

WeylIndex::WeylIndex(long long m, long long n, std::size_t dim) : dim_(dim) {
  if (dim == 0) throw std::invalid_argument("WeylIndex: dimension must be positive");
  m_ = reduce(m, dim);
  n_ = reduce(n, dim);
}

WeylIndex WeylIndex::phase_negated() const {
  return WeylIndex(static_cast<long long>(m_), -static_cast<long long>(n_), dim_);
}

Complex root_of_unity(long long k, std::size_t dim) {
  const std::size_t r = reduce(k, dim);
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(dim));
}

Operator weyl_operator(const WeylIndex& idx) {
  const std::size_t N = idx.dim();
  CMatrix u = CMatrix::Zero(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
  for (std::size_t k = 0; k < N; ++k) {
    const auto row = static_cast<Eigen::Index>((k + idx.m()) % N);
    u(row, static_cast<Eigen::Index>(k)) = root_of_unity(static_cast<long long>(k * idx.n()), N);
  }
  return Operator(std::move(u));
}

StateVector bell_state(const WeylIndex& idx) {
  const std::size_t N = idx.dim();
  const double scale = 1.0 / std::sqrt(static_cast<double>(N));
  CVector v = CVector::Zero(static_cast<Eigen::Index>(N * N));
  for (std::size_t k = 0; k < N; ++k) {
    const std::size_t flat = k * N + (k + idx.m()) % N;
    v(static_cast<Eigen::Index>(flat)) = scale * root_of_unity(static_cast<long long>(k * idx.n()), N);
  }
  return StateVector(std::move(v));
}

} // namespace qclone
