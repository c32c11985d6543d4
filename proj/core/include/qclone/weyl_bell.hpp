#pragma once

// Generalized Pauli (Weyl) error operators and generalized Bell states.

#include "qclone/hilbert.hpp"

#include <cstddef>

namespace qclone {

/// Index (m, n) of a Weyl operator on an N-level system: m counts shift
/// units, n counts phase units. Both are reduced mod N on construction, so
/// negative indices such as -n are accepted.
class WeylIndex {
public:
  WeylIndex(long long m, long long n, std::size_t dim);

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  std::size_t dim() const { return dim_; }

  /// (m, -n mod N)
  WeylIndex phase_negated() const;

  friend bool operator==(const WeylIndex&, const WeylIndex&) = default;

private:
  std::size_t m_;
  std::size_t n_;
  std::size_t dim_;
};

/// exp(2 pi i k / N)
Complex root_of_unity(long long k, std::size_t dim);

/// U_{m,n} = sum_k exp(2 pi i k n / N) |k+m mod N><k|
Operator weyl_operator(const WeylIndex& idx);

/// |B_{m,n}> = N^{-1/2} sum_k exp(2 pi i k n / N) |k>|k+m mod N>
StateVector bell_state(const WeylIndex& idx);

} // namespace qclone
