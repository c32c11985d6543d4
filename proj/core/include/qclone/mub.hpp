#pragma once

// Mutually unbiased ("maximally conjugate") bases for qubits and qutrits and
// the generalized-equator family of qutrit states.

#include "qclone/hilbert.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace qclone {

enum class BasisLabel { computational, second, third, fourth, z, x, y };

std::string_view to_string(BasisLabel label);

struct Basis {
  std::size_t dim;
  std::vector<StateVector> vectors;
  BasisLabel label;

  const StateVector& operator[](std::size_t k) const { return vectors.at(k); }
};

/// Ordered collection of bases; index 0 is the computational basis.
using MubSet = std::vector<Basis>;

/// The four qutrit bases with gamma = exp(2 pi i / 3), entries exactly as
/// conventionally listed: |k'>, |k''>, |k'''> follow the computational basis.
MubSet qutrit_mubs();

/// Eigenbases of sigma_z, sigma_x, sigma_y in that order, with
/// |1''> = (i|0> + |1>)/sqrt(2).
MubSet qubit_mubs();

/// max_{i,j} | |<b_i|b_j>|^2 - delta_ij | within one basis.
double orthonormality_defect(const Basis& basis);
/// max over distinct basis pairs of | |<b_i|b'_j>|^2 - 1/N |.
double unbiasedness_defect(const MubSet& set);

/// Phases of |psi_0> = (|0> + e^{i alpha}|1> + e^{i beta}|2>)/sqrt(3), radians.
struct EquatorParams {
  double alpha = 0.0;
  double beta = 0.0;
};

/// Branch 0 is |psi_0>; branches 1 and 2 multiply the |1>,|2> amplitudes by
/// (gamma, gamma^2) and (gamma^2, gamma) respectively. The three branches
/// form an orthonormal basis for any (alpha, beta).
StateVector equator_state(const EquatorParams& params, int branch);

/// Equator phases (branch 0) reproducing state k of qutrit basis
/// `basis_number` (2, 3 or 4) up to a global phase.
EquatorParams qutrit_equator_params(int basis_number, std::size_t k);

} // namespace qclone
