#include "qclone/mub.hpp"

#include "qclone/weyl_bell.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qclone {

namespace {

constexpr double kTwoPiOver3 = 2.0 * std::numbers::pi / 3.0;

StateVector qutrit_state(Complex a0, Complex a1, Complex a2) {
  const double s = 1.0 / std::sqrt(3.0);
  CVector v(3);
  v << s * a0, s * a1, s * a2;
  return StateVector(std::move(v));
}

StateVector qubit_state(Complex a0, Complex a1) {
  const double s = 1.0 / std::sqrt(2.0);
  CVector v(2);
  v << s * a0, s * a1;
  return StateVector(std::move(v));
}

Basis computational(std::size_t dim) {
  Basis b{dim, {}, dim == 2 ? BasisLabel::z : BasisLabel::computational};
  for (std::size_t k = 0; k < dim; ++k) b.vectors.push_back(StateVector::basis(dim, k));
  return b;
}

} // namespace

std::string_view to_string(BasisLabel label) {
  switch (label) {
  case BasisLabel::computational: return "computational";
  case BasisLabel::second: return "second";
  case BasisLabel::third: return "third";
  case BasisLabel::fourth: return "fourth";
  case BasisLabel::z: return "z";
  case BasisLabel::x: return "x";
  case BasisLabel::y: return "y";
  }
  return "unknown";
}

MubSet qutrit_mubs() {
  const Complex g = root_of_unity(1, 3);
  const Complex g2 = g * g;
  const Complex one = 1.0;

  MubSet set;
  set.push_back(computational(3));
  set.push_back(Basis{3,
                      {qutrit_state(one, one, one), qutrit_state(one, g, g2), qutrit_state(one, g2, g)},
                      BasisLabel::second});
  set.push_back(Basis{3,
                      {qutrit_state(one, one, g), qutrit_state(one, g, one), qutrit_state(g, one, one)},
                      BasisLabel::third});
  set.push_back(Basis{3,
                      {qutrit_state(one, one, g2), qutrit_state(one, g2, one), qutrit_state(g2, one, one)},
                      BasisLabel::fourth});
  return set;
}

MubSet qubit_mubs() {
  const Complex one = 1.0;
  const Complex i{0.0, 1.0};
  MubSet set;
  set.push_back(computational(2));
  set.push_back(Basis{2, {qubit_state(one, one), qubit_state(one, -one)}, BasisLabel::x});
  set.push_back(Basis{2, {qubit_state(one, i), qubit_state(i, one)}, BasisLabel::y});
  return set;
}

double orthonormality_defect(const Basis& basis) {
  double worst = 0.0;
  for (std::size_t i = 0; i < basis.vectors.size(); ++i)
    for (std::size_t j = 0; j < basis.vectors.size(); ++j) {
      const double overlap = std::norm(basis.vectors[i].inner(basis.vectors[j]));
      worst = std::max(worst, std::abs(overlap - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

double unbiasedness_defect(const MubSet& set) {
  double worst = 0.0;
  for (std::size_t a = 0; a < set.size(); ++a)
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      const double target = 1.0 / static_cast<double>(set[a].dim);
      for (const auto& u : set[a].vectors)
        for (const auto& v : set[b].vectors) worst = std::max(worst, std::abs(std::norm(u.inner(v)) - target));
    }
  return worst;
}

StateVector equator_state(const EquatorParams& params, int branch) {
  if (branch < 0 || branch > 2) throw std::invalid_argument("equator_state: branch must be 0, 1 or 2");
  const double alpha = std::remainder(params.alpha, 2.0 * std::numbers::pi);
  const double beta = std::remainder(params.beta, 2.0 * std::numbers::pi);
  const Complex g1 = root_of_unity(branch, 3);
  const Complex g2 = root_of_unity(2 * branch, 3);
  return qutrit_state(1.0, g1 * std::polar(1.0, alpha), g2 * std::polar(1.0, beta));
}

EquatorParams qutrit_equator_params(int basis_number, std::size_t k) {
  if (k > 2) throw std::out_of_range("qutrit_equator_params: k must be 0, 1 or 2");
  // Phases (alpha, beta) in units of 2 pi / 3, obtained by dividing each
  // basis vector by its |0> amplitude.
  static constexpr int table[3][3][2] = {
      {{0, 0}, {1, 2}, {2, 1}}, // second basis
      {{0, 1}, {1, 0}, {2, 2}}, // third basis: |2''> ~ (1, g^2, g^2)
      {{0, 2}, {2, 0}, {1, 1}}, // fourth basis: |2'''> ~ (1, g, g)
  };
  if (basis_number < 2 || basis_number > 4)
    throw std::invalid_argument("qutrit_equator_params: only bases 2, 3 and 4 lie on the equator");
  const auto& e = table[basis_number - 2][k];
  return EquatorParams{e[0] * kTwoPiOver3, e[1] * kTwoPiOver3};
}

} // namespace qclone
