#pragma once

#include <random>

#include "gcok/catalog.hpp"

namespace gcok::testing {

/// Small Gaussian rationals with a fixed seed; enough variety to catch sign slips.
class Sampler {
 public:
  explicit Sampler(unsigned seed = 20260) : rng_(seed) {}

  Rational rational() {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    return Rational(num(rng_), den(rng_));
  }
  Scalar real() { return Scalar(rational()); }
  Scalar scalar() { return {rational(), rational()}; }

  Vector vector(std::size_t n, bool complex = true) {
    Vector v(n);
    for (auto& s : v) s = complex ? scalar() : real();
    return v;
  }
  GenSection section(std::size_t n) { return {vector(n), vector(n)}; }

  Matrix matrix(std::size_t r, std::size_t c, bool complex = true) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = complex ? scalar() : real();
    return m;
  }

  Matrix invertible(std::size_t n) {
    for (;;) {
      Matrix m = matrix(n, n, false);
      if (rank(m) == n) return m;
    }
  }

  /// Random real combination of a basis of closed 2-forms.
  InvariantForm closed_two_form(const FrameContext& f) {
    InvariantForm b(f.dim(), 2);
    for (const auto& w : closed_forms(f, 2)) b += real() * w;
    return b;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

inline GenSection X(std::size_t n, std::size_t i) { return GenSection::frame_vector(n, i - 1); }
inline GenSection S(std::size_t n, std::size_t i) { return GenSection::coframe_vector(n, i - 1); }
inline const Scalar I = Scalar::i();

/// Transport of an almost contact metric structure by a change of frame P:
/// phi -> P phi P^-1, xi -> P xi, eta -> eta P^-1, g -> P^-T g P^-1. Keeps every axiom.
inline ClassicalACM transport(const ClassicalACM& a, const Matrix& p) {
  const Matrix p_inv = inverse(p);
  const Matrix eta_row = Matrix::from_rows(std::vector<Vector>{a.eta}) * p_inv;
  return {p * a.phi * p_inv, p * a.xi, eta_row.row(0), p_inv.transpose() * a.g * p_inv};
}

}  // namespace gcok::testing
