#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qginv/rational.hpp"

namespace qginv {

/// Numerical knobs shared by float-mode operations.
///
/// rel_tol is the documented default for direct recognize_rational use.  The
/// float-mode witnessing paths (generator intersection, factor lattices) use
/// the tighter ratio_rel_tol: at denominator bound 1e6 a continued-fraction
/// convergent approximates any real within 1e-9 (error < 1/q^2 once q exceeds
/// 3.2e4), so a looser bound would never witness incommensurability.
struct Tolerances {
  double rel_tol = 1e-9;
  long long max_denominator = 1000000;
  double eig_threshold = 1e-13;   // Jacobi off-diagonal cutoff, relative to ||M||
  double kac_tol = 1e-10;         // |rho - 1| below this is treated as 1
  double ratio_rel_tol = 1e-12;   // rationality witness for generator/log ratios
};

/// [n]_q = (q^{-n} - q^n)/(q^{-1} - q); returns n at the Kac limit q = 1.
double q_number(long long n, double q);

/// First continued-fraction convergent p/q with q <= max_denominator and
/// |x - p/q| <= rel_tol * max(1, |x|).  Empty when no convergent qualifies.
std::optional<Rational> recognize_rational(double x, long long max_denominator,
                                           double rel_tol);

/// Dense Hermitian matrix, row-major.  Construction symmetrizes the input and
/// rejects entries violating a_ij = conj(a_ji) beyond 1e-12 of the entry scale.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(std::size_t n);
  static HermitianMatrix from_entries(std::size_t n,
                                      std::span<const std::complex<double>> row_major);
  static HermitianMatrix diagonal(std::span<const double> values);

  std::size_t dim() const { return n_; }
  const std::complex<double>& at(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }
  /// Sets a_ij and a_ji together.
  void set(std::size_t i, std::size_t j, std::complex<double> v);
  double frobenius_norm() const;

 private:
  std::size_t n_;
  std::vector<std::complex<double>> a_;
};

/// Ascending eigenvalues by cyclic Jacobi with complex rotations.
/// Dimension is capped at 64; non-convergence after max_sweeps throws numeric_error.
std::vector<double> hermitian_eigenvalues(const HermitianMatrix& m,
                                          double threshold_factor = 1e-13,
                                          int max_sweeps = 100);

}  // namespace qginv
