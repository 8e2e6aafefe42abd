#include "qginv/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace qginv {

double q_number(long long n, double q) {
  if (n < 0) throw input_error("q_number: n must be nonnegative");
  if (!(q > 0.0) || q > 1.0) throw input_error("q_number: q must lie in (0,1]");
  if (q == 1.0) return static_cast<double>(n);
  const double nn = static_cast<double>(n);
  return (std::pow(q, -nn) - std::pow(q, nn)) / (1.0 / q - q);
}

std::optional<Rational> recognize_rational(double x, long long max_denominator,
                                           double rel_tol) {
  if (max_denominator < 1) throw input_error("recognize_rational: max_denominator < 1");
  if (!(rel_tol > 0.0)) throw input_error("recognize_rational: rel_tol must be positive");
  if (!std::isfinite(x)) return std::nullopt;

  const double tol = rel_tol * std::max(1.0, std::fabs(x));
  // Convergent recurrence h_k = a_k h_{k-1} + h_{k-2}, likewise for k_k.
  BigInt h_prev = 1, k_prev = 0;  // index -1
  BigInt h_pprev = 0, k_pprev = 1;  // index -2
  double y = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double fl = std::floor(y);
    if (std::fabs(fl) > 9e18) return std::nullopt;  // coefficient out of integer range
    const BigInt a(static_cast<long long>(fl));
    BigInt h = a * h_prev + h_pprev;
    BigInt k = a * k_prev + k_pprev;
    if (k > max_denominator) return std::nullopt;
    const double approx = h.convert_to<double>() / k.convert_to<double>();
    if (std::fabs(x - approx) <= tol) return Rational(h, k);
    const double frac = y - fl;
    if (frac <= 1e-18) return std::nullopt;  // expansion terminated
    y = 1.0 / frac;
    h_pprev = h_prev;
    k_pprev = k_prev;
    h_prev = std::move(h);
    k_prev = std::move(k);
  }
  return std::nullopt;
}

HermitianMatrix::HermitianMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {
  if (n == 0) throw input_error("hermitian matrix: dimension must be >= 1");
}

void HermitianMatrix::set(std::size_t i, std::size_t j, std::complex<double> v) {
  if (i == j) v = std::complex<double>(v.real(), 0.0);
  a_[i * n_ + j] = v;
  a_[j * n_ + i] = std::conj(v);
}

HermitianMatrix HermitianMatrix::from_entries(
    std::size_t n, std::span<const std::complex<double>> row_major) {
  if (row_major.size() != n * n)
    throw input_error("hermitian matrix: expected n*n entries");
  HermitianMatrix m(n);
  double scale = 0.0;
  for (const auto& z : row_major) scale = std::max(scale, std::abs(z));
  const double tol = 1e-12 * std::max(1.0, scale);
  for (std::size_t i = 0; i < n; ++i) {
    if (std::fabs(row_major[i * n + i].imag()) > tol)
      throw input_error("hermitian matrix: diagonal entry has nonreal part");
    for (std::size_t j = i; j < n; ++j) {
      const auto upper = row_major[i * n + j];
      const auto lower = row_major[j * n + i];
      if (std::abs(upper - std::conj(lower)) > 2.0 * tol)
        throw input_error("hermitian matrix: entries are not conjugate-symmetric");
      m.set(i, j, 0.5 * (upper + std::conj(lower)));
    }
  }
  return m;
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> values) {
  HermitianMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m.set(i, i, values[i]);
  return m;
}

double HermitianMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

namespace {

double offdiag_norm(const std::vector<std::complex<double>>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) s += std::norm(a[p * n + q]);
  return std::sqrt(s);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& m,
                                          double threshold_factor, int max_sweeps) {
  const std::size_t n = m.dim();
  if (n > 64) throw input_error("hermitian_eigenvalues: dimension > 64 not supported");
  std::vector<std::complex<double>> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m.at(i, j);

  std::vector<double> ev(n);
  const double norm = m.frobenius_norm();
  if (norm == 0.0) return ev;  // zero matrix
  const double thresh = threshold_factor * norm;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (offdiag_norm(a, n) <= thresh) {
      for (std::size_t i = 0; i < n; ++i) ev[i] = a[i * n + i].real();
      std::sort(ev.begin(), ev.end());
      return ev;
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const std::complex<double> g = a[p * n + q];
        const double ag = std::abs(g);
        if (ag == 0.0) continue;
        // Phase out a_pq, then a real Jacobi rotation on [[alpha,|g|],[|g|,beta]].
        const std::complex<double> u = g / ag;
        const double alpha = a[p * n + p].real();
        const double beta = a[q * n + q].real();
        const double tau = (beta - alpha) / (2.0 * ag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::fabs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const std::complex<double> vpp = c, vpq = s;
        const std::complex<double> vqp = -std::conj(u) * s, vqq = std::conj(u) * c;
        for (std::size_t k = 0; k < n; ++k) {
          const auto akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = akp * vpp + akq * vqp;
          a[k * n + q] = akp * vpq + akq * vqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const auto apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = std::conj(vpp) * apk + std::conj(vqp) * aqk;
          a[q * n + k] = std::conj(vpq) * apk + std::conj(vqq) * aqk;
        }
        a[p * n + p] = a[p * n + p].real();
        a[q * n + q] = a[q * n + q].real();
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
      }
    }
  }
  throw numeric_error("hermitian_eigenvalues: no convergence after " +
                      std::to_string(max_sweeps) + " sweeps");
}

}  // namespace qginv
