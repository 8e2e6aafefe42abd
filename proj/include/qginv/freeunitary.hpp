#pragma once

#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qginv/fusionring.hpp"
#include "qginv/numerics.hpp"
#include "qginv/subgroups.hpp"

namespace qginv {

/// Invertible complex parameter matrix, N >= 2.
class FMatrix {
 public:
  FMatrix(std::size_t n, std::vector<std::complex<double>> row_major);
  static FMatrix diagonal(std::span<const double> values);
  /// {"n":3,"entries":[[re,im],...]} row-major; plain numbers are taken as real.
  static FMatrix from_json(const nlohmann::json& j);

  std::size_t dim() const { return n_; }
  const std::complex<double>& at(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }
  HermitianMatrix gram() const;  // F*F

 private:
  std::size_t n_;
  std::vector<std::complex<double>> a_;
};

/// Spectrum of the positive intertwiner of the fundamental class, either as
/// exact powers of a single base in (0,1) or as positive floats.  Both modes
/// satisfy the balance Tr(rho) = Tr(rho^{-1}) within 1e-9 relative; an
/// unchecked constructor exists for exploratory data and is flagged.
class RhoSpectrum {
 public:
  enum class Mode { Exact, Float };

  static RhoSpectrum exact(double base, std::vector<Rational> exponents);
  static RhoSpectrum exact_unchecked(double base, std::vector<Rational> exponents);
  static RhoSpectrum floats(std::vector<double> values);
  /// {"base":0.5,"exponents":["2","7","-8"]} (rational strings or integers), or
  /// {"values":[...]} for float mode.  "check_balance":false selects the raw form.
  static RhoSpectrum from_json(const nlohmann::json& j);

  Mode mode() const { return mode_; }
  bool balance_checked() const { return balance_checked_; }
  double base() const;
  const std::vector<Rational>& exponents() const;
  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool is_kac(double tol = 1e-10) const;

 private:
  Mode mode_ = Mode::Float;
  double base_ = 0.0;
  std::vector<Rational> exponents_;
  std::vector<double> values_;
  bool balance_checked_ = true;
};

/// lambda = sqrt(Tr((F*F)^{-1}) / Tr(F*F)) from the eigenvalues of F*F.
double lambda_factor(std::span<const double> gram_eigenvalues);

/// Spectrum of lambda * F*F (float mode); rejects numerically singular F.
RhoSpectrum rho_spectrum_from_f(const FMatrix& f, const Tolerances& tol = {});

/// Common value of the T_tau / T_tauInn / T_tauAInn invariants:
/// intersection of (2pi/log L) Z over ratios L != 1 of spectrum values.
RealSubgroup t_tau_family(const RhoSpectrum& s, const Tolerances& tol = {});

/// Modular-element invariant of the dual: intersection of (pi/log rho_i) Z
/// over spectrum values different from 1.
RealSubgroup mod_dual(const RhoSpectrum& s, const Tolerances& tol = {});

struct FactorType {
  enum class Kind { TypeII1, TypeIIIMu, TypeIII1 };
  Kind kind;
  double mu = 0.0;                  // TypeIIIMu only
  bool resolution_limited = false;  // float-mode III_1 is only certified at resolution
  std::string str() const;
};

/// Murray-von Neumann-Connes type read off from the multiplicative group
/// generated by pairwise products rho_i rho_j, together with the Connes T.
std::pair<FactorType, RealSubgroup> factor_classification(const RhoSpectrum& s,
                                                          const Tolerances& tol = {});

/// Trichotomy check between the factor type and the dual modular invariant:
/// II_1 -> full line, III_mu -> generator in {pi/|log mu|, 2pi/|log mu|},
/// III_1 -> {0}.  Exact mode only.
bool proposition9_check(const RhoSpectrum& s, const Tolerances& tol = {});

struct IccReport {
  int n = 1;
  double c = 0.0;               // max(||rho - 1||, ||rho^{-1} - 1||) of the fundamental
  double rho_a2b_norm = 1.0;    // ||rho_{a2b}||
  double rho_a2b_sq_dev = 0.0;  // ||rho_{a2b}^2 - 1||
  double D_n = 0.0;
  bool exact_condition_holds = false;
  bool corollary2_holds = false;
};

/// Commutation-triviality certificate constants for the n-fold coproduct.
IccReport icc_constants(const FMatrix& f, int n, const Tolerances& tol = {});

/// Extremes of the tensor spectrum of rho_w over the letters of w, with
/// per-letter factors lambda*x (alpha) and 1/(lambda*x) (beta).
std::pair<double, double> word_rho_range(const Word& w,
                                         std::span<const double> gram_eigenvalues,
                                         double lambda);
double word_rho_norm(const Word& w, std::span<const double> gram_eigenvalues,
                     double lambda);
double word_rho_sq_deviation(const Word& w, std::span<const double> gram_eigenvalues,
                             double lambda);
/// D_{w,n} = ||rho_w^2 - 1|| (||rho_w||^{2(n+1)} - 1)/(||rho_w||^2 - 1), 0 when rho_w = 1.
double d_word_n(const Word& w, std::span<const double> gram_eigenvalues, double lambda,
                int n);

/// Bisection solve of sum_i mu^{e_i} = sum_i mu^{-e_i} for mu in (0.01, 0.99);
/// interval tolerance 1e-13.  Throws numeric_error when no interior root brackets.
double solve_balance_base(std::span<const Rational> exponents, double tol = 1e-13);

}  // namespace qginv
