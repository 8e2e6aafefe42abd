#include "qginv/freeunitary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qginv {

FMatrix::FMatrix(std::size_t n, std::vector<std::complex<double>> row_major)
    : n_(n), a_(std::move(row_major)) {
  if (n_ < 2) throw input_error("F matrix: dimension must be >= 2");
  if (a_.size() != n_ * n_) throw input_error("F matrix: expected n*n entries");
  for (const auto& z : a_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw input_error("F matrix: entries must be finite");
}

FMatrix FMatrix::diagonal(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::complex<double>> a(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] = values[i];
  return FMatrix(n, std::move(a));
}

FMatrix FMatrix::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw input_error("F matrix json: expected object with \"n\" and \"entries\"");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 2)
    throw input_error("F matrix json: \"n\" must be an integer >= 2");
  const auto n = j["n"].get<std::size_t>();
  const auto& ent = j["entries"];
  if (!ent.is_array() || ent.size() != n * n)
    throw input_error("F matrix json: \"entries\" must hold n*n values");
  std::vector<std::complex<double>> a;
  a.reserve(n * n);
  for (std::size_t k = 0; k < ent.size(); ++k) {
    const auto& e = ent[k];
    if (e.is_number()) {
      a.emplace_back(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      a.emplace_back(e[0].get<double>(), e[1].get<double>());
    } else {
      throw input_error("F matrix json: entry " + std::to_string(k) +
                        " is not a number or [re,im] pair");
    }
  }
  return FMatrix(n, std::move(a));
}

HermitianMatrix FMatrix::gram() const {
  HermitianMatrix g(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i; j < n_; ++j) {
      std::complex<double> s = 0.0;
      for (std::size_t k = 0; k < n_; ++k) s += std::conj(at(k, i)) * at(k, j);
      g.set(i, j, s);
    }
  }
  return g;
}

namespace {

void check_balance(std::span<const double> values) {
  double sum = 0.0, inv_sum = 0.0;
  for (double v : values) {
    sum += v;
    inv_sum += 1.0 / v;
  }
  if (std::fabs(sum - inv_sum) > 1e-9 * std::max(sum, inv_sum))
    throw input_error("rho spectrum: trace balance Tr(rho) = Tr(rho^{-1}) violated");
}

std::vector<double> exact_values(double base, std::span<const Rational> exps) {
  std::vector<double> v;
  v.reserve(exps.size());
  for (const auto& e : exps) v.push_back(std::pow(base, e.to_double()));
  return v;
}

}  // namespace

RhoSpectrum RhoSpectrum::exact(double base, std::vector<Rational> exponents) {
  RhoSpectrum s = exact_unchecked(base, std::move(exponents));
  check_balance(s.values_);
  s.balance_checked_ = true;
  return s;
}

RhoSpectrum RhoSpectrum::exact_unchecked(double base, std::vector<Rational> exponents) {
  if (!(base > 0.0) || !(base < 1.0))
    throw input_error("rho spectrum: base must lie in (0,1)");
  if (exponents.empty()) throw input_error("rho spectrum: empty exponent list");
  RhoSpectrum s;
  s.mode_ = Mode::Exact;
  s.base_ = base;
  s.values_ = exact_values(base, exponents);
  s.exponents_ = std::move(exponents);
  s.balance_checked_ = false;
  return s;
}

RhoSpectrum RhoSpectrum::floats(std::vector<double> values) {
  if (values.empty()) throw input_error("rho spectrum: empty value list");
  for (double v : values)
    if (!(v > 0.0) || !std::isfinite(v))
      throw input_error("rho spectrum: values must be positive");
  check_balance(values);
  RhoSpectrum s;
  s.mode_ = Mode::Float;
  s.values_ = std::move(values);
  return s;
}

RhoSpectrum RhoSpectrum::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw input_error("spectrum json: expected an object");
  if (j.contains("values")) {
    if (!j["values"].is_array()) throw input_error("spectrum json: \"values\" must be an array");
    std::vector<double> v;
    for (const auto& e : j["values"]) {
      if (!e.is_number()) throw input_error("spectrum json: values must be numbers");
      v.push_back(e.get<double>());
    }
    return floats(std::move(v));
  }
  if (!j.contains("base") || !j.contains("exponents"))
    throw input_error("spectrum json: expected \"base\" and \"exponents\" (or \"values\")");
  if (!j["base"].is_number()) throw input_error("spectrum json: \"base\" must be a number");
  const double base = j["base"].get<double>();
  if (!j["exponents"].is_array())
    throw input_error("spectrum json: \"exponents\" must be an array");
  std::vector<Rational> exps;
  for (const auto& e : j["exponents"]) {
    std::optional<Rational> r;
    if (e.is_string()) {
      r = Rational::parse(e.get<std::string>());
    } else if (e.is_number_integer()) {
      r = Rational(e.get<long long>());
    }
    if (!r)
      throw input_error("spectrum json: exponent " + e.dump() +
                        " is not an integer or \"p/q\" string");
    exps.push_back(*r);
  }
  const bool checked = !j.contains("check_balance") || j["check_balance"].get<bool>();
  return checked ? exact(base, std::move(exps)) : exact_unchecked(base, std::move(exps));
}

double RhoSpectrum::base() const {
  if (mode_ != Mode::Exact) throw input_error("rho spectrum: no base in float mode");
  return base_;
}

const std::vector<Rational>& RhoSpectrum::exponents() const {
  if (mode_ != Mode::Exact) throw input_error("rho spectrum: no exponents in float mode");
  return exponents_;
}

bool RhoSpectrum::is_kac(double tol) const {
  if (mode_ == Mode::Exact) {
    for (const auto& e : exponents_)
      if (!e.is_zero()) return false;
    return true;
  }
  for (double v : values_)
    if (std::fabs(v - 1.0) > tol) return false;
  return true;
}

double lambda_factor(std::span<const double> gram_eigenvalues) {
  double sum = 0.0, inv_sum = 0.0;
  for (double x : gram_eigenvalues) {
    sum += x;
    inv_sum += 1.0 / x;
  }
  return std::sqrt(inv_sum / sum);
}

RhoSpectrum rho_spectrum_from_f(const FMatrix& f, const Tolerances& tol) {
  auto x = hermitian_eigenvalues(f.gram(), tol.eig_threshold);
  if (!(x.back() > 0.0) || x.front() <= 1e-10 * x.back())
    throw input_error("F matrix is numerically singular");
  const double lambda = lambda_factor(x);
  for (double& v : x) v *= lambda;
  return RhoSpectrum::floats(std::move(x));
}

RealSubgroup t_tau_family(const RhoSpectrum& s, const Tolerances& tol) {
  if (s.is_kac(tol.kac_tol)) return RealSubgroup::full_line();
  if (s.mode() == RhoSpectrum::Mode::Exact) {
    std::vector<Rational> diffs;
    const auto& e = s.exponents();
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j)
        if (e[i] != e[j]) diffs.push_back(e[i] - e[j]);
    if (diffs.empty()) return RealSubgroup::full_line();  // all ratios are 1
    return cyclic_intersection_exact(
        ExactGenerator{Rational(2), UnitSymbol::pi_over_log(s.base())}, diffs);
  }
  RealSubgroup acc = RealSubgroup::full_line();
  const auto& v = s.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const double ratio = v[i] / v[j];
      if (std::fabs(ratio - 1.0) <= tol.kac_tol) continue;
      acc = intersect(
          acc, RealSubgroup::cyclic(2.0 * std::numbers::pi / std::fabs(std::log(ratio))),
          tol);
    }
  }
  return acc;
}

RealSubgroup mod_dual(const RhoSpectrum& s, const Tolerances& tol) {
  if (s.is_kac(tol.kac_tol)) return RealSubgroup::full_line();
  if (s.mode() == RhoSpectrum::Mode::Exact) {
    std::vector<Rational> nonzero;
    for (const auto& e : s.exponents())
      if (!e.is_zero()) nonzero.push_back(e);
    if (nonzero.empty()) return RealSubgroup::full_line();
    return cyclic_intersection_exact(
        ExactGenerator{Rational(1), UnitSymbol::pi_over_log(s.base())}, nonzero);
  }
  RealSubgroup acc = RealSubgroup::full_line();
  for (double v : s.values()) {
    if (std::fabs(v - 1.0) <= tol.kac_tol) continue;
    acc = intersect(acc,
                    RealSubgroup::cyclic(std::numbers::pi / std::fabs(std::log(v))), tol);
  }
  return acc;
}

std::string FactorType::str() const {
  switch (kind) {
    case Kind::TypeII1: return "II_1";
    case Kind::TypeIIIMu: return "III_mu";
    case Kind::TypeIII1: return "III_1";
  }
  return "?";
}

std::pair<FactorType, RealSubgroup> factor_classification(const RhoSpectrum& s,
                                                          const Tolerances& tol) {
  if (s.is_kac(tol.kac_tol))
    return {FactorType{FactorType::Kind::TypeII1}, RealSubgroup::full_line()};

  if (s.mode() == RhoSpectrum::Mode::Exact) {
    std::vector<Rational> sums;
    const auto& e = s.exponents();
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i; j < e.size(); ++j) {
        const Rational sum = e[i] + e[j];
        if (!sum.is_zero()) sums.push_back(sum);
      }
    if (sums.empty())
      throw numeric_error("factor_classification: non-Kac spectrum with all pairwise "
                          "exponent sums zero contradicts the trace balance");
    const Rational g = rational_gcd(sums);
    const double mu = std::pow(s.base(), g.to_double());
    auto t = RealSubgroup::cyclic(
        ExactGenerator{Rational(2) / g, UnitSymbol::pi_over_log(s.base())});
    return {FactorType{FactorType::Kind::TypeIIIMu, mu}, std::move(t)};
  }

  // Float mode: logs of pairwise products, then a common-lattice search.
  const auto& v = s.values();
  std::vector<double> logs;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i; j < v.size(); ++j) {
      const double prod = v[i] * v[j];
      if (std::fabs(prod - 1.0) > tol.kac_tol) logs.push_back(std::log(prod));
    }
  if (logs.empty())
    return {FactorType{FactorType::Kind::TypeII1}, RealSubgroup::full_line()};

  const double ref = *std::min_element(
      logs.begin(), logs.end(),
      [](double a, double b) { return std::fabs(a) < std::fabs(b); });
  std::vector<Rational> ratios;
  ratios.reserve(logs.size());
  for (double l : logs) {
    // |l/ref| >= 1 by choice of ref, so the witness tolerance is meaningful.
    const auto pq = recognize_rational(l / ref, tol.max_denominator, tol.ratio_rel_tol);
    if (!pq)
      return {FactorType{FactorType::Kind::TypeIII1, 0.0, /*resolution_limited=*/true},
              RealSubgroup::zero(/*resolution_limited=*/true)};
    ratios.push_back(*pq);
  }
  const double gen = std::fabs(ref) * rational_gcd(ratios).to_double();
  const double mu = std::exp(-gen);
  return {FactorType{FactorType::Kind::TypeIIIMu, mu},
          RealSubgroup::cyclic(2.0 * std::numbers::pi / gen)};
}

bool proposition9_check(const RhoSpectrum& s, const Tolerances& tol) {
  if (s.mode() != RhoSpectrum::Mode::Exact)
    throw input_error("proposition9_check: exact-mode spectrum required");
  const auto [factor, connes_t] = factor_classification(s, tol);
  const RealSubgroup m = mod_dual(s, tol);
  switch (factor.kind) {
    case FactorType::Kind::TypeII1:
      return m.is_full();
    case FactorType::Kind::TypeIII1:
      return m.is_zero();
    case FactorType::Kind::TypeIIIMu: {
      if (!m.is_cyclic()) return false;
      const double unit = std::numbers::pi / std::fabs(std::log(factor.mu));
      const double g = m.generator();
      return std::fabs(g - unit) <= 1e-9 * unit ||
             std::fabs(g - 2.0 * unit) <= 2e-9 * unit;
    }
  }
  return false;
}

std::pair<double, double> word_rho_range(const Word& w,
                                         std::span<const double> gram_eigenvalues,
                                         double lambda) {
  const double xmin = *std::min_element(gram_eigenvalues.begin(), gram_eigenvalues.end());
  const double xmax = *std::max_element(gram_eigenvalues.begin(), gram_eigenvalues.end());
  double lo = 1.0, hi = 1.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.at(i) == Letter::Alpha) {
      lo *= lambda * xmin;
      hi *= lambda * xmax;
    } else {
      lo /= lambda * xmax;
      hi /= lambda * xmin;
    }
  }
  return {lo, hi};
}

double word_rho_norm(const Word& w, std::span<const double> gram_eigenvalues,
                     double lambda) {
  return word_rho_range(w, gram_eigenvalues, lambda).second;
}

double word_rho_sq_deviation(const Word& w, std::span<const double> gram_eigenvalues,
                             double lambda) {
  const auto [lo, hi] = word_rho_range(w, gram_eigenvalues, lambda);
  return std::max(std::fabs(hi * hi - 1.0), std::fabs(lo * lo - 1.0));
}

double d_word_n(const Word& w, std::span<const double> gram_eigenvalues, double lambda,
                int n) {
  if (n < 1) throw input_error("d_word_n: n must be >= 1");
  const double norm = word_rho_norm(w, gram_eigenvalues, lambda);
  if (norm - 1.0 < 1e-10) return 0.0;  // rho_w = 1
  const double dev = word_rho_sq_deviation(w, gram_eigenvalues, lambda);
  return dev * (std::pow(norm, 2.0 * (n + 1)) - 1.0) / (norm * norm - 1.0);
}

IccReport icc_constants(const FMatrix& f, int n, const Tolerances& tol) {
  if (n < 1) throw input_error("icc_constants: n must be >= 1");
  auto x = hermitian_eigenvalues(f.gram(), tol.eig_threshold);
  if (!(x.back() > 0.0) || x.front() <= 1e-10 * x.back())
    throw input_error("F matrix is numerically singular");
  const double lambda = lambda_factor(x);

  IccReport r;
  r.n = n;
  for (double xi : x) {
    r.c = std::max(r.c, std::fabs(lambda * xi - 1.0));
    r.c = std::max(r.c, std::fabs(1.0 / (lambda * xi) - 1.0));
  }
  const Word a2b = *Word::parse("aab");
  r.rho_a2b_norm = word_rho_norm(a2b, x, lambda);  // lambda ||F*F||^2 ||(F*F)^{-1}||
  if (r.rho_a2b_norm - 1.0 < 1e-10) {
    r.rho_a2b_sq_dev = 0.0;
    r.D_n = 0.0;
  } else {
    r.rho_a2b_sq_dev = word_rho_sq_deviation(a2b, x, lambda);
    r.D_n = d_word_n(a2b, x, lambda, n);
  }

  const double first_bound = 1.0 - 1.0 / std::sqrt(2.0);
  bool holds = r.D_n < first_bound;
  if (holds) {
    const double ratio =
        2.0 * (7.0 - 4.0 * r.D_n) * r.D_n / (2.0 * (1.0 - r.D_n) * (1.0 - r.D_n) - 1.0);
    holds = ratio < 1.0 / std::sqrt(n + 1.0);
  }
  r.exact_condition_holds = holds;
  r.corollary2_holds = std::sqrt(static_cast<double>(n)) * (n + 1.0) * r.c *
                           (2.0 + r.c) * std::pow(1.0 + r.c, 4.0 + 6.0 * n) <
                       1.0 / 72.0;
  return r;
}

double solve_balance_base(std::span<const Rational> exponents, double tol) {
  if (exponents.empty()) throw input_error("solve_balance_base: empty exponent list");
  auto defect = [&](double mu) {
    double s = 0.0;
    for (const auto& e : exponents) {
      const double ed = e.to_double();
      s += std::pow(mu, ed) - std::pow(mu, -ed);
    }
    return s;
  };
  double lo = 0.01, hi = 0.99;
  double flo = defect(lo), fhi = defect(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw numeric_error("solve_balance_base: no sign change on (0.01, 0.99)");
  // Bisect to full double resolution; tol only caps the guaranteed error.
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = defect(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  if (hi - lo > tol)
    throw numeric_error("solve_balance_base: interval did not shrink below tolerance");
  return 0.5 * (lo + hi);
}

}  // namespace qginv
