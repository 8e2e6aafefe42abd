#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qginv/errors.hpp"

namespace qginv {

enum class Letter : char { Alpha = 'a', Beta = 'b' };

/// Element of the free monoid on {alpha, beta}; the empty word is the trivial class.
class Word {
 public:
  Word() = default;

  /// "abab" or "e" for the empty word.
  static std::optional<Word> parse(std::string_view text);
  static Word single(Letter l) { return Word(std::string(1, static_cast<char>(l))); }
  /// Alternating word of n letters starting with `leading`.
  static Word alternating(int n, Letter leading);

  std::size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  Letter at(std::size_t i) const { return static_cast<Letter>(s_[i]); }
  Word prefix(std::size_t len) const { return Word(s_.substr(0, len)); }
  Word suffix(std::size_t start) const { return Word(s_.substr(start)); }
  bool has_prefix(const Word& p) const { return s_.compare(0, p.s_.size(), p.s_) == 0; }

  Word operator+(const Word& o) const { return Word(s_ + o.s_); }
  std::string str() const { return s_.empty() ? "e" : s_; }

  friend bool operator==(const Word& a, const Word& b) { return a.s_ == b.s_; }
  friend bool operator!=(const Word& a, const Word& b) { return a.s_ != b.s_; }

  /// Canonical order: longer words first, then lexicographic.
  friend bool operator<(const Word& a, const Word& b) {
    if (a.s_.size() != b.s_.size()) return a.s_.size() > b.s_.size();
    return a.s_ < b.s_;
  }

 private:
  explicit Word(std::string s) : s_(std::move(s)) {}
  friend Word conjugate(const Word& w);
  std::string s_;
};

/// Multiset of irreducible classes with multiplicities (a decomposed tensor product).
class FusionSum {
 public:
  void add(const Word& w, long long mult);
  long long multiplicity(const Word& w) const;
  const std::map<Word, long long>& terms() const { return terms_; }
  long long total_terms() const;
  // Iterable directly, so a returned sum can feed a range-for safely.
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  friend bool operator==(const FusionSum& a, const FusionSum& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<Word, long long> terms_;
};

/// Conjugation: reverse the word and swap alpha <-> beta.
Word conjugate(const Word& w);

/// Tensor decomposition u^x (x) u^y = sum over x = a c, y = conj(c) b of u^{a b}.
FusionSum fuse(const Word& x, const Word& y);
FusionSum fuse(const FusionSum& x, const FusionSum& y);

struct RepParams {
  int N = 2;       // dim of the fundamental class
  double q = 1.0;  // qdim of the fundamental class is q + 1/q

  void validate() const;
};

/// Dimension function: d(empty) = 1, d(letter) = N, extended multiplicatively
/// over the fusion rule.
double dim_word(const Word& w, const RepParams& p);
/// Quantum dimension: same recursion with d(letter) = q + 1/q.
double qdim_word(const Word& w, const RepParams& p);

struct GammaBounds {
  double gamma;  // min Sp(rho)
  double Gamma;  // max Sp(rho)
};

/// Closed forms for alternating words: gamma(w^{2n}) = gamma(d)^n gamma(conj d)^n,
/// gamma(w^{2n+1}) = gamma(d)^{n+1} gamma(conj d)^n, likewise for Gamma.
/// Inputs are the fundamental bounds, with gamma(conj d) = 1/Gamma(d).
GammaBounds gamma_Gamma_alternating(int n, Letter leading, double gamma_alpha,
                                    double Gamma_alpha);

struct UnPoint {
  double gamma_n;
  double Gamma_n;
  double qdim_bound;
};

/// Distinguished irreducible sequence built from a 2-dimensional class of
/// quantum dimension q + 1/q:  n = 1 gives the fundamental data, n >= 2 gives
/// (q^{2n}, q^{-2n}, [2n+1]_q).
UnPoint un_sequence(double q, int n);

struct ThmUnDiagnostics {
  std::vector<double> values;  // t_n for n = 2..n_max
  double min_value;
  double limit;  // (1 - q^2)^2
};

/// t_n = Gamma_n / (gamma_n * bound_n^2), a lower bound for the inner-triviality
/// obstruction quantity; reports the range minimum and the analytic limit.
ThmUnDiagnostics thm_un_quantity(double q, int n_max);

}  // namespace qginv
