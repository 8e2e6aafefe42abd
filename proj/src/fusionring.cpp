#include "qginv/fusionring.hpp"

#include <algorithm>
#include <cmath>

#include "qginv/numerics.hpp"

namespace qginv {

std::optional<Word> Word::parse(std::string_view text) {
  if (text == "e") return Word();
  if (text.empty()) return std::nullopt;
  for (char c : text)
    if (c != 'a' && c != 'b') return std::nullopt;
  return Word(std::string(text));
}

Word Word::alternating(int n, Letter leading) {
  if (n < 0) throw input_error("alternating word: negative length");
  std::string s;
  s.reserve(static_cast<std::size_t>(n));
  char c = static_cast<char>(leading);
  for (int i = 0; i < n; ++i) {
    s.push_back(c);
    c = (c == 'a') ? 'b' : 'a';
  }
  return Word(std::move(s));
}

void FusionSum::add(const Word& w, long long mult) {
  if (mult == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, mult);
  } else {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

long long FusionSum::multiplicity(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

long long FusionSum::total_terms() const {
  long long s = 0;
  for (const auto& [w, m] : terms_) s += m;
  return s;
}

Word conjugate(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (std::size_t i = w.size(); i-- > 0;)
    s.push_back(w.at(i) == Letter::Alpha ? 'b' : 'a');
  return Word(std::move(s));
}

FusionSum fuse(const Word& x, const Word& y) {
  FusionSum out;
  for (std::size_t cut = 0; cut <= x.size(); ++cut) {
    const Word a = x.prefix(cut);
    const Word cbar = conjugate(x.suffix(cut));
    if (cbar.size() <= y.size() && y.has_prefix(cbar))
      out.add(a + y.suffix(cbar.size()), 1);
  }
  return out;
}

FusionSum fuse(const FusionSum& x, const FusionSum& y) {
  FusionSum out;
  for (const auto& [wx, mx] : x.terms())
    for (const auto& [wy, my] : y.terms())
      for (const auto& [w, m] : fuse(wx, wy)) out.add(w, mx * my * m);
  return out;
}

void RepParams::validate() const {
  if (N < 2) throw input_error("rep params: N must be >= 2");
  if (!(q > 0.0) || q > 1.0) throw input_error("rep params: q must lie in (0,1]");
}

namespace {

// d(w) along prefixes: d_k = d_{k-1} * d1 - [w_{k-2} = conj(w_{k-1})] * d_{k-2},
// the unique extension making d additive over fusion with a single letter.
double dim_recursion(const Word& w, double d1) {
  double prev2 = 0.0, prev = 1.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    double cur = prev * d1;
    if (k >= 1 && w.at(k - 1) != w.at(k)) cur -= prev2;  // conj of a letter swaps it
    prev2 = prev;
    prev = cur;
  }
  return prev;
}

}  // namespace

double dim_word(const Word& w, const RepParams& p) {
  p.validate();
  return dim_recursion(w, static_cast<double>(p.N));
}

double qdim_word(const Word& w, const RepParams& p) {
  p.validate();
  return dim_recursion(w, p.q + 1.0 / p.q);
}

GammaBounds gamma_Gamma_alternating(int n, Letter leading, double gamma_alpha,
                                    double Gamma_alpha) {
  if (n < 0) throw input_error("gamma_Gamma_alternating: n must be >= 0");
  if (!(gamma_alpha > 0.0) || gamma_alpha > 1.0 || Gamma_alpha < 1.0)
    throw input_error("gamma_Gamma_alternating: need 0 < gamma <= 1 <= Gamma");
  const bool alpha_leads = leading == Letter::Alpha;
  const double g_lead = alpha_leads ? gamma_alpha : 1.0 / Gamma_alpha;
  const double G_lead = alpha_leads ? Gamma_alpha : 1.0 / gamma_alpha;
  const double g_other = 1.0 / G_lead;
  const double G_other = 1.0 / g_lead;
  const int m = n / 2;
  if (n % 2 == 0)
    return GammaBounds{std::pow(g_lead * g_other, m), std::pow(G_lead * G_other, m)};
  return GammaBounds{std::pow(g_lead, m + 1) * std::pow(g_other, m),
                     std::pow(G_lead, m + 1) * std::pow(G_other, m)};
}

UnPoint un_sequence(double q, int n) {
  if (!(q > 0.0) || !(q < 1.0)) throw input_error("un_sequence: q must lie in (0,1)");
  if (n < 1) throw input_error("un_sequence: n must be >= 1");
  if (n == 1) return UnPoint{q, 1.0 / q, q + 1.0 / q};
  const double e = 2.0 * n;
  return UnPoint{std::pow(q, e), std::pow(q, -e), q_number(2 * n + 1, q)};
}

ThmUnDiagnostics thm_un_quantity(double q, int n_max) {
  if (!(q > 0.0) || !(q < 1.0)) throw input_error("thm_un_quantity: q must lie in (0,1)");
  if (n_max < 2) throw input_error("thm_un_quantity: n_max must be >= 2");
  ThmUnDiagnostics d;
  d.values.reserve(static_cast<std::size_t>(n_max) - 1);
  for (int n = 2; n <= n_max; ++n) {
    const UnPoint u = un_sequence(q, n);
    d.values.push_back(u.Gamma_n / (u.gamma_n * u.qdim_bound * u.qdim_bound));
  }
  d.min_value = *std::min_element(d.values.begin(), d.values.end());
  const double l = 1.0 - q * q;
  d.limit = l * l;
  return d;
}

}  // namespace qginv
