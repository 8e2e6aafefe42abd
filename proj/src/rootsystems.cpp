#include "qginv/rootsystems.hpp"

#include <cctype>
#include <numeric>

namespace qginv {

bool SimpleType::valid() const {
  switch (family) {
    case Family::A: return rank >= 1 && rank <= 64;
    case Family::B: return rank >= 2 && rank <= 64;
    case Family::C: return rank >= 3 && rank <= 64;
    case Family::D: return rank >= 4 && rank <= 64;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

std::optional<SimpleType> SimpleType::parse(std::string_view text) {
  if (text.size() < 2) return std::nullopt;
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (f < 'A' || f > 'G') return std::nullopt;
  int rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
    rank = rank * 10 + (text[i] - '0');
    if (rank > 1000) return std::nullopt;
  }
  SimpleType t{static_cast<Family>(f), rank};
  if (!t.valid()) return std::nullopt;
  return t;
}

std::string SimpleType::str() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

std::optional<std::vector<SimpleType>> parse_type_list(std::string_view text) {
  std::vector<SimpleType> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t sep = text.find_first_of("xX", start + 1);  // rank digits can't be 'x'
    if (sep == std::string_view::npos) sep = text.size();
    auto t = SimpleType::parse(text.substr(start, sep - start));
    if (!t) return std::nullopt;
    out.push_back(*t);
    if (sep == text.size()) break;
    start = sep + 1;
  }
  if (out.empty()) return std::nullopt;
  return out;
}

std::string RootDatum::str() const {
  std::string s;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += "x";
    s += components_[i].str();
  }
  return s;
}

namespace {

struct Block {
  std::vector<std::vector<long long>> a;
  std::vector<int> d;
};

// Cartan matrix a_ij = 2<ai|aj>/<ai|ai> and squared lengths d_i = <ai|ai>,
// normalized so short roots have squared length 2.  Bourbaki numbering:
// B_n/C_n/F_4 put the short/long switch at the tail, E-series hang node 2
// off node 4 of the chain 1-3-4-5-6(-7(-8)).
Block block_for(const SimpleType& t) {
  const int n = t.rank;
  Block b;
  b.a.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) b.a[i][i] = 2;
  auto link = [&](int i, int j) { b.a[i][j] = b.a[j][i] = -1; };
  switch (t.family) {
    case Family::A:
      b.d.assign(n, 2);
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      b.d.assign(n, 4);
      b.d[n - 1] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      b.a[n - 1][n - 2] = -2;
      break;
    case Family::C:
      b.d.assign(n, 2);
      b.d[n - 1] = 4;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      b.a[n - 2][n - 1] = -2;
      break;
    case Family::D:
      b.d.assign(n, 2);
      for (int i = 0; i + 1 < n - 1; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      b.d.assign(n, 2);
      link(0, 2);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      link(1, 3);
      break;
    case Family::F:
      b.d = {4, 4, 2, 2};
      link(0, 1);
      link(1, 2);
      b.a[2][1] = -2;
      link(2, 3);
      break;
    case Family::G:
      b.d = {2, 6};
      b.a[0][1] = -3;
      b.a[1][0] = -1;
      break;
  }
  return b;
}

// Exact Gauss-Jordan inverse; Cartan matrices are always invertible.
std::vector<std::vector<Rational>> invert_exact(
    const std::vector<std::vector<long long>>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a[i][j]);
    m[i][n + i] = Rational(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::logic_error("cartan matrix not invertible");
    std::swap(m[col], m[piv]);
    const Rational inv_p = Rational(1) / m[col][col];
    for (auto& x : m[col]) x = x * inv_p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Rational f = m[r][col];
      for (std::size_t j = col; j < 2 * n; ++j) m[r][j] = m[r][j] - f * m[col][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

}  // namespace

RootDatum build_datum(std::span<const SimpleType> components) {
  if (components.empty()) throw input_error("build_datum: no components");
  int total = 0;
  for (const auto& c : components) {
    if (!c.valid())
      throw input_error("build_datum: invalid type " +
                        std::string(1, static_cast<char>(c.family)) +
                        std::to_string(c.rank));
    total += c.rank;
  }

  RootDatum datum;
  datum.components_.assign(components.begin(), components.end());
  datum.cartan_.assign(total, std::vector<long long>(total, 0));
  datum.inv_cartan_.assign(total, std::vector<Rational>(total));
  datum.lengths_.resize(total);

  int off = 0;
  for (const auto& c : components) {
    Block b = block_for(c);
    auto inv = invert_exact(b.a);
    for (int i = 0; i < c.rank; ++i) {
      datum.lengths_[off + i] = b.d[i];
      for (int j = 0; j < c.rank; ++j) {
        datum.cartan_[off + i][off + j] = b.a[i][j];
        datum.inv_cartan_[off + i][off + j] = inv[i][j];
      }
    }
    off += c.rank;
  }

  // A * A^{-1} = 1 exactly, and c_ij d_i = c_ji d_j (symmetry of <w_i|w_j>).
  for (int i = 0; i < total; ++i) {
    for (int j = 0; j < total; ++j) {
      Rational s;
      for (int k = 0; k < total; ++k)
        s = s + Rational(datum.cartan_[i][k]) * datum.inv_cartan_[k][j];
      if (s != Rational(i == j ? 1 : 0))
        throw std::logic_error("cartan inverse check failed");
      if (datum.inv_cartan_[i][j] * Rational(datum.lengths_[i]) !=
          datum.inv_cartan_[j][i] * Rational(datum.lengths_[j]))
        throw std::logic_error("bilinear form symmetry check failed");
    }
  }

  // Pairing vector via <2rho|w_i> = <a_i|a_i> * sum_j c_ij.
  datum.pairing_.resize(total);
  for (int i = 0; i < total; ++i) {
    Rational s;
    for (int j = 0; j < total; ++j) s = s + datum.inv_cartan_[i][j];
    const Rational p = Rational(datum.lengths_[i]) * s;
    if (!p.is_integer() || p.sign() <= 0)
      throw std::logic_error("pairing vector must consist of positive integers");
    datum.pairing_[i] = p.num().convert_to<long long>();
  }
  return datum;
}

std::vector<long long> two_rho_pairing(const RootDatum& d) {
  std::vector<long long> p(d.rank());
  for (int i = 0; i < d.rank(); ++i) {
    Rational s;
    for (int j = 0; j < d.rank(); ++j) s = s + d.inv_cartan()[i][j];
    const Rational v = Rational(d.lengths()[i]) * s;
    if (!v.is_integer()) throw std::logic_error("pairing vector not integral");
    p[i] = v.num().convert_to<long long>();
  }
  return p;
}

long long upsilon(const RootDatum& d) {
  long long g = 0;
  for (long long p : d.pairing()) g = std::gcd(g, p);

  // Same value through the per-component route (Bezout over components).
  long long gc = 0;
  int off = 0;
  for (const auto& c : d.components()) {
    long long gi = 0;
    for (int i = 0; i < c.rank; ++i) gi = std::gcd(gi, d.pairing()[off + i]);
    gc = std::gcd(gc, gi);
    off += c.rank;
  }
  if (g != gc) throw std::logic_error("upsilon: component gcd mismatch");
  return g;
}

long long theorem3_reference(const SimpleType& t) {
  if (!t.valid()) throw input_error("theorem3_reference: invalid type");
  switch (t.family) {
    case Family::A: return t.rank % 2 == 0 ? 2 : 1;
    case Family::B: return t.rank % 2 == 0 ? 2 : 1;
    case Family::C: return 2;
    case Family::D: return (t.rank % 4 == 0 || t.rank % 4 == 1) ? 2 : 1;
    case Family::E: return t.rank == 7 ? 1 : 2;
    case Family::F: return 2;
    case Family::G: return 2;
  }
  return 0;
}

long long weight_pairing(const RootDatum& d, const Weight& mu) {
  if (static_cast<int>(mu.coeffs.size()) != d.rank())
    throw input_error("weight_pairing: weight length does not match rank");
  long long s = 0;
  for (int i = 0; i < d.rank(); ++i) s += mu.coeffs[i] * d.pairing()[i];
  return s;
}

std::vector<Rational> weight_root_coordinates(const RootDatum& d, const Weight& mu) {
  if (static_cast<int>(mu.coeffs.size()) != d.rank())
    throw input_error("weight_root_coordinates: weight length does not match rank");
  std::vector<Rational> x(d.rank());
  // w_k = sum_i c_ik a_i, so mu = sum_k mu_k w_k has root coordinates C * mu.
  for (int i = 0; i < d.rank(); ++i) {
    Rational s;
    for (int k = 0; k < d.rank(); ++k)
      s = s + d.inv_cartan()[i][k] * Rational(mu.coeffs[k]);
    x[i] = s;
  }
  return x;
}

std::optional<std::vector<long long>> weight_in_root_lattice(const RootDatum& d,
                                                             const Weight& mu) {
  auto x = weight_root_coordinates(d, mu);
  std::vector<long long> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_integer()) return std::nullopt;
    out[i] = x[i].num().convert_to<long long>();
  }
  return out;
}

PhaseExponents tau_sigma_exponents(const RootDatum& d, const Weight& lwt,
                                   const Weight& rwt) {
  if (lwt.coeffs.size() != rwt.coeffs.size())
    throw input_error("tau_sigma_exponents: weight lengths differ");
  Weight sum{std::vector<long long>(lwt.coeffs.size())};
  Weight diff{std::vector<long long>(lwt.coeffs.size())};
  for (std::size_t i = 0; i < lwt.coeffs.size(); ++i) {
    sum.coeffs[i] = lwt.coeffs[i] + rwt.coeffs[i];
    diff.coeffs[i] = lwt.coeffs[i] - rwt.coeffs[i];
  }
  return PhaseExponents{weight_pairing(d, sum), weight_pairing(d, diff)};
}

InvariantTable invariant_table_gq(const RootDatum& d, double q) {
  if (!(q > 0.0) || !(q < 1.0))
    throw input_error("invariant_table_gq: q must lie in (0,1)");
  const UnitSymbol u = UnitSymbol::pi_over_log(q);
  const long long ups = upsilon(d);

  InvariantTable t;
  const auto t_tau = RealSubgroup::cyclic(ExactGenerator{Rational(1), u});
  const auto inner = RealSubgroup::cyclic(ExactGenerator{Rational(1, ups), u});
  t["T_tau"] = t_tau;
  t["T_tauInn"] = inner;
  t["T_tauAInn"] = inner;
  t["Mod_dual"] = inner;
  t["T_sigma"] = intersect(t_tau, inner);  // = T_tau, since T_tau <= Mod_dual
  t["T_sigmaInn"] = RealSubgroup::full_line();   // L^inf(G_q) is semifinite
  t["T_sigmaAInn"] = RealSubgroup::full_line();
  t["Mod"] = RealSubgroup::full_line();          // compact, hence unimodular
  return t;
}

}  // namespace qginv
