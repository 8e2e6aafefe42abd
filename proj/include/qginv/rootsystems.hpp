#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qginv/subgroups.hpp"

namespace qginv {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
  Family family;
  int rank;

  /// "A2", "d6", "G2"; rejects invalid ranks.
  static std::optional<SimpleType> parse(std::string_view text);
  bool valid() const;
  std::string str() const;

  friend bool operator==(const SimpleType& a, const SimpleType& b) {
    return a.family == b.family && a.rank == b.rank;
  }
};

/// "A2xD4xG2", case-insensitive, 'x'-separated.
std::optional<std::vector<SimpleType>> parse_type_list(std::string_view text);

/// Integer coefficients in the fundamental-weight basis.
struct Weight {
  std::vector<long long> coeffs;
};

/// Cartan data of a product of simple types: Cartan matrix, its exact rational
/// inverse, squared root lengths d_i, and the pairing vector <2rho|w_i>.
class RootDatum {
 public:
  const std::vector<SimpleType>& components() const { return components_; }
  int rank() const { return static_cast<int>(lengths_.size()); }
  const std::vector<std::vector<long long>>& cartan() const { return cartan_; }
  const std::vector<std::vector<Rational>>& inv_cartan() const { return inv_cartan_; }
  const std::vector<int>& lengths() const { return lengths_; }
  const std::vector<long long>& pairing() const { return pairing_; }
  std::string str() const;

 private:
  friend RootDatum build_datum(std::span<const SimpleType> components);

  std::vector<SimpleType> components_;
  std::vector<std::vector<long long>> cartan_;
  std::vector<std::vector<Rational>> inv_cartan_;
  std::vector<int> lengths_;
  std::vector<long long> pairing_;
};

RootDatum build_datum(std::span<const SimpleType> components);

/// Recomputes p_i = d_i * sum_j c_ij; must coincide with datum.pairing().
std::vector<long long> two_rho_pairing(const RootDatum& d);

/// gcd of the pairing vector; cross-checked against the per-component gcd.
long long upsilon(const RootDatum& d);

/// Closed-form value per simple type, used as a test oracle for upsilon.
long long theorem3_reference(const SimpleType& t);

/// <2rho|mu> for mu in the weight lattice.
long long weight_pairing(const RootDatum& d, const Weight& mu);

/// Coordinates of mu in the simple-root basis (inverse Cartan applied to coeffs).
std::vector<Rational> weight_root_coordinates(const RootDatum& d, const Weight& mu);

/// Integer root-basis coordinates when mu lies in the root lattice, else empty.
std::optional<std::vector<long long>> weight_in_root_lattice(const RootDatum& d,
                                                             const Weight& mu);

struct PhaseExponents {
  long long sigma_exp;  // <2rho|lwt+rwt>
  long long tau_exp;    // <2rho|lwt-rwt>
};

/// Exponents of the modular/scaling phase q^{i*exp*t} on a matrix coefficient
/// with the given left and right weights.
PhaseExponents tau_sigma_exponents(const RootDatum& d, const Weight& lwt,
                                   const Weight& rwt);

/// Full invariant table of the q-deformation for 0 < q < 1.
/// Keys: T_tau, T_tauInn, T_tauAInn, T_sigma, T_sigmaInn, T_sigmaAInn, Mod, Mod_dual.
InvariantTable invariant_table_gq(const RootDatum& d, double q);

}  // namespace qginv
