#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "qginv/subgroups.hpp"

namespace qginv {

/// Tabulated non-compact deformations: quantum E(2) and the three quantum
/// az+b families, selected by deformation parameter class.
struct KnownCase {
  enum class Which { Eq2, AzbRootOfUnity, AzbReal, AzbComplex };

  Which which = Which::Eq2;
  double q = 0.0;  // Eq2 and AzbReal
  int N = 6;       // AzbRootOfUnity: q = exp(2 pi i / N), N even >= 6

  /// Case names: "eq2", "azb1", "azb2", "azb3".
  static std::optional<KnownCase> parse(std::string_view name, std::optional<double> q,
                                        std::optional<int> N);
};

struct KnownTables {
  InvariantTable group;
  InvariantTable dual;
  std::map<std::string, std::string> sources;  // per-invariant literature pointers
};

/// Closed-form invariant tables; lookups, not computations.
KnownTables known_invariants(const KnownCase& c);

}  // namespace qginv
