#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "qginv/numerics.hpp"
#include "qginv/rational.hpp"

namespace qginv {

/// Symbolic unit for cyclic generators.  PiOverLogBase stands for pi/|log base|.
struct UnitSymbol {
  enum class Tag { PiOverLogBase, Raw };

  Tag tag = Tag::Raw;
  double base = 0.0;  // PiOverLogBase only, positive and != 1

  static UnitSymbol raw() { return UnitSymbol{}; }
  static UnitSymbol pi_over_log(double base);

  double value() const;

  friend bool operator==(const UnitSymbol& a, const UnitSymbol& b) {
    return a.tag == b.tag && (a.tag == Tag::Raw || a.base == b.base);
  }
};

/// coeff * unit, with coeff kept exact.
struct ExactGenerator {
  Rational coeff;
  UnitSymbol unit;

  double value() const { return coeff.to_double() * unit.value(); }
};

/// Closed subgroup of (R,+): the whole line, {0}, or cZ with c > 0.
/// When a Zero value arises from a failed float-mode recognition it carries the
/// resolution_limited flag; exact-mode results never do.
class RealSubgroup {
 public:
  enum class Kind { FullLine, Zero, Cyclic };

  static RealSubgroup full_line();
  static RealSubgroup zero(bool resolution_limited = false);
  static RealSubgroup cyclic(double generator);
  static RealSubgroup cyclic(ExactGenerator g);

  Kind kind() const { return kind_; }
  bool is_full() const { return kind_ == Kind::FullLine; }
  bool is_zero() const { return kind_ == Kind::Zero; }
  bool is_cyclic() const { return kind_ == Kind::Cyclic; }
  double generator() const;  // throws unless cyclic
  const std::optional<ExactGenerator>& exact() const { return exact_; }
  bool resolution_limited() const { return resolution_limited_; }

  /// Canonical comparison: exact forms compared exactly when units match,
  /// generators within rel_tol otherwise.
  bool same_value(const RealSubgroup& other, double rel_tol = 1e-12) const;

 private:
  Kind kind_ = Kind::Zero;
  double generator_ = 0.0;
  std::optional<ExactGenerator> exact_;
  bool resolution_limited_ = false;
};

/// Intersection of closed subgroups.  Exact forms over a shared unit are merged
/// with rational arithmetic; otherwise the generator ratio goes through
/// recognize_rational and an unrecognized ratio yields Zero at resolution.
RealSubgroup intersect(const RealSubgroup& a, const RealSubgroup& b,
                       const Tolerances& tol = {});

/// Intersection over i of (unit / m_i) Z = (unit / g) Z with g = rational_gcd(m).
/// Multipliers must be nonzero and the list nonempty.
RealSubgroup cyclic_intersection_exact(const ExactGenerator& unit,
                                       std::span<const Rational> multipliers);

/// Membership of t in g up to tol.
bool contains(const RealSubgroup& g, double t, double tol);

nlohmann::json subgroup_to_json(const RealSubgroup& g);

/// Generator rendered like "pi/(2*log(0.5))"; "R" for the line, "{0}" for zero.
std::string subgroup_symbolic(const RealSubgroup& g);

using InvariantTable = std::map<std::string, RealSubgroup>;

}  // namespace qginv
