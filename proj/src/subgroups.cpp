#include "qginv/subgroups.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace qginv {

UnitSymbol UnitSymbol::pi_over_log(double base) {
  if (!(base > 0.0) || base == 1.0)
    throw input_error("unit pi_over_log: base must be positive and != 1");
  UnitSymbol u;
  u.tag = Tag::PiOverLogBase;
  u.base = base;
  return u;
}

double UnitSymbol::value() const {
  if (tag == Tag::Raw) return 1.0;
  return std::numbers::pi / std::fabs(std::log(base));
}

RealSubgroup RealSubgroup::full_line() {
  RealSubgroup g;
  g.kind_ = Kind::FullLine;
  return g;
}

RealSubgroup RealSubgroup::zero(bool resolution_limited) {
  RealSubgroup g;
  g.kind_ = Kind::Zero;
  g.resolution_limited_ = resolution_limited;
  return g;
}

RealSubgroup RealSubgroup::cyclic(double generator) {
  if (!(std::fabs(generator) > 0.0) || !std::isfinite(generator))
    throw input_error("cyclic subgroup: generator must be nonzero and finite");
  RealSubgroup g;
  g.kind_ = Kind::Cyclic;
  g.generator_ = std::fabs(generator);  // cZ = (-c)Z
  return g;
}

RealSubgroup RealSubgroup::cyclic(ExactGenerator e) {
  if (e.coeff.is_zero()) throw input_error("cyclic subgroup: zero coefficient");
  e.coeff = e.coeff.abs();
  RealSubgroup g;
  g.kind_ = Kind::Cyclic;
  g.generator_ = e.value();
  g.exact_ = std::move(e);
  return g;
}

double RealSubgroup::generator() const {
  if (kind_ != Kind::Cyclic) throw input_error("generator(): subgroup is not cyclic");
  return generator_;
}

bool RealSubgroup::same_value(const RealSubgroup& other, double rel_tol) const {
  if (kind_ != other.kind_) return false;
  if (kind_ != Kind::Cyclic) return true;
  if (exact_ && other.exact_ && exact_->unit == other.exact_->unit)
    return exact_->coeff == other.exact_->coeff;
  return std::fabs(generator_ - other.generator_) <=
         rel_tol * std::max(generator_, other.generator_);
}

RealSubgroup intersect(const RealSubgroup& a, const RealSubgroup& b,
                       const Tolerances& tol) {
  if (a.is_full()) return b;
  if (b.is_full()) return a;
  if (a.is_zero() || b.is_zero()) {
    // A provably trivial factor makes the intersection provably trivial.
    const bool provable = (a.is_zero() && !a.resolution_limited()) ||
                          (b.is_zero() && !b.resolution_limited());
    return RealSubgroup::zero(!provable);
  }
  if (a.exact() && b.exact() && a.exact()->unit == b.exact()->unit) {
    const Rational& ca = a.exact()->coeff;
    const Rational& cb = b.exact()->coeff;
    const Rational ratio = ca / cb;  // reduced p/q, so lcm(ca, cb) = ca * q
    return RealSubgroup::cyclic(
        ExactGenerator{ca * Rational(ratio.den()), a.exact()->unit});
  }
  // Orient the ratio >= 1 so the witness decision is order-independent.
  const double gmax = std::max(a.generator(), b.generator());
  const double gmin = std::min(a.generator(), b.generator());
  const auto pq = recognize_rational(gmax / gmin, tol.max_denominator, tol.ratio_rel_tol);
  if (!pq) return RealSubgroup::zero(/*resolution_limited=*/true);
  const double p = pq->num().convert_to<double>();
  const double q = pq->den().convert_to<double>();
  return RealSubgroup::cyclic(0.5 * (gmax * q + gmin * p));
}

RealSubgroup cyclic_intersection_exact(const ExactGenerator& unit,
                                       std::span<const Rational> multipliers) {
  if (multipliers.empty())
    throw input_error("cyclic_intersection_exact: empty multiplier list");
  for (const auto& m : multipliers)
    if (m.is_zero()) throw input_error("cyclic_intersection_exact: zero multiplier");
  const Rational g = rational_gcd(multipliers);
  return RealSubgroup::cyclic(ExactGenerator{unit.coeff / g, unit.unit});
}

bool contains(const RealSubgroup& g, double t, double tol) {
  if (!(tol > 0.0)) throw input_error("contains: tol must be positive");
  switch (g.kind()) {
    case RealSubgroup::Kind::FullLine:
      return true;
    case RealSubgroup::Kind::Zero:
      return std::fabs(t) <= tol;
    case RealSubgroup::Kind::Cyclic: {
      const double gen = g.generator();
      const double k = std::round(t / gen);
      return std::fabs(t - k * gen) <= tol;
    }
  }
  return false;
}

nlohmann::json subgroup_to_json(const RealSubgroup& g) {
  nlohmann::json j;
  switch (g.kind()) {
    case RealSubgroup::Kind::FullLine:
      j["kind"] = "full";
      break;
    case RealSubgroup::Kind::Zero:
      j["kind"] = "zero";
      break;
    case RealSubgroup::Kind::Cyclic:
      j["kind"] = "cyclic";
      j["generator"] = g.generator();
      break;
  }
  j["resolution_limited"] = g.resolution_limited();
  if (g.exact()) {
    nlohmann::json unit;
    if (g.exact()->unit.tag == UnitSymbol::Tag::PiOverLogBase) {
      unit["tag"] = "pi_over_log";
      unit["base"] = g.exact()->unit.base;
    } else {
      unit["tag"] = "raw";
    }
    j["exact"] = {{"coefficient", g.exact()->coeff.str()}, {"unit", unit}};
  }
  return j;
}

namespace {

std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string subgroup_symbolic(const RealSubgroup& g) {
  switch (g.kind()) {
    case RealSubgroup::Kind::FullLine:
      return "R";
    case RealSubgroup::Kind::Zero:
      return g.resolution_limited() ? "{0} (at resolution)" : "{0}";
    case RealSubgroup::Kind::Cyclic:
      break;
  }
  if (g.exact() && g.exact()->unit.tag == UnitSymbol::Tag::PiOverLogBase) {
    const Rational& c = g.exact()->coeff;
    const std::string logpart = "log(" + fmt_g(g.exact()->unit.base) + ")";
    std::string num = c.num() == 1 ? "pi" : c.num().str() + "*pi";
    std::string den = c.den() == 1 ? logpart : "(" + c.den().str() + "*" + logpart + ")";
    return num + "/" + den;
  }
  return fmt_g(g.generator()) + "*Z";
}

}  // namespace qginv
