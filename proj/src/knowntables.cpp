#include "qginv/knowntables.hpp"

namespace qginv {

std::optional<KnownCase> KnownCase::parse(std::string_view name, std::optional<double> q,
                                          std::optional<int> N) {
  KnownCase c;
  if (name == "eq2") {
    c.which = Which::Eq2;
  } else if (name == "azb1") {
    c.which = Which::AzbRootOfUnity;
  } else if (name == "azb2") {
    c.which = Which::AzbReal;
  } else if (name == "azb3") {
    c.which = Which::AzbComplex;
  } else {
    return std::nullopt;
  }
  if (c.which == Which::Eq2 || c.which == Which::AzbReal) {
    if (!q || !(*q > 0.0) || !(*q < 1.0)) return std::nullopt;
    c.q = *q;
  }
  if (c.which == Which::AzbRootOfUnity) {
    c.N = N.value_or(6);
    if (c.N < 6 || c.N % 2 != 0) return std::nullopt;
  }
  return c;
}

namespace {

const char* kEq2Source = "Woronowicz quantum E(2); Haar measure after Baaj; duality after Jacobs";
const char* kAzbSource = "Woronowicz (and Van Daele) quantum az+b; Plancherel data after Krajczok";

void fill(InvariantTable& t, const RealSubgroup& tau_like, const RealSubgroup& sig,
          const RealSubgroup& mod) {
  t["T_tau"] = tau_like;
  t["T_tauInn"] = RealSubgroup::full_line();
  t["T_tauAInn"] = RealSubgroup::full_line();
  t["T_sigma"] = sig;
  t["T_sigmaInn"] = RealSubgroup::full_line();
  t["T_sigmaAInn"] = RealSubgroup::full_line();
  t["Mod"] = mod;
}

}  // namespace

KnownTables known_invariants(const KnownCase& c) {
  KnownTables out;
  switch (c.which) {
    case KnownCase::Which::Eq2: {
      const auto pz = RealSubgroup::cyclic(
          ExactGenerator{Rational(1), UnitSymbol::pi_over_log(c.q)});
      // Group side: the scaling action rotates the diffuse center, so inner
      // and approximately inner coincide with trivial.
      out.group["T_tau"] = pz;
      out.group["T_tauInn"] = pz;
      out.group["T_tauAInn"] = pz;
      out.group["T_sigma"] = pz;
      out.group["T_sigmaInn"] = RealSubgroup::full_line();
      out.group["T_sigmaAInn"] = RealSubgroup::full_line();
      out.group["Mod"] = RealSubgroup::full_line();  // unimodular
      // Dual side: scaling automorphisms are all inner.
      fill(out.dual, pz, pz, pz);
      for (const auto& [k, v] : out.group) out.sources[k] = kEq2Source;
      break;
    }
    case KnownCase::Which::AzbReal: {
      const auto pz = RealSubgroup::cyclic(
          ExactGenerator{Rational(1), UnitSymbol::pi_over_log(c.q)});
      fill(out.group, pz, pz, pz);
      out.dual = out.group;  // anti-self-dual
      for (const auto& [k, v] : out.group) out.sources[k] = kAzbSource;
      break;
    }
    case KnownCase::Which::AzbRootOfUnity:
    case KnownCase::Which::AzbComplex: {
      const auto z = RealSubgroup::zero();
      fill(out.group, z, z, z);
      out.dual = out.group;
      for (const auto& [k, v] : out.group) out.sources[k] = kAzbSource;
      break;
    }
  }
  return out;
}

}  // namespace qginv
