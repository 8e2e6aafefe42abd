#include "qginv/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qginv/errors.hpp"
#include "qginv/freeunitary.hpp"
#include "qginv/fusionring.hpp"
#include "qginv/knowntables.hpp"
#include "qginv/report.hpp"
#include "qginv/rootsystems.hpp"

namespace qginv::cli {

namespace {

using nlohmann::json;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file \"" + path + "\"");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw input_error("file \"" + path + "\" is not valid json: " + e.what());
  }
  return j;
}

// Config precedence: CLI flags > QGINV_CONFIG file > defaults.
Tolerances env_config() {
  Tolerances tol;
  const char* path = std::getenv("QGINV_CONFIG");
  if (!path || !*path) return tol;
  const json j = load_json_file(path);
  if (j.contains("rel_tol")) tol.rel_tol = j["rel_tol"].get<double>();
  if (j.contains("max_denominator"))
    tol.max_denominator = j["max_denominator"].get<long long>();
  if (j.contains("eig_threshold")) tol.eig_threshold = j["eig_threshold"].get<double>();
  if (j.contains("kac_tol")) tol.kac_tol = j["kac_tol"].get<double>();
  if (j.contains("ratio_rel_tol")) tol.ratio_rel_tol = j["ratio_rel_tol"].get<double>();
  return tol;
}

struct Options {
  std::string format = "json";
  Tolerances tol;
};

void emit(const json& report, const Options& opt, std::ostream& out,
          const std::string& markdown) {
  if (opt.format == "markdown") {
    out << markdown;
    return;
  }
  json j = report;
  canonicalize_floats(j);
  out << j.dump(2) << "\n";
}

json subgroup_block(const RealSubgroup& g) {
  json j = subgroup_to_json(g);
  j["symbolic"] = subgroup_symbolic(g);
  return j;
}

json table_block(const InvariantTable& t) {
  json j = json::object();
  for (const auto& [name, g] : t) j[name] = subgroup_block(g);
  return j;
}

int cmd_rootsys(const std::string& type_str, double q, const Options& opt,
                std::ostream& out) {
  const auto types = parse_type_list(type_str);
  if (!types) throw input_error("unparseable type string \"" + type_str + "\"");
  const RootDatum d = build_datum(*types);
  const InvariantTable table = invariant_table_gq(d, q);

  json j;
  j["meta"] = meta_block(opt.tol);
  j["type"] = d.str();
  j["q"] = q;
  j["rank"] = d.rank();
  j["upsilon"] = upsilon(d);
  j["pairing"] = d.pairing();
  j["lengths"] = d.lengths();
  j["cartan"] = d.cartan();
  json inv = json::array();
  for (const auto& row : d.inv_cartan()) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.str());
    inv.push_back(r);
  }
  j["inv_cartan"] = inv;
  j["invariants"] = table_block(table);

  std::string md = "## Invariants of the q-deformation, type " + d.str() + ", q = ";
  {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", q);
    md += buf;
  }
  md += "\n\nUpsilon = " + std::to_string(upsilon(d)) + "\n\n" +
        table_to_markdown(table, "invariant table");
  emit(j, opt, out, md);
  return 0;
}

json icc_json(const IccReport& r) {
  return json{{"n", r.n},
              {"c", r.c},
              {"rho_a2b_norm", r.rho_a2b_norm},
              {"rho_a2b_sq_dev", r.rho_a2b_sq_dev},
              {"D_n", r.D_n},
              {"exact_condition_holds", r.exact_condition_holds},
              {"corollary2_holds", r.corollary2_holds}};
}

InvariantTable ufp_table(const RealSubgroup& tau, const RealSubgroup& mod,
                         const RealSubgroup& connes_t, const Tolerances& tol) {
  InvariantTable table;
  table["T_tau"] = tau;
  table["T_tauInn"] = tau;
  table["T_tauAInn"] = tau;
  table["T_sigma"] = intersect(tau, mod, tol);
  table["T_sigmaInn"] = connes_t;  // Connes T of the (full) factor
  table["T_sigmaAInn"] = connes_t;
  table["Mod"] = RealSubgroup::full_line();
  table["Mod_dual"] = mod;
  return table;
}

int cmd_ufp(const std::string& matrix_path, const std::string& spectrum_path,
            std::optional<int> n_icc, const Options& opt, std::ostream& out) {
  std::optional<RhoSpectrum> s;
  std::optional<FMatrix> f;
  if (!matrix_path.empty()) {
    f = FMatrix::from_json(load_json_file(matrix_path));
    s = rho_spectrum_from_f(*f, opt.tol);
  } else {
    s = RhoSpectrum::from_json(load_json_file(spectrum_path));
  }

  const RealSubgroup tau = t_tau_family(*s, opt.tol);
  const RealSubgroup mod = mod_dual(*s, opt.tol);
  const auto [factor, connes_t] = factor_classification(*s, opt.tol);
  const InvariantTable table = ufp_table(tau, mod, connes_t, opt.tol);

  json j;
  j["meta"] = meta_block(opt.tol);
  j["mode"] = s->mode() == RhoSpectrum::Mode::Exact ? "exact" : "float";
  j["rho_spectrum"] = s->values();
  if (s->mode() == RhoSpectrum::Mode::Exact) {
    j["base"] = s->base();
    json exps = json::array();
    for (const auto& e : s->exponents()) exps.push_back(e.str());
    j["exponents"] = exps;
    j["balance_checked"] = s->balance_checked();
  }
  j["kac"] = s->is_kac(opt.tol.kac_tol);
  j["invariants"] = table_block(table);
  json fj;
  fj["type"] = factor.str();
  if (factor.kind == FactorType::Kind::TypeIIIMu) fj["mu"] = factor.mu;
  fj["resolution_limited"] = factor.resolution_limited;
  fj["connes_t"] = subgroup_block(connes_t);
  j["factor"] = fj;
  if (s->mode() == RhoSpectrum::Mode::Exact)
    j["mod_type_consistent"] = proposition9_check(s.value(), opt.tol);
  if (n_icc) {
    if (!f) throw input_error("--n-icc needs a matrix input (got a spectrum)");
    j["icc"] = icc_json(icc_constants(*f, *n_icc, opt.tol));
  }

  std::string md = "## Free unitary quantum group report\n\n";
  md += "Factor type: " + factor.str() + "\n\n";
  md += table_to_markdown(table, "invariant table");
  emit(j, opt, out, md);
  return 0;
}

int cmd_icc(const std::string& matrix_path, int n, const Options& opt,
            std::ostream& out) {
  const FMatrix f = FMatrix::from_json(load_json_file(matrix_path));
  const IccReport r = icc_constants(f, n, opt.tol);
  json j;
  j["meta"] = meta_block(opt.tol);
  j["icc"] = icc_json(r);
  std::ostringstream md;
  md << "## Commutant-triviality certificate (n = " << n << ")\n\n"
     << "- c = " << r.c << "\n- D_n = " << r.D_n << "\n- exact condition: "
     << (r.exact_condition_holds ? "holds" : "fails") << "\n- sufficient condition: "
     << (r.corollary2_holds ? "holds" : "fails") << "\n";
  emit(j, opt, out, md.str());
  return 0;
}

int cmd_fusion(const std::string& fuse_arg, const std::string& dim_arg, bool thmun,
               int N, double q, int nmax, const Options& opt, std::ostream& out) {
  json j;
  j["meta"] = meta_block(opt.tol);
  std::string md = "## Fusion ring\n\n";
  if (!fuse_arg.empty()) {
    const auto comma = fuse_arg.find(',');
    if (comma == std::string::npos)
      throw input_error("--fuse expects \"x,y\" (got \"" + fuse_arg + "\")");
    const auto wx = Word::parse(fuse_arg.substr(0, comma));
    const auto wy = Word::parse(fuse_arg.substr(comma + 1));
    if (!wx) throw input_error("unparseable word \"" + fuse_arg.substr(0, comma) + "\"");
    if (!wy) throw input_error("unparseable word \"" + fuse_arg.substr(comma + 1) + "\"");
    const FusionSum sum = fuse(*wx, *wy);
    json terms = json::array();
    for (const auto& [w, m] : sum.terms()) terms.push_back(json::array({w.str(), m}));
    j["fuse"] = {{"x", wx->str()}, {"y", wy->str()}, {"terms", terms}};
    md += "Decomposition of " + wx->str() + " (x) " + wy->str() + ":\n\n";
    for (const auto& [w, m] : sum.terms())
      md += "- " + w.str() + " (multiplicity " + std::to_string(m) + ")\n";
  } else if (!dim_arg.empty()) {
    const auto w = Word::parse(dim_arg);
    if (!w) throw input_error("unparseable word \"" + dim_arg + "\"");
    const RepParams p{N, q};
    const double dv = dim_word(*w, p);  // validates p before any json is built
    const double qv = qdim_word(*w, p);
    j["dim"] = {{"word", w->str()}, {"N", N}, {"q", q}, {"dim", dv}, {"qdim", qv}};
    std::ostringstream m;
    m << "dim(" << w->str() << ") = " << dv << ", qdim = " << qv << "\n";
    md += m.str();
  } else if (thmun) {
    const ThmUnDiagnostics d = thm_un_quantity(q, nmax);
    j["thmun"] = {{"q", q},
                  {"n_max", nmax},
                  {"values", d.values},
                  {"min", d.min_value},
                  {"limit", d.limit}};
    std::ostringstream m;
    m << "inner-triviality obstruction over n = 2.." << nmax << ": min = "
      << d.min_value << ", limit = " << d.limit << "\n";
    md += m.str();
  } else {
    throw input_error("fusion: one of --fuse, --dim, --thmun is required");
  }
  emit(j, opt, out, md);
  return 0;
}

int cmd_known(const std::string& case_name, std::optional<double> q,
              std::optional<int> N, const Options& opt, std::ostream& out) {
  const auto c = KnownCase::parse(case_name, q, N);
  if (!c) {
    if (case_name != "eq2" && case_name != "azb1" && case_name != "azb2" &&
        case_name != "azb3")
      throw input_error("unknown case \"" + case_name +
                        "\" (expected eq2, azb1, azb2, azb3)");
    throw input_error("case \"" + case_name + "\" needs a valid parameter (q in (0,1)"
                      " for eq2/azb2, even N >= 6 for azb1)");
  }
  const KnownTables t = known_invariants(*c);
  json j;
  j["meta"] = meta_block(opt.tol);
  j["case"] = case_name;
  if (c->which == KnownCase::Which::Eq2 || c->which == KnownCase::Which::AzbReal)
    j["q"] = c->q;
  if (c->which == KnownCase::Which::AzbRootOfUnity) j["N"] = c->N;
  j["group"] = table_to_json(t.group);
  j["dual"] = table_to_json(t.dual);
  j["sources"] = t.sources;
  std::string md = "## Tabulated invariants: " + case_name + "\n\n" +
                   table_to_markdown(t.group, "group side") + "\n" +
                   table_to_markdown(t.dual, "dual side");
  emit(j, opt, out, md);
  return 0;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"modular and scaling invariants of compact quantum groups"};
  app.fallthrough();

  Options opt;
  try {
    opt.tol = env_config();
  } catch (const input_error& e) {
    err << "error: QGINV_CONFIG: " << e.what() << "\n";
    return 2;
  }
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "markdown"}));
  app.add_option("--rel-tol", opt.tol.rel_tol, "rational recognition tolerance");
  app.add_option("--max-denominator", opt.tol.max_denominator,
                 "denominator bound for rational recognition");
  app.add_option("--eig-threshold", opt.tol.eig_threshold,
                 "eigensolver off-diagonal threshold");
  app.add_option("--ratio-rel-tol", opt.tol.ratio_rel_tol,
                 "rationality witness tolerance for generator ratios");

  auto* rootsys = app.add_subcommand("rootsys", "invariants of a q-deformation");
  std::string type_str;
  double q = 0.5;
  rootsys->add_option("--type", type_str, "simple type or product, e.g. A2 or A2xD4")
      ->required();
  rootsys->add_option("--q", q, "deformation parameter in (0,1)")->required();

  auto* ufp = app.add_subcommand("ufp", "invariants of a free unitary quantum group");
  std::string matrix_path, spectrum_path;
  auto* mopt = ufp->add_option("--matrix", matrix_path, "json file with the F matrix");
  auto* sopt = ufp->add_option("--spectrum", spectrum_path,
                               "json file with an exact or float spectrum");
  mopt->excludes(sopt);
  int n_icc_val = 0;
  auto* nopt = ufp->add_option("--n-icc", n_icc_val, "also report certificate constants");

  auto* fusion = app.add_subcommand("fusion", "free-monoid fusion ring");
  std::string fuse_arg, dim_arg;
  bool thmun = false;
  int N = 2, nmax = 50;
  double fq = 0.5;
  fusion->add_option("--fuse", fuse_arg, "decompose a tensor product, e.g. abab,abab");
  fusion->add_option("--dim", dim_arg, "dimension and q-dimension of a word");
  fusion->add_flag("--thmun", thmun, "inner-triviality obstruction sequence");
  fusion->add_option("--N", N, "dimension of the fundamental class");
  fusion->add_option("--q", fq, "q-dimension parameter");
  fusion->add_option("--nmax", nmax, "sequence length for --thmun");

  auto* icc = app.add_subcommand("icc", "commutant-triviality certificate constants");
  std::string icc_matrix;
  int icc_n = 1;
  icc->add_option("--matrix", icc_matrix, "json file with the F matrix")->required();
  icc->add_option("--n", icc_n, "coproduct iteration depth")->required();

  auto* known = app.add_subcommand("known", "tabulated non-compact deformations");
  std::string case_name;
  double known_q = 0.0;
  int known_N = 0;
  known->add_option("--case", case_name, "eq2, azb1, azb2 or azb3")->required();
  auto* kq = known->add_option("--q", known_q, "deformation parameter");
  auto* kN = known->add_option("--N", known_N, "root-of-unity order for azb1");

  app.require_subcommand(1);

  std::vector<const char*> argv;
  argv.push_back("qginv");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (rootsys->parsed()) return cmd_rootsys(type_str, q, opt, out);
    if (ufp->parsed()) {
      if (matrix_path.empty() == spectrum_path.empty())
        throw input_error("ufp: exactly one of --matrix / --spectrum is required");
      std::optional<int> n_icc;
      if (nopt->count() > 0) n_icc = n_icc_val;
      return cmd_ufp(matrix_path, spectrum_path, n_icc, opt, out);
    }
    if (fusion->parsed())
      return cmd_fusion(fuse_arg, dim_arg, thmun, N, fq, nmax, opt, out);
    if (icc->parsed()) return cmd_icc(icc_matrix, icc_n, opt, out);
    if (known->parsed()) {
      std::optional<double> qv;
      std::optional<int> Nv;
      if (kq->count() > 0) qv = known_q;
      if (kN->count() > 0) Nv = known_N;
      return cmd_known(case_name, qv, Nv, opt, out);
    }
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const numeric_error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 3;
  }
  err << "error: no subcommand\n";
  return 2;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace qginv::cli
