#include <algorithm>
#include <atomic>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "specrec/caselab.hpp"
#include "specrec/fixtures.hpp"
#include "specrec/gkgraph.hpp"
#include "specrec/intarith.hpp"
#include "specrec/primpart.hpp"
#include "specrec/report.hpp"
#include "specrec/specgen.hpp"

namespace {

using namespace specrec;

constexpr unsigned long kQmaxFloor = 2000;
constexpr std::uint64_t kCapFloor = 10000000;

Int parse_big(const std::string& text, const std::string& what) {
  try {
    return Int(text);
  } catch (const std::exception&) {
    throw std::invalid_argument(what + " '" + text + "' is not an integer");
  }
}

unsigned long parse_dim(const std::string& text) {
  Int v = parse_big(text, "dimension");
  if (v < 2 || v > 4096) throw std::invalid_argument("dimension out of range");
  return v.get_ui();
}

Family parse_family(const std::string& token) {
  if (token == "linear-unitary") return Family::LinearUnitary;
  if (token == "symplectic") return Family::Symplectic;
  if (token == "odd-orthogonal") return Family::OddDimOrthogonal;
  if (token == "even-orthogonal-plus") return Family::EvenDimOrthogonalPlus;
  if (token == "even-orthogonal-minus") return Family::EvenDimOrthogonalMinus;
  throw std::invalid_argument(
      "unknown family '" + token +
      "'; use one of linear-unitary, symplectic, odd-orthogonal, "
      "even-orthogonal-plus, even-orthogonal-minus");
}

int parse_sign(const std::string& token) {
  if (token == "+" || token == "+1" || token == "1") return 1;
  if (token == "-" || token == "-1") return -1;
  throw std::invalid_argument("sign must be +1 or -1, got '" + token + "'");
}

GroupId make_group(const std::string& fam_tok, const std::string& sign_tok,
                   const std::string& dim_tok, const std::string& q_tok) {
  Family family = parse_family(fam_tok);
  int sign = parse_sign(sign_tok);
  if (family == Family::EvenDimOrthogonalMinus && sign != -1)
    throw std::invalid_argument("even-orthogonal-minus groups carry sign -1");
  if ((family == Family::Symplectic || family == Family::OddDimOrthogonal ||
       family == Family::EvenDimOrthogonalPlus) &&
      sign != 1)
    throw std::invalid_argument("this family carries sign +1");
  GroupId g;
  g.family = family;
  g.sign = sign;
  g.dim = parse_dim(dim_tok);
  g.q = parse_big(q_tok, "field size");
  if (g.q < 2 || !is_prime_power(g.q))
    throw std::invalid_argument("field size must be a prime power >= 2");
  return g;
}

void write_factor_pairs(std::ostream& out, const FactoredNat& f) {
  out << '[';
  bool first = true;
  for (const auto& [p, e] : f.factors) {
    if (!first) out << ',';
    first = false;
    out << "[\"" << p.get_str() << "\"," << e << ']';
  }
  out << ']';
}

void write_value_array(std::ostream& out, const std::vector<Int>& vals) {
  out << '[';
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i) out << ',';
    out << '"' << vals[i].get_str() << '"';
  }
  out << ']';
}

struct Options {
  std::string fixtures = "fixtures";
  std::string format = "human";
  unsigned long jobs = 1;
  unsigned long qmax = kQmaxFloor;
  std::uint64_t cap = kCapFloor;
  std::string mode;
  std::uint64_t seed = 2026;

  bool records() const { return format == "records"; }
  LabConfig config() const {
    LabConfig cfg;
    cfg.fixtures_dir = fixtures;
    cfg.magr_q_max = qmax;
    cfg.solver_scan_cap = cap;
    if (mode == "literal") cfg.mode = CheckMode::Literal;
    if (mode == "staged") cfg.mode = CheckMode::Staged;
    cfg.jobs = jobs;
    cfg.seed = seed;
    return cfg;
  }
};

void record_head(std::ostream& out, const LabConfig& cfg,
                 const std::string& op) {
  out << "{\"version\":\"" << kToolVersion << "\",\"config\":\""
      << config_digest(cfg) << "\",\"op\":\"" << op << "\"";
}

int run_spectrum(const Options& opt, const GroupId& g) {
  SpectrumGenerators gens = spectrum_generators(g);
  if (opt.records()) {
    record_head(std::cout, opt.config(), "spectrum");
    std::cout << ",\"group\":\"" << g.to_string() << "\",\"generators\":";
    write_value_array(std::cout, gens.generators);
    std::cout << "}\n";
    return 0;
  }
  std::cout << g.to_string() << " element orders, maximal under divisibility ("
            << gens.generators.size() << "):\n";
  for (const Int& v : gens.generators) std::cout << "  " << v.get_str() << "\n";
  return 0;
}

int run_exponent(const Options& opt, const GroupId& g) {
  FactoredNat e = exponent(g);
  if (opt.records()) {
    record_head(std::cout, opt.config(), "exponent");
    std::cout << ",\"group\":\"" << g.to_string() << "\",\"value\":\""
              << e.value.get_str() << "\",\"factors\":";
    write_factor_pairs(std::cout, e);
    std::cout << "}\n";
    return 0;
  }
  std::cout << "exp(" << g.to_string() << ") = " << e.value.get_str() << " = "
            << e.to_string() << "\n";
  return 0;
}

int run_graph(const Options& opt, const GroupId& g) {
  SpectrumGenerators gens = spectrum_generators(g);
  PrimeGraph graph = build_prime_graph(gens);
  std::vector<std::vector<Int>> comps = components(graph);
  std::vector<ComponentOrder> orders = component_orders(gens, graph);
  unsigned long indep = independence_number(graph);
  if (opt.records()) {
    record_head(std::cout, opt.config(), "graph");
    std::cout << ",\"group\":\"" << g.to_string() << "\",\"components\":[";
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (i) std::cout << ',';
      write_value_array(std::cout, comps[i]);
    }
    std::cout << "],\"orders\":[";
    for (std::size_t i = 0; i < orders.size(); ++i) {
      if (i) std::cout << ',';
      write_value_array(std::cout, orders[i].orders);
    }
    std::cout << "],\"independence\":" << indep << "}\n";
    return 0;
  }
  std::cout << g.to_string() << ": " << comps.size()
            << " prime-graph components\n";
  for (std::size_t i = 0; i < comps.size(); ++i) {
    std::cout << "  component " << i + 1 << ":";
    for (const Int& p : comps[i]) std::cout << " " << p.get_str();
    std::cout << "\n";
  }
  for (std::size_t i = 0; i < orders.size(); ++i) {
    std::cout << "  orders on component " << i + 2 << ":";
    for (const Int& v : orders[i].orders) std::cout << " " << v.get_str();
    std::cout << "\n";
  }
  std::cout << "  independence number: " << indep << "\n";
  return 0;
}

int run_kgpd(const Options& opt, const std::string& base_tok,
             const std::string& index_tok) {
  Int base = parse_big(base_tok, "base");
  Int index_val = parse_big(index_tok, "index");
  if (index_val < 2 || index_val > 64)
    throw std::invalid_argument("index must lie in 2..64");
  PrimitiveSpec spec{base, index_val.get_ui()};
  FactoredNat k = greatest_primitive_divisor(spec);
  if (opt.records()) {
    record_head(std::cout, opt.config(), "kgpd");
    std::cout << ",\"base\":\"" << base.get_str() << "\",\"index\":"
              << index_val.get_str() << ",\"value\":\"" << k.value.get_str()
              << "\",\"factors\":";
    write_factor_pairs(std::cout, k);
    std::cout << "}\n";
    return 0;
  }
  std::cout << k.value.get_str() << "\n";
  if (k.factors.size() > 1 || (k.factors.size() == 1 && k.factors[0].second > 1))
    std::cout << "= " << k.to_string() << "\n";
  return 0;
}

int run_sigma(const Options& opt, const std::string& n_tok,
              const std::string& m_tok, const std::string& bform) {
  unsigned long n = parse_dim(n_tok);
  unsigned long m = parse_dim(m_tok);
  SigmaSet s = sigma_set(n, m, bform);
  if (opt.records()) {
    record_head(std::cout, opt.config(), "sigma");
    std::cout << ",\"n\":" << n << ",\"m\":" << m << ",\"bform\":\""
              << json_escape(bform) << "\",\"values\":[";
    for (std::size_t i = 0; i < s.values.size(); ++i) {
      if (i) std::cout << ',';
      std::cout << "{\"value\":\"" << s.values[i].value.get_str()
                << "\",\"factors\":";
      write_factor_pairs(std::cout, s.values[i]);
      std::cout << '}';
    }
    std::cout << "]}\n";
    return 0;
  }
  std::cout << "{";
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    if (i) std::cout << ", ";
    std::cout << s.values[i].to_string();
  }
  std::cout << "}\n";
  return 0;
}

int run_nvalues(const Options& opt, const std::string& n_tok) {
  unsigned long n = parse_dim(n_tok);
  LabConfig cfg = opt.config();
  FixtureSet fx = load_fixtures(cfg.fixtures_dir);
  struct Section {
    const char* label;
    NvalueClass cls;
  };
  const Section sections[] = {
      {"orthogonal-symplectic", NvalueClass::NonLinear},
      {"linear-unitary", NvalueClass::LinearUnitary},
  };
  for (const Section& sec : sections) {
    NvalueSigma sig = nvalue_sigma(n, sec.cls, fx);
    if (opt.records()) {
      record_head(std::cout, cfg, "nvalues");
      std::cout << ",\"n\":" << n << ",\"class\":\"" << sec.label
                << "\",\"values\":";
      write_value_array(std::cout, sig.values);
      std::cout << ",\"augmented\":";
      write_value_array(std::cout, sig.augmented);
      std::cout << ",\"contributors\":[";
      for (std::size_t i = 0; i < sig.contributors.size(); ++i) {
        const NvalueEntry& e = sig.contributors[i];
        if (i) std::cout << ',';
        std::cout << "{\"row\":\"" << json_escape(e.row) << "\",\"dim\":"
                  << e.dim << ",\"u\":\"" << e.u.get_str() << "\",\"tau\":"
                  << e.tau << ",\"values\":";
        write_value_array(std::cout, e.values);
        std::cout << '}';
      }
      std::cout << "]}\n";
      continue;
    }
    std::cout << sec.label << " sections for target dimension " << n << ":\n";
    for (const NvalueEntry& e : sig.contributors) {
      std::cout << "  " << e.row << " dim " << e.dim << " u " << e.u.get_str()
                << " tau " << (e.tau > 0 ? "+1" : "-1") << ":";
      for (const Int& v : e.values) std::cout << " " << v.get_str();
      std::cout << "\n";
    }
    std::cout << "  set:";
    for (const Int& v : sig.values) std::cout << " " << v.get_str();
    std::cout << "\n";
    if (!sig.augmented.empty()) {
      std::cout << "  further component orders:";
      for (const Int& v : sig.augmented) std::cout << " " << v.get_str();
      std::cout << "\n";
    }
  }
  return 0;
}

int run_bounds(const Options& opt, const std::string& n_tok,
               const std::string& column) {
  unsigned long n = parse_dim(n_tok);
  LabConfig cfg = opt.config();
  FixtureSet fx = load_fixtures(cfg.fixtures_dir);
  DimensionAudit audit = candidate_dimensions(n, column, fx);
  if (opt.records()) {
    record_head(std::cout, cfg, "bounds");
    std::cout << ",\"n\":" << n << ",\"column\":\"" << json_escape(column)
              << "\",\"dims\":[";
    for (std::size_t i = 0; i < audit.dims.size(); ++i) {
      if (i) std::cout << ',';
      std::cout << audit.dims[i];
    }
    std::cout << "],\"extras\":[";
    for (std::size_t i = 0; i < audit.extras.size(); ++i) {
      if (i) std::cout << ',';
      std::cout << audit.extras[i];
    }
    std::cout << "],\"notes\":[";
    for (std::size_t i = 0; i < audit.notes.size(); ++i) {
      if (i) std::cout << ',';
      std::cout << '"' << json_escape(audit.notes[i]) << '"';
    }
    std::cout << "]}\n";
    return 0;
  }
  std::cout << "admissible dimensions for n=" << n << ", " << column << ":";
  for (unsigned long m : audit.dims) std::cout << " " << m;
  std::cout << "\n";
  for (const std::string& note : audit.notes)
    std::cout << "  " << note << "\n";
  return 0;
}

int run_solve(const Options& opt, const std::string& formula,
              const std::string& dim_tok, const std::string& tau_tok,
              const std::string& target_tok, bool odd_only,
              const std::string& lower_tok, unsigned long modulus,
              const std::string& residue_tok) {
  unsigned long dim = parse_dim(dim_tok);
  int tau = parse_sign(tau_tok);
  Int target = parse_big(target_tok, "target");
  SolveConstraints cons;
  cons.odd_only = odd_only;
  if (!lower_tok.empty()) cons.lower = parse_big(lower_tok, "lower bound");
  cons.modulus = modulus;
  if (!residue_tok.empty()) cons.residue = parse_big(residue_tok, "residue");
  SolveResult res = solve_formula_eq(formula, dim, tau, target, cons);
  if (opt.records()) {
    record_head(std::cout, opt.config(), "solve");
    std::cout << ",\"formula\":\"" << json_escape(formula) << "\",\"dim\":"
              << dim << ",\"tau\":" << tau << ",\"target\":\""
              << target.get_str() << "\",\"roots\":";
    write_value_array(std::cout, res.roots);
    std::cout << ",\"threshold\":\"" << res.threshold.get_str()
              << "\",\"monotone\":" << (res.monotone_ok ? "true" : "false")
              << ",\"notes\":[";
    for (std::size_t i = 0; i < res.notes.size(); ++i) {
      if (i) std::cout << ',';
      std::cout << '"' << json_escape(res.notes[i]) << '"';
    }
    std::cout << "]}\n";
  } else {
    if (res.roots.empty()) {
      std::cout << "no prime-power roots\n";
    } else {
      std::cout << "roots:";
      for (const Int& q : res.roots) std::cout << " " << q.get_str();
      std::cout << "\n";
    }
    std::cout << "formula exceeds the target for good from "
              << res.threshold.get_str() << "\n";
    for (const std::string& note : res.notes)
      std::cout << "  " << note << "\n";
    if (!res.monotone_ok)
      std::cout << "  warning: monotonicity spot check failed; the root list "
                   "may be incomplete\n";
  }
  return res.monotone_ok ? 0 : 3;
}

std::vector<CaseReport> run_parallel_sweep(const FixtureSet& fx,
                                           const LabConfig& cfg) {
  using Unit = std::function<std::vector<CaseReport>()>;
  std::vector<Unit> units;
  units.push_back([&] { return verify_table1(fx, cfg); });
  units.push_back([&] { return verify_table2(fx, cfg); });
  units.push_back([&] { return verify_table3(fx, cfg); });
  units.push_back([&] { return verify_table4(fx, cfg); });
  for (unsigned long n : {7ul, 11ul, 13ul, 17ul, 19ul, 23ul})
    units.push_back([&fx, &cfg, n] { return verify_case1(n, fx, cfg); });
  for (const Table4Row& row : fx.table4)
    units.push_back([&fx, &cfg, key = table4_row_key(row)] {
      return std::vector<CaseReport>{verify_case2(key, fx, cfg)};
    });
  units.push_back([&] { return verify_exponent_bounds(cfg); });
  units.push_back([&] { return verify_phi_floor(cfg); });

  std::vector<std::vector<CaseReport>> results(units.size());
  std::vector<std::string> errors(units.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= units.size()) break;
      try {
        results[i] = units[i]();
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  unsigned long want = std::max(1ul, cfg.jobs);
  unsigned long spawn =
      std::min<unsigned long>(want, units.size()) - 1;
  std::vector<std::thread> pool;
  pool.reserve(spawn);
  for (unsigned long i = 0; i < spawn; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (const std::string& err : errors)
    if (!err.empty()) throw std::runtime_error(err);

  std::vector<CaseReport> reports;
  for (std::vector<CaseReport>& part : results)
    reports.insert(reports.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
  std::stable_sort(
      reports.begin(), reports.end(),
      [](const CaseReport& a, const CaseReport& b) { return a.id < b.id; });
  return reports;
}

int report_exit(const std::vector<CaseReport>& reports) {
  bool inconclusive = false;
  for (const CaseReport& r : reports) {
    if (r.status == CaseStatus::Fail) return 1;
    for (const std::string& w : r.witnesses)
      if (w.find("without a separation certificate") != std::string::npos ||
          w.find("monotonicity spot check failed") != std::string::npos)
        inconclusive = true;
  }
  return inconclusive ? 3 : 0;
}

int run_verify(const Options& opt, const std::string& target,
               const std::string& arg) {
  LabConfig cfg = opt.config();
  FixtureSet fx = load_fixtures(cfg.fixtures_dir);
  std::vector<CaseReport> reports;
  if (target == "table1") {
    reports = verify_table1(fx, cfg);
  } else if (target == "table2") {
    reports = verify_table2(fx, cfg);
  } else if (target == "table3") {
    reports = verify_table3(fx, cfg);
  } else if (target == "table4") {
    reports = verify_table4(fx, cfg);
  } else if (target == "case1") {
    if (arg.empty())
      throw std::invalid_argument("verify case1 needs a target dimension, "
                                  "e.g. `verify case1 7`");
    reports = verify_case1(parse_dim(arg), fx, cfg);
  } else if (target == "case2") {
    if (arg.empty())
      throw std::invalid_argument("verify case2 needs a row key, e.g. "
                                  "`verify case2 7-3`");
    reports.push_back(verify_case2(arg, fx, cfg));
  } else if (target == "all") {
    reports = run_parallel_sweep(fx, cfg);
  } else {
    throw std::invalid_argument(
        "unknown verify target '" + target +
        "'; use table1, table2, table3, table4, case1 <n>, case2 <row>, all");
  }
  if (!arg.empty() && target != "case1" && target != "case2")
    throw std::invalid_argument("verify " + target + " takes no argument");
  if (opt.records())
    write_records(std::cout, reports, cfg);
  else
    write_human(std::cout, reports);
  return report_exit(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral recognition workbench for classical groups"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--fixtures", opt.fixtures, "fixture directory")
      ->envname("SPECREC_FIXTURES");
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"human", "records"}))
      ->envname("SPECREC_FORMAT");
  app.add_option("--jobs", opt.jobs, "worker threads for the full sweep")
      ->check(CLI::Range(1ul, 256ul))
      ->envname("SPECREC_JOBS");
  app.add_option("--qmax", opt.qmax, "field-size ceiling for the grid checks")
      ->envname("SPECREC_QMAX");
  app.add_option("--cap", opt.cap, "scan cap for the equation solvers")
      ->envname("SPECREC_CAP");
  app.add_option("--mode", opt.mode, "divisor-check mode (default: both)")
      ->check(CLI::IsMember({"literal", "staged"}))
      ->envname("SPECREC_MODE");
  app.add_option("--seed", opt.seed, "seed for randomized spot checks")
      ->envname("SPECREC_SEED");

  std::string fam_tok, sign_tok, dim_tok, q_tok;
  auto add_group_args = [&](CLI::App* sc) {
    sc->add_option("family", fam_tok, "group family tag")->required();
    sc->add_option("sign", sign_tok, "+1 or -1")->required();
    sc->add_option("dim", dim_tok, "dimension parameter")->required();
    sc->add_option("q", q_tok, "field size, a prime power")->required();
  };
  CLI::App* sc_spectrum = app.add_subcommand(
      "spectrum", "element-order generators of a classical group");
  add_group_args(sc_spectrum);
  CLI::App* sc_exponent =
      app.add_subcommand("exponent", "group exponent, factored");
  add_group_args(sc_exponent);
  CLI::App* sc_graph = app.add_subcommand(
      "graph", "prime-graph components, component orders, independence number");
  add_group_args(sc_graph);

  std::string base_tok, index_tok;
  CLI::App* sc_kgpd = app.add_subcommand(
      "kgpd", "greatest divisor of base^index - 1 primitive for the index");
  sc_kgpd->add_option("base", base_tok, "integer base, |base| >= 2")
      ->required();
  sc_kgpd->add_option("index", index_tok, "exponent index")->required();

  std::string n_tok, m_tok, bform_tok;
  CLI::App* sc_sigma = app.add_subcommand(
      "sigma", "candidate component-order set for a dimension pair");
  sc_sigma->add_option("n", n_tok, "target dimension, an odd prime")
      ->required();
  sc_sigma->add_option("m", m_tok, "section dimension, an odd prime")
      ->required();
  sc_sigma->add_option("bform", bform_tok, "t-m, nt-m, or nt-1")->required();

  CLI::App* sc_nvalues = app.add_subcommand(
      "nvalues", "component orders of bounded sections for a target dimension");
  sc_nvalues->add_option("n", n_tok, "target dimension")->required();

  std::string column_tok;
  CLI::App* sc_bounds =
      app.add_subcommand("bounds", "admissible section dimensions with audit");
  sc_bounds->add_option("n", n_tok, "target dimension")->required();
  sc_bounds->add_option("family", column_tok, "column tag")->required();

  std::string formula_tok, tau_tok, target_tok, lower_tok, residue_tok;
  unsigned long modulus = 0;
  bool odd_only = false;
  CLI::App* sc_solve = app.add_subcommand(
      "solve", "prime-power roots of formula(dim, u, tau) = target");
  sc_solve->add_option("formula", formula_tok, "structural row key")
      ->required();
  sc_solve->add_option("dim", dim_tok, "dimension parameter")->required();
  sc_solve->add_option("tau", tau_tok, "+1 or -1")->required();
  sc_solve->add_option("target", target_tok, "target value")->required();
  sc_solve->add_flag("--odd", odd_only, "restrict to odd prime powers");
  sc_solve->add_option("--lower", lower_tok, "smallest admissible field size");
  sc_solve->add_option("--modulus", modulus, "residue filter modulus");
  sc_solve->add_option("--residue", residue_tok, "required residue");

  std::string verify_target, verify_arg;
  CLI::App* sc_verify =
      app.add_subcommand("verify", "run a verification suite");
  sc_verify
      ->add_option("target", verify_target,
                   "table1|table2|table3|table4|case1|case2|all")
      ->required();
  sc_verify->add_option("arg", verify_arg,
                        "dimension for case1, row key for case2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (opt.qmax < kQmaxFloor)
    std::cerr << "warning: --qmax " << opt.qmax
              << " is below the published grid ceiling " << kQmaxFloor << "\n";
  if (opt.cap < kCapFloor)
    std::cerr << "warning: --cap " << opt.cap
              << " is below the published scan cap " << kCapFloor << "\n";

  try {
    if (sc_spectrum->parsed())
      return run_spectrum(opt, make_group(fam_tok, sign_tok, dim_tok, q_tok));
    if (sc_exponent->parsed())
      return run_exponent(opt, make_group(fam_tok, sign_tok, dim_tok, q_tok));
    if (sc_graph->parsed())
      return run_graph(opt, make_group(fam_tok, sign_tok, dim_tok, q_tok));
    if (sc_kgpd->parsed()) return run_kgpd(opt, base_tok, index_tok);
    if (sc_sigma->parsed()) return run_sigma(opt, n_tok, m_tok, bform_tok);
    if (sc_nvalues->parsed()) return run_nvalues(opt, n_tok);
    if (sc_bounds->parsed()) return run_bounds(opt, n_tok, column_tok);
    if (sc_solve->parsed())
      return run_solve(opt, formula_tok, dim_tok, tau_tok, target_tok,
                       odd_only, lower_tok, modulus, residue_tok);
    if (sc_verify->parsed()) return run_verify(opt, verify_target, verify_arg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand\n";
  return 2;
}
