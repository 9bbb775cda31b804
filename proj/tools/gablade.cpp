// gablade: exact blade checks, factorization, rank reports, and randomized
// criterion-equivalence sweeps over the Euclidean geometric algebra G_n.
//
// Exit codes: 0 blade / full agreement, 1 usage or input error,
//             2 not a blade, 3 criterion disagreement.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "ga/io.hpp"
#include "ga/oracle.hpp"
#include "ga/plucker.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotABlade = 2;
constexpr int kExitDisagreement = 3;

struct ExprOptions {
  std::string expr;
  int n = 0;
  std::optional<int> grade;
  bool as_json = false;
  bool verbose = false;
};

void add_expr_options(CLI::App* cmd, ExprOptions& opt, bool with_grade = true) {
  cmd->add_option("-n,--dimension", opt.n, "ambient dimension n")->required();
  if (with_grade) {
    cmd->add_option("--grade", opt.grade, "grade r (inferred when homogeneous)");
  }
  cmd->add_option("expression", opt.expr, "multivector expression, or '-' for stdin")->required();
  cmd->add_flag("--json", opt.as_json, "emit one JSON document to stdout");
  cmd->add_flag("--verbose", opt.verbose, "extra diagnostics to stderr");
}

std::string read_expression(const std::string& arg) {
  if (arg != "-") return arg;
  std::string text, line;
  while (std::getline(std::cin, line)) {
    text += line;
    text += ' ';
  }
  return text;
}

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses the expression and settles the working grade r.
std::pair<ga::Multivector, int> load_input(const ExprOptions& opt) {
  const ga::Multivector b = ga::parse_multivector(read_expression(opt.expr), opt.n);
  if (b.is_zero()) throw InputError("the zero multivector has no blade grade");
  const auto grades = b.grades();
  if (opt.grade) {
    if (!b.is_homogeneous(*opt.grade)) {
      throw InputError("input is not homogeneous of grade " + std::to_string(*opt.grade));
    }
    return {b, *opt.grade};
  }
  if (grades.size() != 1) {
    throw InputError("input has mixed grades; pass --grade");
  }
  return {b, *grades.begin()};
}

const char* failure_name(ga::CheckReport::Failure f) {
  switch (f) {
    case ga::CheckReport::Failure::none: return "none";
    case ga::CheckReport::Failure::plucker_residual: return "plucker_residual";
    case ga::CheckReport::Failure::square_not_scalar: return "square_not_scalar";
    case ga::CheckReport::Failure::sandwich_not_vector: return "sandwich_not_vector";
  }
  return "unknown";
}

json report_to_json(const ga::CheckReport& report, int n) {
  json out;
  out["passed"] = report.passed;
  out["failure"] = failure_name(report.failure);
  if (report.witness_k) out["witness"] = ga::format_blade(*report.witness_k, n);
  if (report.residual) out["residual"] = ga::format_multivector(*report.residual);
  return out;
}

void print_report_text(const std::string& name, const ga::CheckReport& report, int n) {
  std::cout << name << ": " << (report.passed ? "pass" : "FAIL");
  if (!report.passed) {
    std::cout << " (" << failure_name(report.failure);
    if (report.witness_k) std::cout << ", witness " << ga::format_blade(*report.witness_k, n);
    if (report.residual) std::cout << ", residual " << ga::format_multivector(*report.residual);
    std::cout << ")";
  }
  std::cout << "\n";
}

int run_check(const ExprOptions& opt, const std::string& method) {
  const auto [b, r] = load_input(opt);
  const int n = b.dimension();

  json out;
  out["command"] = "check";
  out["input"] = opt.expr;
  out["normalized"] = ga::format_multivector(b);
  out["n"] = n;
  out["r"] = r;
  out["method"] = method;

  bool is_blade = true;
  std::optional<ga::CheckReport> plucker, nguyen;
  std::optional<bool> oracle;

  if (method == "plucker" || method == "all") {
    plucker = ga::plucker_check(b, r);
    is_blade = plucker->passed;
    out["plucker"] = report_to_json(*plucker, n);
  }
  if (method == "nguyen" || method == "all") {
    nguyen = ga::nguyen_check(b, r);
    is_blade = nguyen->passed;
    out["nguyen"] = report_to_json(*nguyen, n);
  }
  if (method == "oracle" || method == "all") {
    oracle = ga::blade_oracle(b, r);
    is_blade = *oracle;
    out["oracle"] = json{{"passed", *oracle}};
  }
  if (method == "all") {
    const bool agree = plucker->passed == nguyen->passed && plucker->passed == *oracle;
    out["methods_agree"] = agree;
    if (!agree) {
      // The theorems say this cannot happen; surface it loudly if it does.
      std::cerr << "criterion disagreement: plucker=" << plucker->passed
                << " nguyen=" << nguyen->passed << " oracle=" << *oracle << "\n";
      if (opt.as_json) std::cout << out.dump(2) << "\n";
      return kExitDisagreement;
    }
  }

  out["verdict"] = is_blade ? "blade" : "not_a_blade";
  const ga::CheckReport* witness_source =
      plucker && !plucker->passed ? &*plucker : (nguyen && !nguyen->passed ? &*nguyen : nullptr);
  if (witness_source) {
    if (witness_source->witness_k) {
      out["witness"] = ga::format_blade(*witness_source->witness_k, n);
    }
    if (witness_source->residual) {
      out["residual"] = ga::format_multivector(*witness_source->residual);
    }
  }

  if (opt.as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << ga::format_multivector(b) << " in G_" << n << ", grade " << r << ": "
              << (is_blade ? "blade" : "not a blade") << "\n";
    if (plucker) print_report_text("plucker", *plucker, n);
    if (nguyen) print_report_text("nguyen", *nguyen, n);
    if (oracle) std::cout << "oracle: " << (*oracle ? "pass" : "FAIL") << "\n";
    if (opt.verbose && plucker && !plucker->passed) {
      std::cerr << "witness blades are coordinate (r-1)-blades e_K with indices ascending; "
                   "the residual is (e_K . B) ^ B\n";
      std::cerr << "failing K count: " << ga::plucker_failures(b, r).size() << "\n";
    }
  }
  return is_blade ? kExitOk : kExitNotABlade;
}

int run_factor(const ExprOptions& opt) {
  const auto [b, r] = load_input(opt);
  const int n = b.dimension();

  json out;
  out["command"] = "factor";
  out["input"] = opt.expr;
  out["normalized"] = ga::format_multivector(b);
  out["n"] = n;
  out["r"] = r;

  try {
    const ga::Factorization f = ga::factorize(b, r);

    ga::Multivector wedge = f.vectors.front();
    for (std::size_t i = 1; i < f.vectors.size(); ++i) {
      wedge = ga::outer_product(wedge, f.vectors[i]);
    }
    out["verdict"] = "blade";
    out["scale"] = f.scale.str();
    out["pivot"] = ga::format_blade(f.pivot, n);
    json vectors = json::array();
    for (const auto& v : f.vectors) vectors.push_back(ga::format_multivector(v));
    out["vectors"] = vectors;
    out["reconstruction"] = ga::format_multivector(f.scale * wedge);

    if (opt.as_json) {
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "scale: " << f.scale.str() << "\n";
      for (std::size_t i = 0; i < f.vectors.size(); ++i) {
        std::cout << "v" << (i + 1) << ": " << ga::format_multivector(f.vectors[i]) << "\n";
      }
      std::cout << "check: " << f.scale.str() << " * (v1 ^ ... ^ v" << f.vectors.size()
                << ") = " << ga::format_multivector(f.scale * wedge) << "\n";
    }
    return kExitOk;
  } catch (const ga::NotABladeError& e) {
    out["verdict"] = "not_a_blade";
    if (e.report.witness_k) out["witness"] = ga::format_blade(*e.report.witness_k, n);
    if (e.report.residual) out["residual"] = ga::format_multivector(*e.report.residual);
    if (opt.as_json) {
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "not a blade\n";
      if (e.report.witness_k) {
        std::cout << "witness: " << ga::format_blade(*e.report.witness_k, n)
                  << ", residual: " << ga::format_multivector(*e.report.residual) << "\n";
      }
    }
    return kExitNotABlade;
  }
}

int run_rank(const ExprOptions& opt) {
  const auto [b, r] = load_input(opt);
  const int n = b.dimension();

  const ga::RankSpace space = ga::rank_space(b, r);
  const int srank = ga::span_rank(b, r);
  const bool is_blade = space.dimension == r;

  json out;
  out["command"] = "rank";
  out["input"] = opt.expr;
  out["normalized"] = ga::format_multivector(b);
  out["n"] = n;
  out["r"] = r;
  out["rank_space_dim"] = space.dimension;
  json basis = json::array();
  for (const auto& v : space.basis) basis.push_back(ga::format_multivector(v));
  out["rank_space_basis"] = basis;
  out["span_rank"] = srank;
  out["lemma2_bounds_hold"] = (r <= srank && srank <= n);
  out["verdict"] = is_blade ? "blade" : "not_a_blade";

  if (opt.as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "dim V_B = " << space.dimension << "\n";
    for (const auto& v : space.basis) std::cout << "  " << ga::format_multivector(v) << "\n";
    std::cout << "span_rank = " << srank << "  (Lemma 2: " << r << " <= " << srank << " <= " << n
              << (r <= srank && srank <= n ? " holds" : " VIOLATED") << ")\n";
    std::cout << "verdict: " << (is_blade ? "blade" : "not a blade") << "\n";
  }
  return is_blade ? kExitOk : kExitNotABlade;
}

int run_trials(const ga::TrialConfig& cfg, bool as_json) {
  const ga::TrialReport report = ga::run_equivalence_trials(cfg);

  json out;
  out["command"] = "trials";
  out["n"] = cfg.n;
  out["r"] = cfg.r;
  out["trials"] = report.trials_run;
  out["seed"] = cfg.seed;
  out["bound"] = cfg.bound;
  out["instances"] = report.instances;
  out["agreements"] = report.agreements;
  out["quad_checks"] = report.quad_checks;
  out["verdict"] = report.all_agree() ? "agree" : "disagree";
  if (report.first_disagreement) {
    const auto& d = *report.first_disagreement;
    out["disagreement"] = json{{"trial", d.trial},
                               {"kind", d.kind},
                               {"input", ga::format_multivector(d.input)},
                               {"oracle", d.oracle},
                               {"plucker", d.plucker},
                               {"nguyen", d.nguyen},
                               {"span_rank_is_r", d.span_rank_is_r}};
  } else {
    out["disagreement"] = nullptr;
  }

  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "trials: " << report.trials_run << "  instances: " << report.instances
              << "  agreements: " << report.agreements;
    if (report.quad_checks > 0) std::cout << "  quad_checks: " << report.quad_checks;
    std::cout << "\n";
    if (report.first_disagreement) {
      const auto& d = *report.first_disagreement;
      std::cout << "DISAGREEMENT at trial " << d.trial << " (" << d.kind
                << "): " << ga::format_multivector(d.input) << "\n"
                << "  oracle=" << d.oracle << " plucker=" << d.plucker << " nguyen=" << d.nguyen
                << " span_rank_is_r=" << d.span_rank_is_r << "\n";
    } else {
      std::cout << "all criteria agree\n";
    }
  }
  return report.all_agree() ? kExitOk : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact blade decomposability toolkit for Euclidean G_n"};
  app.require_subcommand(1);

  ExprOptions check_opt;
  std::string method = "all";
  CLI::App* check = app.add_subcommand("check", "decide whether an r-vector is an r-blade");
  add_expr_options(check, check_opt);
  check->add_option("--method", method, "plucker|nguyen|oracle|all")
      ->check(CLI::IsMember({"plucker", "nguyen", "oracle", "all"}));

  ExprOptions factor_opt;
  CLI::App* factor = app.add_subcommand("factor", "factor an r-blade into r vectors");
  add_expr_options(factor, factor_opt);

  ExprOptions rank_opt;
  CLI::App* rank = app.add_subcommand("rank", "rank space and span rank of an r-vector");
  add_expr_options(rank, rank_opt);

  ga::TrialConfig cfg;
  bool trials_json = false;
  CLI::App* trials = app.add_subcommand("trials", "randomized criterion-equivalence sweep");
  trials->add_option("-n,--dimension", cfg.n, "ambient dimension n")->required();
  trials->add_option("-r,--grade", cfg.r, "grade r")->required();
  trials->add_option("--trials", cfg.trials, "number of trials")->required();
  trials->add_option("--seed", cfg.seed, "64-bit seed")->default_val(0);
  trials->add_option("--bound", cfg.bound, "coefficient bound")->default_val(10);
  trials->add_flag("--json", trials_json, "emit one JSON document to stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return run_check(check_opt, method);
    if (factor->parsed()) return run_factor(factor_opt);
    if (rank->parsed()) return run_rank(rank_opt);
    if (trials->parsed()) return run_trials(cfg, trials_json);
  } catch (const ga::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
