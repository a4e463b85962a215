// Copyright 2026 The ppc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "ppc/analysis.hpp"
#include "ppc/errors.hpp"
#include "ppc/recovery.hpp"

namespace ppc::cli {
namespace {

constexpr std::size_t kRecoverySeedsCap = 20;

std::vector<std::size_t> desired_indices(const ExperimentConfig& cfg,
                                         std::size_t mu) {
  if (cfg.v) {
    if (*cfg.v >= mu) {
      throw ConfigError("v = " + std::to_string(*cfg.v + 1) + " outside 1.." +
                        std::to_string(mu));
    }
    return {*cfg.v};
  }
  std::vector<std::size_t> all(mu);
  for (std::size_t i = 0; i < mu; ++i) all[i] = i;
  return all;
}

RateMatrix scheme_matrix(const ExperimentConfig& cfg, const CodingContext& ctx) {
  return cfg.scheme == Scheme::kGeneral ? build_general(ctx) : build_systematic(ctx);
}

std::string limit_row(const std::string& name, const ExperimentConfig& cfg,
                      const Rational& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9f", to_double(r));
  std::ostringstream os;
  os << name << ',' << cfg.n << ',' << cfg.k << ',' << cfg.g << ",,inf,"
     << to_string(r) << ',' << buf << ",,";
  return os.str();
}

const char* verdict(bool ok) { return ok ? "pass" : "FAIL"; }

}  // namespace

int cmd_rate_table(const ExperimentConfig& cfg, std::ostream& out) {
  std::vector<RateReport> rows;
  try {
    rows = rate_table(cfg.n, cfg.k, cfg.g, cfg.max_f);
  } catch (const UsageError& e) {
    throw ConfigError(e.what());
  }
  out << csv_header() << '\n';
  for (const auto& r : rows) out << csv_row(r) << '\n';
  const AsymptoticRates lim = asymptotic_rates(cfg.n, cfg.k, cfg.g);
  out << limit_row("general-limit", cfg, lim.general) << '\n';
  out << limit_row("systematic-limit", cfg, lim.systematic) << '\n';
  return kExitOk;
}

int cmd_simulate(const ExperimentConfig& cfg, std::ostream& out) {
  const CodingContext ctx = make_context(cfg);
  const CandidateSet cs = make_candidates(cfg, ctx);
  const auto vs = desired_indices(cfg, cs.size());
  int status = kExitOk;
  for (std::size_t v : vs) {
    SimulationRun run = simulate(ctx, cs, cfg.scheme, v, cfg.seed);
    if (cfg.fault == "corrupt-answer") {
      run.answers.at(0).at(0) += ctx.field().one();
      run.recovered = decode(run.plan, run.answers);
    }
    out << "# scheme=" << to_string(cfg.scheme) << " n=" << cfg.n
        << " k=" << cfg.k << " g=" << cfg.g << " f=" << cfg.f
        << " mu=" << cs.size() << " q=" << ctx.field().modulus()
        << " v=" << (v + 1) << " seed=" << cfg.seed << '\n';
    out << "# candidates:";
    for (std::size_t m = 0; m < cs.size(); ++m) {
      out << ' ' << (m + 1) << '=' << cs[m].to_string()
          << (m + 1 < cs.size() ? ';' : '\n');
    }
    out << "# rate matrix\n" << run.plan.rate_matrix().to_grid();
    out << "# queries and answers\n" << format_trace(run.plan, &run.answers);
    out << "# recovered table (row: values)\n";
    for (std::size_t t = 0; t < run.recovered.x.size(); ++t) {
      out << (t + 1) << ':';
      for (const auto& x : run.recovered.x[t]) out << ' ' << x.value();
      out << '\n';
    }
    const auto violations = audit_plan(run.plan);
    RateReport report;
    bool audit_ok = violations.empty();
    try {
      report = audit_download(run.plan);
    } catch (const AuditError& e) {
      audit_ok = false;
      out << "# download audit failed: " << e.what() << '\n';
      report = rate_report(cfg.scheme, RateParams{cfg.n, cfg.k, cfg.g, cfg.f,
                                                  cs.size(), ctx.field().modulus()});
    }
    for (const auto& v_msg : violations) out << "# plan audit: " << v_msg << '\n';
    out << "# report\n" << csv_header() << '\n' << csv_row(report) << '\n';
    out << "# recovery " << (run.exact() ? "exact" : "MISMATCH") << ", audit "
        << verdict(audit_ok) << "\n\n";
    if (!run.exact()) status = kExitRecovery;
    if (!audit_ok && status == kExitOk) status = kExitAudit;
  }
  return status;
}

int cmd_verify(const ExperimentConfig& cfg, std::ostream& out) {
  const CodingContext ctx = make_context(cfg);
  const CandidateSet cs = make_candidates(cfg, ctx);
  const auto vs = desired_indices(cfg, cs.size());
  const RateMatrix lambda = scheme_matrix(cfg, ctx);
  bool audit_ok = true;
  bool recovery_ok = true;

  out << "scheme=" << to_string(cfg.scheme) << " n=" << cfg.n << " k=" << cfg.k
      << " g=" << cfg.g << " f=" << cfg.f << " mu=" << cs.size()
      << " q=" << ctx.field().modulus() << " seeds=" << cfg.seeds << '\n';
  const auto lambda_issues = validate(lambda, ctx);
  audit_ok = audit_ok && lambda_issues.empty();
  out << "rate-matrix  " << verdict(lambda_issues.empty()) << '\n';
  for (const auto& issue : lambda_issues) out << "  " << issue << '\n';

  const std::size_t recovery_seeds =
      std::max<std::size_t>(1, std::min(cfg.seeds, kRecoverySeedsCap));
  std::ostringstream plan_line, download_line, recovery_line, header;
  header << "check       ";
  plan_line << "plan-audit  ";
  download_line << "download    ";
  recovery_line << "recovery    ";
  std::vector<std::string> notes;
  for (std::size_t v : vs) {
    header << " v=" << (v + 1);
    const QueryPlan plan = cfg.scheme == Scheme::kGeneral
                               ? plan_general(ctx, cs, v, cfg.seed)
                               : plan_systematic(ctx, cs, v, cfg.seed);
    const auto issues = audit_plan(plan);
    plan_line << ' ' << verdict(issues.empty());
    for (const auto& i : issues) notes.push_back("v=" + std::to_string(v + 1) + ": " + i);
    bool download_ok = true;
    try {
      audit_download(plan);
    } catch (const AuditError& e) {
      download_ok = false;
      notes.push_back("v=" + std::to_string(v + 1) + ": " + e.what());
    }
    bool rec = true;
    for (std::size_t s = 0; s < recovery_seeds && rec; ++s) {
      rec = verify_recovery(ctx, cs, cfg.scheme, v, cfg.seed + s);
    }
    download_line << ' ' << verdict(download_ok);
    recovery_line << ' ' << verdict(rec);
    audit_ok = audit_ok && issues.empty() && download_ok;
    recovery_ok = recovery_ok && rec;
  }
  out << header.str() << '\n'
      << plan_line.str() << '\n'
      << download_line.str() << '\n'
      << recovery_line.str() << "  (" << recovery_seeds << " seeds)\n";

  PrivacyReport privacy = audit_privacy(ctx, cs, cfg.scheme, cfg.seeds, cfg.seed);
  if (cfg.fault == "extra-query") {
    std::vector<std::vector<std::vector<TauSum>>> streams;
    for (std::size_t v = 0; v < cs.size(); ++v) {
      streams.push_back(cfg.scheme == Scheme::kGeneral
                            ? plan_general(ctx, cs, v, cfg.seed).all_queries()
                            : plan_systematic(ctx, cs, v, cfg.seed).all_queries());
    }
    streams[0][0].push_back(TauSum{TypeMask{1}, 1, {{0, 0, 1}}});
    privacy.structural_pass =
        structural_privacy(streams, &privacy.findings) && privacy.structural_pass;
  }
  out << "privacy      structural " << verdict(privacy.structural_pass)
      << ", distributional " << verdict(privacy.distributional_pass)
      << " (min p = " << privacy.min_p_value << ", level "
      << privacy.significance / static_cast<double>(cfg.n) << ")\n";
  audit_ok = audit_ok && privacy.pass();
  for (const auto& f : privacy.findings) notes.push_back(f);
  for (const auto& note : notes) out << "  " << note << '\n';

  if (!recovery_ok) return kExitRecovery;
  if (!audit_ok) return kExitAudit;
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Private polynomial computation over coded storage: rate tables, "
               "simulations and verification."};
  app.require_subcommand(1);
  ConfigOverrides o;
  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--config", o.config_path, "JSON experiment file");
    sub->add_option("--scheme", o.scheme, "general | systematic");
    sub->add_option("--n", o.n, "number of databases");
    sub->add_option("--k", o.k, "code dimension");
    sub->add_option("--g", o.g, "largest candidate degree");
    sub->add_option("--f", o.f, "number of stored messages");
    sub->add_option("--mu", o.mu, "mtilde | m | number of candidates");
    sub->add_option("--q", o.q, "field size (prime > n)");
    sub->add_option("--v", o.v, "desired candidate (1-based) or all");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--seeds", o.seeds, "privacy audit sample size");
    sub->add_option("--F", o.max_f, "largest f in the rate table");
    sub->add_option("--out", o.out, "output file (default: stdout)");
    sub->add_option("--fault", o.fault, "test hook: corrupt-answer | extra-query");
  };
  CLI::App* rate = app.add_subcommand("rate-table", "closed-form rate CSV");
  CLI::App* sim = app.add_subcommand("simulate", "run the full pipeline");
  CLI::App* ver = app.add_subcommand("verify", "check every invariant");
  for (CLI::App* sub : {rate, sim, ver}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (rate->parsed() && !o.n && !o.config_path) {
      o.n = 5;  // rate-table defaults reproduce the n=5, k=2, g=2 grid
    }
    const ExperimentConfig cfg = load_config(o);
    std::unique_ptr<std::ofstream> file;
    std::ostream* sink = &out;
    if (!cfg.out.empty()) {
      file = std::make_unique<std::ofstream>(cfg.out);
      if (!*file) throw ConfigError("cannot write '" + cfg.out + "'");
      sink = file.get();
    }
    if (rate->parsed()) return cmd_rate_table(cfg, *sink);
    if (sim->parsed()) return cmd_simulate(cfg, *sink);
    return cmd_verify(cfg, *sink);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const UsageError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DecodeError& e) {
    err << "recovery failed: " << e.what() << '\n';
    return kExitRecovery;
  } catch (const ConsistencyError& e) {
    err << "recovery failed: " << e.what() << '\n';
    return kExitRecovery;
  } catch (const AuditError& e) {
    err << "audit failed: " << e.what() << '\n';
    return kExitAudit;
  }
}

}  // namespace ppc::cli
