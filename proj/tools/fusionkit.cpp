#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fusionkit/coefficients.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/involutions.hpp"
#include "fusionkit/partition.hpp"
#include "fusionkit/verify.hpp"
#include "fusionkit/words.hpp"
#include "report_json.hpp"

namespace fk = fusionkit;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kInputError = 2, kUnsupported = 3 };

std::string path_text(const fk::LatticePath& p) {
  std::ostringstream os;
  for (int i = 0; i < p.block_count(); ++i) {
    os << (i == 0 ? "" : " | ");
    bool first = true;
    for (fk::Box b : p.block(i)) {
      os << (first ? "" : " ") << fk::diagonal_label(b);
      first = false;
    }
  }
  if (p.block_count() == 2) {
    os << "   " << fk::BracketWord::from_blocks(p.block(0), p.block(1)).brackets();
  }
  return os.str();
}

void require_restricted(const fk::Partition& p, const fk::FusionContext& ctx,
                        const char* what) {
  if (!fk::is_restricted(p, ctx)) {
    throw fk::InvalidInput(std::string(what) + " " + fk::to_string(p) +
                           " is not (n,k)-restricted");
  }
}

struct LrArgs {
  std::string lambda, mu, nu, method = "paths";
};

int run_lr(const LrArgs& a) {
  const auto lambda = fk::parse_partition(a.lambda);
  const auto mu = fk::parse_partition(a.mu);
  const auto nu = fk::parse_partition(a.nu);
  const fk::Count c = a.method == "lattice" ? fk::lr_lattice(lambda, mu, nu)
                                            : fk::lr_paths(lambda, mu, nu);
  std::cout << c << '\n';
  return kOk;
}

struct FusionArgs {
  std::string lambda, mu, nu, method = "rule";
  int n = 0, k = 0;
  bool explain = false;
};

int run_fusion(const FusionArgs& a) {
  const auto lambda = fk::parse_partition(a.lambda);
  const auto mu = fk::parse_partition(a.mu);
  const auto nu = fk::parse_partition(a.nu);
  const fk::FusionContext ctx(a.n, a.k);
  require_restricted(lambda, ctx, "lambda");
  require_restricted(mu, ctx, "mu");
  require_restricted(nu, ctx, "nu");
  fk::Count value = 0;
  if (a.method == "oracle") {
    value = fk::fusion_oracle(lambda, mu, nu, ctx);
  } else if (a.method == "remark13") {
    value = fk::fusion_remark13(lambda, mu, nu, ctx);
  } else {
    value = fk::fusion_theorem12(lambda, mu, nu, ctx);
  }
  std::cout << value << '\n';
  if (a.explain) {
    if (mu.row(1) > 2) {
      std::cout << "# no path rule for mu with more than two columns\n";
    } else {
      for (const auto& p : fk::fusion_fixed_points(lambda, mu, nu, ctx)) {
        std::cout << "# " << path_text(p) << '\n';
      }
    }
  }
  return kOk;
}

struct TableArgs {
  int n = 0, k = 0, max_size = 6;
  std::string mu, format = "json";
};

int run_table(const TableArgs& a) {
  const fk::FusionContext ctx(a.n, a.k);
  const auto mu = fk::parse_partition(a.mu);
  require_restricted(mu, ctx, "mu");
  std::vector<std::tuple<fk::Partition, fk::Partition, fk::Count>> rows;
  for (int s = 0; s <= a.max_size; ++s) {
    for (const auto& lambda : fk::restricted_partitions(s, ctx)) {
      for (const auto& nu : fk::restricted_partitions(s + mu.size(), ctx)) {
        if (const fk::Count c = fk::fusion_oracle(lambda, mu, nu, ctx); c != 0) {
          rows.emplace_back(lambda, nu, c);
        }
      }
    }
  }
  std::sort(rows.begin(), rows.end());
  if (a.format == "csv") {
    std::cout << "lambda,mu,nu,n,k,N\n";
    for (const auto& [lambda, nu, c] : rows) {
      std::cout << '"' << fk::to_string(lambda) << "\",\"" << fk::to_string(mu)
                << "\",\"" << fk::to_string(nu) << "\"," << a.n << ',' << a.k
                << ',' << c << '\n';
    }
    return kOk;
  }
  nlohmann::ordered_json j;
  j["schema"] = fk::cli::kTableSchema;
  j["n"] = a.n;
  j["k"] = a.k;
  j["mu"] = fk::to_string(mu);
  j["max_size"] = a.max_size;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& [lambda, nu, c] : rows) {
    j["rows"].push_back({{"lambda", fk::to_string(lambda)},
                         {"mu", fk::to_string(mu)},
                         {"nu", fk::to_string(nu)},
                         {"n", a.n},
                         {"k", a.k},
                         {"N", c}});
  }
  std::cout << j.dump(2) << '\n';
  return kOk;
}

struct VerifyArgs {
  std::string suite = "all", output;
  fk::VerifyOptions options;
  bool timing = false;
};

int run_verify(const VerifyArgs& a, const std::string& command) {
  const fk::Report r = fk::run_suite(a.suite, a.options);
  const std::string text = fk::cli::to_json(r, command, a.timing).dump(2);
  if (a.output.empty()) {
    std::cout << text << '\n';
  } else {
    std::ofstream(a.output) << text << '\n';
  }
  for (const auto& c : r.checks.checks()) {
    std::cerr << (c.ok() ? "pass " : "FAIL ") << c.name << ": " << c.passed
              << " passed, " << c.failed << " failed"
              << (c.report_only ? " (report only)" : "") << '\n';
  }
  std::cerr << "wall time " << r.seconds << " s\n";
  return r.ok() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sl(n) fusion coefficients for two-column mu"};
  app.require_subcommand(1);

  LrArgs lr;
  auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
  lr_cmd->add_option("lambda", lr.lambda)->required();
  lr_cmd->add_option("mu", lr.mu)->required();
  lr_cmd->add_option("nu", lr.nu)->required();
  lr_cmd->add_option("--method", lr.method)
      ->check(CLI::IsMember({"paths", "lattice"}));

  FusionArgs fu;
  auto* fu_cmd = app.add_subcommand("fusion", "level-k fusion coefficient");
  fu_cmd->add_option("lambda", fu.lambda)->required();
  fu_cmd->add_option("mu", fu.mu)->required();
  fu_cmd->add_option("nu", fu.nu)->required();
  fu_cmd->add_option("--n", fu.n)->required();
  fu_cmd->add_option("--k", fu.k)->required();
  fu_cmd->add_option("--method", fu.method)
      ->check(CLI::IsMember({"rule", "oracle", "remark13"}));
  fu_cmd->add_flag("--explain", fu.explain, "list the fixed-point paths");

  TableArgs ta;
  auto* ta_cmd = app.add_subcommand("table", "all nonzero N for a fixed mu");
  ta_cmd->add_option("--n", ta.n)->required();
  ta_cmd->add_option("--k", ta.k)->required();
  ta_cmd->add_option("--mu", ta.mu)->required();
  ta_cmd->add_option("--max-size", ta.max_size, "bound on |lambda|");
  ta_cmd->add_option("--format", ta.format)
      ->check(CLI::IsMember({"json", "csv"}));

  VerifyArgs ve;
  auto* ve_cmd = app.add_subcommand("verify", "run verification sweeps");
  ve_cmd->add_option("--suite", ve.suite)
      ->check(CLI::IsMember(fk::suite_names()));
  ve_cmd->add_option("--n-max", ve.options.n_max);
  ve_cmd->add_option("--k-max", ve.options.k_max);
  ve_cmd->add_option("--size-max", ve.options.size_max);
  ve_cmd->add_option("--jobs", ve.options.jobs, "0 = all cores");
  ve_cmd->add_option("--output", ve.output, "write the JSON report here");
  ve_cmd->add_flag("--timing", ve.timing, "include wall time in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  std::string command;
  for (int i = 1; i < argc; ++i) {
    command += (i > 1 ? " " : "") + std::string(argv[i]);
  }

  try {
    if (lr_cmd->parsed()) {
      return run_lr(lr);
    }
    if (fu_cmd->parsed()) {
      return run_fusion(fu);
    }
    if (ta_cmd->parsed()) {
      return run_table(ta);
    }
    return run_verify(ve, command);
  } catch (const fk::UnsupportedShape& e) {
    std::cerr << "unsupported: " << e.what()
              << " (use --method oracle)\n";
    return kUnsupported;
  } catch (const fk::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kVerifyFailed;
  }
}
