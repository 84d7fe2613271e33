#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "fusionkit/coefficients.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/involutions.hpp"
#include "fusionkit/partition.hpp"
#include "fusionkit/paths.hpp"
#include "fusionkit/words.hpp"

namespace fusionkit {

struct Counterexample {
  std::string instance;
  std::string expected;
  std::string actual;
};

struct CheckResult {
  static constexpr std::size_t kMaxCounterexamples = 10;

  std::string name;
  long passed = 0;
  long failed = 0;
  /// Report-only checks never fail a run.
  bool report_only = false;
  std::vector<Counterexample> counterexamples;

  [[nodiscard]] bool ok() const { return report_only || failed == 0; }

  void record(bool good, const std::string& instance, std::string expected,
              std::string actual) {
    if (good) {
      ++passed;
      return;
    }
    ++failed;
    if (counterexamples.size() < kMaxCounterexamples) {
      counterexamples.push_back(
          {instance, std::move(expected), std::move(actual)});
    }
  }

  void record(bool good, const std::string& instance, Count expected,
              Count actual) {
    record(good, instance, std::to_string(expected), std::to_string(actual));
  }
};

/// Named checks in first-use order.
class CheckSet {
 public:
  CheckResult& operator[](std::string_view name) {
    for (CheckResult& c : checks_) {
      if (c.name == name) {
        return c;
      }
    }
    CheckResult c;
    c.name = std::string(name);
    checks_.push_back(std::move(c));
    return checks_.back();
  }

  void merge(const CheckSet& other) {
    for (const CheckResult& c : other.checks_) {
      CheckResult& mine = (*this)[c.name];
      mine.passed += c.passed;
      mine.failed += c.failed;
      mine.report_only = mine.report_only || c.report_only;
      for (const Counterexample& x : c.counterexamples) {
        if (mine.counterexamples.size() < CheckResult::kMaxCounterexamples) {
          mine.counterexamples.push_back(x);
        }
      }
    }
  }

  [[nodiscard]] const std::vector<CheckResult>& checks() const {
    return checks_;
  }

  [[nodiscard]] bool ok() const {
    return std::all_of(checks_.begin(), checks_.end(),
                       [](const CheckResult& c) { return c.ok(); });
  }

 private:
  std::vector<CheckResult> checks_;
};

struct VerifyOptions {
  int n_max = 4;
  int k_max = 3;
  int size_max = 9;
  /// 0 means one thread per hardware core.
  int jobs = 0;
};

struct Report {
  std::string suite;
  VerifyOptions options;
  CheckSet checks;
  double seconds = 0;

  [[nodiscard]] bool ok() const { return checks.ok(); }
};

inline std::string describe(const Partition& lambda, const Partition& mu,
                            const Partition& nu) {
  return "lambda=" + to_string(lambda) + " mu=" + to_string(mu) +
         " nu=" + to_string(nu);
}

inline std::string describe(const Partition& lambda, const Partition& mu,
                            const Partition& nu, const FusionContext& ctx) {
  return describe(lambda, mu, nu) + " n=" + std::to_string(ctx.n()) +
         " k=" + std::to_string(ctx.k());
}

/// Runs work(i, checks) for i in [0, count) on `jobs` threads and merges the
/// per-item results in index order.
inline CheckSet run_parallel(std::size_t count, int jobs,
                             const std::function<void(std::size_t, CheckSet&)>& work) {
  if (jobs <= 0) {
    jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  }
  std::vector<CheckSet> parts(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      work(i, parts[i]);
    }
  };
  std::vector<std::thread> pool;
  const auto threads = std::min<std::size_t>(static_cast<std::size_t>(jobs),
                                             std::max<std::size_t>(count, 1));
  for (std::size_t t = 1; t < threads; ++t) {
    pool.emplace_back(worker);
  }
  worker();
  for (std::thread& t : pool) {
    t.join();
  }
  CheckSet out;
  for (const CheckSet& p : parts) {
    out.merge(p);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Instance generators

/// Restricted nu with |nu| <= size_max, restricted lambda inside nu and
/// restricted mu of the complementary size accepted by `keep_mu`.
template <typename Fn>
void for_each_fusion_instance(const Partition& nu, const FusionContext& ctx,
                              const std::function<bool(const Partition&)>& keep_mu,
                              Fn&& fn) {
  for (int ls = 0; ls <= nu.size(); ++ls) {
    for (const Partition& lambda : restricted_partitions(ls, ctx)) {
      if (!nu.contains(lambda)) {
        continue;
      }
      for (const Partition& mu : restricted_partitions(nu.size() - ls, ctx)) {
        if (keep_mu(mu)) {
          fn(lambda, mu);
        }
      }
    }
  }
}

struct FusionItem {
  FusionContext ctx;
  Partition nu;
};

inline std::vector<FusionItem> fusion_items(int n_min, int n_max, int k_min,
                                            int k_max, int size_max) {
  std::vector<FusionItem> items;
  for (int n = n_min; n <= n_max; ++n) {
    for (int k = k_min; k <= k_max; ++k) {
      const FusionContext ctx(n, k);
      for (int s = 0; s <= size_max; ++s) {
        for (Partition& nu : restricted_partitions(s, ctx)) {
          items.push_back({ctx, std::move(nu)});
        }
      }
    }
  }
  return items;
}

inline std::vector<Partition> partitions_up_to(int size_max) {
  std::vector<Partition> out;
  for (int s = 0; s <= size_max; ++s) {
    for (Partition& p : partitions_of(s)) {
      out.push_back(std::move(p));
    }
  }
  return out;
}

inline bool two_column(const Partition& mu) {
  return !mu.empty() && mu.row(1) <= 2;
}

inline bool any_shape(const Partition&) { return true; }

// ---------------------------------------------------------------------------
// Per-instance checks

inline void check_lr(const Partition& lambda, const Partition& mu,
                     const Partition& nu, CheckSet& out) {
  const Count a = lr_paths(lambda, mu, nu);
  const Count b = lr_lattice(lambda, mu, nu);
  out["lr-paths-vs-lattice"].record(a == b, describe(lambda, mu, nu), a, b);
}

inline void check_psi(const Partition& lambda, const Partition& mu,
                      const Partition& nu, CheckSet& out) {
  const std::string where = describe(lambda, mu, nu);
  const std::vector<int> mu_conj = conjugate(mu).parts();
  Count signed_sum = 0;
  Count fixed = 0;
  for_each_term(lambda, mu, nu, nullptr, [&](const SignedTerm& t) {
    signed_sum += t.sign();
    const SignedTerm image = psi(t);
    if (image == t) {
      ++fixed;
      out["psi-fixed-points"].record(
          t.sigma.is_identity() && fits_blocks(t.path), where, "fitting",
          "non-fitting fixed point");
      return;
    }
    out["psi-sign-reversal"].record(image.sign() == -t.sign(), where,
                                    -t.sign(), image.sign());
    const bool shaped =
        image.path.ascents() == sigma_dot(image.sigma, mu_conj) &&
        image.path.base() == lambda && image.path.target() == nu;
    out["psi-involution"].record(shaped && psi(image) == t, where,
                                 "psi(psi(t)) = t", "differs");
  });
  const Count lr = lr_paths(lambda, mu, nu);
  out["psi-fixed-count"].record(fixed == lr, where, lr, fixed);
  out["psi-signed-sum"].record(signed_sum == lr, where, lr, signed_sum);
}

inline void check_phi(const Partition& lambda, const Partition& mu,
                      const Partition& nu, const FusionContext& ctx,
                      CheckSet& out) {
  const std::string where = describe(lambda, mu, nu, ctx);
  const std::vector<int> mu_conj = conjugate(mu).parts();
  Count fixed = 0;
  auto in_omega = [&](const SignedTerm& t) {
    if (t.path.ascents() != sigma_dot(t.sigma, mu_conj) ||
        !(t.path.base() == lambda) || !(t.path.target() == nu)) {
      return false;
    }
    for (int i = 1; i < t.path.block_count(); ++i) {
      if (!is_restricted(t.path.boundary(i), ctx)) {
        return false;
      }
    }
    return true;
  };
  for_each_term(lambda, mu, nu, &ctx, [&](const SignedTerm& t) {
    if (t.path.block_count() < 2) {
      ++fixed;
      return;
    }
    const PhiCase kind = classify(t, ctx);
    SignedTerm image = t;
    try {
      image = phi(t, ctx);
    } catch (const std::exception& e) {
      out["phi-closure"].record(false, where, "a term", e.what());
      return;
    }
    if (kind == PhiCase::Fixed) {
      ++fixed;
      return;
    }
    out["phi-closure"].record(in_omega(image), where, "term in Omega_k",
                              "left Omega_k");
    out["phi-sign-reversal"].record(image.sign() == -t.sign(), where,
                                    -t.sign(), image.sign());
    out["phi-involution"].record(phi(image, ctx) == t, where,
                                 "phi(phi(t)) = t", "differs");
    if (kind == PhiCase::Phi1) {
      const bool lands = in_d2(image.path, ctx);
      out["phi1-image-in-d2"].record(lands, where, "in D2", "not in D2");
      out["phi2-after-phi1"].record(lands && phi2(image.path, ctx) == t.path,
                                    where, "identity", "differs");
    } else if (kind == PhiCase::Phi2) {
      const bool lands = in_d1(image.path, ctx);
      out["phi2-image-in-d1"].record(lands, where, "in D1", "not in D1");
      out["phi1-after-phi2"].record(lands && phi1(image.path, ctx) == t.path,
                                    where, "identity", "differs");
    }
  });
  const Count oracle = fusion_oracle(lambda, mu, nu, ctx);
  out["phi-fixed-count"].record(fixed == oracle, where, oracle, fixed);
  const Count rule = fusion_theorem12(lambda, mu, nu, ctx);
  out["rule-vs-oracle"].record(rule == oracle, where, oracle, rule);
  const Count recount = fusion_remark13(lambda, mu, nu, ctx);
  out["recount-vs-rule"].record(recount == rule, where, rule, recount);
}

/// Upper bound by c, the equality cases and positivity.
inline void check_bounds(const Partition& lambda, const Partition& mu,
                         const Partition& nu, const FusionContext& ctx,
                         CheckSet& out) {
  const std::string where = describe(lambda, mu, nu, ctx);
  const Count raw = fusion_signed_sum(lambda, mu, nu, ctx);
  out["oracle-nonnegative"].record(raw >= 0, where, ">= 0",
                                   std::to_string(raw));
  const Count c = lr_paths(lambda, mu, nu);
  out["fusion-at-most-lr"].record(raw <= c, where, c, raw);
  if (ctx.k() >= lambda.size() + mu.size()) {
    out["fusion-equals-lr-large-k"].record(raw == c, where, c, raw);
  }
  bool all_restricted = true;
  for_each_term(lambda, mu, nu, nullptr, [&](const SignedTerm& t) {
    for (int i = 1; i < t.path.block_count(); ++i) {
      if (!is_restricted(t.path.boundary(i), ctx)) {
        all_restricted = false;
      }
    }
  });
  if (all_restricted) {
    out["fusion-equals-lr-restricted-omega"].record(raw == c, where, c, raw);
  }
}

inline void check_monotone(const Partition& lambda, const Partition& mu,
                           const Partition& nu, const FusionContext& ctx,
                           CheckSet& out) {
  const Count here = fusion_oracle(lambda, mu, nu, ctx);
  const Count up =
      fusion_oracle(lambda, mu, nu, FusionContext(ctx.n(), ctx.k() + 1));
  out["monotone-in-k"].record(here <= up, describe(lambda, mu, nu, ctx),
                              "<= " + std::to_string(up),
                              std::to_string(here));
}

inline void check_duality(const Partition& lambda, const Partition& mu,
                          const Partition& nu, const FusionContext& ctx,
                          CheckSet& out) {
  const std::string where = describe(lambda, mu, nu, ctx);
  const DualityResult r = duality(lambda, mu, nu, ctx);
  out["duality-invariance"].record(r.original == r.dual, where, r.original,
                                   r.dual);
  if (r.mu_is_conjugate) {
    out["duality-mu-conjugate"].record(*r.mu_is_conjugate, where,
                                       to_string(conjugate(mu)),
                                       to_string(r.mu));
  }
}

inline void check_gepner_witten(const Partition& lambda, const Partition& mu,
                                const Partition& nu, const FusionContext& ctx,
                                CheckSet& out) {
  const std::string where = describe(lambda, mu, nu, ctx);
  const Count oracle = fusion_oracle(lambda, mu, nu, ctx);
  const Count printed = gepner_witten(lambda, mu, nu, ctx.k());
  const Count standard = gepner_witten_2k(lambda, mu, nu, ctx.k());
  CheckResult& a = out["gepner-witten-printed"];
  a.report_only = true;
  a.record(printed == oracle, where, oracle, printed);
  CheckResult& b = out["gepner-witten-2k"];
  b.report_only = true;
  b.record(standard == oracle, where, oracle, standard);
}

// ---------------------------------------------------------------------------
// Suites

inline CheckSet suite_lr(const VerifyOptions& o) {
  const auto nus = partitions_up_to(o.size_max);
  return run_parallel(nus.size(), o.jobs, [&](std::size_t i, CheckSet& out) {
    const Partition& nu = nus[i];
    for (const Partition& lambda : partitions_up_to(nu.size())) {
      if (!nu.contains(lambda)) {
        continue;
      }
      for (const Partition& mu : partitions_of(nu.size() - lambda.size())) {
        check_lr(lambda, mu, nu, out);
      }
    }
  });
}

inline CheckSet suite_psi(const VerifyOptions& o) {
  const auto nus = partitions_up_to(o.size_max);
  return run_parallel(nus.size(), o.jobs, [&](std::size_t i, CheckSet& out) {
    const Partition& nu = nus[i];
    for (const Partition& lambda : partitions_up_to(nu.size())) {
      if (!nu.contains(lambda)) {
        continue;
      }
      for (const Partition& mu : partitions_of(nu.size() - lambda.size())) {
        check_psi(lambda, mu, nu, out);
      }
    }
  });
}

inline CheckSet suite_phi(const VerifyOptions& o) {
  const auto items = fusion_items(2, o.n_max, 1, o.k_max, o.size_max);
  return run_parallel(items.size(), o.jobs, [&](std::size_t i, CheckSet& out) {
    const FusionItem& it = items[i];
    for_each_fusion_instance(it.nu, it.ctx, two_column,
                             [&](const Partition& lambda, const Partition& mu) {
                               check_phi(lambda, mu, it.nu, it.ctx, out);
                             });
  });
}

inline CheckSet suite_bounds(const VerifyOptions& o) {
  const auto items = fusion_items(2, o.n_max, 1, o.k_max, o.size_max);
  return run_parallel(items.size(), o.jobs, [&](std::size_t i, CheckSet& out) {
    const FusionItem& it = items[i];
    for_each_fusion_instance(it.nu, it.ctx, any_shape,
                             [&](const Partition& lambda, const Partition& mu) {
                               check_bounds(lambda, mu, it.nu, it.ctx, out);
                             });
  });
}

inline CheckSet suite_monotone(const VerifyOptions& o) {
  const auto items = fusion_items(2, o.n_max, 1, o.k_max, o.size_max);
  return run_parallel(items.size(), o.jobs, [&](std::size_t i, CheckSet& out) {
    const FusionItem& it = items[i];
    for_each_fusion_instance(it.nu, it.ctx, any_shape,
                             [&](const Partition& lambda, const Partition& mu) {
                               check_monotone(lambda, mu, it.nu, it.ctx, out);
                             });
  });
}

inline CheckSet suite_duality(const VerifyOptions& o) {
  const auto items = fusion_items(2, o.n_max, 1, o.k_max, o.size_max);
  return run_parallel(items.size(), o.jobs, [&](std::size_t i, CheckSet& out) {
    const FusionItem& it = items[i];
    for_each_fusion_instance(it.nu, it.ctx, any_shape,
                             [&](const Partition& lambda, const Partition& mu) {
                               check_duality(lambda, mu, it.nu, it.ctx, out);
                             });
  });
}

/// Restricted lambda with |lambda| <= size_max and nu with |nu/lambda| <=
/// size_max; also the classical chain identity for |nu| <= size_max.
inline CheckSet suite_chains(const VerifyOptions& o) {
  struct Item {
    FusionContext ctx;
    Partition lambda;
  };
  std::vector<Item> items;
  for (int n = 2; n <= o.n_max; ++n) {
    for (int k = 1; k <= o.k_max; ++k) {
      const FusionContext ctx(n, k);
      for (int s = 0; s <= o.size_max; ++s) {
        for (Partition& lambda : restricted_partitions(s, ctx)) {
          items.push_back({ctx, std::move(lambda)});
        }
      }
    }
  }
  CheckSet out = run_parallel(
      items.size(), o.jobs, [&](std::size_t i, CheckSet& out) {
        const Item& it = items[i];
        for (int d = 0; d <= o.size_max; ++d) {
          for (const Partition& nu :
               restricted_partitions(it.lambda.size() + d, it.ctx)) {
            if (!nu.contains(it.lambda)) {
              continue;
            }
            const ChainSides s = restricted_chain_sides(it.lambda, nu, it.ctx);
            out["restricted-chains"].record(
                s.holds(),
                "lambda=" + to_string(it.lambda) + " nu=" + to_string(nu) +
                    " n=" + std::to_string(it.ctx.n()) +
                    " k=" + std::to_string(it.ctx.k()),
                s.lhs, s.rhs);
          }
        }
      });
  const auto nus = partitions_up_to(o.size_max);
  out.merge(run_parallel(nus.size(), o.jobs, [&](std::size_t i, CheckSet& c) {
    for (const Partition& lambda : partitions_up_to(nus[i].size())) {
      if (!nus[i].contains(lambda)) {
        continue;
      }
      const ChainSides s = classical_chain_sides(lambda, nus[i]);
      c["classical-chains"].record(
          s.holds(), "lambda=" + to_string(lambda) + " nu=" + to_string(nus[i]),
          s.lhs, s.rhs);
    }
  }));
  return out;
}

/// sl(2) only: n is fixed to 2 and n_max is ignored.
inline CheckSet suite_gepner_witten(const VerifyOptions& o) {
  const auto items = fusion_items(2, 2, 1, o.k_max, o.size_max);
  return run_parallel(items.size(), o.jobs, [&](std::size_t i, CheckSet& out) {
    const FusionItem& it = items[i];
    for_each_fusion_instance(
        it.nu, it.ctx, any_shape,
        [&](const Partition& lambda, const Partition& mu) {
          check_gepner_witten(lambda, mu, it.nu, it.ctx, out);
        });
  });
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "lr",       "involution", "bounds",   "monotone",
      "duality",  "theorem18",  "gepner-witten", "all"};
  return names;
}

inline Report run_suite(std::string_view suite, const VerifyOptions& o) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.suite = std::string(suite);
  r.options = o;
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "lr") {
    r.checks.merge(suite_lr(o));
    known = true;
  }
  if (all || suite == "involution") {
    r.checks.merge(suite_psi(o));
    r.checks.merge(suite_phi(o));
    known = true;
  }
  if (all || suite == "bounds") {
    r.checks.merge(suite_bounds(o));
    known = true;
  }
  if (all || suite == "monotone") {
    r.checks.merge(suite_monotone(o));
    known = true;
  }
  if (all || suite == "duality") {
    r.checks.merge(suite_duality(o));
    known = true;
  }
  if (all || suite == "theorem18") {
    r.checks.merge(suite_chains(o));
    known = true;
  }
  if (all || suite == "gepner-witten") {
    r.checks.merge(suite_gepner_witten(o));
    known = true;
  }
  if (!known) {
    throw InvalidInput("unknown suite '" + std::string(suite) + "'");
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  return r;
}

}  // namespace fusionkit
