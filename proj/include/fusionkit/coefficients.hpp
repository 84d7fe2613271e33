#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fusionkit/error.hpp"
#include "fusionkit/involutions.hpp"
#include "fusionkit/partition.hpp"
#include "fusionkit/paths.hpp"
#include "fusionkit/words.hpp"

namespace fusionkit {

namespace detail {

inline bool weight_ok(const Partition& lambda, const Partition& mu,
                      const Partition& nu) {
  return lambda.size() + mu.size() == nu.size() && nu.contains(lambda);
}

/// lambda and mu must be restricted; an unrestricted nu simply has
/// coefficient 0.
inline void require_restricted(const Partition& p, const FusionContext& ctx,
                               const char* what) {
  if (!is_restricted(p, ctx)) {
    throw InvalidInput(std::string(what) + " " + to_string(p) +
                       " is not (n,k)-restricted");
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Classical Littlewood-Richardson

/// Number of paths lambda -> nu with block sizes mu' that fit mu. Adjacent
/// blocks are checked as soon as both are placed.
inline Count lr_paths(const Partition& lambda, const Partition& mu,
                      const Partition& nu) {
  if (!detail::weight_ok(lambda, mu, nu)) {
    return 0;
  }
  const std::vector<int> cols = conjugate(mu).parts();
  const int height = std::max(nu.length(), 1);
  const std::vector<int> bound = nu.padded(height);
  Count total = 0;
  auto rec = [&](auto&& self, std::size_t i, const std::vector<int>& rows,
                 const Block& prev) -> void {
    if (i == cols.size()) {
      if (rows == bound) {
        total = checked_add(total, 1);
      }
      return;
    }
    detail::for_each_column_strip(
        rows, cols[i], bound,
        [&](const std::vector<int>& next, const Block& boxes) {
          if (i > 0 &&
              BracketWord::from_blocks(prev, boxes).type().right > 0) {
            return;
          }
          self(self, i + 1, next, boxes);
        });
  };
  rec(rec, 0, lambda.padded(height), Block{});
  return total;
}

/// Fillings of nu/lambda with content mu' (entries 1..m), strictly increasing
/// along rows, weakly down columns, whose column reading word (columns left
/// to right, each bottom to top) is a lattice word.
inline Count lr_lattice(const Partition& lambda, const Partition& mu,
                        const Partition& nu) {
  if (!detail::weight_ok(lambda, mu, nu)) {
    return 0;
  }
  const std::vector<int> content = conjugate(mu).parts();
  const int m = static_cast<int>(content.size());
  std::vector<Box> order;
  for (int c = 1; c <= nu.row(1); ++c) {
    for (int r = nu.length(); r >= 1; --r) {
      if (c <= nu.row(r) && c > lambda.row(r)) {
        order.push_back({r, c});
      }
    }
  }
  std::map<Box, int> entry;
  std::vector<int> used(static_cast<std::size_t>(m + 1), 0);
  Count total = 0;
  auto at = [&](Box b) {
    const auto it = entry.find(b);
    return it == entry.end() ? 0 : it->second;
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == order.size()) {
      total = checked_add(total, 1);
      return;
    }
    const Box b = order[i];
    const int left = b.col > lambda.row(b.row) + 1 ? at({b.row, b.col - 1}) : 0;
    const int below = at({b.row + 1, b.col});
    const int hi = below > 0 ? below : m;
    for (int x = left + 1; x <= hi; ++x) {
      const auto ux = static_cast<std::size_t>(x);
      if (used[ux] == content[ux - 1] || (x > 1 && used[ux] == used[ux - 1])) {
        continue;
      }
      ++used[ux];
      entry[b] = x;
      self(self, i + 1);
      entry.erase(b);
      --used[ux];
    }
  };
  rec(rec, 0);
  return total;
}

/// Number of paths lambda -> nu with the given block sizes, no fitting
/// condition.
inline Count count_paths(const Partition& lambda, const Partition& nu,
                         std::span<const int> ascents,
                         const FusionContext* ctx = nullptr) {
  Count total = 0;
  for_each_path(lambda, nu, ascents, ctx,
                [&](const LatticePath&) { total = checked_add(total, 1); });
  return total;
}

// ---------------------------------------------------------------------------
// Fusion

/// 1 if nu/lambda is an r-column strip and nu is restricted, else 0.
inline Count fusion_single_column(const Partition& lambda, int r,
                                  const Partition& nu,
                                  const FusionContext& ctx) {
  if (r < 0 || r > ctx.n() || !is_restricted(nu, ctx) ||
      nu.size() - lambda.size() != r || !nu.contains(lambda)) {
    return 0;
  }
  for (int i = 1; i <= nu.length(); ++i) {
    if (nu.row(i) - lambda.row(i) > 1) {
      return 0;
    }
  }
  return 1;
}

/// The signed sum over sigma and paths with restricted block boundaries.
/// Blocks are placed left to right; the state is (columns of mu' already
/// used, current shape), so each shape is expanded once per subset.
inline Count fusion_signed_sum(const Partition& lambda, const Partition& mu,
                               const Partition& nu, const FusionContext& ctx) {
  detail::require_restricted(lambda, ctx, "lambda");
  detail::require_restricted(mu, ctx, "mu");
  if (!is_restricted(nu, ctx)) {
    return 0;
  }
  if (!detail::weight_ok(lambda, mu, nu)) {
    return 0;
  }
  const std::vector<int> cols = conjugate(mu).parts();
  const int m = static_cast<int>(cols.size());
  const int n = ctx.n();
  const std::vector<int> target = nu.padded(n);
  const unsigned full = (1U << m) - 1U;
  std::map<std::pair<unsigned, std::vector<int>>, Count> memo;
  auto rec = [&](auto&& self, unsigned mask, int i,
                 const std::vector<int>& rows) -> Count {
    if (mask == full) {
      return rows == target ? 1 : 0;
    }
    const auto key = std::make_pair(mask, rows);
    if (const auto it = memo.find(key); it != memo.end()) {
      return it->second;
    }
    Count sum = 0;
    int unused_before = 0;
    for (int j = 0; j < m; ++j) {
      if ((mask >> j) & 1U) {
        continue;
      }
      const int alpha = cols[static_cast<std::size_t>(j)] - j + i;
      const int sign = unused_before % 2 == 0 ? 1 : -1;
      ++unused_before;
      if (alpha < 0 || alpha > n) {
        continue;
      }
      const bool last = (mask | (1U << j)) == full;
      detail::for_each_column_strip(
          rows, alpha, target,
          [&](const std::vector<int>& next, const Block&) {
            if (!last && !detail::rows_restricted(next, ctx)) {
              return;
            }
            sum = checked_add(sum,
                              checked_mul(sign, self(self, mask | (1U << j),
                                                     i + 1, next)));
          });
    }
    memo.emplace(key, sum);
    return sum;
  };
  return m == 0 ? (lambda == nu ? 1 : 0) : rec(rec, 0U, 0, lambda.padded(n));
}

/// Ground truth for every fusion value; a negative sum is a bug.
inline Count fusion_oracle(const Partition& lambda, const Partition& mu,
                           const Partition& nu, const FusionContext& ctx) {
  const Count out = fusion_signed_sum(lambda, mu, nu, ctx);
  if (out < 0) {
    throw InternalError("fusion_oracle: negative fusion coefficient");
  }
  return out;
}

/// Count of k-fusion fitting paths for mu with at most two columns.
inline Count fusion_theorem12(const Partition& lambda, const Partition& mu,
                              const Partition& nu, const FusionContext& ctx) {
  if (mu.row(1) > 2) {
    throw UnsupportedShape("the path rule covers mu with at most two columns");
  }
  detail::require_restricted(lambda, ctx, "lambda");
  detail::require_restricted(mu, ctx, "mu");
  if (!is_restricted(nu, ctx)) {
    return 0;
  }
  if (!detail::weight_ok(lambda, mu, nu)) {
    return 0;
  }
  if (mu.empty()) {
    return lambda == nu ? 1 : 0;
  }
  const Partition mu_conj = conjugate(mu);
  if (mu.row(1) == 1) {
    return fusion_single_column(lambda, mu_conj.row(1), nu, ctx);
  }
  if (mu.length() == ctx.n()) {
    const std::vector<int> ascents{ctx.n(), mu_conj.row(2)};
    return count_paths(lambda, nu, ascents, &ctx);
  }
  Count total = 0;
  for_each_path(lambda, nu, mu_conj.parts(), &ctx, [&](const LatticePath& p) {
    if (fits_blocks(p) && !in_d2(p, ctx)) {
      total = checked_add(total, 1);
    }
  });
  return total;
}

/// Fixed points of phi over the two-column terms, with their paths.
inline std::vector<LatticePath> fusion_fixed_points(const Partition& lambda,
                                                    const Partition& mu,
                                                    const Partition& nu,
                                                    const FusionContext& ctx) {
  std::vector<LatticePath> out;
  for_each_term(lambda, mu, nu, &ctx, [&](const SignedTerm& t) {
    if (phi(t, ctx) == t) {
      out.push_back(t.path);
    }
  });
  return out;
}

/// A 1/2 filling of nu/lambda; entry(b) is 1 or 2.
struct SkewFilling {
  Partition lambda;
  Partition nu;
  std::map<Box, int> entries;

  [[nodiscard]] int at(Box b) const {
    const auto it = entries.find(b);
    return it == entries.end() ? 0 : it->second;
  }
};

namespace detail {

/// Column reading word: columns left to right, each bottom to top.
inline std::vector<int> reading_word(const SkewFilling& f) {
  std::vector<std::pair<Box, int>> cells(f.entries.begin(), f.entries.end());
  std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
    if (a.first.col != b.first.col) {
      return a.first.col < b.first.col;
    }
    return a.first.row > b.first.row;
  });
  std::vector<int> out;
  for (const auto& cell : cells) {
    out.push_back(cell.second);
  }
  return out;
}

inline bool lattice_word(const std::vector<int>& w) {
  int balance = 0;
  for (int x : w) {
    balance += x == 1 ? 1 : -1;
    if (balance < 0) {
      return false;
    }
  }
  return true;
}

/// The tableaux that the level-k count leaves out.
inline bool excluded_filling(const SkewFilling& f, const FusionContext& ctx) {
  const int n = ctx.n();
  if (!is_edge(f.nu, ctx)) {
    return false;
  }
  auto row_cells = [&](int r) {
    std::vector<int> out;
    for (const auto& [b, x] : f.entries) {
      if (b.row == r) {
        out.push_back(x);
      }
    }
    return out;
  };
  if (row_cells(1).size() != 1) {
    return false;
  }
  const auto bottom = row_cells(n);
  if (bottom.size() != 1 || bottom[0] != 1) {
    return false;
  }
  const int last = f.nu.row(1);
  int twos = 0;
  int lo = n + 1;
  int hi = 0;
  for (const auto& [b, x] : f.entries) {
    if (b.col == last) {
      lo = std::min(lo, b.row);
      hi = std::max(hi, b.row);
      twos += x == 2 ? 1 : 0;
    }
  }
  if (twos == 0) {
    return false;
  }
  int ones = 0;
  for (const auto& [b, x] : f.entries) {
    if (b.col == last - 1 && x == 1 && b.row >= lo && b.row <= hi) {
      ++ones;
    }
  }
  if (ones >= twos) {
    return false;
  }
  const auto w = reading_word(f);
  std::size_t last_two = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 2) {
      last_two = i;
    }
  }
  int balance = 0;
  for (std::size_t i = 0; i < last_two; ++i) {
    balance += w[i] == 1 ? 1 : -1;
    if (balance < 1) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

/// Row-strict 1/2 fillings of nu/lambda with content mu', columns weakly
/// increasing downward, and the wrap condition between row n and row 1 (an
/// entry t in box (1, c) needs box (n, c - k) to be filled with at most t).
inline std::vector<SkewFilling> restricted_fillings(const Partition& lambda,
                                                    const Partition& mu,
                                                    const Partition& nu,
                                                    const FusionContext& ctx) {
  std::vector<SkewFilling> out;
  const Partition mu_conj = conjugate(mu);
  if (mu.row(1) > 2) {
    throw UnsupportedShape("1/2 fillings need mu with at most two columns");
  }
  if (!detail::weight_ok(lambda, mu, nu) || nu.length() > ctx.n()) {
    return out;
  }
  const int n = ctx.n();
  std::vector<std::vector<std::vector<int>>> choices;
  for (int r = 1; r <= n; ++r) {
    const int len = nu.row(r) - lambda.row(r);
    if (len == 0) {
      choices.push_back({{}});
    } else if (len == 1) {
      choices.push_back({{1}, {2}});
    } else if (len == 2) {
      choices.push_back({{1, 2}});
    } else {
      return out;
    }
  }
  SkewFilling f{lambda, nu, {}};
  auto valid = [&]() {
    int ones = 0;
    int twos = 0;
    for (const auto& [b, x] : f.entries) {
      (x == 1 ? ones : twos) += 1;
      const Box up{b.row - 1, b.col};
      if (b.row > 1 && b.col > lambda.row(up.row) && f.at(up) > x) {
        return false;
      }
    }
    if (ones != mu_conj.row(1) || twos != mu_conj.row(2)) {
      return false;
    }
    for (int c = lambda.row(1) + 1; c <= nu.row(1); ++c) {
      const int t = f.at({1, c});
      const int j = c - ctx.k();
      if (j < 1 || j <= lambda.row(n)) {
        continue;
      }
      const int below = j <= nu.row(n) ? f.at({n, j}) : 0;
      if (below == 0 || below > t) {
        return false;
      }
    }
    return detail::lattice_word(detail::reading_word(f));
  };
  auto rec = [&](auto&& self, int r) -> void {
    if (r > n) {
      if (valid()) {
        out.push_back(f);
      }
      return;
    }
    for (const auto& row : choices[static_cast<std::size_t>(r - 1)]) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        f.entries[{r, lambda.row(r) + 1 + static_cast<int>(i)}] = row[i];
      }
      self(self, r + 1);
      for (std::size_t i = 0; i < row.size(); ++i) {
        f.entries.erase({r, lambda.row(r) + 1 + static_cast<int>(i)});
      }
    }
  };
  rec(rec, 1);
  return out;
}

/// Lattice restricted 1/2 fillings minus the excluded ones.
inline Count fusion_remark13(const Partition& lambda, const Partition& mu,
                             const Partition& nu, const FusionContext& ctx) {
  if (mu.row(1) > 2) {
    throw UnsupportedShape("the filling count covers two-column mu only");
  }
  detail::require_restricted(lambda, ctx, "lambda");
  detail::require_restricted(mu, ctx, "mu");
  if (!is_restricted(nu, ctx)) {
    return 0;
  }
  Count total = 0;
  for (const SkewFilling& f : restricted_fillings(lambda, mu, nu, ctx)) {
    if (!detail::excluded_filling(f, ctx)) {
      total = checked_add(total, 1);
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// sl(2)

namespace detail {

inline int sl2_weight(const Partition& p) {
  if (p.length() > 2) {
    throw UnsupportedShape("sl(2) needs partitions with at most two rows");
  }
  return p.row(1) - p.row(2);
}

}  // namespace detail

/// c^nu_{lambda mu} when k >= the sum of the three sl(2) weights, else 0.
inline Count gepner_witten(const Partition& lambda, const Partition& mu,
                           const Partition& nu, int k) {
  const int t = detail::sl2_weight(lambda) + detail::sl2_weight(mu) +
                detail::sl2_weight(nu);
  return k >= t ? lr_paths(lambda, mu, nu) : 0;
}

/// Same with the threshold 2k >= sum of weights.
inline Count gepner_witten_2k(const Partition& lambda, const Partition& mu,
                              const Partition& nu, int k) {
  const int t = detail::sl2_weight(lambda) + detail::sl2_weight(mu) +
                detail::sl2_weight(nu);
  return 2 * k >= t ? lr_paths(lambda, mu, nu) : 0;
}

// ---------------------------------------------------------------------------
// Rank-level duality

struct DualityResult {
  Count original = 0;
  Count dual = 0;
  Partition lambda;
  Partition mu;
  Partition nu;
  /// Set when n >= 3 and mu has at most two rows: whether mu~ = mu'.
  std::optional<bool> mu_is_conjugate;

  [[nodiscard]] bool holds() const {
    return original == dual && mu_is_conjugate.value_or(true);
  }
};

inline DualityResult duality(const Partition& lambda, const Partition& mu,
                             const Partition& nu, const FusionContext& ctx) {
  DualityResult r;
  r.lambda = rank_level_dual(lambda, ctx);
  r.mu = rank_level_dual(mu, ctx);
  r.nu = rank_level_dual(nu, ctx);
  r.original = fusion_oracle(lambda, mu, nu, ctx);
  r.dual = fusion_oracle(r.lambda, r.mu, r.nu, ctx.dual());
  if (ctx.n() >= 3 && mu.length() <= 2) {
    r.mu_is_conjugate = r.mu == conjugate(mu);
  }
  return r;
}

inline bool duality_check(const Partition& lambda, const Partition& mu,
                          const Partition& nu, const FusionContext& ctx) {
  return duality(lambda, mu, nu, ctx).holds();
}

// ---------------------------------------------------------------------------
// Restricted chains

/// Single-box chains lambda -> nu with every shape restricted.
inline Count count_restricted_paths(const Partition& lambda,
                                    const Partition& nu,
                                    const FusionContext& ctx) {
  if (!is_restricted(lambda, ctx) || !is_restricted(nu, ctx) ||
      !nu.contains(lambda)) {
    return 0;
  }
  const int n = ctx.n();
  const std::vector<int> target = nu.padded(n);
  std::map<std::vector<int>, Count> memo;
  auto rec = [&](auto&& self, std::vector<int>& rows) -> Count {
    if (rows == target) {
      return 1;
    }
    if (const auto it = memo.find(rows); it != memo.end()) {
      return it->second;
    }
    Count sum = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i] == target[i] || (i > 0 && rows[i - 1] == rows[i])) {
        continue;
      }
      ++rows[i];
      if (detail::rows_restricted(rows, ctx)) {
        sum = checked_add(sum, self(self, rows));
      }
      --rows[i];
    }
    memo.emplace(rows, sum);
    return sum;
  };
  std::vector<int> start = lambda.padded(n);
  return rec(rec, start);
}

/// f_k^lambda: restricted standard tableaux of shape lambda.
inline Count restricted_standard_count(const Partition& lambda,
                                       const FusionContext& ctx) {
  return count_restricted_paths(Partition(), lambda, ctx);
}

/// f^lambda, the number of standard tableaux.
inline Count standard_count(const Partition& lambda) {
  const int n = std::max(lambda.length(), 1);
  return count_restricted_paths(Partition(), lambda,
                                FusionContext(n, std::max(lambda.row(1), 1)));
}

struct ChainSides {
  Count lhs = 0;
  Count rhs = 0;

  [[nodiscard]] bool holds() const { return lhs == rhs; }
};

inline ChainSides restricted_chain_sides(const Partition& lambda,
                                      const Partition& nu,
                                      const FusionContext& ctx) {
  ChainSides s;
  s.lhs = count_restricted_paths(lambda, nu, ctx);
  if (!nu.contains(lambda)) {
    return s;
  }
  for (const Partition& mu :
       restricted_partitions(nu.size() - lambda.size(), ctx)) {
    const Count f = restricted_standard_count(mu, ctx);
    if (f != 0) {
      s.rhs = checked_add(s.rhs,
                          checked_mul(fusion_oracle(lambda, mu, nu, ctx), f));
    }
  }
  return s;
}

inline bool verify_theorem18(const Partition& lambda, const Partition& nu,
                             const FusionContext& ctx) {
  return restricted_chain_sides(lambda, nu, ctx).holds();
}

/// Classical analogue: the number of chains lambda -> nu equals
/// sum over mu of c^nu_{lambda mu} f^mu.
inline ChainSides classical_chain_sides(const Partition& lambda,
                                            const Partition& nu) {
  ChainSides s;
  if (!nu.contains(lambda)) {
    return s;
  }
  const int n = std::max(nu.length(), 1);
  s.lhs = count_restricted_paths(lambda, nu,
                                 FusionContext(n, std::max(nu.row(1), 1)));
  for (const Partition& mu : partitions_of(nu.size() - lambda.size())) {
    s.rhs = checked_add(
        s.rhs, checked_mul(lr_paths(lambda, mu, nu), standard_count(mu)));
  }
  return s;
}

}  // namespace fusionkit
