#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fusionkit/error.hpp"
#include "fusionkit/partition.hpp"

namespace fusionkit {

/// A cell of a diagram; row 1 is the top row, col 1 the left column.
struct Box {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const Box&, const Box&) = default;
};

/// Boxes on the diagonal x - y = i carry label i.
constexpr int diagonal_label(Box b) { return b.col - b.row; }

/// The boxes of one decreasing segment of a path, in the order added
/// (labels strictly decreasing, i.e. top to bottom).
using Block = std::vector<Box>;

namespace detail {

inline void sort_decreasing(Block& block) {
  std::sort(block.begin(), block.end(), [](Box a, Box b) {
    return diagonal_label(a) > diagonal_label(b);
  });
}

/// Calls fn(next_rows, boxes) for every way of adding `count` boxes to
/// `rows`, no two in the same row, keeping a partition and staying inside
/// `bound` (same length as rows).
template <typename Fn>
void for_each_column_strip(const std::vector<int>& rows, int count,
                           const std::vector<int>& bound, Fn&& fn) {
  const int height = static_cast<int>(rows.size());
  if (count < 0 || count > height) {
    return;
  }
  std::vector<int> next(rows);
  Block boxes;
  boxes.reserve(static_cast<std::size_t>(count));
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (left == 0) {
      fn(static_cast<const std::vector<int>&>(next),
         static_cast<const Block&>(boxes));
      return;
    }
    if (height - i < left) {
      return;
    }
    const auto ui = static_cast<std::size_t>(i);
    const int grown = rows[ui] + 1;
    if (grown <= bound[ui] && (i == 0 || next[ui - 1] >= grown)) {
      next[ui] = grown;
      boxes.push_back(Box{i + 1, grown});
      self(self, i + 1, left - 1);
      boxes.pop_back();
      next[ui] = rows[ui];
    }
    self(self, i + 1, left);
  };
  rec(rec, 0, count);
}

inline bool rows_restricted(const std::vector<int>& rows,
                            const FusionContext& ctx) {
  const int n = ctx.n();
  for (std::size_t i = static_cast<std::size_t>(n); i < rows.size(); ++i) {
    if (rows[i] != 0) {
      return false;
    }
  }
  const int last = static_cast<int>(rows.size()) >= n
                       ? rows[static_cast<std::size_t>(n - 1)]
                       : 0;
  return rows.empty() || rows[0] - last <= ctx.k();
}

}  // namespace detail

/// A chain of partitions from `base`, one box per step, cut into blocks
/// whose labels strictly decrease.
class LatticePath {
 public:
  LatticePath(Partition base, std::vector<Block> blocks)
      : base_(std::move(base)) {
    std::vector<int> rows = base_.parts();
    boundaries_.push_back(base_);
    for (Block& block : blocks) {
      detail::sort_decreasing(block);
      for (std::size_t i = 0; i < block.size(); ++i) {
        const Box b = block[i];
        if (i > 0 && diagonal_label(block[i - 1]) == diagonal_label(b)) {
          throw InvalidInput("block repeats a label");
        }
        if (b.row < 1 || b.col < 1) {
          throw InvalidInput("box outside the quadrant");
        }
        const auto r = static_cast<std::size_t>(b.row - 1);
        if (rows.size() < r + 1) {
          rows.resize(r + 1, 0);
        }
        if (rows[r] + 1 != b.col || (r > 0 && rows[r - 1] < b.col)) {
          throw InvalidInput("box is not addable at this step");
        }
        rows[r] = b.col;
        steps_.push_back(b);
      }
      ascents_.push_back(static_cast<int>(block.size()));
      boundaries_.emplace_back(rows);
    }
  }

  /// Same as the constructor, but returns nullopt instead of throwing.
  static std::optional<LatticePath> make(Partition base,
                                         std::vector<Block> blocks) {
    try {
      return LatticePath(std::move(base), std::move(blocks));
    } catch (const InvalidInput&) {
      return std::nullopt;
    }
  }

  [[nodiscard]] const Partition& base() const { return base_; }
  [[nodiscard]] const Partition& target() const { return boundaries_.back(); }
  [[nodiscard]] const std::vector<Box>& steps() const { return steps_; }
  [[nodiscard]] const Composition& ascents() const { return ascents_; }
  [[nodiscard]] int block_count() const {
    return static_cast<int>(ascents_.size());
  }

  /// Block i (0-based).
  [[nodiscard]] std::span<const Box> block(int i) const {
    std::size_t start = 0;
    for (int j = 0; j < i; ++j) {
      start += static_cast<std::size_t>(ascents_[static_cast<std::size_t>(j)]);
    }
    return {steps_.data() + start,
            static_cast<std::size_t>(ascents_[static_cast<std::size_t>(i)])};
  }

  [[nodiscard]] Block block_copy(int i) const {
    const auto b = block(i);
    return Block(b.begin(), b.end());
  }

  /// Shape after the first i blocks; boundary(0) is the base.
  [[nodiscard]] const Partition& boundary(int i) const {
    return boundaries_[static_cast<std::size_t>(i)];
  }

  [[nodiscard]] std::vector<int> labels() const {
    std::vector<int> out;
    out.reserve(steps_.size());
    for (Box b : steps_) {
      out.push_back(diagonal_label(b));
    }
    return out;
  }

  /// Replaces blocks i and i+1 (the union of their boxes must be unchanged
  /// for the endpoints to be kept).
  [[nodiscard]] std::optional<LatticePath> with_pair(int i, Block first,
                                                     Block second) const {
    std::vector<Block> blocks;
    for (int j = 0; j < block_count(); ++j) {
      if (j == i) {
        blocks.push_back(std::move(first));
      } else if (j == i + 1) {
        blocks.push_back(std::move(second));
      } else {
        blocks.push_back(block_copy(j));
      }
    }
    return make(base_, std::move(blocks));
  }

  friend bool operator==(const LatticePath& a, const LatticePath& b) {
    return a.base_ == b.base_ && a.steps_ == b.steps_ &&
           a.ascents_ == b.ascents_;
  }

 private:
  Partition base_;
  std::vector<Box> steps_;
  Composition ascents_;
  std::vector<Partition> boundaries_;
};

/// Every nu with nu/base a column strip of r boxes and at most max_rows rows.
inline std::vector<Partition> column_strip_targets(const Partition& base,
                                                   int r, int max_rows) {
  std::vector<Partition> out;
  if (base.length() > max_rows) {
    return out;
  }
  const std::vector<int> rows = base.padded(max_rows);
  const std::vector<int> bound(rows.size(), rows.empty() ? 0 : rows[0] + 1);
  detail::for_each_column_strip(
      rows, r, bound,
      [&](const std::vector<int>& next, const Block&) { out.emplace_back(next); });
  return out;
}

/// Restricted variant: targets must lie in Pi^(n,k). Empty when r > n.
inline std::vector<Partition> column_strip_targets(const Partition& base,
                                                   int r,
                                                   const FusionContext& ctx) {
  std::vector<Partition> out;
  for (Partition& p : column_strip_targets(base, r, ctx.n())) {
    if (is_restricted(p, ctx)) {
      out.push_back(std::move(p));
    }
  }
  return out;
}

/// Visits every path base -> target cut into decreasing blocks of the given
/// sizes. With a context, the shapes at interior block boundaries must be
/// (n,k)-restricted and every shape has at most n rows.
template <typename Fn>
void for_each_path(const Partition& base, const Partition& target,
                   std::span<const int> ascents, const FusionContext* ctx,
                   Fn&& fn) {
  int total = 0;
  for (int a : ascents) {
    if (a < 0) {
      return;
    }
    total += a;
  }
  if (total != target.size() - base.size() || !target.contains(base)) {
    return;
  }
  if (ctx != nullptr && target.length() > ctx->n()) {
    return;
  }
  const int height = std::max(target.length(), 1);
  const std::vector<int> bound = target.padded(height);
  std::vector<Block> blocks(ascents.size());
  auto rec = [&](auto&& self, std::size_t i,
                 const std::vector<int>& rows) -> void {
    if (i == ascents.size()) {
      if (rows == bound) {
        fn(LatticePath(base, blocks));
      }
      return;
    }
    detail::for_each_column_strip(
        rows, ascents[i], bound,
        [&](const std::vector<int>& next, const Block& boxes) {
          if (ctx != nullptr && i + 1 < ascents.size() &&
              !detail::rows_restricted(next, *ctx)) {
            return;
          }
          blocks[i] = boxes;
          self(self, i + 1, next);
        });
  };
  rec(rec, 0, base.padded(height));
}

inline std::vector<LatticePath> enumerate_paths(
    const Partition& base, const Partition& target,
    std::span<const int> ascents,
    const std::optional<FusionContext>& ctx = std::nullopt) {
  std::vector<LatticePath> out;
  for_each_path(base, target, ascents, ctx ? &*ctx : nullptr,
                [&](const LatticePath& p) { out.push_back(p); });
  return out;
}

/// Column i holds the labels of block i in step order. Rows are counted from
/// the bottom of each column (the smallest label sits in row 1), so a
/// column-strict tableau increases up every column and weakly along rows.
struct PathTableau {
  std::vector<std::vector<int>> columns;

  /// Entry in row j (1 = bottom) of column c (0-based), if present.
  [[nodiscard]] std::optional<int> at(std::size_t c, std::size_t j) const {
    const auto& col = columns[c];
    if (j < 1 || j > col.size()) {
      return std::nullopt;
    }
    return col[col.size() - j];
  }

  friend bool operator==(const PathTableau&, const PathTableau&) = default;
};

inline PathTableau path_to_tableau(const LatticePath& path) {
  PathTableau t;
  for (int i = 0; i < path.block_count(); ++i) {
    std::vector<int> col;
    for (Box b : path.block(i)) {
      col.push_back(diagonal_label(b));
    }
    t.columns.push_back(std::move(col));
  }
  return t;
}

/// Direct semistandardness: column lengths weakly decrease, columns strictly
/// increase upward, rows weakly increase to the right.
inline bool is_column_strict(const PathTableau& t) {
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    const auto& col = t.columns[c];
    for (std::size_t j = 1; j < col.size(); ++j) {
      if (col[j - 1] <= col[j]) {
        return false;
      }
    }
    if (c + 1 < t.columns.size()) {
      const auto& right = t.columns[c + 1];
      if (right.size() > col.size()) {
        return false;
      }
      for (std::size_t j = 1; j <= right.size(); ++j) {
        if (*t.at(c, j) > *t.at(c + 1, j)) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Block i adds a box in the first row.
inline bool block_has_bot(const LatticePath& path, int i) {
  const auto b = path.block(i);
  return std::any_of(b.begin(), b.end(), [](Box x) { return x.row == 1; });
}

/// Block i adds a box in row n.
inline bool block_has_top(const LatticePath& path, int i,
                          const FusionContext& ctx) {
  const auto b = path.block(i);
  return std::any_of(b.begin(), b.end(),
                     [&](Box x) { return x.row == ctx.n(); });
}

}  // namespace fusionkit
