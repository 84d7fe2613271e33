#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fusionkit/error.hpp"

namespace fusionkit {

/// A weakly decreasing sequence of nonnegative integers. Trailing zeros are
/// stripped on construction, so (2,1,0) == (2,1).
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) {
        throw InvalidInput("partition has a negative part");
      }
      if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
        throw InvalidInput("partition parts must be weakly decreasing");
      }
    }
    while (!parts_.empty() && parts_.back() == 0) {
      parts_.pop_back();
    }
  }

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
  [[nodiscard]] bool empty() const { return parts_.empty(); }
  [[nodiscard]] int size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  /// Row length, rows numbered from 1; zero past the last row.
  [[nodiscard]] int row(int i) const {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)]
                                     : 0;
  }

  [[nodiscard]] const std::vector<int>& parts() const { return parts_; }

  [[nodiscard]] std::vector<int> padded(int n) const {
    std::vector<int> out(parts_);
    if (static_cast<int>(out.size()) < n) {
      out.resize(static_cast<std::size_t>(n), 0);
    }
    return out;
  }

  /// Diagram inclusion: every row of `inner` fits inside this partition.
  [[nodiscard]] bool contains(const Partition& inner) const {
    if (inner.length() > length()) {
      return false;
    }
    for (int i = 1; i <= inner.length(); ++i) {
      if (inner.row(i) > row(i)) {
        return false;
      }
    }
    return true;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// The pair (n, k): at most n rows, level k.
class FusionContext {
 public:
  FusionContext(int n, int k) : n_(n), k_(k) {
    // Rank 1 is admitted so that the rank-level dual of a level-1 context is
    // representable.
    if (n < 1 || k < 1) {
      throw InvalidInput("fusion context needs n >= 1 and k >= 1");
    }
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int k() const { return k_; }

  /// The context with rank and level exchanged.
  [[nodiscard]] FusionContext dual() const { return {k_, n_}; }

  friend bool operator==(const FusionContext&, const FusionContext&) = default;

 private:
  int n_;
  int k_;
};

/// Integer sequence; negative entries mean "no paths".
using Composition = std::vector<int>;

/// p_1 - p_n with p padded to n rows.
inline int spread(const Partition& p, int n) { return p.row(1) - p.row(n); }

inline bool is_restricted(const Partition& p, const FusionContext& ctx) {
  return p.length() <= ctx.n() && spread(p, ctx.n()) <= ctx.k();
}

inline bool is_edge(const Partition& p, const FusionContext& ctx) {
  return p.length() <= ctx.n() && spread(p, ctx.n()) == ctx.k();
}

inline bool is_border(const Partition& p, const FusionContext& ctx) {
  return p.length() <= ctx.n() && spread(p, ctx.n()) == ctx.k() + 1;
}

inline Partition conjugate(const Partition& p) {
  std::vector<int> cols(static_cast<std::size_t>(p.row(1)), 0);
  for (int part : p.parts()) {
    for (int j = 0; j < part; ++j) {
      ++cols[static_cast<std::size_t>(j)];
    }
  }
  return Partition(std::move(cols));
}

/// (p_1 - p_n, ..., p_{n-1} - p_n).
inline Partition quotient(const Partition& p, const FusionContext& ctx) {
  if (p.length() > ctx.n()) {
    throw InvalidInput("quotient: partition has more than n rows");
  }
  const int last = p.row(ctx.n());
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(ctx.n() - 1));
  for (int i = 1; i < ctx.n(); ++i) {
    out.push_back(p.row(i) - last);
  }
  return Partition(std::move(out));
}

/// Rank-level duality Pi^(n,k) -> Pi^(k,n). The diagram is cut into vertical
/// slabs of width k; each slab is conjugated and the results are added row by
/// row.
inline Partition rank_level_dual(const Partition& p, const FusionContext& ctx) {
  if (!is_restricted(p, ctx)) {
    throw InvalidInput("rank_level_dual: partition is not (n,k)-restricted");
  }
  const int k = ctx.k();
  std::vector<int> glued(static_cast<std::size_t>(k), 0);
  for (int offset = 0; offset < p.row(1); offset += k) {
    std::vector<int> slab;
    slab.reserve(static_cast<std::size_t>(p.length()));
    for (int part : p.parts()) {
      slab.push_back(std::clamp(part - offset, 0, k));
    }
    const Partition turned = conjugate(Partition(std::move(slab)));
    for (int i = 1; i <= turned.length(); ++i) {
      glued[static_cast<std::size_t>(i - 1)] += turned.row(i);
    }
  }
  return Partition(std::move(glued));
}

/// A permutation of {0..m-1} in one-line notation: image()[i] = sigma(i).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (int v : image_) {
      if (v < 0 || v >= static_cast<int>(image_.size()) ||
          seen[static_cast<std::size_t>(v)]) {
        throw InvalidInput("not a permutation");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static Permutation identity(int m) {
    std::vector<int> image(static_cast<std::size_t>(m));
    std::iota(image.begin(), image.end(), 0);
    return Permutation(std::move(image));
  }

  static Permutation from_inverse(const std::vector<int>& inverse) {
    return Permutation(inverse).inverse();
  }

  [[nodiscard]] int degree() const { return static_cast<int>(image_.size()); }
  [[nodiscard]] int operator()(int i) const {
    return image_[static_cast<std::size_t>(i)];
  }
  [[nodiscard]] const std::vector<int>& image() const { return image_; }

  [[nodiscard]] Permutation inverse() const {
    std::vector<int> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) {
      inv[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
    }
    return Permutation(std::move(inv));
  }

  [[nodiscard]] bool is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i) {
      if (image_[i] != static_cast<int>(i)) {
        return false;
      }
    }
    return true;
  }

  /// +1 or -1.
  [[nodiscard]] int sign() const {
    int s = 1;
    for (std::size_t i = 0; i < image_.size(); ++i) {
      for (std::size_t j = i + 1; j < image_.size(); ++j) {
        if (image_[i] > image_[j]) {
          s = -s;
        }
      }
    }
    return s;
  }

  /// (r, r+1) composed on the left: the values r and r+1 trade places.
  [[nodiscard]] Permutation after_transposition(int r) const {
    std::vector<int> image(image_);
    for (int& v : image) {
      if (v == r) {
        v = r + 1;
      } else if (v == r + 1) {
        v = r;
      }
    }
    return Permutation(std::move(image));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// sigma . mu' = sigma(rho + mu') - rho with rho = (m-1, ..., 1, 0): entry i
/// is (rho + mu')_{sigma^{-1}(i)} - rho_i.
inline Composition sigma_dot(const Permutation& sigma,
                             std::span<const int> mu_conj) {
  const int m = sigma.degree();
  if (static_cast<int>(mu_conj.size()) != m) {
    throw InvalidInput("sigma_dot: composition length differs from degree");
  }
  const Permutation inv = sigma.inverse();
  Composition out(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const int j = inv(i);
    out[static_cast<std::size_t>(i)] =
        (m - 1 - j) + mu_conj[static_cast<std::size_t>(j)] - (m - 1 - i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text format: "3,2,1"; the empty partition is "" or "0".

inline Partition parse_partition(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
      s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
      s.remove_suffix(1);
    }
    return s;
  };
  text = trim(text);
  std::vector<int> parts;
  if (text.empty()) {
    return Partition();
  }
  while (true) {
    const std::size_t comma = text.find(',');
    const std::string_view token = trim(text.substr(0, comma));
    int value = 0;
    const auto [end, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        end != token.data() + token.size()) {
      throw InvalidInput("malformed partition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) {
      break;
    }
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

inline std::string to_string(const Partition& p) {
  if (p.empty()) {
    return "0";
  }
  std::string out;
  for (int i = 1; i <= p.length(); ++i) {
    if (i > 1) {
      out += ',';
    }
    out += std::to_string(p.row(i));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration.

/// Partitions of `size` with at most `max_rows` rows and parts at most
/// `max_part`, in reverse lexicographic order. Negative bounds mean unbounded.
inline std::vector<Partition> partitions_of(int size, int max_rows = -1,
                                            int max_part = -1) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (max_rows >= 0 && static_cast<int>(current.size()) >= max_rows) {
      return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(size, max_part < 0 ? size : max_part);
  return out;
}

inline std::vector<Partition> restricted_partitions(int size,
                                                    const FusionContext& ctx) {
  std::vector<Partition> out;
  for (Partition& p : partitions_of(size, ctx.n())) {
    if (is_restricted(p, ctx)) {
      out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace fusionkit
