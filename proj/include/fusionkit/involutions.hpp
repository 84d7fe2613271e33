#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fusionkit/error.hpp"
#include "fusionkit/partition.hpp"
#include "fusionkit/paths.hpp"
#include "fusionkit/words.hpp"

namespace fusionkit {

/// An element (sigma, P) of the signed set; the path's blocks have sizes
/// sigma . mu'.
struct SignedTerm {
  Permutation sigma;
  LatticePath path;

  [[nodiscard]] int sign() const { return sigma.sign(); }

  friend bool operator==(const SignedTerm&, const SignedTerm&) = default;
};

/// Set FUSIONKIT_TRACE=1 to get bracket traces on stderr.
inline std::ostream* env_trace_stream() {
  static const bool enabled = [] {
    const char* v = std::getenv("FUSIONKIT_TRACE");
    return v != nullptr && std::string_view(v) == "1";
  }();
  return enabled ? &std::cerr : nullptr;
}

// ---------------------------------------------------------------------------
// Psi

/// First adjacent column pair (c, c+1) breaking column-strictness, scanning
/// rows from the bottom up and each row from right to left. Returns c.
inline std::optional<std::size_t> canonical_violation(const PathTableau& t) {
  const std::size_t m = t.columns.size();
  if (m < 2) {
    return std::nullopt;
  }
  std::size_t height = 0;
  for (const auto& col : t.columns) {
    height = std::max(height, col.size());
  }
  for (std::size_t j = 1; j <= height; ++j) {
    for (std::size_t c = m - 1; c-- > 0;) {
      const auto right = t.at(c + 1, j);
      if (!right) {
        continue;
      }
      const auto left = t.at(c, j);
      if (!left || *left > *right) {
        return c;
      }
    }
  }
  return std::nullopt;
}

namespace detail {

inline LatticePath replace_pair(const LatticePath& path, int i,
                                const BracketWord& w) {
  auto [first, second] = w.blocks();
  auto out = path.with_pair(i, std::move(first), std::move(second));
  if (!out) {
    throw InternalError("operator produced an invalid path");
  }
  return *std::move(out);
}

inline BracketWord pair_word(const LatticePath& path, int i) {
  return BracketWord::from_blocks(path.block(i), path.block(i + 1));
}

inline void trace_step(std::ostream* os, const char* what,
                       const BracketWord& before, const BracketWord& after,
                       std::optional<std::size_t> mark = std::nullopt) {
  if (os != nullptr) {
    *os << what << ": " << before.brackets(mark) << " -> "
        << after.brackets(mark) << '\n';
  }
}

}  // namespace detail

/// The classical sign-reversing involution. Fitting terms with sigma = id are
/// returned unchanged.
inline SignedTerm psi(const SignedTerm& term, std::ostream* trace = nullptr) {
  const auto c = canonical_violation(path_to_tableau(term.path));
  if (!c) {
    return term;
  }
  const int i = static_cast<int>(*c);
  const int d = static_cast<int>(term.path.block(i + 1).size()) -
                static_cast<int>(term.path.block(i).size()) - 1;
  if (d == 0) {
    throw InternalError("psi: zero exponent at the canonical position");
  }
  const BracketWord before = detail::pair_word(term.path, i);
  const BracketWord after = crystal_power(before, d);
  detail::trace_step(trace, "psi", before, after);
  return {term.sigma.after_transposition(i),
          detail::replace_pair(term.path, i, after)};
}

// ---------------------------------------------------------------------------
// The exceptional domains

namespace detail {

/// Boxes of nu/lambda in column nu_1, by increasing label.
inline std::vector<Box> last_column(const LatticePath& path) {
  const int c = path.target().row(1);
  std::vector<Box> out;
  for (Box b : path.steps()) {
    if (b.col == c) {
      out.push_back(b);
    }
  }
  std::sort(out.begin(), out.end(), [](Box a, Box b) {
    return diagonal_label(a) < diagonal_label(b);
  });
  return out;
}

inline bool in_block(std::span<const Box> block, Box b) {
  return std::find(block.begin(), block.end(), b) != block.end();
}

inline int count_row(std::span<const Box> block, int row) {
  return static_cast<int>(std::count_if(
      block.begin(), block.end(), [&](Box b) { return b.row == row; }));
}

inline void require_two_blocks(const LatticePath& path) {
  if (path.block_count() != 2) {
    throw InvalidInput("operator needs a two-block path");
  }
}

}  // namespace detail

inline bool in_d1(const LatticePath& path, const FusionContext& ctx) {
  detail::require_two_blocks(path);
  if (path.block(0).size() >= path.block(1).size()) {
    return false;
  }
  if (!is_edge(path.target(), ctx)) {
    return false;
  }
  if (block_has_bot(path, 0) || block_has_top(path, 0, ctx) ||
      !block_has_bot(path, 1) || !block_has_top(path, 1, ctx)) {
    return false;
  }
  const BracketWord w = detail::pair_word(path, 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].paren == Paren::Right && w[i].box->row == 1) {
      return !w.paired(i);
    }
  }
  return false;
}

struct D2Certificate {
  bool fits = false;
  bool structure = false;
  bool last_column = false;
  bool top = false;
  /// Last column of nu/lambda, a_1 < ... < a_s.
  std::vector<Box> column;
  std::optional<Box> a_i0;
  /// The box left of a_1, when it lies in nu/lambda.
  std::optional<Box> a1_minus;
  std::optional<Box> b_i0;

  [[nodiscard]] bool member() const {
    return fits && structure && last_column && top;
  }
};

inline D2Certificate d2_certificate(const LatticePath& path,
                                    const FusionContext& ctx) {
  detail::require_two_blocks(path);
  D2Certificate cert;
  const auto p1 = path.block(0);
  const auto p2 = path.block(1);
  const BracketWord w = detail::pair_word(path, 0);
  cert.fits = p1.size() >= p2.size() && w.type().right == 0;

  const int n = ctx.n();
  cert.structure = is_edge(path.target(), ctx) &&
                   detail::count_row(p1, 1) + detail::count_row(p2, 1) == 1 &&
                   detail::count_row(p1, n) > 0 &&
                   detail::count_row(p2, n) == 0;

  cert.column = detail::last_column(path);
  for (Box b : cert.column) {
    if (detail::in_block(p2, b)) {
      cert.a_i0 = b;
    }
  }
  if (!cert.column.empty()) {
    const Box a1 = cert.column.front();
    const Box left{a1.row, a1.col - 1};
    if (detail::in_block(p1, left) || detail::in_block(p2, left)) {
      cert.a1_minus = left;
    }
  }
  if (cert.a_i0) {
    const std::size_t pos = *w.position_of(*cert.a_i0);
    if (const auto partner = w.partner(pos)) {
      cert.b_i0 = w[*partner].box;
    }
    cert.last_column = !(cert.a1_minus && cert.b_i0 == cert.a1_minus);
    if (w.size() > 0) {
      cert.top = w.paired(0) ? w[*w.partner(0)].box == cert.a_i0
                             : w[0].paren == Paren::Left;
    }
  }
  return cert;
}

inline bool in_d2(const LatticePath& path, const FusionContext& ctx) {
  return d2_certificate(path, ctx).member();
}

// ---------------------------------------------------------------------------
// phi1 / phi2

/// Word-level phi1: every unpaired ')' except the one at `keep` turns into
/// '('.
inline BracketWord phi1_word(const BracketWord& w, std::size_t keep) {
  std::vector<std::size_t> flip;
  for (std::size_t i : w.unpaired(Paren::Right)) {
    if (i != keep) {
      flip.push_back(i);
    }
  }
  return w.flipped(flip);
}

/// Word-level phi2: every unpaired '(' and the partner of `special` turn
/// into ')'.
inline BracketWord phi2_word(const BracketWord& w, std::size_t special) {
  std::vector<std::size_t> flip = w.unpaired(Paren::Left);
  if (const auto partner = w.partner(special)) {
    flip.push_back(*partner);
  }
  return w.flipped(flip);
}

inline LatticePath phi1(const LatticePath& path, const FusionContext& ctx,
                        std::ostream* trace = nullptr) {
  if (!in_d1(path, ctx)) {
    throw DomainError("phi1: path is not in D1");
  }
  const BracketWord w = detail::pair_word(path, 0);
  std::optional<std::size_t> keep;
  for (Box b : detail::last_column(path)) {
    const std::size_t pos = *w.position_of(b);
    if (!w.paired(pos)) {
      keep = pos;
      break;
    }
  }
  if (!keep) {
    throw InternalError("phi1: no unpaired label in the last column");
  }
  const BracketWord out = phi1_word(w, *keep);
  detail::trace_step(trace, "phi1", w, out, keep);
  return detail::replace_pair(path, 0, out);
}

inline LatticePath phi2(const LatticePath& path, const FusionContext& ctx,
                        std::ostream* trace = nullptr) {
  const D2Certificate cert = d2_certificate(path, ctx);
  if (!cert.member()) {
    throw DomainError("phi2: path is not in D2");
  }
  const BracketWord w = detail::pair_word(path, 0);
  const std::size_t special = *w.position_of(*cert.a_i0);
  const BracketWord out = phi2_word(w, special);
  detail::trace_step(trace, "phi2", w, out, special);
  return detail::replace_pair(path, 0, out);
}

// ---------------------------------------------------------------------------
// Phi

enum class PhiCase { Psi, Phi1, Phi2, Fixed };

inline const char* to_string(PhiCase c) {
  switch (c) {
    case PhiCase::Psi:
      return "psi";
    case PhiCase::Phi1:
      return "phi1";
    case PhiCase::Phi2:
      return "phi2";
    case PhiCase::Fixed:
      return "fixed";
  }
  return "?";
}

inline PhiCase classify(const SignedTerm& term, const FusionContext& ctx) {
  detail::require_two_blocks(term.path);
  if (!term.sigma.is_identity()) {
    return in_d1(term.path, ctx) ? PhiCase::Phi1 : PhiCase::Psi;
  }
  if (!fits_blocks(term.path)) {
    return PhiCase::Psi;
  }
  return in_d2(term.path, ctx) ? PhiCase::Phi2 : PhiCase::Fixed;
}

/// The fusion involution on two-column terms. A single-column term is its
/// own image.
inline SignedTerm phi(const SignedTerm& term, const FusionContext& ctx,
                      std::ostream* trace = nullptr) {
  if (trace == nullptr) {
    trace = env_trace_stream();
  }
  if (term.path.block_count() == 1) {
    return term;
  }
  if (term.path.block_count() != 2) {
    throw UnsupportedShape("phi is defined for two-column mu only");
  }
  switch (classify(term, ctx)) {
    case PhiCase::Psi:
      return psi(term, trace);
    case PhiCase::Phi1:
      return {term.sigma.after_transposition(0), phi1(term.path, ctx, trace)};
    case PhiCase::Phi2:
      return {term.sigma.after_transposition(0), phi2(term.path, ctx, trace)};
    case PhiCase::Fixed:
      break;
  }
  return term;
}

/// Fits mu, avoids D2 and has restricted block boundaries.
inline bool is_k_fusion(const LatticePath& path, const FusionContext& ctx,
                        const Partition& mu) {
  if (mu.row(1) > 2) {
    throw UnsupportedShape("k-fusion tableaux are defined for two-column mu");
  }
  if (!fits(path, mu)) {
    return false;
  }
  for (int i = 0; i <= path.block_count(); ++i) {
    if (!is_restricted(path.boundary(i), ctx)) {
      return false;
    }
  }
  return path.block_count() < 2 || !in_d2(path, ctx);
}

// ---------------------------------------------------------------------------
// Term enumeration

/// Every (sigma, P) with P: lambda -> nu having block sizes sigma . mu'.
/// With a context the interior block boundaries must be restricted.
template <typename Fn>
void for_each_term(const Partition& lambda, const Partition& mu,
                   const Partition& nu, const FusionContext* ctx, Fn&& fn) {
  const Partition mu_conj = conjugate(mu);
  const int m = mu_conj.length();
  std::vector<int> image(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    image[static_cast<std::size_t>(i)] = i;
  }
  do {
    const Permutation sigma(image);
    const Composition alpha = sigma_dot(sigma, mu_conj.parts());
    if (std::any_of(alpha.begin(), alpha.end(), [](int a) { return a < 0; })) {
      continue;
    }
    for_each_path(lambda, nu, alpha, ctx, [&](const LatticePath& p) {
      fn(SignedTerm{sigma, p});
    });
  } while (std::next_permutation(image.begin(), image.end()));
}

inline std::vector<SignedTerm> classical_terms(const Partition& lambda,
                                               const Partition& mu,
                                               const Partition& nu) {
  std::vector<SignedTerm> out;
  for_each_term(lambda, mu, nu, nullptr,
                [&](const SignedTerm& t) { out.push_back(t); });
  return out;
}

inline std::vector<SignedTerm> fusion_terms(const Partition& lambda,
                                            const Partition& mu,
                                            const Partition& nu,
                                            const FusionContext& ctx) {
  std::vector<SignedTerm> out;
  for_each_term(lambda, mu, nu, &ctx,
                [&](const SignedTerm& t) { out.push_back(t); });
  return out;
}

}  // namespace fusionkit
