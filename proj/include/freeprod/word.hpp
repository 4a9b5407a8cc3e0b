#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "freeprod/group.hpp"

namespace freeprod {

enum class Factor : std::uint8_t { A = 0, B = 1 };

inline Factor other(Factor f) { return f == Factor::A ? Factor::B : Factor::A; }
inline std::size_t factor_index(Factor f) { return static_cast<std::size_t>(f); }

/// One maximal factor letter of a reduced word. In a Word the element is
/// always nonidentity; raw input to reduce() may carry identity syllables.
struct Syllable {
  Factor factor;
  ElementIndex element;

  auto operator<=>(const Syllable&) const = default;
};

/// Reduced alternating syllable sequence; the empty word is the identity.
struct Word {
  std::vector<Syllable> syllables;

  std::size_t length() const { return syllables.size(); }
  bool empty() const { return syllables.empty(); }

  auto operator<=>(const Word&) const = default;
};

/// Cyclically reduced conjugate with an explicit witness:
/// conjugator^-1 * representative * conjugator == original word.
struct CyclicWord {
  Word representative;  // lexicographically least rotation
  Word conjugator;
};

struct HypothesisFailure {
  std::size_t i = 0, j = 0;  // word indices; i == j for a single-word failure
  std::string reason;
};

struct HypothesisReport {
  bool pass = false;
  std::vector<std::size_t> cyclic_lengths;
  std::vector<HypothesisFailure> failures;
  // The source phrasing of the independence condition is ambiguous; we read
  // it as: distinct inputs must not share conjugate cyclic subgroups.
  std::string interpretation =
      "independence interpreted as: distinct words must not lie in conjugate cyclic subgroups";
};

/// The ambient free product A * B. Owns the two factor tables and provides
/// the exact word arithmetic.
struct FreeProduct {
  FiniteGroup a, b;

  const FiniteGroup& factor(Factor f) const { return f == Factor::A ? a : b; }

  /// Normal form: merges adjacent same-factor syllables via the factor table
  /// and drops identity syllables. Throws std::invalid_argument on a bad
  /// element index.
  Word reduce(std::span<const Syllable> raw) const;
  Word reduce(const Word& w) const { return reduce(std::span<const Syllable>(w.syllables)); }

  Word concat(const Word& x, const Word& y) const;
  Word inverse(const Word& w) const;
  Word conjugate(const Word& w, const Word& by) const;  // by^-1 * w * by
  Word power(const Word& w, std::uint32_t t) const;

  bool is_reduced(std::span<const Syllable> s) const;
  bool is_cyclically_reduced(const Word& w) const;

  CyclicWord cyclic_reduce(const Word& w) const;
  std::size_t cyclic_length(const Word& w) const;

  /// Primitive root: w == r^t with t maximal. Pre: w cyclically reduced,
  /// length >= 2.
  std::pair<Word, std::uint32_t> root(const Word& w) const;

  bool are_conjugate(const Word& w1, const Word& w2) const;

  /// Pre: both cyclic lengths >= 2. True iff root(w1~) is conjugate to
  /// root(w2~) or to its inverse, where ~ is cyclic reduction.
  bool share_conjugate_cyclic_subgroup(const Word& w1, const Word& w2) const;

  /// Theorem hypotheses: every word has cyclic length >= 2 and no distinct
  /// pair shares conjugate cyclic subgroups.
  HypothesisReport check_hypotheses(std::span<const Word> words) const;

  bool factor_elements_conjugate(Factor f, ElementIndex x, ElementIndex y) const;

  std::string format_word(const Word& w) const;  // tokens joined by spaces
};

Word rotate_left(const Word& w, std::size_t amount);

}  // namespace freeprod
