#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace freeprod {

using ElementIndex = std::uint16_t;
using Vertex = std::uint32_t;

/// Permutation of [0, N) stored as an image table.
struct Permutation {
  std::vector<Vertex> images;

  static Permutation identity(std::size_t n);

  std::size_t size() const { return images.size(); }
  Vertex operator()(Vertex v) const { return images[v]; }

  bool is_bijection() const;
  bool is_identity() const;

  /// Composition in application order: (p.then(q))(v) = q(p(v)).
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;

  /// lcm of cycle lengths; throws std::overflow_error if it leaves uint64.
  std::uint64_t order() const;

  std::vector<std::uint64_t> cycle_lengths() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// Finite group given by its full multiplication table.
/// Element 0 is the identity; table[g][h] is the index of g*h.
struct FiniteGroup {
  std::string name;
  std::vector<std::vector<ElementIndex>> table;
  std::vector<std::string> element_names;  // optional, identity first

  std::size_t order() const { return table.size(); }
  ElementIndex mul(ElementIndex g, ElementIndex h) const { return table[g][h]; }
  ElementIndex inverse(ElementIndex g) const;
  std::string element_name(ElementIndex x) const;
};

struct GroupLawViolation {
  std::string law;      // "entry-range" | "identity" | "associativity" | "row-permutation" | "column-permutation"
  ElementIndex g = 0, h = 0, k = 0;
  std::string message;
};

struct GroupValidation {
  bool ok = false;
  std::vector<GroupLawViolation> violations;
};

/// Checks all group laws. Throws std::invalid_argument on malformed table
/// dimensions (a structural error, not a law violation).
GroupValidation validate_group(const FiniteGroup& g);

/// Least t >= 1 with x^t = identity. Throws std::out_of_range on a bad index.
std::uint64_t element_order(const FiniteGroup& g, ElementIndex x);

std::uint64_t perm_order(const Permutation& p);

/// Right-regular action: element x acts on [0, |g|) by v -> table[v][x].
/// The map is an injective homomorphism and every nonidentity image is
/// fixpoint-free.
std::vector<Permutation> regular_representation(const FiniteGroup& g);

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

/// Convenience constructor for Z/n with element names e, g, g2, ...
FiniteGroup cyclic_group(std::size_t n, const std::string& name, const std::string& generator_token);

}  // namespace freeprod
