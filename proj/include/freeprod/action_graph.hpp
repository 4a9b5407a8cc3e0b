#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "freeprod/group.hpp"
#include "freeprod/word.hpp"

namespace freeprod {

inline constexpr Vertex kUnreachable = std::numeric_limits<Vertex>::max();

/// Labeled graph carrying commuting actions of the two factors, stored as
/// one permutation per factor element (index 0 is the identity). Edges are
/// derived: for every vertex p and nonidentity c there is a positively
/// oriented edge p -> perm(c)(p) labeled c; traversing it backwards applies
/// perm(c)^-1.
struct ActionGraph {
  FreeProduct groups;
  std::uint32_t vertex_count = 0;
  std::array<std::vector<Permutation>, 2> actions;
  std::vector<std::string> vertex_names;   // optional
  std::vector<std::uint32_t> region_of;    // optional region tags

  const Permutation& perm(Factor f, ElementIndex x) const {
    return actions[factor_index(f)][x];
  }
  Vertex act(Vertex v, Syllable s) const { return perm(s.factor, s.element)(v); }
  Vertex act_word(Vertex v, const Word& w) const;
  Permutation image_permutation(const Word& w) const;
  std::uint64_t image_order(const Word& w) const { return image_permutation(w).order(); }
  std::string vertex_name(Vertex v) const;
};

struct GraphViolation {
  enum class Kind {
    Structure,        // sizes do not line up
    NotBijection,     // some element's image table is not a permutation
    IdentityAction,   // element 0 does not act trivially
    Homomorphism,     // perm(x).then(perm(y)) != perm(x*y)
    OrbitRegularity,  // element neither trivial nor fixpoint-free on an orbit
    NotFree,          // requireFree: nonidentity element has a fixed point
  };
  Kind kind = Kind::Structure;
  Factor factor = Factor::A;
  ElementIndex x = 0, y = 0;
  Vertex v = 0, w = 0;
  std::string message;
};

struct GraphValidation {
  bool ok = false;
  std::optional<GraphViolation> violation;  // first violated law
};

GraphValidation validate(const ActionGraph& g, bool require_free);

struct OrbitPartition {
  std::vector<std::uint32_t> orbit_of;      // vertex -> orbit id
  std::vector<std::vector<Vertex>> orbits;  // sorted members per orbit
};

/// Orbits of one factor's action (the factor components).
OrbitPartition factor_orbits(const ActionGraph& g, Factor f);

/// Undirected adjacency over all nonidentity generator moves.
std::vector<std::vector<Vertex>> build_adjacency(const ActionGraph& g);

/// Breadth-first distances from `start`; kUnreachable marks other components.
std::vector<Vertex> bfs_distances(const ActionGraph& g,
                                  const std::vector<std::vector<Vertex>>& adjacency,
                                  Vertex start);

std::optional<std::uint32_t> distance(const ActionGraph& g, Vertex p, Vertex q);

struct EdgeStep {
  Vertex from = 0;
  Syllable label{Factor::A, 0};
  bool forward = true;
};

Vertex edge_step_target(const ActionGraph& g, const EdgeStep& step);

/// Product of the step labels (inverted for backward traversals), reduced.
/// Throws std::invalid_argument if consecutive steps do not share endpoints.
Word path_label(const ActionGraph& g, std::span<const EdgeStep> steps);

/// Minimal closed path from `start` spelling powers of `word`; its label is
/// word^length.
struct UCycleRecord {
  Word word;
  Vertex start = 0;
  std::uint64_t edge_count = 0;
  std::uint64_t length = 0;        // edge_count / word.length()
  std::vector<Vertex> vertices;    // origin of every edge, edge_count entries
};

/// One record per orbit of the word's image permutation, started at the
/// orbit's least vertex, ordered by start vertex. Pre: word cyclically
/// reduced with length >= 2.
std::vector<UCycleRecord> enumerate_u_cycles(const ActionGraph& g, const Word& word);

struct NearVertexResult {
  bool found = false;
  std::size_t i = 0, j = 0;    // positions into cycle.vertices
  std::uint32_t dist = 0;
  std::uint32_t bound = 0;     // min(l+1, |i-j|, n-|i-j|)
  std::vector<Vertex> path;    // shortest connecting path, endpoints included
};

/// True (with witness) iff two cycle positions are closer in the graph than
/// min(l+1, their cyclic separation).
NearVertexResult has_l_near_vertices(const ActionGraph& g, const UCycleRecord& cycle,
                                     std::uint32_t l);

struct GirthResult {
  std::optional<std::uint32_t> girth;  // least length of a killed word; nullopt if none exists
  Word witness;
  Vertex base_vertex = 0;

  bool exceeds(std::uint32_t limit) const { return !girth.has_value() || *girth > limit; }
};

/// Least syllable length of a nonunit reduced word whose image fixes some
/// vertex. A fixed point of a nonidentity generator gives girth 1; otherwise
/// the graph is free and the answer is the shortest cycle in the bipartite
/// incidence structure (nodes = factor components, edges = vertices), each
/// component traversal contributing one syllable.
GirthResult syllable_girth(const ActionGraph& g, std::uint32_t limit);

std::string to_dot(const ActionGraph& g);

}  // namespace freeprod
