#include "freeprod/action_graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace freeprod {

Vertex ActionGraph::act_word(Vertex v, const Word& w) const {
  for (const Syllable& s : w.syllables) v = act(v, s);
  return v;
}

Permutation ActionGraph::image_permutation(const Word& w) const {
  Permutation p = Permutation::identity(vertex_count);
  for (const Syllable& s : w.syllables) p = p.then(perm(s.factor, s.element));
  return p;
}

std::string ActionGraph::vertex_name(Vertex v) const {
  if (v < vertex_names.size() && !vertex_names[v].empty()) return vertex_names[v];
  return "v" + std::to_string(v);
}

namespace {

const char* factor_label(Factor f) { return f == Factor::A ? "A" : "B"; }

GraphValidation fail(GraphViolation v) { return {false, std::move(v)}; }

}  // namespace

GraphValidation validate(const ActionGraph& g, bool require_free) {
  for (Factor f : {Factor::A, Factor::B}) {
    const auto& action = g.actions[factor_index(f)];
    const FiniteGroup& grp = g.groups.factor(f);
    if (action.size() != grp.order())
      return fail({GraphViolation::Kind::Structure, f, 0, 0, 0, 0,
                   std::string("factor ") + factor_label(f) + " action has " +
                       std::to_string(action.size()) + " permutations for group order " +
                       std::to_string(grp.order())});
    for (ElementIndex x = 0; x < action.size(); ++x)
      if (action[x].size() != g.vertex_count)
        return fail({GraphViolation::Kind::Structure, f, x, 0, 0, 0,
                     std::string("factor ") + factor_label(f) + " element " + std::to_string(x) +
                         " permutation size mismatch"});
  }

  for (Factor f : {Factor::A, Factor::B}) {
    const auto& action = g.actions[factor_index(f)];
    for (ElementIndex x = 0; x < action.size(); ++x)
      if (!action[x].is_bijection())
        return fail({GraphViolation::Kind::NotBijection, f, x, 0, 0, 0,
                     std::string("factor ") + factor_label(f) + " element " +
                         g.groups.factor(f).element_name(x) + " image table is not a bijection"});
    if (!action[0].is_identity())
      return fail({GraphViolation::Kind::IdentityAction, f, 0, 0, 0, 0,
                   std::string("factor ") + factor_label(f) + " identity does not act trivially"});
  }

  for (Factor f : {Factor::A, Factor::B}) {
    const auto& action = g.actions[factor_index(f)];
    const FiniteGroup& grp = g.groups.factor(f);
    for (ElementIndex x = 1; x < grp.order(); ++x)
      for (ElementIndex y = 1; y < grp.order(); ++y) {
        const Permutation& pxy = action[grp.mul(x, y)];
        for (Vertex v = 0; v < g.vertex_count; ++v)
          if (action[y](action[x](v)) != pxy(v))
            return fail({GraphViolation::Kind::Homomorphism, f, x, y, v, 0,
                         std::string("factor ") + factor_label(f) + ": perm(" +
                             grp.element_name(x) + ").then(perm(" + grp.element_name(y) +
                             ")) differs from perm(" + grp.element_name(grp.mul(x, y)) +
                             ") at vertex " + std::to_string(v)});
      }
  }

  for (Factor f : {Factor::A, Factor::B}) {
    const auto& action = g.actions[factor_index(f)];
    const FiniteGroup& grp = g.groups.factor(f);
    OrbitPartition parts = factor_orbits(g, f);
    for (const auto& orbit : parts.orbits) {
      for (ElementIndex x = 1; x < grp.order(); ++x) {
        Vertex fixed = kUnreachable, moved = kUnreachable;
        for (Vertex v : orbit) {
          if (action[x](v) == v) {
            if (fixed == kUnreachable) fixed = v;
          } else if (moved == kUnreachable) {
            moved = v;
          }
          if (fixed != kUnreachable && moved != kUnreachable) break;
        }
        if (fixed != kUnreachable && moved != kUnreachable)
          return fail({GraphViolation::Kind::OrbitRegularity, f, x, 0, fixed, moved,
                       std::string("factor ") + factor_label(f) + " element " +
                           grp.element_name(x) + " fixes vertex " + std::to_string(fixed) +
                           " but moves vertex " + std::to_string(moved) + " in the same orbit"});
      }
    }
  }

  if (require_free) {
    for (Factor f : {Factor::A, Factor::B}) {
      const auto& action = g.actions[factor_index(f)];
      for (ElementIndex x = 1; x < action.size(); ++x)
        for (Vertex v = 0; v < g.vertex_count; ++v)
          if (action[x](v) == v)
            return fail({GraphViolation::Kind::NotFree, f, x, 0, v, 0,
                         std::string("factor ") + factor_label(f) + " element " +
                             g.groups.factor(f).element_name(x) + " fixes vertex " +
                             std::to_string(v)});
    }
  }

  return {true, std::nullopt};
}

OrbitPartition factor_orbits(const ActionGraph& g, Factor f) {
  OrbitPartition parts;
  parts.orbit_of.assign(g.vertex_count, kUnreachable);
  const auto& action = g.actions[factor_index(f)];
  for (Vertex start = 0; start < g.vertex_count; ++start) {
    if (parts.orbit_of[start] != kUnreachable) continue;
    std::uint32_t id = static_cast<std::uint32_t>(parts.orbits.size());
    std::vector<Vertex> members;
    std::deque<Vertex> queue{start};
    parts.orbit_of[start] = id;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      members.push_back(v);
      for (ElementIndex x = 1; x < action.size(); ++x) {
        Vertex u = action[x](v);
        if (parts.orbit_of[u] == kUnreachable) {
          parts.orbit_of[u] = id;
          queue.push_back(u);
        }
      }
    }
    std::sort(members.begin(), members.end());
    parts.orbits.push_back(std::move(members));
  }
  return parts;
}

std::vector<std::vector<Vertex>> build_adjacency(const ActionGraph& g) {
  std::vector<std::vector<Vertex>> adj(g.vertex_count);
  for (Factor f : {Factor::A, Factor::B}) {
    const auto& action = g.actions[factor_index(f)];
    for (ElementIndex x = 1; x < action.size(); ++x) {
      for (Vertex v = 0; v < g.vertex_count; ++v) {
        Vertex u = action[x](v);
        if (u != v) {
          adj[v].push_back(u);
          adj[u].push_back(v);
        }
      }
    }
  }
  return adj;
}

std::vector<Vertex> bfs_distances(const ActionGraph& g,
                                  const std::vector<std::vector<Vertex>>& adjacency,
                                  Vertex start) {
  std::vector<Vertex> dist(g.vertex_count, kUnreachable);
  std::deque<Vertex> queue{start};
  dist[start] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : adjacency[v])
      if (dist[u] == kUnreachable) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  return dist;
}

std::optional<std::uint32_t> distance(const ActionGraph& g, Vertex p, Vertex q) {
  auto adjacency = build_adjacency(g);
  auto dist = bfs_distances(g, adjacency, p);
  if (dist[q] == kUnreachable) return std::nullopt;
  return dist[q];
}

Vertex edge_step_target(const ActionGraph& g, const EdgeStep& step) {
  const Permutation& p = g.perm(step.label.factor, step.label.element);
  return step.forward ? p(step.from) : p.inverse()(step.from);
}

Word path_label(const ActionGraph& g, std::span<const EdgeStep> steps) {
  std::vector<Syllable> raw;
  raw.reserve(steps.size());
  std::optional<Vertex> expected;
  for (const EdgeStep& step : steps) {
    if (expected && *expected != step.from)
      throw std::invalid_argument("disconnected step sequence: step starts at " +
                                  std::to_string(step.from) + ", previous ended at " +
                                  std::to_string(*expected));
    expected = edge_step_target(g, step);
    ElementIndex e = step.forward
                         ? step.label.element
                         : g.groups.factor(step.label.factor).inverse(step.label.element);
    raw.push_back({step.label.factor, e});
  }
  return g.groups.reduce(raw);
}

std::vector<UCycleRecord> enumerate_u_cycles(const ActionGraph& g, const Word& word) {
  if (!g.groups.is_cyclically_reduced(word) || word.length() < 2)
    throw std::invalid_argument("u-cycles require a cyclically reduced word of length >= 2");
  Permutation sigma = g.image_permutation(word);
  std::vector<bool> seen(g.vertex_count, false);
  std::vector<UCycleRecord> records;
  for (Vertex start = 0; start < g.vertex_count; ++start) {
    if (seen[start]) continue;
    std::uint64_t t = 0;
    for (Vertex v = start;;) {
      seen[v] = true;
      ++t;
      v = sigma(v);
      if (v == start) break;
    }
    UCycleRecord rec;
    rec.word = word;
    rec.start = start;
    rec.length = t;
    rec.edge_count = t * word.length();
    rec.vertices.reserve(rec.edge_count);
    Vertex v = start;
    for (std::uint64_t step = 0; step < rec.edge_count; ++step) {
      rec.vertices.push_back(v);
      v = g.act(v, word.syllables[step % word.length()]);
    }
    if (v != start) throw std::logic_error("u-cycle did not close");
    records.push_back(std::move(rec));
  }
  return records;
}

NearVertexResult has_l_near_vertices(const ActionGraph& g, const UCycleRecord& cycle,
                                     std::uint32_t l) {
  const std::size_t n = cycle.vertices.size();
  NearVertexResult result;
  if (n < 2) return result;
  auto adjacency = build_adjacency(g);
  const std::uint32_t cap = std::min<std::uint32_t>(l, static_cast<std::uint32_t>(n / 2));

  for (std::size_t i = 0; i < n && !result.found; ++i) {
    // truncated breadth-first search from position i with parent links
    std::vector<Vertex> dist(g.vertex_count, kUnreachable);
    std::vector<Vertex> parent(g.vertex_count, kUnreachable);
    std::deque<Vertex> queue{cycle.vertices[i]};
    dist[cycle.vertices[i]] = 0;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      if (dist[v] >= cap) continue;
      for (Vertex u : adjacency[v])
        if (dist[u] == kUnreachable) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          queue.push_back(u);
        }
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      std::uint32_t separation = static_cast<std::uint32_t>(
          std::min(j - i, n - (j - i)));
      std::uint32_t bound = std::min(l + 1, separation);
      std::uint32_t d = dist[cycle.vertices[j]];
      if (d < bound) {
        result.found = true;
        result.i = i;
        result.j = j;
        result.dist = d;
        result.bound = bound;
        for (Vertex v = cycle.vertices[j]; v != kUnreachable; v = parent[v])
          result.path.push_back(v);
        std::reverse(result.path.begin(), result.path.end());
        break;
      }
    }
  }
  return result;
}

namespace {

// coordinates of a free factor component: base * coord(v) = v
struct ComponentCoords {
  std::vector<ElementIndex> coord;  // indexed by vertex, valid inside the component
};

ComponentCoords component_coords(const ActionGraph& g, Factor f, const std::vector<Vertex>& orbit) {
  ComponentCoords coords;
  coords.coord.assign(g.vertex_count, 0);
  const FiniteGroup& grp = g.groups.factor(f);
  const auto& action = g.actions[factor_index(f)];
  Vertex base = orbit.front();
  std::vector<bool> known(g.vertex_count, false);
  known[base] = true;
  std::deque<Vertex> queue{base};
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (ElementIndex x = 1; x < grp.order(); ++x) {
      Vertex u = action[x](v);
      if (!known[u]) {
        known[u] = true;
        coords.coord[u] = grp.mul(coords.coord[v], x);
        queue.push_back(u);
      }
    }
  }
  return coords;
}

}  // namespace

GirthResult syllable_girth(const ActionGraph& g, std::uint32_t limit) {
  GirthResult result;
  // a fixed point of a nonidentity generator kills a one-syllable word
  for (Factor f : {Factor::A, Factor::B}) {
    const auto& action = g.actions[factor_index(f)];
    for (ElementIndex x = 1; x < action.size(); ++x)
      for (Vertex v = 0; v < g.vertex_count; ++v)
        if (action[x](v) == v) {
          result.girth = 1;
          result.witness.syllables = {{f, x}};
          result.base_vertex = v;
          return result;
        }
  }

  // free graph: shortest cycle in the component incidence multigraph
  OrbitPartition a_parts = factor_orbits(g, Factor::A);
  OrbitPartition b_parts = factor_orbits(g, Factor::B);
  const std::uint32_t na = static_cast<std::uint32_t>(a_parts.orbits.size());
  const std::uint32_t node_count = na + static_cast<std::uint32_t>(b_parts.orbits.size());

  // edge v connects node acomp(v) and node na + bcomp(v)
  std::vector<std::vector<std::pair<Vertex, std::uint32_t>>> adj(node_count);  // (edge, other)
  for (Vertex v = 0; v < g.vertex_count; ++v) {
    std::uint32_t an = a_parts.orbit_of[v];
    std::uint32_t bn = na + b_parts.orbit_of[v];
    adj[an].push_back({v, bn});
    adj[bn].push_back({v, an});
  }

  std::uint32_t best = kUnreachable;
  std::vector<Vertex> best_edges;  // cycle edges in order
  std::vector<std::uint32_t> best_nodes;

  std::vector<std::uint32_t> dist(node_count), parent_node(node_count);
  std::vector<Vertex> parent_edge(node_count);
  for (std::uint32_t s = 0; s < node_count; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    std::deque<std::uint32_t> queue{s};
    dist[s] = 0;
    parent_edge[s] = kUnreachable;
    parent_node[s] = kUnreachable;
    while (!queue.empty()) {
      std::uint32_t u = queue.front();
      queue.pop_front();
      if (best != kUnreachable && 2 * dist[u] + 1 >= best) break;
      for (auto [e, w] : adj[u]) {
        if (e == parent_edge[u]) continue;
        if (dist[w] == kUnreachable) {
          dist[w] = dist[u] + 1;
          parent_edge[w] = e;
          parent_node[w] = u;
          queue.push_back(w);
        } else {
          std::uint32_t candidate = dist[u] + dist[w] + 1;
          if (candidate < best) {
            best = candidate;
            // recover the closed node walk s..u, edge e, w..s
            std::vector<std::uint32_t> left, right;
            std::vector<Vertex> left_e, right_e;
            for (std::uint32_t x = u; x != kUnreachable; x = parent_node[x]) {
              left.push_back(x);
              if (parent_edge[x] != kUnreachable) left_e.push_back(parent_edge[x]);
            }
            for (std::uint32_t x = w; x != kUnreachable; x = parent_node[x]) {
              right.push_back(x);
              if (parent_edge[x] != kUnreachable) right_e.push_back(parent_edge[x]);
            }
            std::reverse(left.begin(), left.end());
            std::reverse(left_e.begin(), left_e.end());
            best_nodes = left;                      // s .. u
            best_edges = left_e;                    // edges along s..u
            best_edges.push_back(e);                // u - w
            best_nodes.push_back(w);
            if (right.size() >= 2)                  // interior of w .. s, both excluded
              best_nodes.insert(best_nodes.end(), right.begin() + 1, right.end() - 1);
            best_edges.insert(best_edges.end(), right_e.begin(), right_e.end());
          }
        }
      }
    }
  }

  if (best == kUnreachable) return result;  // forest: nothing dies

  // translate the cycle into a killed word: step i moves vertex edges[i-1] ->
  // edges[i] inside component nodes[i]
  const std::size_t len = best_edges.size();
  std::vector<ComponentCoords> coords_cache_a(a_parts.orbits.size());
  std::vector<ComponentCoords> coords_cache_b(b_parts.orbits.size());
  std::vector<bool> have_a(a_parts.orbits.size(), false), have_b(b_parts.orbits.size(), false);

  Word witness;
  for (std::size_t i = 0; i < len; ++i) {
    Vertex from = best_edges[(i + len - 1) % len];
    Vertex to = best_edges[i];
    std::uint32_t node = best_nodes[i];
    Factor f = node < na ? Factor::A : Factor::B;
    std::uint32_t comp = node < na ? node : node - na;
    auto& cache = f == Factor::A ? coords_cache_a : coords_cache_b;
    auto& have = f == Factor::A ? have_a : have_b;
    if (!have[comp]) {
      const auto& orbit = (f == Factor::A ? a_parts : b_parts).orbits[comp];
      cache[comp] = component_coords(g, f, orbit);
      have[comp] = true;
    }
    const FiniteGroup& grp = g.groups.factor(f);
    ElementIndex x = grp.mul(grp.inverse(cache[comp].coord[from]), cache[comp].coord[to]);
    if (x == 0) throw std::logic_error("girth cycle produced an identity syllable");
    witness.syllables.push_back({f, x});
  }
  Vertex start = best_edges[len - 1];
  if (!g.groups.is_reduced(witness.syllables) || g.act_word(start, witness) != start)
    throw std::logic_error("girth witness failed verification");

  result.girth = static_cast<std::uint32_t>(len);
  result.witness = witness;
  result.base_vertex = start;
  (void)limit;
  return result;
}

std::string to_dot(const ActionGraph& g) {
  std::ostringstream out;
  out << "digraph action_graph {\n";
  bool has_regions = g.region_of.size() == g.vertex_count && g.vertex_count > 0;
  if (has_regions) {
    std::uint32_t max_region = 0;
    for (Vertex v = 0; v < g.vertex_count; ++v)
      max_region = std::max(max_region, g.region_of[v]);
    for (std::uint32_t r = 0; r <= max_region; ++r) {
      out << "  subgraph cluster_" << r << " {\n    label=\"region " << r << "\";\n";
      for (Vertex v = 0; v < g.vertex_count; ++v)
        if (g.region_of[v] == r) out << "    \"" << g.vertex_name(v) << "\";\n";
      out << "  }\n";
    }
  } else {
    for (Vertex v = 0; v < g.vertex_count; ++v)
      out << "  \"" << g.vertex_name(v) << "\";\n";
  }
  for (Factor f : {Factor::A, Factor::B}) {
    const auto& action = g.actions[factor_index(f)];
    const FiniteGroup& grp = g.groups.factor(f);
    for (ElementIndex x = 1; x < action.size(); ++x)
      for (Vertex v = 0; v < g.vertex_count; ++v)
        out << "  \"" << g.vertex_name(v) << "\" -> \"" << g.vertex_name(action[x](v))
            << "\" [label=\"" << grp.element_name(x) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace freeprod
