#include "freeprod/group.hpp"

#include <numeric>
#include <stdexcept>

namespace freeprod {

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), Vertex{0});
  return p;
}

bool Permutation::is_bijection() const {
  std::vector<bool> seen(images.size(), false);
  for (Vertex v : images) {
    if (v >= images.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool Permutation::is_identity() const {
  for (std::size_t v = 0; v < images.size(); ++v)
    if (images[v] != v) return false;
  return true;
}

Permutation Permutation::then(const Permutation& next) const {
  Permutation out;
  out.images.resize(images.size());
  for (std::size_t v = 0; v < images.size(); ++v)
    out.images[v] = next.images[images[v]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images.resize(images.size());
  for (std::size_t v = 0; v < images.size(); ++v)
    out.images[images[v]] = static_cast<Vertex>(v);
  return out;
}

std::vector<std::uint64_t> Permutation::cycle_lengths() const {
  std::vector<bool> seen(images.size(), false);
  std::vector<std::uint64_t> lengths;
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    std::size_t v = start;
    do {
      seen[v] = true;
      v = images[v];
      ++len;
    } while (v != start);
    lengths.push_back(len);
  }
  return lengths;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (std::uint64_t len : cycle_lengths()) result = checked_lcm(result, len);
  return result;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > ~std::uint64_t{0} / a)
    throw std::overflow_error("64-bit overflow in multiplication");
  return a * b;
}

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

ElementIndex FiniteGroup::inverse(ElementIndex g) const {
  const auto& row = table[g];
  for (ElementIndex h = 0; h < row.size(); ++h)
    if (row[h] == 0) return h;
  throw std::logic_error("group table has no inverse for element " + std::to_string(g));
}

std::string FiniteGroup::element_name(ElementIndex x) const {
  if (x < element_names.size()) return element_names[x];
  return name + "[" + std::to_string(x) + "]";
}

GroupValidation validate_group(const FiniteGroup& g) {
  const std::size_t n = g.table.size();
  if (n == 0) throw std::invalid_argument("group table is empty");
  for (const auto& row : g.table)
    if (row.size() != n)
      throw std::invalid_argument("group table is not square: row size " +
                                  std::to_string(row.size()) + " vs order " + std::to_string(n));

  GroupValidation result;
  auto fail = [&](std::string law, ElementIndex a, ElementIndex b, ElementIndex c, std::string msg) {
    result.violations.push_back({std::move(law), a, b, c, std::move(msg)});
  };

  for (ElementIndex a = 0; a < n; ++a)
    for (ElementIndex b = 0; b < n; ++b)
      if (g.table[a][b] >= n)
        fail("entry-range", a, b, 0,
             "table[" + std::to_string(a) + "][" + std::to_string(b) + "] out of range");
  if (!result.violations.empty()) return result;

  for (ElementIndex a = 0; a < n; ++a) {
    if (g.table[0][a] != a) fail("identity", 0, a, 0, "table[0][g] != g");
    if (g.table[a][0] != a) fail("identity", a, 0, 0, "table[g][0] != g");
  }

  for (ElementIndex a = 0; a < n; ++a) {
    std::vector<bool> seen_row(n, false), seen_col(n, false);
    for (ElementIndex b = 0; b < n; ++b) {
      if (seen_row[g.table[a][b]])
        fail("row-permutation", a, b, 0, "row " + std::to_string(a) + " repeats an entry");
      seen_row[g.table[a][b]] = true;
      if (seen_col[g.table[b][a]])
        fail("column-permutation", a, b, 0, "column " + std::to_string(a) + " repeats an entry");
      seen_col[g.table[b][a]] = true;
    }
  }

  for (ElementIndex a = 0; a < n; ++a)
    for (ElementIndex b = 0; b < n; ++b)
      for (ElementIndex c = 0; c < n; ++c)
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]]) {
          fail("associativity", a, b, c,
               "(g*h)*k != g*(h*k) at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                   std::to_string(c) + ")");
          if (result.violations.size() > 16) {
            result.ok = false;
            return result;
          }
        }

  result.ok = result.violations.empty();
  return result;
}

std::uint64_t element_order(const FiniteGroup& g, ElementIndex x) {
  if (x >= g.order()) throw std::out_of_range("element index out of range");
  std::uint64_t t = 1;
  ElementIndex cur = x;
  while (cur != 0) {
    cur = g.mul(cur, x);
    ++t;
  }
  return t;
}

std::uint64_t perm_order(const Permutation& p) { return p.order(); }

std::vector<Permutation> regular_representation(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Permutation> rep(n);
  for (ElementIndex x = 0; x < n; ++x) {
    rep[x].images.resize(n);
    for (std::size_t v = 0; v < n; ++v) rep[x].images[v] = g.table[v][x];
  }
  return rep;
}

FiniteGroup cyclic_group(std::size_t n, const std::string& name, const std::string& generator_token) {
  FiniteGroup g;
  g.name = name;
  g.table.assign(n, std::vector<ElementIndex>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.table[a][b] = static_cast<ElementIndex>((a + b) % n);
  g.element_names.resize(n);
  g.element_names[0] = "e";
  for (std::size_t i = 1; i < n; ++i)
    g.element_names[i] = i == 1 ? generator_token : generator_token + std::to_string(i);
  return g;
}

}  // namespace freeprod
