#include "freeprod/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace freeprod {

Word rotate_left(const Word& w, std::size_t amount) {
  if (w.empty()) return w;
  amount %= w.length();
  Word out;
  out.syllables.reserve(w.length());
  for (std::size_t i = 0; i < w.length(); ++i)
    out.syllables.push_back(w.syllables[(i + amount) % w.length()]);
  return out;
}

Word FreeProduct::reduce(std::span<const Syllable> raw) const {
  Word out;
  for (const Syllable& s : raw) {
    if (s.element >= factor(s.factor).order())
      throw std::invalid_argument("syllable element index out of range for factor " +
                                  factor(s.factor).name);
    if (s.element == 0) continue;
    if (!out.empty() && out.syllables.back().factor == s.factor) {
      ElementIndex merged = factor(s.factor).mul(out.syllables.back().element, s.element);
      out.syllables.pop_back();
      if (merged != 0) {
        // re-push; the merged syllable cannot merge further because the
        // previous neighbour is from the other factor
        out.syllables.push_back({s.factor, merged});
      }
    } else {
      out.syllables.push_back(s);
    }
  }
  return out;
}

Word FreeProduct::concat(const Word& x, const Word& y) const {
  std::vector<Syllable> raw;
  raw.reserve(x.length() + y.length());
  raw.insert(raw.end(), x.syllables.begin(), x.syllables.end());
  raw.insert(raw.end(), y.syllables.begin(), y.syllables.end());
  return reduce(raw);
}

Word FreeProduct::inverse(const Word& w) const {
  Word out;
  out.syllables.reserve(w.length());
  for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it)
    out.syllables.push_back({it->factor, factor(it->factor).inverse(it->element)});
  return out;
}

Word FreeProduct::conjugate(const Word& w, const Word& by) const {
  return concat(concat(inverse(by), w), by);
}

Word FreeProduct::power(const Word& w, std::uint32_t t) const {
  Word out;
  for (std::uint32_t i = 0; i < t; ++i) out = concat(out, w);
  return out;
}

bool FreeProduct::is_reduced(std::span<const Syllable> s) const {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].element == 0 || s[i].element >= factor(s[i].factor).order()) return false;
    if (i + 1 < s.size() && s[i].factor == s[i + 1].factor) return false;
  }
  return true;
}

bool FreeProduct::is_cyclically_reduced(const Word& w) const {
  if (!is_reduced(w.syllables)) return false;
  if (w.length() < 2) return true;
  return w.syllables.front().factor != w.syllables.back().factor;
}

CyclicWord FreeProduct::cyclic_reduce(const Word& w) const {
  Word rep = reduce(w);
  Word gamma;  // original == gamma * rep * gamma^-1
  while (rep.length() >= 2 && rep.syllables.front().factor == rep.syllables.back().factor) {
    Syllable s = rep.syllables.front();
    Word stripped;
    stripped.syllables.assign(rep.syllables.begin() + 1, rep.syllables.end());
    Word tail;
    tail.syllables.push_back(s);
    rep = concat(stripped, tail);
    gamma = concat(gamma, Word{{s}});
  }
  // canonical form: lexicographically least rotation
  if (rep.length() >= 2) {
    std::size_t best = 0;
    for (std::size_t r = 1; r < rep.length(); ++r) {
      if (rotate_left(rep, r) < rotate_left(rep, best)) best = r;
    }
    if (best != 0) {
      Word alpha;
      alpha.syllables.assign(rep.syllables.begin(), rep.syllables.begin() + best);
      rep = rotate_left(rep, best);
      gamma = concat(gamma, alpha);
    }
  }
  return {rep, inverse(gamma)};
}

std::size_t FreeProduct::cyclic_length(const Word& w) const {
  return cyclic_reduce(w).representative.length();
}

std::pair<Word, std::uint32_t> FreeProduct::root(const Word& w) const {
  if (!is_cyclically_reduced(w) || w.length() < 2)
    throw std::invalid_argument("root requires a cyclically reduced word of length >= 2");
  const std::size_t n = w.length();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i)
      if (w.syllables[i] != w.syllables[i % d]) periodic = false;
    if (periodic) {
      Word r;
      r.syllables.assign(w.syllables.begin(), w.syllables.begin() + d);
      return {r, static_cast<std::uint32_t>(n / d)};
    }
  }
  return {w, 1};
}

bool FreeProduct::factor_elements_conjugate(Factor f, ElementIndex x, ElementIndex y) const {
  const FiniteGroup& g = factor(f);
  for (ElementIndex c = 0; c < g.order(); ++c)
    if (g.mul(g.mul(g.inverse(c), x), c) == y) return true;
  return false;
}

bool FreeProduct::are_conjugate(const Word& w1, const Word& w2) const {
  CyclicWord c1 = cyclic_reduce(w1);
  CyclicWord c2 = cyclic_reduce(w2);
  const std::size_t l1 = c1.representative.length();
  const std::size_t l2 = c2.representative.length();
  if (l1 >= 2 || l2 >= 2) {
    // rotation criterion; both sides are canonical least rotations
    return c1.representative == c2.representative;
  }
  if (l1 != l2) return false;  // identity vs factor element
  if (l1 == 0) return true;
  const Syllable s1 = c1.representative.syllables[0];
  const Syllable s2 = c2.representative.syllables[0];
  if (s1.factor != s2.factor) return false;
  return factor_elements_conjugate(s1.factor, s1.element, s2.element);
}

bool FreeProduct::share_conjugate_cyclic_subgroup(const Word& w1, const Word& w2) const {
  CyclicWord c1 = cyclic_reduce(w1);
  CyclicWord c2 = cyclic_reduce(w2);
  if (c1.representative.length() < 2 || c2.representative.length() < 2)
    throw std::invalid_argument("share_conjugate_cyclic_subgroup requires cyclic length >= 2");
  Word r1 = root(c1.representative).first;
  Word r2 = root(c2.representative).first;
  return are_conjugate(r1, r2) || are_conjugate(r1, inverse(r2));
}

HypothesisReport FreeProduct::check_hypotheses(std::span<const Word> words) const {
  HypothesisReport report;
  std::vector<Word> reduced;
  for (const Word& w : words) {
    CyclicWord c = cyclic_reduce(w);
    report.cyclic_lengths.push_back(c.representative.length());
    reduced.push_back(c.representative);
  }
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    if (reduced[i].length() < 2)
      report.failures.push_back(
          {i, i,
           "word " + std::to_string(i + 1) + " has cyclic length " +
               std::to_string(reduced[i].length()) + "; it lies in a conjugate of a factor"});
  }
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    if (reduced[i].length() < 2) continue;
    for (std::size_t j = i + 1; j < reduced.size(); ++j) {
      if (reduced[j].length() < 2) continue;
      if (share_conjugate_cyclic_subgroup(reduced[i], reduced[j]))
        report.failures.push_back({i, j,
                                   "words " + std::to_string(i + 1) + " and " +
                                       std::to_string(j + 1) +
                                       " lie in conjugate cyclic subgroups (roots " +
                                       format_word(root(reduced[i]).first) + " ~ " +
                                       format_word(root(reduced[j]).first) + " up to inversion)"});
    }
  }
  report.pass = report.failures.empty();
  return report;
}

std::string FreeProduct::format_word(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) out += ' ';
    out += factor(w.syllables[i].factor).element_name(w.syllables[i].element);
  }
  return out;
}

}  // namespace freeprod
