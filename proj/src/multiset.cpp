#include "convexsum/multiset.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <stdexcept>

namespace convexsum {

Multiset canonical(Multiset m) {
  std::erase(m, Subset{0});
  std::sort(m.begin(), m.end());
  return m;
}

bool nested(Subset s, Subset t) { return (s & t) == s || (s & t) == t; }

Multiset elementary_compression(const Multiset& m, std::size_t i, std::size_t j) {
  if (i == j || i >= m.size() || j >= m.size()) throw std::invalid_argument("elementary_compression: bad indices");
  if (nested(m[i], m[j])) throw std::invalid_argument("elementary_compression: nested pair");
  Multiset out;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (k != i && k != j) out.push_back(m[k]);
  }
  out.push_back(m[i] & m[j]);
  out.push_back(m[i] | m[j]);
  return canonical(std::move(out));
}

std::optional<std::pair<std::size_t, std::size_t>> first_non_nested_pair(const Multiset& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!nested(m[i], m[j])) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

Multiset minimal_multiset(const Multiset& m) {
  int count[32] = {};
  for (Subset s : m) {
    for (int b = 0; b < 32; ++b) count[b] += (s >> b) & 1u;
  }
  Multiset out;
  for (std::size_t j = 1; j <= m.size(); ++j) {
    Subset s = 0;
    for (int b = 0; b < 32; ++b) {
      if (count[b] >= static_cast<int>(j)) s |= Subset{1} << b;
    }
    out.push_back(s);
  }
  return canonical(std::move(out));
}

std::vector<Multiset> compression_chain(const Multiset& m) {
  std::vector<Multiset> chain{canonical(m)};
  while (auto pair = first_non_nested_pair(chain.back())) {
    chain.push_back(elementary_compression(chain.back(), pair->first, pair->second));
  }
  return chain;
}

long long square_weight(const Multiset& m) {
  long long w = 0;
  for (Subset s : m) {
    const long long c = std::popcount(s);
    w += c * c;
  }
  return w;
}

bool reachable(const Multiset& from, const Multiset& to) {
  const Multiset start = canonical(from);
  const Multiset goal = canonical(to);
  if (minimal_multiset(start) != minimal_multiset(goal)) return false;
  const long long target = square_weight(goal);
  std::set<Multiset> seen{start};
  std::deque<Multiset> queue{start};
  while (!queue.empty()) {
    Multiset cur = std::move(queue.front());
    queue.pop_front();
    if (cur == goal) return true;
    if (square_weight(cur) >= target) continue;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        if (nested(cur[i], cur[j])) continue;
        Multiset next = elementary_compression(cur, i, j);
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }
  return false;
}

}  // namespace convexsum
