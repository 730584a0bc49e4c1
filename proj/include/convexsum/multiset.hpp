#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace convexsum {

/// Subset of [k] as a bit mask (bit i-1 set <=> i in the subset).
using Subset = std::uint32_t;

/// Multiset of nonempty subsets, kept sorted so equal multisets compare equal.
using Multiset = std::vector<Subset>;

/// Sorts and drops empty subsets.
Multiset canonical(Multiset m);

bool nested(Subset s, Subset t);

/// Replaces the non-nested pair (i, j) by (s_i & s_j, s_i | s_j), dropping an
/// empty intersection.  Throws std::invalid_argument for a nested pair.
Multiset elementary_compression(const Multiset& m, std::size_t i, std::size_t j);

/// Lexicographically smallest index pair (i < j) that is not nested.
std::optional<std::pair<std::size_t, std::size_t>> first_non_nested_pair(const Multiset& m);

/// A^#: the j-th set holds the elements lying in at least j sets of A.
Multiset minimal_multiset(const Multiset& m);

/// Compression chain from m, always compressing the first non-nested pair;
/// ends at a multiset with every pair nested.
std::vector<Multiset> compression_chain(const Multiset& m);

/// sum over s of |s|^2; strictly increases under elementary compression.
long long square_weight(const Multiset& m);

/// True when `to` is reachable from `from` by elementary compressions
/// (including zero steps).
bool reachable(const Multiset& from, const Multiset& to);

}  // namespace convexsum
