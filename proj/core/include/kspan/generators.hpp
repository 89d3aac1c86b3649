#pragma once

#include <cstdint>

#include "kspan/digraph.hpp"
#include "kspan/tournament.hpp"

namespace kspan {

/// Each pair i < j is oriented i -> j iff the top bit of the next
/// std::mt19937_64 draw (seeded with `seed`) is set; pairs in row-major order.
Tournament gen_random(int n, std::uint64_t seed);

/// Draws tournaments from one seeded stream until one is strongly
/// k-connected. Throws kNotFound after max_tries draws.
Tournament gen_k_connected(int n, int k, std::uint64_t seed, int max_tries = 1000);

/// Paley tournament on p vertices (p prime, p = 3 mod 4): i -> j iff j - i
/// is a nonzero square mod p.
Tournament paley(int p);

/// Random oriented graph with minimum total degree >= n-1-s, obtained from a
/// random tournament by deleting pairs while every vertex keeps at most s
/// missing pairs.
Digraph gen_oriented(int n, int s, std::uint64_t seed);

}  // namespace kspan
