#include "kspan/generators.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

#include "kspan/connectivity.hpp"
#include "kspan/error.hpp"

namespace kspan {

namespace {

Tournament draw(int n, std::mt19937_64& rng) {
  Tournament t(n);
  for (std::size_t idx = 0; idx < t.pair_count(); ++idx) t.set_pair_bit(idx, (rng() >> 63) != 0);
  return t;
}

}  // namespace

Tournament gen_random(int n, std::uint64_t seed) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "n must be nonnegative");
  std::mt19937_64 rng(seed);
  return draw(n, rng);
}

Tournament gen_k_connected(int n, int k, std::uint64_t seed, int max_tries) {
  if (k < 1 || n < k + 1) throw Error(ErrorCode::kInvalidArgument, "gen_k_connected needs k >= 1 and n >= k+1");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    Tournament t = draw(n, rng);
    if (is_strongly_k_connected(t.to_digraph(), k)) return t;
  }
  std::ostringstream msg;
  msg << "no strongly " << k << "-connected tournament on " << n << " vertices in " << max_tries << " tries";
  throw Error(ErrorCode::kNotFound, msg.str());
}

Tournament paley(int p) {
  auto is_prime = [](int q) {
    if (q < 2) return false;
    for (int f = 2; f * f <= q; ++f)
      if (q % f == 0) return false;
    return true;
  };
  if (!is_prime(p) || p % 4 != 3) throw Error(ErrorCode::kInvalidArgument, "Paley order must be a prime = 3 mod 4");
  std::vector<char> square(static_cast<std::size_t>(p), 0);
  for (long long x = 1; x < p; ++x) square[static_cast<std::size_t>(x * x % p)] = 1;
  return Tournament::from_predicate(p, [&](Vertex u, Vertex v) { return square[(v - u + p) % p] != 0; });
}

Digraph gen_oriented(int n, int s, std::uint64_t seed) {
  if (n < 0 || s < 0) throw Error(ErrorCode::kInvalidArgument, "n and s must be nonnegative");
  std::mt19937_64 rng(seed);
  const Tournament t = draw(n, rng);
  std::vector<Arc> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::vector<int> missing(static_cast<std::size_t>(n), 0);
  std::vector<Arc> removed;
  for (const Arc& p : pairs) {
    if (missing[p.tail] >= s || missing[p.head] >= s) continue;
    if ((rng() >> 63) == 0) continue;
    ++missing[p.tail];
    ++missing[p.head];
    removed.push_back(t.beats(p.tail, p.head) ? p : Arc{p.head, p.tail});
  }
  return t.to_digraph().without_arcs(removed);
}

}  // namespace kspan
