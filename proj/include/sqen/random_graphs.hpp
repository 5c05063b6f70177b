#pragma once

// Seeded, platform-stable random graph samplers.
//
// Determinism contract.  All sampling uses std::mt19937_64, whose output
// sequence is fixed by the C++ standard, seeded directly with the caller's
// 64-bit seed.  sample_gnp visits vertex pairs in lexicographic order
// (0,1),(0,2),...,(0,n-1),(1,2),...,(n-2,n-1) and takes exactly one draw per
// pair; a pair becomes an edge iff (rng() >> 11) * 2^-53 < p.  Identical
// (n, p, seed) therefore reproduce the identical graph on any conforming
// platform.  Per-sample seeds for sweeps come from derive_sample_seed below,
// which is part of the reproducibility contract.

#include <cstdint>

#include "sqen/graph.hpp"

namespace sqen {

// SplitMix64 mixing step (Steele-Lea-Flood), used for seed derivation.
std::uint64_t splitmix64(std::uint64_t x);

// Normative per-sample seed derivation for experiment sweeps:
//   h = splitmix64(seed); h = splitmix64(h ^ bits(p)); h = splitmix64(h ^ index)
// where bits(p) is the IEEE-754 bit pattern of p.
std::uint64_t derive_sample_seed(std::uint64_t seed, std::uint64_t index,
                                 double p);

// Erdos-Renyi G(n,p).  Requires 0 <= p <= 1; p = 0 and p = 1 are exact.
Graph sample_gnp(int n, double p, std::uint64_t seed);

// Random maximal planar graph (planar triangulation) on n >= 3 vertices:
// start from K_3 (n = 3) or K_4, repeatedly insert a vertex into a uniformly
// chosen face joining it to that face's corners, then attempt `flips` random
// diagonal flips.  A flip of edge {u,v} with incident faces {u,v,a}, {u,v,b}
// replaces it by {a,b} and is skipped when {a,b} already exists, which keeps
// the triangulation simple (and thereby minimum degree >= 3 for n >= 5).
// Always returns a connected graph with m = 3(n-2) edges.
Graph generate_maximal_planar(int n, std::uint64_t seed, int flips);

}  // namespace sqen
