#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "sqen/enumerate.hpp"
#include "sqen/graph.hpp"
#include "sqen/graph6.hpp"

using namespace sqen;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.vertex_count());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

// Brute-force isomorph-free count: dedupe all 2^C(n,2) labelled graphs on
// their canonical keys.  Independent oracle for the augmentation path.
std::set<std::uint64_t> all_canonical_keys(int n) {
  const int pairs = n * (n - 1) / 2;
  std::set<std::uint64_t> keys;
  for (std::uint64_t mask = 0; mask < (1ULL << pairs); ++mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++bit)
        if (mask >> bit & 1) g.add_edge(u, v);
    keys.insert(canonical_key(g));
  }
  return keys;
}

}  // namespace

TEST_CASE("canonical forms are isomorphism invariants") {
  const Graph k3 = make_complete(3);
  Graph p3 = make_path(3);
  CHECK(canonical_key(k3) != canonical_key(p3));
  CHECK(canonical_form(k3) != canonical_form(p3));

  std::mt19937_64 rng(5);
  for (const Graph& g :
       {make_kneser(5, 2), make_cycle(7), make_star(6), make_path(8)}) {
    std::vector<int> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    const std::uint64_t key = canonical_key(g);
    const std::string form = canonical_form(g);
    for (int rep = 0; rep < 20; ++rep) {
      std::shuffle(perm.begin(), perm.end(), rng);
      const Graph h = relabel(g, perm);
      CHECK(canonical_key(h) == key);
      CHECK(canonical_form(h) == form);
    }
  }

  // canonical_graph realizes the canonical key.
  const Graph cg = canonical_graph(make_kneser(5, 2));
  CHECK(canonical_key(cg) == canonical_key(make_kneser(5, 2)));
  CHECK(encode_graph6(cg) == canonical_form(make_kneser(5, 2)));

  CHECK_THROWS(canonical_key(Graph(11)));
}

TEST_CASE("C_5 is self-complementary") {
  const Graph c5 = make_cycle(5);
  CHECK(canonical_form(c5) == canonical_form(complement(c5)));
}

TEST_CASE("enumeration counts match the known sequence") {
  const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n)
    CHECK(enumerate_nonisomorphic(n).size() == expected[n - 1]);
  CHECK_THROWS(enumerate_nonisomorphic(0));
  CHECK_THROWS(enumerate_nonisomorphic(8));
}

TEST_CASE("augmentation agrees with the brute-force dedupe oracle, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    const std::set<std::uint64_t> oracle = all_canonical_keys(n);
    std::set<std::uint64_t> produced;
    for (const Graph& g : enumerate_nonisomorphic(n)) {
      CHECK(g.vertex_count() == n);
      produced.insert(canonical_key(g));
    }
    CHECK(produced == oracle);
  }
}

TEST_CASE("enumeration output is pairwise non-isomorphic for n = 7") {
  const auto graphs = enumerate_nonisomorphic(7);
  std::set<std::uint64_t> keys;
  for (const Graph& g : graphs) keys.insert(canonical_key(g));
  CHECK(keys.size() == graphs.size());
}
