#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "helpers.hpp"
#include "pathcrystal/serialize.hpp"

using namespace pathcrystal;
using namespace testutil;

namespace {

// Independent oracle: enumerate positive roots by height with the string
// property (beta + alpha_i is a root iff the i-string through beta extends),
// and recompute coroots from the symmetrized bilinear form. This route never
// touches the library's reflection-orbit enumeration.
struct RootOracle {
  std::set<std::vector<long long>> roots;
  std::map<std::vector<long long>, std::vector<long long>> coroots;

  explicit RootOracle(const RootSystem& rs) {
    int r = rs.rank();
    const auto& a = rs.cartan();
    // Symmetrizer: d[i] with a[i][j]*d[i] == a[j][i]*d[j], smallest integers.
    std::vector<long long> d(r, 0);
    d[0] = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
          if (a[i][j] == 0 || d[i] == 0 || d[j] != 0) continue;
          // a[i][j] d[i] = a[j][i] d[j]
          long long num = a[i][j] * d[i];
          REQUIRE(num % a[j][i] == 0);
          d[j] = num / a[j][i];
          grew = true;
        }
      }
    }
    long long scale = 1;
    for (int i = 0; i < r; ++i) scale = std::lcm(scale, d[i] > 0 ? d[i] : 1);
    (void)scale;

    for (int i = 0; i < r; ++i) {
      std::vector<long long> e(r, 0);
      e[i] = 1;
      roots.insert(e);
    }
    bool added = true;
    while (added) {
      added = false;
      for (const auto& beta : std::set<std::vector<long long>>(roots)) {
        for (int i = 0; i < r; ++i) {
          long long n = 0;
          for (int j = 0; j < r; ++j) n += beta[j] * a[i][j];
          long long p = 0;
          auto probe = beta;
          for (;;) {
            probe[i] -= 1;
            bool nonneg = true, zero = true;
            for (long long x : probe) {
              if (x < 0) nonneg = false;
              if (x != 0) zero = false;
            }
            if (zero || (nonneg && roots.count(probe)))
              ++p;
            else
              break;
          }
          if (p - n > 0) {
            auto up = beta;
            up[i] += 1;
            if (roots.insert(up).second) added = true;
          }
        }
      }
    }
    for (const auto& beta : roots) {
      // (beta,beta)/2 via the Gram matrix g[i][j] = a[i][j]*d[i].
      long long norm2 = 0;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) norm2 += beta[i] * beta[j] * a[i][j] * d[i];
      std::vector<long long> co(r);
      for (int i = 0; i < r; ++i) {
        long long num = 2 * beta[i] * d[i];
        REQUIRE(num % norm2 == 0);
        co[i] = num / norm2;
      }
      coroots[beta] = co;
    }
  }
};

const std::vector<std::pair<char, int>> kAllTypes = {
    {'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 4},
    {'C', 2}, {'C', 3}, {'C', 4}, {'D', 4}, {'D', 5}, {'E', 6}, {'E', 7},
    {'E', 8}, {'F', 4}, {'G', 2}};

size_t classical_count(char t, int r) {
  switch (t) {
    case 'A': return r * (r + 1) / 2;
    case 'B':
    case 'C': return r * r;
    case 'D': return r * (r - 1);
    case 'E': return r == 6 ? 36 : r == 7 ? 63 : 120;
    case 'F': return 24;
    default: return 6;
  }
}

}  // namespace

TEST_CASE("invalid type/rank pairs are rejected") {
  CHECK_THROWS_AS(RootSystem::build('A', 0), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('B', 1), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('D', 3), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('E', 9), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('F', 3), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('G', 3), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('H', 2), std::invalid_argument);
}

TEST_CASE("defining data of small types") {
  auto a1 = RootSystem::build('A', 1);
  CHECK(a1.positive_roots().size() == 1);
  CHECK(a1.marks() == std::vector<long long>{1});
  CHECK(a1.highest_root_weight() == wt({2}));

  auto a2 = RootSystem::build('A', 2);
  CHECK(a2.cartan() == std::vector<std::vector<long long>>{{2, -1}, {-1, 2}});
  CHECK(a2.positive_roots().size() == 3);
  CHECK(a2.marks() == std::vector<long long>{1, 1});

  auto e6 = RootSystem::build('E', 6);
  CHECK(e6.positive_roots().size() == 36);
  CHECK(e6.marks() == std::vector<long long>{1, 2, 2, 3, 2, 1});
}

TEST_CASE("positive roots and coroots match the string-method oracle") {
  for (auto [t, r] : kAllTypes) {
    CAPTURE(t);
    CAPTURE(r);
    auto rs = RootSystem::build(t, r);
    RootOracle oracle(rs);
    CHECK(rs.positive_roots().size() == classical_count(t, r));
    CHECK(oracle.roots.size() == rs.positive_roots().size());
    for (const auto& pr : rs.positive_roots()) {
      REQUIRE(oracle.roots.count(pr.root) == 1);
      CHECK(oracle.coroots.at(pr.root) == pr.coroot);
    }
    // Highest root dominates and carries the marks.
    const auto& theta = rs.highest_root();
    CHECK(theta.root == rs.marks());
    CHECK(theta.coroot == rs.comarks());
    CHECK(rs.highest_root_weight().is_dominant());
    // a_i = <theta, varpi_i^vee>: the i-th coefficient of theta.
    for (int i = 0; i < r; ++i) CHECK(rs.marks()[i] == theta.root[i]);
  }
}

TEST_CASE("pair_coroot") {
  auto a2 = RootSystem::build('A', 2);
  CHECK(pair_coroot(wt({1, 0}), {1, 0}) == Rational(1));
  CHECK(pair_coroot(wt({1, 0}), a2.highest_root().coroot) == Rational(1));
  CHECK(pair_coroot(wt({1, 1}), a2.highest_root().coroot) == Rational(2));
  CHECK_THROWS_AS(pair_coroot(wt({1}), {1, 0}), std::invalid_argument);
}

TEST_CASE("reflect_simple") {
  auto a1 = RootSystem::build('A', 1);
  CHECK(reflect_simple(a1, 1, wt({1})) == wt({-1}));
  auto a2 = RootSystem::build('A', 2);
  CHECK(reflect_simple(a2, 1, wt({1, 0})) == wt({-1, 1}));
  CHECK(reflect_simple(a2, 2, wt({1, 0})) == wt({1, 0}));
  // involution on a sample of weights
  for (long long x = -2; x <= 2; ++x)
    for (long long y = -2; y <= 2; ++y)
      for (int i = 1; i <= 2; ++i)
        CHECK(reflect_simple(a2, i, reflect_simple(a2, i, wt({x, y}))) == wt({x, y}));
}

TEST_CASE("raise_to_dominant") {
  auto a1 = RootSystem::build('A', 1);
  auto [d1, w1] = raise_to_dominant(a1, wt({-1}), {1});
  CHECK(d1 == wt({1}));
  CHECK(w1 == WeylWord{1});

  auto a2 = RootSystem::build('A', 2);
  auto [d2, w2] = raise_to_dominant(a2, wt({-1, -1}), {1, 2});
  CHECK(d2 == wt({1, 1}));
  CHECK(w2.size() == 3);

  auto [d3, w3] = raise_to_dominant(a2, wt({1, 0}), {2});
  CHECK(d3 == wt({1, 0}));
  CHECK(w3.empty());
}

TEST_CASE("longest_word lengths") {
  auto a1 = RootSystem::build('A', 1);
  CHECK(longest_word(a1, {1}) == WeylWord{1});
  auto a2 = RootSystem::build('A', 2);
  CHECK(longest_word(a2, {1, 2}).size() == 3);
  auto e6 = RootSystem::build('E', 6);
  CHECK(longest_word(e6, {2, 3, 4, 5, 6}).size() == 20);
  CHECK(longest_word(e6, all_nodes(e6)).size() == 36);
}

TEST_CASE("minuscule tables") {
  auto a1 = RootSystem::build('A', 1);
  REQUIRE(a1.minuscule_nodes() == std::vector<int>{1});
  CHECK(a1.aut_for_node(1).order == 2);

  auto e6 = RootSystem::build('E', 6);
  CHECK(e6.minuscule_nodes() == std::vector<int>{1, 6});
  CHECK(e6.aut_for_node(1).order == 3);
  CHECK(e6.aut_for_node(1).node_perm[1] == 0);

  CHECK(RootSystem::build('F', 4).minuscule_nodes().empty());
  CHECK(RootSystem::build('G', 2).minuscule_nodes().empty());
  CHECK(RootSystem::build('E', 8).minuscule_nodes().empty());

  CHECK(RootSystem::build('B', 3).minuscule_nodes() == std::vector<int>{1});
  CHECK(RootSystem::build('C', 3).minuscule_nodes() == std::vector<int>{3});
  CHECK(RootSystem::build('D', 4).minuscule_nodes() == std::vector<int>{1, 3, 4});
  auto a3 = RootSystem::build('A', 3);
  CHECK(a3.minuscule_nodes() == std::vector<int>{1, 2, 3});
  CHECK(a3.aut_for_node(1).order == 4);
  CHECK(a3.aut_for_node(2).order == 2);
}

TEST_CASE("minuscule definition: root coefficients are 0 or 1") {
  for (auto [t, r] : kAllTypes) {
    auto rs = RootSystem::build(t, r);
    for (int i = 1; i <= r; ++i) {
      bool zero_one = true;
      for (const auto& pr : rs.positive_roots())
        if (pr.root[i - 1] != 0 && pr.root[i - 1] != 1) zero_one = false;
      bool minuscule = rs.marks()[i - 1] == 1;
      CHECK(zero_one == minuscule);
    }
  }
}

TEST_CASE("node permutation is an automorphism of the affine Cartan matrix") {
  for (auto [t, r] : kAllTypes) {
    auto rs = RootSystem::build(t, r);
    // Affine matrix rows/cols 0..r with the 0-th built from the highest root.
    auto entry = [&](int i, int j) -> long long {
      if (i >= 1 && j >= 1) return rs.cartan()[i - 1][j - 1];
      if (i == 0 && j == 0) return 2;
      if (i == 0) {
        // <alpha_j, alpha_0^vee> = -<alpha_j, theta^vee>
        long long s = 0;
        for (int k = 0; k < rs.rank(); ++k)
          s += rs.highest_root().coroot[k] * rs.cartan()[k][j - 1];
        return -s;
      }
      // j == 0: <-theta, alpha_i^vee>
      return -rs.highest_root_weight().c[i - 1].num();
    };
    for (const auto& aut : rs.minuscule()) {
      for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= r; ++j)
          CHECK(entry(aut.node_perm[i], aut.node_perm[j]) == entry(i, j));
    }
  }
}

TEST_CASE("dual weights") {
  auto a2 = RootSystem::build('A', 2);
  CHECK(dual_weight(a2, wt({1, 0})) == wt({0, 1}));
  CHECK(dual_node(a2, 1) == 2);
  auto a1 = RootSystem::build('A', 1);
  CHECK(dual_weight(a1, wt({1})) == wt({1}));
  auto e6 = RootSystem::build('E', 6);
  CHECK(dual_node(e6, 1) == 6);
  // involution
  for (auto [t, r] : kAllTypes) {
    auto rs = RootSystem::build(t, r);
    for (int i = 1; i <= r; ++i) {
      Weight w = rs.fundamental_weight(i);
      CHECK(dual_weight(rs, dual_weight(rs, w)) == w);
      CHECK(dual_weight(rs, w).is_dominant());
    }
  }
  CHECK_THROWS_AS(dual_weight(a2, wt({-1, 0})), std::invalid_argument);
}

TEST_CASE("weyl_dimension") {
  auto a2 = RootSystem::build('A', 2);
  CHECK(weyl_dimension(a2, wt({1, 0})) == 3);
  CHECK(weyl_dimension(a2, wt({0, 0})) == 1);
  CHECK(weyl_dimension(a2, wt({1, 1})) == 8);
  auto a1 = RootSystem::build('A', 1);
  for (long long k = 0; k <= 6; ++k) CHECK(weyl_dimension(a1, wt({k})) == k + 1);
  auto e6 = RootSystem::build('E', 6);
  CHECK(weyl_dimension(e6, wt({1, 0, 0, 0, 0, 0})) == 27);
  CHECK(weyl_dimension(e6, wt({0, 0, 0, 0, 0, 1})) == 27);
  auto b2 = RootSystem::build('B', 2);
  CHECK(weyl_dimension(b2, wt({1, 0})) == 5);
  CHECK(weyl_dimension(b2, wt({0, 1})) == 4);
  auto c2 = RootSystem::build('C', 2);
  CHECK(weyl_dimension(c2, wt({1, 0})) == 4);
  CHECK(weyl_dimension(c2, wt({0, 1})) == 5);
  auto g2 = RootSystem::build('G', 2);
  CHECK(weyl_dimension(g2, wt({1, 0})) == 7);
  CHECK(weyl_dimension(g2, wt({0, 1})) == 14);
  auto d4 = RootSystem::build('D', 4);
  CHECK(weyl_dimension(d4, wt({0, 1, 0, 0})) == 28);
  CHECK_THROWS_AS(weyl_dimension(a2, wt({-1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(weyl_dimension(a2, wtq({"1/2", "0"})), std::invalid_argument);
}

TEST_CASE("orbit_and_covers") {
  auto a2 = RootSystem::build('A', 2);
  auto oc = orbit_and_covers(a2, wt({1, 0}));
  CHECK(oc.orbit.size() == 3);
  CHECK(oc.covers.size() == 2);
  for (const auto& cv : oc.covers) CHECK(cv.d == 1);

  auto zero = orbit_and_covers(a2, wt({0, 0}));
  CHECK(zero.orbit.size() == 1);
  CHECK(zero.covers.empty());

  auto rho_orbit = orbit_and_covers(a2, wt({1, 1}));
  CHECK(rho_orbit.orbit.size() == 6);

  auto e6 = RootSystem::build('E', 6);
  CHECK(orbit_and_covers(e6, e6.fundamental_weight(1)).orbit.size() == 27);
}

TEST_CASE("orbit covers against brute force in rank 2") {
  // Brute-force oracle: relations from every positive root, order by
  // transitive closure over the full orbit, covers as minimal relations.
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'C', 2}}) {
    auto rs = RootSystem::build(t, r);
    Weight lam = wt({1, 1});
    auto oc = orbit_and_covers(rs, lam);
    auto& orb = oc.orbit;
    size_t n = orb.size();
    std::vector<std::vector<char>> lt(n, std::vector<char>(n, 0));
    for (size_t u = 0; u < n; ++u)
      for (size_t v = 0; v < n; ++v) {
        if (u == v) continue;
        for (const auto& pr : rs.positive_roots()) {
          Rational d = pair_coroot(orb[v], pr.coroot);
          if (d.sign() <= 0) continue;
          Weight alpha = rs.zero_weight();
          for (int k = 0; k < rs.rank(); ++k)
            alpha = alpha + Rational(pr.root[k]) * rs.simple_root_weight(k + 1);
          if (orb[v] - d * alpha == orb[u]) lt[u][v] = 1;
        }
      }
    for (size_t k = 0; k < n; ++k)
      for (size_t u = 0; u < n; ++u)
        for (size_t v = 0; v < n; ++v)
          if (lt[u][k] && lt[k][v]) lt[u][v] = 1;
    std::set<std::pair<int, int>> expected;
    for (size_t u = 0; u < n; ++u)
      for (size_t v = 0; v < n; ++v) {
        if (!lt[u][v]) continue;
        bool cover = true;
        for (size_t m = 0; m < n; ++m)
          if (lt[u][m] && lt[m][v]) cover = false;
        if (cover) expected.insert({static_cast<int>(u), static_cast<int>(v)});
      }
    std::set<std::pair<int, int>> got;
    for (const auto& cv : oc.covers) got.insert({cv.lower, cv.upper});
    CHECK(got == expected);
  }
}

TEST_CASE("Stembridge cover property at minuscule nodes") {
  for (auto [t, r] : std::vector<std::pair<char, int>>{
           {'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}, {'E', 6}}) {
    auto rs = RootSystem::build(t, r);
    for (int node : rs.minuscule_nodes()) {
      auto oc = orbit_and_covers(rs, rs.fundamental_weight(node));
      for (const auto& cv : oc.covers) {
        CAPTURE(t);
        CAPTURE(node);
        CHECK(rs.positive_roots()[cv.root_index].height() == 1);
      }
    }
  }
}

TEST_CASE("short-coroot pairings at minuscule nodes of B and C") {
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'B', 2}, {'B', 3}, {'C', 3}}) {
    auto rs = RootSystem::build(t, r);
    RootOracle oracle(rs);
    // Norm of a coroot in the dual system: shorter coroots come from longer
    // roots; compute both norms from the oracle's Gram data.
    for (int node : rs.minuscule_nodes()) {
      Weight varpi = rs.fundamental_weight(node);
      // alpha_node^vee must be short in the dual system: its root is long.
      long long max_norm = 0;
      std::map<std::vector<long long>, long long> norm2;
      const auto& a = rs.cartan();
      std::vector<long long> d(rs.rank(), 0);
      d[0] = 1;
      bool grew = true;
      while (grew) {
        grew = false;
        for (int i = 0; i < rs.rank(); ++i)
          for (int j = 0; j < rs.rank(); ++j)
            if (a[i][j] != 0 && d[i] != 0 && d[j] == 0) {
              d[j] = a[i][j] * d[i] / a[j][i];
              grew = true;
            }
      }
      for (const auto& pr : rs.positive_roots()) {
        long long n2 = 0;
        for (int i = 0; i < rs.rank(); ++i)
          for (int j = 0; j < rs.rank(); ++j)
            n2 += pr.root[i] * pr.root[j] * a[i][j] * d[i];
        norm2[pr.root] = n2;
        max_norm = std::max(max_norm, n2);
      }
      std::vector<long long> enode(rs.rank(), 0);
      enode[node - 1] = 1;
      CHECK(norm2[enode] == max_norm);  // long root, hence short coroot
      for (const auto& pr : rs.positive_roots()) {
        if (norm2[pr.root] == max_norm) {  // short coroot in the dual system
          Rational p = pair_coroot(varpi, pr.coroot);
          CHECK((p == Rational(0) || p == Rational(1)));
        }
      }
    }
  }
}

TEST_CASE("json summary round trip") {
  auto e6 = RootSystem::build('E', 6);
  std::string js = root_system_to_json(e6);
  CHECK(js.find("\"type\": \"E\"") != std::string::npos);
  CHECK(js.find("\"rank\": 6") != std::string::npos);
  CHECK(js.find("minuscule_nodes") != std::string::npos);
}
