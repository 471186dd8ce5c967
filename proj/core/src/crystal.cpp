#include "pathcrystal/crystal.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace pathcrystal {

bool Crystal::contains(const Path& p) const {
  return std::binary_search(nodes.begin(), nodes.end(), p);
}

Crystal closure(const RootSystem& rs, const std::vector<Path>& seeds,
                const std::vector<int>& index_set, ClosureOps ops, size_t budget) {
  PathSet seen;
  std::deque<Path> queue;
  for (const auto& s : seeds) {
    if (seen.insert(s).second) queue.push_back(s);
  }
  while (!queue.empty()) {
    Path cur = queue.front();
    queue.pop_front();
    for (int i : index_set) {
      auto lo = lower_f(rs, cur, i);
      if (lo && seen.insert(*lo).second) queue.push_back(*lo);
      if (ops == ClosureOps::LowerRaise) {
        auto hi = raise_e(rs, cur, i);
        if (hi && seen.insert(*hi).second) queue.push_back(*hi);
      }
      if (seen.size() > budget) throw BudgetExceeded("closure", seen.size());
    }
  }
  return finalize_crystal(rs, seen, seeds, index_set);
}

Crystal highest_weight_crystal(const RootSystem& rs, const Weight& lambda) {
  if (!lambda.is_dominant() || !lambda.is_integral())
    throw std::invalid_argument("highest_weight_crystal: need dominant integral weight");
  Path seed = Path::single(level_zero(lambda));
  return closure(rs, {seed}, finite_colors(rs), ClosureOps::LowerRaise);
}

PathSet demazure_generate(const RootSystem& rs, const PathSet& seeds,
                          const std::vector<int>& word, size_t budget) {
  PathSet current = seeds;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int i = *it;
    PathSet next;
    for (const auto& p : current) {
      Path walk = p;
      next.insert(walk);
      for (;;) {
        auto lo = lower_f(rs, walk, i);
        if (!lo) break;
        walk = *lo;
        if (!next.insert(walk).second) break;
        if (next.size() > budget) throw BudgetExceeded("demazure_generate", next.size());
      }
    }
    current = std::move(next);
  }
  return current;
}

PathSet demazure_generate(const RootSystem& rs, const Path& seed,
                          const std::vector<int>& word, size_t budget) {
  PathSet seeds{seed};
  return demazure_generate(rs, seeds, word, budget);
}

Crystal finalize_crystal(const RootSystem& rs, const PathSet& nodes,
                         std::vector<Path> seeds, std::vector<int> index_set) {
  Crystal c;
  c.nodes.assign(nodes.begin(), nodes.end());
  std::sort(c.nodes.begin(), c.nodes.end());
  c.seeds = std::move(seeds);
  c.index_set = std::move(index_set);
  std::unordered_map<Path, int, PathHash> id;
  for (size_t k = 0; k < c.nodes.size(); ++k) id[c.nodes[k]] = static_cast<int>(k);
  for (size_t k = 0; k < c.nodes.size(); ++k) {
    for (int i : c.index_set) {
      auto lo = lower_f(rs, c.nodes[k], i);
      if (lo) {
        auto it = id.find(*lo);
        if (it != id.end())
          c.edges.push_back({static_cast<int>(k), it->second, i, true});
      }
      auto hi = raise_e(rs, c.nodes[k], i);
      if (hi) {
        auto it = id.find(*hi);
        if (it != id.end())
          c.edges.push_back({static_cast<int>(k), it->second, i, false});
      }
    }
  }
  return c;
}

std::vector<Path> dominant_paths(const RootSystem& rs, const PathSet& nodes,
                                 const std::vector<int>& index_set) {
  std::vector<Path> out;
  for (const auto& p : nodes) {
    bool dom = true;
    for (int i : index_set) {
      if (raise_e(rs, p, i)) {
        dom = false;
        break;
      }
    }
    if (dom) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CharacterData character_decompose(const RootSystem& rs, const PathSet& nodes) {
  CharacterData data;
  data.total = static_cast<long long>(nodes.size());
  for (const auto& p : nodes) ++data.weight_multiset[p.weight().finite];
  std::map<Weight, long long> dec;
  for (const auto& p : dominant_paths(rs, nodes, finite_colors(rs)))
    ++dec[p.weight().finite];
  long long covered = 0;
  bool dims_ok = true;
  for (const auto& [w, mult] : dec) {
    data.decomposition.emplace_back(w, mult);
    if (w.is_dominant() && w.is_integral())
      covered += mult * weyl_dimension(rs, w);
    else
      dims_ok = false;
  }
  data.consistent = dims_ok && covered == data.total;
  return data;
}

PathSet ls_paths(const RootSystem& rs, const Weight& lambda, size_t budget) {
  if (!lambda.is_dominant() || !lambda.is_integral())
    throw std::invalid_argument("ls_paths: need dominant integral weight");
  auto oc = orbit_and_covers(rs, lambda);
  // covers grouped by upper endpoint: (lower index, multiple d)
  std::vector<std::vector<std::pair<int, long long>>> down(oc.orbit.size());
  for (const auto& cv : oc.covers) down[cv.upper].emplace_back(cv.lower, cv.d);
  for (auto& v : down) std::sort(v.begin(), v.end());

  PathSet out;
  size_t visited = 0;
  std::vector<int> chain;
  std::vector<Rational> cuts;

  auto emit = [&]() {
    std::vector<AffineWeight> steps;
    Rational prev(0);
    for (size_t j = 0; j < chain.size(); ++j) {
      Rational next = j < cuts.size() ? cuts[j] : Rational(1);
      steps.push_back(level_zero((next - prev) * oc.orbit[chain[j]]));
      prev = next;
    }
    out.insert(Path::of(std::move(steps)));
  };

  auto dfs = [&](auto&& self, int tail) -> void {
    if (++visited > budget) throw BudgetExceeded("ls_paths", out.size());
    emit();
    Rational lo = cuts.empty() ? Rational(0) : cuts.back();
    for (const auto& [lower, d] : down[tail]) {
      for (long long n = 1; n < d; ++n) {
        Rational a(n, d);
        if (a < lo || !(a < Rational(1))) continue;
        chain.push_back(lower);
        cuts.push_back(a);
        self(self, lower);
        chain.pop_back();
        cuts.pop_back();
      }
    }
  };

  for (size_t start = 0; start < oc.orbit.size(); ++start) {
    chain.assign(1, static_cast<int>(start));
    cuts.clear();
    dfs(dfs, static_cast<int>(start));
  }
  return out;
}

bool crystals_isomorphic(const RootSystem& rs, const PathSet& a, const PathSet& b,
                         const std::vector<int>& index_set) {
  auto doma = dominant_paths(rs, a, index_set);
  auto domb = dominant_paths(rs, b, index_set);
  if (doma.size() != 1 || domb.size() != 1)
    throw std::invalid_argument(
        "crystals_isomorphic: each side must have a single dominant element");
  if (a.size() != b.size()) return false;

  AffineWeight shift = doma[0].weight() - domb[0].weight();
  std::unordered_map<Path, Path, PathHash> fwd, bwd;
  std::deque<std::pair<Path, Path>> queue;
  fwd.emplace(doma[0], domb[0]);
  bwd.emplace(domb[0], doma[0]);
  queue.emplace_back(doma[0], domb[0]);

  auto try_pair = [&](const Path& pa, const Path& pb) {
    auto fit = fwd.find(pa);
    auto bit = bwd.find(pb);
    if (fit != fwd.end() || bit != bwd.end()) {
      return fit != fwd.end() && bit != bwd.end() && fit->second == pb &&
             bit->second == pa;
    }
    if (!(pa.weight() - pb.weight() == shift)) return false;
    fwd.emplace(pa, pb);
    bwd.emplace(pb, pa);
    queue.emplace_back(pa, pb);
    return true;
  };

  // Edges are those of the induced subgraphs, so targets outside the node
  // sets count as absent; this also bounds the traversal.
  while (!queue.empty()) {
    auto [pa, pb] = queue.front();
    queue.pop_front();
    for (int i : index_set) {
      auto la = lower_f(rs, pa, i);
      auto lb = lower_f(rs, pb, i);
      bool ia = la && a.count(*la), ib = lb && b.count(*lb);
      if (ia != ib) return false;
      if (ia && !try_pair(*la, *lb)) return false;
      auto ra = raise_e(rs, pa, i);
      auto rb = raise_e(rs, pb, i);
      ia = ra && a.count(*ra);
      ib = rb && b.count(*rb);
      if (ia != ib) return false;
      if (ia && !try_pair(*ra, *rb)) return false;
    }
  }
  return fwd.size() == a.size();
}

PathSet tensor_concat(const RootSystem& rs, const PathSet& a, const PathSet& b) {
  PathSet out;
  for (const auto& pa : a)
    for (const auto& pb : b) out.insert(concat(pa, pb));
  // The concatenation set must already be operator-closed.
  for (const auto& p : out) {
    for (int i : finite_colors(rs)) {
      auto lo = lower_f(rs, p, i);
      if (lo && !out.count(*lo))
        throw std::logic_error("tensor_concat: set not closed under lowering");
      auto hi = raise_e(rs, p, i);
      if (hi && !out.count(*hi))
        throw std::logic_error("tensor_concat: set not closed under raising");
    }
  }
  return out;
}

}  // namespace pathcrystal
