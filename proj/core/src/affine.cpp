#include "pathcrystal/affine.hpp"

#include <algorithm>
#include <chrono>

namespace pathcrystal {

AffineWeight sigma_act(const RootSystem& rs, const DiagramAut& aut, int power,
                       const AffineWeight& w) {
  return twist_affine(rs, aut, power, w);
}

Path sigma_act(const RootSystem& rs, const DiagramAut& aut, int power, const Path& p) {
  std::vector<AffineWeight> steps = p.steps();
  for (auto& s : steps) s = twist_affine(rs, aut, power, s);
  return Path::of(std::move(steps));
}

PathSet sigma_act(const RootSystem& rs, const DiagramAut& aut, int power,
                  const PathSet& set) {
  PathSet out;
  for (const auto& p : set) out.insert(sigma_act(rs, aut, power, p));
  return out;
}

WeylWord translation_word(const RootSystem& rs, int node) {
  rs.aut_for_node(node);  // rejects non-minuscule nodes
  int dual = dual_node(rs, node);
  WeylWord w0 = longest_word(rs, all_nodes(rs));
  WeylWord wstab = longest_word(rs, all_nodes_except(rs, dual));
  Weight image = apply_word(rs, w0, apply_word(rs, wstab, rs.rho()));
  WeylWord word = reduced_word_from_action(rs, image);
  if (word.size() != w0.size() - wstab.size())
    throw std::logic_error("translation_word: length mismatch");
  return word;
}

std::vector<Path> winding_chain(const RootSystem& rs, const std::vector<int>& nodes) {
  std::vector<Path> chain;
  chain.push_back(Path::single(vacuum_weight(rs)));
  for (int node : nodes) {
    const DiagramAut& aut = rs.aut_for_node(node);
    Weight dual = dual_weight(rs, rs.fundamental_weight(node));
    Path extended = concat(chain.back(), Path::single(level_zero(dual)));
    Path next = sigma_act(rs, aut, -1, extended);
    if (!(next.weight() == vacuum_weight(rs)))
      throw std::logic_error("winding_chain: seed weight drifted");
    if (!is_dominant(rs, next, /*affine=*/true))
      throw std::logic_error("winding_chain: seed left the chamber");
    chain.push_back(std::move(next));
  }
  return chain;
}

PathSet demazure_translation(const RootSystem& rs, const std::vector<int>& nodes,
                             const Path& seed, size_t budget,
                             const std::function<void(int, const PathSet&)>& stage_callback) {
  PathSet current{seed};
  for (int j = static_cast<int>(nodes.size()); j >= 1; --j) {
    const DiagramAut& aut = rs.aut_for_node(nodes[j - 1]);
    current = sigma_act(rs, aut, 1, current);
    current = demazure_generate(rs, current, translation_word(rs, nodes[j - 1]), budget);
    if (stage_callback) stage_callback(j, current);
  }
  return current;
}

PathSet prefixed_tensor(const RootSystem& rs, const std::vector<int>& nodes) {
  PathSet tails{Path::empty()};
  for (int node : nodes) {
    rs.aut_for_node(node);
    Weight dual = dual_weight(rs, rs.fundamental_weight(node));
    Crystal factor = highest_weight_crystal(rs, dual);
    PathSet fset(factor.nodes.begin(), factor.nodes.end());
    if (tails.size() == 1 && tails.count(Path::empty()))
      tails = std::move(fset);
    else
      tails = tensor_concat(rs, tails, fset);
  }
  PathSet out;
  Path head = Path::single(vacuum_weight(rs));
  for (const auto& t : tails) out.insert(concat(head, t));
  return out;
}

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

VerifyReport report_skeleton(const RootSystem& rs, int theorem,
                             const std::vector<int>& nodes) {
  VerifyReport r;
  r.theorem = theorem;
  r.type = rs.type();
  r.rank = rs.rank();
  r.nodes = nodes;
  return r;
}

}  // namespace

VerifyReport verify_path_product(const RootSystem& rs, const std::vector<int>& nodes,
                                 size_t budget) {
  VerifyReport rep = report_skeleton(rs, 3, nodes);
  Timer timer;
  try {
    Path seed = winding_chain(rs, nodes).back();
    PathSet lhs = demazure_translation(rs, nodes, seed, budget);
    PathSet rhs = prefixed_tensor(rs, nodes);
    rep.lhs_count = static_cast<long long>(lhs.size());
    rep.rhs_count = static_cast<long long>(rhs.size());
    rep.equal = lhs == rhs;
    for (const auto& p : lhs)
      if (is_dominant(rs, p, /*affine=*/true)) rep.dominant_paths.push_back(p);
    std::sort(rep.dominant_paths.begin(), rep.dominant_paths.end());
    bool unique_dominant = rep.dominant_paths.size() == 1 &&
                           rep.dominant_paths[0] == seed;
    if (!unique_dominant) rep.notes = "dominant path not unique or not the seed";
    rep.status = rep.equal && unique_dominant ? VerifyStatus::Pass : VerifyStatus::Fail;
  } catch (const BudgetExceeded& e) {
    rep.status = VerifyStatus::Inconclusive;
    rep.lhs_count = static_cast<long long>(e.visited);
    rep.notes = e.what();
  }
  rep.elapsed_ms = timer.ms();
  return rep;
}

VerifyReport verify_character_product(const RootSystem& rs,
                                      const std::vector<int>& nodes, size_t budget) {
  VerifyReport rep = report_skeleton(rs, 1, nodes);
  Timer timer;
  try {
    Path seed = winding_chain(rs, nodes).back();
    PathSet lhs = demazure_translation(rs, nodes, seed, budget);
    PathSet tails{Path::empty()};
    long long expected = 1;
    for (int node : nodes) {
      Weight dual = dual_weight(rs, rs.fundamental_weight(node));
      expected *= weyl_dimension(rs, dual);
      Crystal factor = highest_weight_crystal(rs, dual);
      PathSet fset(factor.nodes.begin(), factor.nodes.end());
      if (tails.size() == 1 && tails.count(Path::empty()))
        tails = std::move(fset);
      else
        tails = tensor_concat(rs, tails, fset);
    }
    CharacterData left = character_decompose(rs, lhs);
    CharacterData right = character_decompose(rs, tails);
    rep.lhs_count = left.total;
    rep.rhs_count = right.total;
    rep.decomposition = left.decomposition;
    rep.equal = left.weight_multiset == right.weight_multiset &&
                left.decomposition == right.decomposition &&
                left.total == expected && left.consistent && right.consistent;
    rep.status = rep.equal ? VerifyStatus::Pass : VerifyStatus::Fail;
    if (!rep.equal) rep.notes = "character data mismatch";
  } catch (const BudgetExceeded& e) {
    rep.status = VerifyStatus::Inconclusive;
    rep.notes = e.what();
  }
  rep.elapsed_ms = timer.ms();
  return rep;
}

}  // namespace pathcrystal
