#pragma once

#include <map>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "pathcrystal/path.hpp"

namespace pathcrystal {

using PathSet = std::unordered_set<Path, PathHash>;

/// Thrown when a generation routine hits its node budget; carries the number
/// of nodes discovered so far.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& where, size_t visited_count)
      : std::runtime_error(where + ": node budget exceeded after " +
                           std::to_string(visited_count) + " nodes"),
        visited(visited_count) {}
  size_t visited;
};

struct CrystalEdge {
  int from = 0;
  int to = 0;
  int color = 0;
  bool lowering = true;  ///< true for an f-edge, false for an e-edge
};

/// Finite edge-colored crystal on canonical paths. Nodes are sorted for
/// deterministic export; edges are those of the induced subgraph, so every
/// recorded target is again a node.
struct Crystal {
  std::vector<Path> nodes;
  std::vector<CrystalEdge> edges;
  std::vector<Path> seeds;
  std::vector<int> index_set;

  bool contains(const Path& p) const;
};

enum class ClosureOps { LowerOnly, LowerRaise };

inline std::vector<int> finite_colors(const RootSystem& rs) {
  std::vector<int> v;
  for (int i = 1; i <= rs.rank(); ++i) v.push_back(i);
  return v;
}
inline std::vector<int> affine_colors(const RootSystem& rs) {
  std::vector<int> v;
  for (int i = 0; i <= rs.rank(); ++i) v.push_back(i);
  return v;
}

/// Breadth-first operator closure of the seed paths. The node set is
/// independent of traversal order. Affine index sets generate infinite
/// crystals from positive-level seeds, so the budget is mandatory there;
/// exceeding it throws BudgetExceeded.
Crystal closure(const RootSystem& rs, const std::vector<Path>& seeds,
                const std::vector<int>& index_set, ClosureOps ops,
                size_t budget = 100000);

/// Closure of the straight-line path to a dominant integral weight:
/// the standard path model of the irreducible module.
Crystal highest_weight_crystal(const RootSystem& rs, const Weight& lambda);

/// Applies lowering strings along the word, rightmost letter first, from
/// every seed; returns all paths reached.
PathSet demazure_generate(const RootSystem& rs, const PathSet& seeds,
                          const std::vector<int>& word, size_t budget = 1000000);
PathSet demazure_generate(const RootSystem& rs, const Path& seed,
                          const std::vector<int>& word, size_t budget = 1000000);

/// Builds the sorted-node, induced-edge crystal over an arbitrary path set.
Crystal finalize_crystal(const RootSystem& rs, const PathSet& nodes,
                         std::vector<Path> seeds, std::vector<int> index_set);

/// Nodes on which every raising operator of the index set is undefined,
/// sorted canonically.
std::vector<Path> dominant_paths(const RootSystem& rs, const PathSet& nodes,
                                 const std::vector<int>& index_set);

/// Character data of a finite crystal, restricted to the finite algebra:
/// weight multiset of finite parts and the decomposition read off dominant
/// elements. `consistent` records whether multiplicity-weighted dimensions
/// add up to the node count.
struct CharacterData {
  std::map<Weight, long long> weight_multiset;
  std::vector<std::pair<Weight, long long>> decomposition;
  long long total = 0;
  bool consistent = false;
};

CharacterData character_decompose(const RootSystem& rs, const PathSet& nodes);

/// All Lakshmibai-Seshadri paths of shape lambda, enumerated from saturated
/// chains of the orbit order with admissible rational cuts. Serves as the
/// independent oracle for highest_weight_crystal.
PathSet ls_paths(const RootSystem& rs, const Weight& lambda, size_t budget = 2000000);

/// Rooted bisimulation test between two crystals, each generated from a
/// single dominant seed; weights must differ by one constant shift.
/// Throws std::invalid_argument when a side has multiple dominant elements.
bool crystals_isomorphic(const RootSystem& rs, const PathSet& a, const PathSet& b,
                         const std::vector<int>& index_set);

/// All pairwise concatenations; the result is checked to be operator-closed
/// for the finite colors.
PathSet tensor_concat(const RootSystem& rs, const PathSet& a, const PathSet& b);

}  // namespace pathcrystal
