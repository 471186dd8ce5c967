#pragma once

#include <functional>

#include "pathcrystal/crystal.hpp"
#include "pathcrystal/report.hpp"

namespace pathcrystal {

/// Element of the extended affine Weyl action in the normal form
/// z = y * sigma^power: the twist acts on the argument first, then the
/// lowering strings of the word. Length of z is the word length.
struct TwistedWord {
  std::vector<int> word;  ///< reduced word of y over colors 0..r
  int twist_node = 0;     ///< minuscule node of the twist, 0 for none
  int twist_power = 0;

  size_t length() const { return word.size(); }
};

/// Power of the diagram symmetry of a minuscule node on weights and paths.
AffineWeight sigma_act(const RootSystem& rs, const DiagramAut& aut, int power,
                       const AffineWeight& w);
Path sigma_act(const RootSystem& rs, const DiagramAut& aut, int power, const Path& p);
PathSet sigma_act(const RootSystem& rs, const DiagramAut& aut, int power,
                  const PathSet& set);

/// Reduced word (finite colors) for the untwisted part of the anti-dominant
/// translation attached to a minuscule node: the long element times the long
/// element of the stabilizer of the node's dual fundamental weight.
WeylWord translation_word(const RootSystem& rs, int node);

/// The dominant seed paths of weight Lambda_0: element j is built from
/// element j-1 by appending the dual fundamental step and twisting back.
/// Every returned path is affine-dominant of weight Lambda_0 (checked).
/// Throws std::invalid_argument on a non-minuscule node.
std::vector<Path> winding_chain(const RootSystem& rs, const std::vector<int>& nodes);

/// Demazure generation for the translation by the sum of the given minuscule
/// coweights, applied to the seed: right-to-left per node, each stage twists
/// the current set and then runs the lowering strings of translation_word.
/// The optional callback observes the set after each stage (stage index m..1).
PathSet demazure_translation(
    const RootSystem& rs, const std::vector<int>& nodes, const Path& seed,
    size_t budget = 1000000,
    const std::function<void(int, const PathSet&)>& stage_callback = nullptr);

/// Lambda_0 prefixed to every concatenation of the dual fundamental crystals
/// of the given nodes; the right-hand side of the product identity.
PathSet prefixed_tensor(const RootSystem& rs, const std::vector<int>& nodes);

/// Set-level product identity: the translated Demazure crystal equals the
/// Lambda_0-prefixed tensor crystal. PASS iff exact set equality of
/// canonical forms; budget overruns yield INCONCLUSIVE with partial counts.
VerifyReport verify_path_product(const RootSystem& rs, const std::vector<int>& nodes,
                                 size_t budget = 1000000);

/// Character-level product identity: finite-restriction weight multiset and
/// irreducible decomposition of the translated Demazure crystal match the
/// tensor crystal, and the total equals the product of dimensions.
VerifyReport verify_character_product(const RootSystem& rs,
                                      const std::vector<int>& nodes,
                                      size_t budget = 1000000);

}  // namespace pathcrystal
