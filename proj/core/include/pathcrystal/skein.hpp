#pragma once

#include <optional>

#include "pathcrystal/affine.hpp"

namespace pathcrystal {

/// Finitely presented semi-infinite path: an endpoint, an infinitely
/// repeated level-zero coil of weight zero, and a finite tail closest to the
/// endpoint. `expanded` counts coils already absorbed into the tail by
/// operators; it indexes truncations but does not affect value identity.
struct Skein {
  AffineWeight endpoint;
  Path coil;
  Path tail;
  long long expanded = 0;
};

/// Value equality: same endpoint and coil, and the same eventual step list
/// (tails compared after stripping leading whole coils).
bool skein_equal(const RootSystem& rs, const Skein& a, const Skein& b);
size_t skein_hash(const Skein& s);

/// The dominant level-zero coil of a minuscule node: the step sequence of
/// inverse twists of the dual fundamental weight. Checked to have weight
/// zero, to stay in the chamber, and to be the unique affine-dominant path
/// of the vacuum-prefixed tensor power.
Path dominant_coil(const RootSystem& rs, int node);

/// The dominant skein of the basic level-one crystal for a minuscule node.
Skein build_skein(const RootSystem& rs, int node);

/// Finite truncation listing k coils: makeweight head, the unabsorbed coils,
/// then the tail. Requires k >= expanded.
Path truncate(const RootSystem& rs, const Skein& s, long long k);

/// Crystal operators on skeins, realized on a truncation with one freshly
/// expanded coil. When the cut stays inside the tail the coil is shrunk
/// back; when it reaches into the fresh coil, the coil is absorbed. A cut
/// touching the presentation head violates the one-coil stabilization bound
/// and throws std::logic_error.
std::optional<Skein> skein_lower(const RootSystem& rs, const Skein& s, int i);
std::optional<Skein> skein_raise(const RootSystem& rs, const Skein& s, int i);

/// Diagram-symmetry twist of a skein (endpoint, coil and tail pointwise).
Skein sigma_act(const RootSystem& rs, const DiagramAut& aut, int power, const Skein& s);

/// Desk-scale checks of the semi-infinite model for one minuscule node:
///  (a) depth-bounded rooted bisimulation between the crystal balls grown
///      from the vacuum straight path and from the dominant skein;
///  (b) for m = 1..max_m, the translated Demazure crystal of m*N nodes
///      equals the m-coil truncations of the skein-side Demazure sweep;
///  (c) uniqueness of the affine-dominant path in the vacuum-prefixed
///      N-fold tensor crystal.
VerifyReport verify_skein_limit(const RootSystem& rs, int node, int depth,
                                int max_m = 2, size_t budget = 1000000);

}  // namespace pathcrystal
