#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pathcrystal/rational.hpp"

namespace pathcrystal {

/// Finite weight in the fundamental-weight basis: w = sum c_i * varpi_i.
/// Coordinates are exact rationals; c_i equals the pairing with the i-th
/// simple coroot.
struct Weight {
  std::vector<Rational> c;

  int rank() const { return static_cast<int>(c.size()); }
  bool is_zero() const {
    for (const auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_integral() const {
    for (const auto& x : c)
      if (!x.is_integer()) return false;
    return true;
  }
  bool is_dominant() const {
    for (const auto& x : c)
      if (x.sign() < 0) return false;
    return true;
  }

  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  friend Weight operator*(const Rational& s, const Weight& w);
  Weight operator-() const;

  friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
  /// Lexicographic order on coordinates; used only for deterministic output.
  friend bool operator<(const Weight& a, const Weight& b);

  size_t hash() const;
  std::string str() const;
};

struct WeightHash {
  size_t operator()(const Weight& w) const { return w.hash(); }
};

/// A positive root together with its coroot, both as integer coordinate
/// vectors in the simple-root / simple-coroot bases.
struct PositiveRoot {
  std::vector<long long> root;
  std::vector<long long> coroot;
  long long height() const {
    long long h = 0;
    for (long long k : root) h += k;
    return h;
  }
};

/// A reduced word in the simple reflections, stored as 1-based node indices.
/// The word [a, b, c] denotes the product s_a s_b s_c acting rightmost-first.
using WeylWord = std::vector<int>;

/// Symmetry of the extended Dynkin diagram attached to one minuscule node.
///
/// The full symmetry acts on level-l affine weights as the finite part
/// followed by the translation l * shift; node_perm records the induced
/// permutation of the affine diagram nodes {0..r}, with node_perm[node] == 0.
struct DiagramAut {
  int node = 0;                ///< minuscule node index (1-based)
  int order = 0;               ///< order of the symmetry
  std::vector<int> node_perm;  ///< image of each node 0..r
  WeylWord finite_word;        ///< reduced word for the finite Weyl part
  Weight shift;                ///< translation component, equals -varpi_node
};

/// Immutable Cartan data for one simple type. Construct with RootSystem::build;
/// all members are plain data safe for concurrent reads.
class RootSystem {
 public:
  /// Builds the root system for the given simple type, enumerating positive
  /// roots with their coroots and the minuscule-node symmetry tables.
  /// Throws std::invalid_argument for an invalid (type, rank) pair.
  static RootSystem build(char type_label, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }
  /// cartan()[i][j] = pairing of alpha_{j+1} with the coroot of alpha_{i+1}.
  const std::vector<std::vector<long long>>& cartan() const { return cartan_; }
  const std::vector<PositiveRoot>& positive_roots() const { return roots_; }
  const PositiveRoot& highest_root() const { return roots_[theta_index_]; }
  /// Coefficients of the highest root over the simple roots.
  const std::vector<long long>& marks() const { return marks_; }
  /// Coefficients of its coroot over the simple coroots.
  const std::vector<long long>& comarks() const { return comarks_; }
  /// Ratio mark/comark per node.
  const std::vector<Rational>& nu_factors() const { return nu_factors_; }
  /// Highest root expressed in the fundamental-weight basis.
  const Weight& highest_root_weight() const { return theta_weight_; }

  const std::vector<DiagramAut>& minuscule() const { return minuscule_; }
  std::vector<int> minuscule_nodes() const;
  /// The symmetry record for one minuscule node; throws if not minuscule.
  const DiagramAut& aut_for_node(int node) const;

  /// The i-th simple root as a weight (i-th column of the Cartan matrix).
  Weight simple_root_weight(int i) const;
  Weight fundamental_weight(int i) const;
  Weight zero_weight() const;
  /// Weight with all coordinates one.
  Weight rho() const;

 private:
  char type_ = '?';
  int rank_ = 0;
  std::vector<std::vector<long long>> cartan_;
  std::vector<PositiveRoot> roots_;
  int theta_index_ = -1;
  std::vector<long long> marks_;
  std::vector<long long> comarks_;
  std::vector<Rational> nu_factors_;
  Weight theta_weight_;
  std::vector<DiagramAut> minuscule_;
};

/// Pairing of a weight with a coroot given in simple-coroot coordinates.
Rational pair_coroot(const Weight& w, const std::vector<long long>& coroot);

/// Simple reflection s_i on a weight, 1 <= i <= rank.
Weight reflect_simple(const RootSystem& rs, int i, const Weight& w);

/// Applies a word of simple reflections, rightmost letter first.
Weight apply_word(const RootSystem& rs, const WeylWord& word, Weight w);

/// Greedily reflects w into the dominant cone of the parabolic generated by
/// allowed_nodes. Returns the dominant representative and the word applied,
/// in application order (first reflection first).
std::pair<Weight, WeylWord> raise_to_dominant(const RootSystem& rs, Weight w,
                                              const std::vector<int>& allowed_nodes);

/// Reduced word for the longest element of the parabolic subgroup generated
/// by allowed_nodes, in the left-to-right product convention of WeylWord.
WeylWord longest_word(const RootSystem& rs, const std::vector<int>& allowed_nodes);

std::vector<int> all_nodes(const RootSystem& rs);
std::vector<int> all_nodes_except(const RootSystem& rs, int excluded);

/// Reduced word for the element sending w to its dominant representative,
/// i.e. the inverse of raise_to_dominant's word; requires a regular orbit
/// only when uniqueness matters to the caller.
WeylWord reduced_word_from_action(const RootSystem& rs, const Weight& image_of_rho);

/// -w0(w) for dominant w; throws std::invalid_argument otherwise.
Weight dual_weight(const RootSystem& rs, const Weight& w);

/// Node index j with dual_weight(varpi_i) == varpi_j.
int dual_node(const RootSystem& rs, int i);

/// Dimension of the irreducible module of highest weight w, by the product
/// formula over positive roots. Exact; throws on non-dominant or
/// non-integral input and on 64-bit overflow.
long long weyl_dimension(const RootSystem& rs, const Weight& w);

/// Covering relation tau_lower < tau_upper in the orbit order, witnessed by
/// tau_lower = tau_upper - d * alpha for the recorded positive root.
struct OrbitCover {
  int lower = 0;
  int upper = 0;
  int root_index = 0;
  long long d = 0;
};

struct OrbitWithCovers {
  std::vector<Weight> orbit;  ///< full Weyl orbit, sorted for determinism
  std::vector<OrbitCover> covers;
};

/// Weyl orbit of a dominant weight with all covering pairs of the orbit
/// partial order, each annotated with its positive root and multiple d.
OrbitWithCovers orbit_and_covers(const RootSystem& rs, const Weight& w);

}  // namespace pathcrystal
