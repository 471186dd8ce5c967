#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pathcrystal/root_system.hpp"

namespace pathcrystal {

/// Weight of the affine algebra modulo the imaginary-root direction:
/// finite part plus level * Lambda_0. The dropped delta-coordinate never
/// influences the operators, so it is not stored.
struct AffineWeight {
  Rational level;
  Weight finite;

  bool is_zero() const { return level.is_zero() && finite.is_zero(); }
  bool is_integral() const { return level.is_integer() && finite.is_integral(); }

  friend AffineWeight operator+(const AffineWeight& a, const AffineWeight& b) {
    return {a.level + b.level, a.finite + b.finite};
  }
  friend AffineWeight operator-(const AffineWeight& a, const AffineWeight& b) {
    return {a.level - b.level, a.finite - b.finite};
  }
  friend AffineWeight operator*(const Rational& s, const AffineWeight& w) {
    return {s * w.level, s * w.finite};
  }
  AffineWeight operator-() const { return {-level, -finite}; }
  friend bool operator==(const AffineWeight& a, const AffineWeight& b) {
    return a.level == b.level && a.finite == b.finite;
  }
  friend bool operator<(const AffineWeight& a, const AffineWeight& b) {
    if (!(a.level == b.level)) return a.level < b.level;
    return a.finite < b.finite;
  }
  size_t hash() const {
    return level.hash() * 0x100000001b3ULL ^ finite.hash();
  }
  std::string str() const { return level.str() + "|" + finite.str(); }
};

AffineWeight level_zero(Weight w);
/// Lambda_0 for the given root system (level one, zero finite part).
AffineWeight vacuum_weight(const RootSystem& rs);

/// Pairing of an affine weight with the i-th simple affine coroot,
/// i in 0..rank. For i = 0 this is level - <finite, theta^vee>.
Rational affine_pairing(const RootSystem& rs, const AffineWeight& w, int i);

/// Simple affine reflection s_i on a weight, i in 0..rank, taken modulo the
/// imaginary-root direction (the level never changes).
AffineWeight reflect_affine(const RootSystem& rs, int i, const AffineWeight& w);

/// Piecewise-linear path from the origin, stored as its sequence of step
/// vectors in canonical form: no zero steps, no two consecutive steps that
/// are positive multiples of each other. Value equality is equality of
/// canonical forms, which identifies reparametrizations.
class Path {
 public:
  Path() = default;
  /// Canonicalizes: drops zero steps and merges positively-parallel runs.
  static Path of(std::vector<AffineWeight> raw_steps);
  static Path single(AffineWeight step);
  static Path empty() { return Path(); }

  const std::vector<AffineWeight>& steps() const { return steps_; }
  size_t size() const { return steps_.size(); }
  bool is_empty() const { return steps_.empty(); }

  AffineWeight weight() const;

  friend bool operator==(const Path& a, const Path& b) { return a.steps_ == b.steps_; }
  friend bool operator<(const Path& a, const Path& b);
  size_t hash() const;
  std::string str() const;

 private:
  std::vector<AffineWeight> steps_;
};

struct PathHash {
  size_t operator()(const Path& p) const { return p.hash(); }
};

Path concat(const Path& a, const Path& b);

/// Breakpoints of the i-height function, parametrized over [0,1] with equal
/// time per canonical step: (t_j, h_j) pairs, h_0 = 0.
std::vector<std::pair<Rational, Rational>> height_profile(const RootSystem& rs,
                                                          const Path& p, int i);

/// Lowering operator for color i in 0..rank. Returns nullopt when undefined.
std::optional<Path> lower_f(const RootSystem& rs, const Path& p, int i);

/// Raising operator, the mirror rule of lower_f; inverse to it where defined.
std::optional<Path> raise_e(const RootSystem& rs, const Path& p, int i);

/// True when every height function stays nonnegative; indices 1..r, plus 0
/// when affine is set.
bool is_dominant(const RootSystem& rs, const Path& p, bool affine);

/// True when every step is an integral weight of integral level.
bool is_integral(const Path& p);

/// True when the i-height stays nonnegative and the endpoint pairing is zero.
bool is_neutral(const RootSystem& rs, const Path& p, int i);

/// Action of a power of a minuscule diagram symmetry on an affine weight:
/// level-scaled shift followed by the finite Weyl part (inverted order for
/// negative powers). Level-zero weights just see the finite part.
AffineWeight twist_affine(const RootSystem& rs, const DiagramAut& aut, int power,
                          AffineWeight w);

/// One generator of a pointwise linear action on paths: either a simple
/// (affine) reflection or a power of a minuscule diagram symmetry.
struct LinearGen {
  enum Kind { Reflection, Twist } kind = Reflection;
  int index = 0;  ///< reflection color 0..r, or minuscule node
  int power = 1;  ///< twist power (may be negative)
};

/// Applies generators rightmost-first to every step, then canonicalizes.
Path act_linear(const RootSystem& rs, const std::vector<LinearGen>& gens, const Path& p);

/// Pointwise action of a finite Weyl word on a path.
Path act_word(const RootSystem& rs, const WeylWord& word, const Path& p);

namespace detail {

/// Cut-and-reflect on a raw step list, parametrized by step index (step k
/// covers time [k, k+1]). Returns the transformed raw steps together with
/// the exact cut interval, without canonicalizing, so callers can reason
/// about which input region was touched.
struct RawCut {
  std::vector<AffineWeight> steps;
  Rational t0;
  Rational t1;
};

std::optional<RawCut> lower_cut(const RootSystem& rs,
                                const std::vector<AffineWeight>& raw, int i);
std::optional<RawCut> raise_cut(const RootSystem& rs,
                                const std::vector<AffineWeight>& raw, int i);

}  // namespace detail

}  // namespace pathcrystal
