#include "pathcrystal/path.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathcrystal {

AffineWeight level_zero(Weight w) { return {Rational(0), std::move(w)}; }

AffineWeight vacuum_weight(const RootSystem& rs) {
  return {Rational(1), rs.zero_weight()};
}

Rational affine_pairing(const RootSystem& rs, const AffineWeight& w, int i) {
  if (i < 0 || i > rs.rank()) throw std::invalid_argument("affine_pairing: bad color");
  if (i >= 1) return w.finite.c[i - 1];
  return w.level - pair_coroot(w.finite, rs.highest_root().coroot);
}

AffineWeight reflect_affine(const RootSystem& rs, int i, const AffineWeight& w) {
  if (i >= 1) return {w.level, reflect_simple(rs, i, w.finite)};
  Rational p = affine_pairing(rs, w, 0);
  // alpha_0 acts as -theta modulo the imaginary root; the level is fixed.
  return {w.level, w.finite + p * rs.highest_root_weight()};
}

namespace {

bool positively_parallel(const AffineWeight& v, const AffineWeight& w) {
  // w == c*v for some c > 0, comparing (level, coords) componentwise.
  Rational c;
  bool have_c = false;
  auto component = [&](const Rational& a, const Rational& b) {
    if (a.is_zero()) return b.is_zero();
    if (!have_c) {
      c = b / a;
      have_c = true;
      return c.sign() > 0;
    }
    return b == c * a;
  };
  if (!component(v.level, w.level)) return false;
  for (size_t k = 0; k < v.finite.c.size(); ++k)
    if (!component(v.finite.c[k], w.finite.c[k])) return false;
  return have_c;
}

std::vector<AffineWeight> canonical_steps(std::vector<AffineWeight> raw) {
  std::vector<AffineWeight> out;
  for (auto& s : raw) {
    if (s.is_zero()) continue;
    if (!out.empty() && positively_parallel(out.back(), s))
      out.back() = out.back() + s;
    else
      out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

Path Path::of(std::vector<AffineWeight> raw_steps) {
  Path p;
  p.steps_ = canonical_steps(std::move(raw_steps));
  return p;
}

Path Path::single(AffineWeight step) { return Path::of({std::move(step)}); }

AffineWeight Path::weight() const {
  AffineWeight w{Rational(0), Weight{}};
  if (steps_.empty()) return w;
  w.finite.c.assign(steps_[0].finite.c.size(), Rational(0));
  for (const auto& s : steps_) w = w + s;
  return w;
}

bool operator<(const Path& a, const Path& b) {
  const auto& x = a.steps();
  const auto& y = b.steps();
  for (size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (!(x[i] == y[i])) return x[i] < y[i];
  }
  return x.size() < y.size();
}

size_t Path::hash() const {
  size_t h = 0xcbf29ce484222325ULL;
  for (const auto& s : steps_) h = (h ^ s.hash()) * 0x100000001b3ULL;
  return h;
}

std::string Path::str() const {
  std::string s = "[";
  for (size_t i = 0; i < steps_.size(); ++i) {
    if (i) s += " * ";
    s += steps_[i].str();
  }
  return s + "]";
}

Path concat(const Path& a, const Path& b) {
  std::vector<AffineWeight> steps = a.steps();
  steps.insert(steps.end(), b.steps().begin(), b.steps().end());
  return Path::of(std::move(steps));
}

std::vector<std::pair<Rational, Rational>> height_profile(const RootSystem& rs,
                                                          const Path& p, int i) {
  std::vector<std::pair<Rational, Rational>> out;
  out.emplace_back(Rational(0), Rational(0));
  Rational h(0);
  long long n = static_cast<long long>(p.size());
  for (size_t k = 0; k < p.size(); ++k) {
    h += affine_pairing(rs, p.steps()[k], i);
    out.emplace_back(Rational(static_cast<long long>(k) + 1, n), h);
  }
  return out;
}

namespace detail {

namespace {

std::vector<Rational> breakpoint_heights(const RootSystem& rs,
                                         const std::vector<AffineWeight>& raw, int i) {
  std::vector<Rational> h(raw.size() + 1);
  for (size_t k = 0; k < raw.size(); ++k)
    h[k + 1] = h[k] + affine_pairing(rs, raw[k], i);
  return h;
}

void check_integral_minimum(const std::vector<AffineWeight>& raw, const Rational& m) {
  for (const auto& s : raw)
    if (!s.is_integral()) return;
  if (!m.is_integer())
    throw std::logic_error("path operator: non-integer minimum on an integral path");
}

}  // namespace

std::optional<RawCut> lower_cut(const RootSystem& rs,
                                const std::vector<AffineWeight>& raw, int i) {
  auto h = breakpoint_heights(rs, raw, i);
  Rational m = *std::min_element(h.begin(), h.end());
  check_integral_minimum(raw, m);
  size_t j = 0;
  for (size_t k = 0; k < h.size(); ++k)
    if (h[k] == m) j = k;
  Rational target = m + Rational(1);

  size_t cross = raw.size();
  Rational frac;
  for (size_t k = j; k < raw.size(); ++k) {
    if (h[k + 1] >= target) {
      cross = k;
      frac = (target - h[k]) / (h[k + 1] - h[k]);
      break;
    }
  }
  if (cross == raw.size()) return std::nullopt;

  RawCut cut;
  cut.t0 = Rational(static_cast<long long>(j));
  cut.t1 = Rational(static_cast<long long>(cross)) + frac;
  auto& out = cut.steps;
  for (size_t k = 0; k < j; ++k) out.push_back(raw[k]);
  for (size_t k = j; k < cross; ++k) out.push_back(reflect_affine(rs, i, raw[k]));
  if (frac == Rational(1)) {
    out.push_back(reflect_affine(rs, i, raw[cross]));
  } else {
    out.push_back(reflect_affine(rs, i, frac * raw[cross]));
    out.push_back((Rational(1) - frac) * raw[cross]);
  }
  for (size_t k = cross + 1; k < raw.size(); ++k) out.push_back(raw[k]);
  return cut;
}

std::optional<RawCut> raise_cut(const RootSystem& rs,
                                const std::vector<AffineWeight>& raw, int i) {
  auto h = breakpoint_heights(rs, raw, i);
  Rational m = *std::min_element(h.begin(), h.end());
  check_integral_minimum(raw, m);
  size_t j = 0;
  while (!(h[j] == m)) ++j;
  Rational target = m + Rational(1);

  if (j == 0) return std::nullopt;
  size_t cross = raw.size();
  Rational frac;
  for (size_t k = j; k-- > 0;) {
    if (h[k] >= target) {
      cross = k;
      frac = (h[k] - target) / (h[k] - h[k + 1]);
      break;
    }
  }
  if (cross == raw.size()) return std::nullopt;

  RawCut cut;
  cut.t0 = Rational(static_cast<long long>(cross)) + frac;
  cut.t1 = Rational(static_cast<long long>(j));
  auto& out = cut.steps;
  for (size_t k = 0; k < cross; ++k) out.push_back(raw[k]);
  if (frac.is_zero()) {
    out.push_back(reflect_affine(rs, i, raw[cross]));
  } else {
    out.push_back(frac * raw[cross]);
    out.push_back(reflect_affine(rs, i, (Rational(1) - frac) * raw[cross]));
  }
  for (size_t k = cross + 1; k < j; ++k) out.push_back(reflect_affine(rs, i, raw[k]));
  for (size_t k = j; k < raw.size(); ++k) out.push_back(raw[k]);
  return cut;
}

}  // namespace detail

std::optional<Path> lower_f(const RootSystem& rs, const Path& p, int i) {
  auto cut = detail::lower_cut(rs, p.steps(), i);
  if (!cut) return std::nullopt;
  return Path::of(std::move(cut->steps));
}

std::optional<Path> raise_e(const RootSystem& rs, const Path& p, int i) {
  auto cut = detail::raise_cut(rs, p.steps(), i);
  if (!cut) return std::nullopt;
  return Path::of(std::move(cut->steps));
}

bool is_dominant(const RootSystem& rs, const Path& p, bool affine) {
  int lo = affine ? 0 : 1;
  for (int i = lo; i <= rs.rank(); ++i) {
    Rational h(0);
    for (const auto& s : p.steps()) {
      h += affine_pairing(rs, s, i);
      if (h.sign() < 0) return false;
    }
  }
  return true;
}

bool is_integral(const Path& p) {
  for (const auto& s : p.steps())
    if (!s.is_integral()) return false;
  return true;
}

bool is_neutral(const RootSystem& rs, const Path& p, int i) {
  Rational h(0);
  for (const auto& s : p.steps()) {
    h += affine_pairing(rs, s, i);
    if (h.sign() < 0) return false;
  }
  return h.is_zero();
}

namespace {

AffineWeight twist_once(const RootSystem& rs, const DiagramAut& aut, bool inverse,
                        const AffineWeight& w) {
  if (!inverse) {
    Weight arg = w.finite + w.level * aut.shift;
    return {w.level, apply_word(rs, aut.finite_word, arg)};
  }
  WeylWord rev(aut.finite_word.rbegin(), aut.finite_word.rend());
  Weight img = apply_word(rs, rev, w.finite);
  return {w.level, img - w.level * aut.shift};
}

}  // namespace

AffineWeight twist_affine(const RootSystem& rs, const DiagramAut& aut, int power,
                          AffineWeight w) {
  int n = power % aut.order;
  if (n < 0) n += aut.order;
  // Apply inverses when that is the shorter direction.
  if (n > aut.order - n) {
    for (int k = 0; k < aut.order - n; ++k) w = twist_once(rs, aut, true, w);
  } else {
    for (int k = 0; k < n; ++k) w = twist_once(rs, aut, false, w);
  }
  return w;
}

Path act_linear(const RootSystem& rs, const std::vector<LinearGen>& gens, const Path& p) {
  std::vector<AffineWeight> steps = p.steps();
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
    for (auto& s : steps) {
      if (it->kind == LinearGen::Reflection)
        s = reflect_affine(rs, it->index, s);
      else
        s = twist_affine(rs, rs.aut_for_node(it->index), it->power, s);
    }
  }
  return Path::of(std::move(steps));
}

Path act_word(const RootSystem& rs, const WeylWord& word, const Path& p) {
  std::vector<LinearGen> gens;
  for (int i : word) gens.push_back({LinearGen::Reflection, i, 1});
  return act_linear(rs, gens, p);
}

}  // namespace pathcrystal
