#include "pathcrystal/root_system.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace pathcrystal {

Weight operator+(const Weight& a, const Weight& b) {
  Weight r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  Weight r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
  return r;
}

Weight operator*(const Rational& s, const Weight& w) {
  Weight r = w;
  for (auto& x : r.c) x *= s;
  return r;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

bool operator<(const Weight& a, const Weight& b) {
  for (size_t i = 0; i < a.c.size() && i < b.c.size(); ++i) {
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  }
  return a.c.size() < b.c.size();
}

size_t Weight::hash() const {
  size_t h = 0x811c9dc5u;
  for (const auto& x : c) h = (h ^ x.hash()) * 0x100000001b3ULL;
  return h;
}

std::string Weight::str() const {
  std::string s = "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += c[i].str();
  }
  return s + ")";
}

namespace {

void validate_type(char t, int r) {
  bool ok = false;
  switch (t) {
    case 'A': ok = r >= 1; break;
    case 'B': ok = r >= 2; break;
    case 'C': ok = r >= 2; break;
    case 'D': ok = r >= 4; break;
    case 'E': ok = r >= 6 && r <= 8; break;
    case 'F': ok = r == 4; break;
    case 'G': ok = r == 2; break;
    default: ok = false;
  }
  if (!ok)
    throw std::invalid_argument(std::string("RootSystem: invalid type ") + t +
                                std::to_string(r));
}

// cartan[i][j] = <alpha_{j+1}, alpha_{i+1}^vee>, Bourbaki numbering.
std::vector<std::vector<long long>> make_cartan(char t, int r) {
  std::vector<std::vector<long long>> c(r, std::vector<long long>(r, 0));
  for (int i = 0; i < r; ++i) c[i][i] = 2;
  auto bond = [&](int a, int b) { c[a][b] = c[b][a] = -1; };
  switch (t) {
    case 'A':
      for (int i = 0; i + 1 < r; ++i) bond(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 2 < r; ++i) bond(i, i + 1);
      c[r - 1][r - 2] = -2;  // alpha_r is short
      c[r - 2][r - 1] = -1;
      break;
    case 'C':
      for (int i = 0; i + 2 < r; ++i) bond(i, i + 1);
      c[r - 1][r - 2] = -1;  // alpha_r is long
      c[r - 2][r - 1] = -2;
      break;
    case 'D':
      for (int i = 0; i + 3 < r; ++i) bond(i, i + 1);
      bond(r - 3, r - 2);
      bond(r - 3, r - 1);
      break;
    case 'E':
      bond(0, 2);
      bond(2, 3);
      bond(3, 4);
      bond(4, 5);
      if (r >= 7) bond(5, 6);
      if (r >= 8) bond(6, 7);
      bond(1, 3);
      break;
    case 'F':
      bond(0, 1);
      bond(2, 3);
      c[2][1] = -2;  // alpha_3 short, alpha_2 long
      c[1][2] = -1;
      break;
    case 'G':
      c[0][1] = -3;  // alpha_1 short, alpha_2 long
      c[1][0] = -1;
      break;
  }
  return c;
}

struct VecHash {
  size_t operator()(const std::vector<long long>& v) const {
    size_t h = 0x811c9dc5u;
    for (long long x : v) h = (h ^ std::hash<long long>{}(x)) * 0x100000001b3ULL;
    return h;
  }
};

}  // namespace

std::vector<int> all_nodes(const RootSystem& rs) {
  std::vector<int> v(rs.rank());
  std::iota(v.begin(), v.end(), 1);
  return v;
}

std::vector<int> all_nodes_except(const RootSystem& rs, int excluded) {
  std::vector<int> v;
  for (int j = 1; j <= rs.rank(); ++j)
    if (j != excluded) v.push_back(j);
  return v;
}

Rational pair_coroot(const Weight& w, const std::vector<long long>& coroot) {
  if (w.c.size() != coroot.size())
    throw std::invalid_argument("pair_coroot: dimension mismatch");
  Rational r;
  for (size_t i = 0; i < coroot.size(); ++i) r += Rational(coroot[i]) * w.c[i];
  return r;
}

Weight reflect_simple(const RootSystem& rs, int i, const Weight& w) {
  if (i < 1 || i > rs.rank()) throw std::invalid_argument("reflect_simple: bad node");
  Rational ci = w.c[i - 1];
  if (ci.is_zero()) return w;
  Weight r = w;
  const auto& cart = rs.cartan();
  for (int k = 0; k < rs.rank(); ++k)
    r.c[k] -= ci * Rational(cart[k][i - 1]);
  return r;
}

Weight apply_word(const RootSystem& rs, const WeylWord& word, Weight w) {
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    w = reflect_simple(rs, *it, w);
  return w;
}

std::pair<Weight, WeylWord> raise_to_dominant(const RootSystem& rs, Weight w,
                                              const std::vector<int>& allowed_nodes) {
  WeylWord applied;
  for (;;) {
    int pick = 0;
    for (int j : allowed_nodes) {
      if (w.c[j - 1].sign() < 0) {
        pick = j;
        break;
      }
    }
    if (pick == 0) break;
    w = reflect_simple(rs, pick, w);
    applied.push_back(pick);
  }
  return {w, applied};
}

WeylWord longest_word(const RootSystem& rs, const std::vector<int>& allowed_nodes) {
  Weight v = rs.zero_weight();
  for (int j : allowed_nodes) v.c[j - 1] = Rational(-1);
  auto [dom, applied] = raise_to_dominant(rs, v, allowed_nodes);
  // Sanity: the longest element sends the parabolic anti-dominant vector to
  // its negative, in as many steps as there are supported positive roots.
  if (!(dom == -v)) throw std::logic_error("longest_word: unexpected orbit top");
  size_t supported = 0;
  for (const auto& pr : rs.positive_roots()) {
    bool in = true;
    for (int k = 0; k < rs.rank(); ++k) {
      bool allowed = std::find(allowed_nodes.begin(), allowed_nodes.end(), k + 1) !=
                     allowed_nodes.end();
      if (!allowed && pr.root[k] != 0) in = false;
    }
    if (in) ++supported;
  }
  if (applied.size() != supported)
    throw std::logic_error("longest_word: word length mismatch");
  std::reverse(applied.begin(), applied.end());
  return applied;
}

WeylWord reduced_word_from_action(const RootSystem& rs, const Weight& image_of_rho) {
  auto [dom, applied] = raise_to_dominant(rs, image_of_rho, all_nodes(rs));
  if (!(dom == rs.rho()))
    throw std::invalid_argument("reduced_word_from_action: not in the orbit of rho");
  if (!(apply_word(rs, applied, rs.rho()) == image_of_rho))
    throw std::logic_error("reduced_word_from_action: reconstruction failed");
  return applied;
}

Weight dual_weight(const RootSystem& rs, const Weight& w) {
  if (!w.is_dominant()) throw std::invalid_argument("dual_weight: input not dominant");
  Weight img = apply_word(rs, longest_word(rs, all_nodes(rs)), w);
  return -img;
}

int dual_node(const RootSystem& rs, int i) {
  Weight d = dual_weight(rs, rs.fundamental_weight(i));
  for (int j = 1; j <= rs.rank(); ++j)
    if (d == rs.fundamental_weight(j)) return j;
  throw std::logic_error("dual_node: dual of a fundamental weight not fundamental");
}

long long weyl_dimension(const RootSystem& rs, const Weight& w) {
  if (!w.is_dominant() || !w.is_integral())
    throw std::invalid_argument("weyl_dimension: weight must be dominant integral");
  std::vector<long long> nums, dens;
  for (const auto& pr : rs.positive_roots()) {
    long long n = 0, d = 0;
    for (int k = 0; k < rs.rank(); ++k) {
      n += pr.coroot[k] * (w.c[k].num() + 1);
      d += pr.coroot[k];
    }
    nums.push_back(n);
    dens.push_back(d);
  }
  for (auto& d : dens) {
    for (auto& n : nums) {
      if (d == 1) break;
      long long g = std::gcd(n, d);
      n /= g;
      d /= g;
    }
    if (d != 1) throw std::logic_error("weyl_dimension: non-integral product");
  }
  __int128 prod = 1;
  for (long long n : nums) {
    prod *= n;
    if (prod > INT64_MAX) throw std::overflow_error("weyl_dimension: overflow");
  }
  return static_cast<long long>(prod);
}

OrbitWithCovers orbit_and_covers(const RootSystem& rs, const Weight& w) {
  if (!w.is_dominant())
    throw std::invalid_argument("orbit_and_covers: input not dominant");
  std::unordered_set<Weight, WeightHash> seen;
  std::deque<Weight> queue{w};
  seen.insert(w);
  while (!queue.empty()) {
    Weight cur = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rs.rank(); ++i) {
      Weight nxt = reflect_simple(rs, i, cur);
      if (seen.insert(nxt).second) queue.push_back(nxt);
    }
  }
  OrbitWithCovers out;
  out.orbit.assign(seen.begin(), seen.end());
  std::sort(out.orbit.begin(), out.orbit.end());
  std::unordered_map<Weight, int, WeightHash> index;
  for (size_t i = 0; i < out.orbit.size(); ++i) index[out.orbit[i]] = static_cast<int>(i);

  // Single-step relations lower = upper - d*alpha. Within one orbit the
  // multiple is forced to be the full reflection pairing.
  struct Rel {
    int lower, upper, root_index;
    Rational d;
  };
  std::vector<Rel> rels;
  std::vector<std::vector<int>> up(out.orbit.size());
  const auto& roots = rs.positive_roots();
  for (size_t u = 0; u < out.orbit.size(); ++u) {
    const Weight& tau = out.orbit[u];
    for (size_t ri = 0; ri < roots.size(); ++ri) {
      Rational d = pair_coroot(tau, roots[ri].coroot);
      if (d.sign() <= 0) continue;
      Weight alpha = rs.zero_weight();
      for (int k = 0; k < rs.rank(); ++k)
        if (roots[ri].root[k] != 0)
          alpha = alpha + Rational(roots[ri].root[k]) * rs.simple_root_weight(k + 1);
      Weight low = tau - d * alpha;
      auto it = index.find(low);
      if (it == index.end())
        throw std::logic_error("orbit_and_covers: reflection left the orbit");
      rels.push_back({it->second, static_cast<int>(u), static_cast<int>(ri), d});
      up[it->second].push_back(static_cast<int>(u));
    }
  }

  // Transitive reduction: keep a relation unless it factors through another.
  size_t n = out.orbit.size();
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (size_t s = 0; s < n; ++s) {
    std::deque<int> dq{static_cast<int>(s)};
    while (!dq.empty()) {
      int v = dq.front();
      dq.pop_front();
      for (int t : up[v]) {
        if (!reach[s][t]) {
          reach[s][t] = 1;
          dq.push_back(t);
        }
      }
    }
  }
  for (const auto& rel : rels) {
    bool redundant = false;
    for (int mid : up[rel.lower]) {
      if (mid != rel.upper && reach[mid][rel.upper]) {
        redundant = true;
        break;
      }
    }
    if (!redundant) {
      if (!rel.d.is_integer() && w.is_integral())
        throw std::logic_error("orbit_and_covers: non-integer cover multiple");
      out.covers.push_back({rel.lower, rel.upper, rel.root_index,
                            rel.d.is_integer() ? rel.d.num() : 0});
    }
  }
  return out;
}

std::vector<int> RootSystem::minuscule_nodes() const {
  std::vector<int> v;
  for (const auto& a : minuscule_) v.push_back(a.node);
  return v;
}

const DiagramAut& RootSystem::aut_for_node(int node) const {
  for (const auto& a : minuscule_)
    if (a.node == node) return a;
  throw std::invalid_argument("aut_for_node: node " + std::to_string(node) +
                              " is not minuscule for type " + type_ +
                              std::to_string(rank_));
}

Weight RootSystem::simple_root_weight(int i) const {
  Weight w = zero_weight();
  for (int k = 0; k < rank_; ++k) w.c[k] = Rational(cartan_[k][i - 1]);
  return w;
}

Weight RootSystem::fundamental_weight(int i) const {
  Weight w = zero_weight();
  w.c[i - 1] = Rational(1);
  return w;
}

Weight RootSystem::zero_weight() const {
  Weight w;
  w.c.assign(rank_, Rational(0));
  return w;
}

Weight RootSystem::rho() const {
  Weight w;
  w.c.assign(rank_, Rational(1));
  return w;
}

RootSystem RootSystem::build(char type_label, int rank) {
  validate_type(type_label, rank);
  RootSystem rs;
  rs.type_ = type_label;
  rs.rank_ = rank;
  rs.cartan_ = make_cartan(type_label, rank);

  // Enumerate the full root orbit by reflections from the simple roots,
  // carrying coroot coordinates alongside so everything stays integral.
  std::unordered_map<std::vector<long long>, std::vector<long long>, VecHash> roots;
  std::deque<std::vector<long long>> queue;
  for (int i = 0; i < rank; ++i) {
    std::vector<long long> e(rank, 0), ev(rank, 0);
    e[i] = ev[i] = 1;
    roots[e] = ev;
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto root = queue.front();
    queue.pop_front();
    auto coroot = roots[root];
    for (int i = 0; i < rank; ++i) {
      long long pr = 0, pc = 0;
      for (int j = 0; j < rank; ++j) {
        pr += root[j] * rs.cartan_[i][j];
        pc += coroot[j] * rs.cartan_[j][i];
      }
      auto r2 = root;
      r2[i] -= pr;
      auto c2 = coroot;
      c2[i] -= pc;
      auto [it, inserted] = roots.emplace(r2, c2);
      if (inserted)
        queue.push_back(r2);
      else if (it->second != c2)
        throw std::logic_error("RootSystem: inconsistent coroot");
    }
  }
  for (auto& [root, coroot] : roots) {
    bool pos = true;
    for (long long k : root)
      if (k < 0) pos = false;
    if (pos) rs.roots_.push_back({root, coroot});
  }
  std::sort(rs.roots_.begin(), rs.roots_.end(),
            [](const PositiveRoot& a, const PositiveRoot& b) {
              if (a.height() != b.height()) return a.height() < b.height();
              return a.root < b.root;
            });

  // The highest root dominates every positive root coordinatewise.
  rs.theta_index_ = static_cast<int>(rs.roots_.size()) - 1;
  const auto& theta = rs.roots_[rs.theta_index_];
  for (const auto& pr : rs.roots_) {
    for (int k = 0; k < rank; ++k)
      if (pr.root[k] > theta.root[k])
        throw std::logic_error("RootSystem: highest root not maximal");
  }
  rs.marks_ = theta.root;
  rs.comarks_ = theta.coroot;
  for (int k = 0; k < rank; ++k)
    rs.nu_factors_.push_back(Rational(rs.marks_[k], rs.comarks_[k]));
  rs.theta_weight_ = rs.zero_weight();
  for (int k = 0; k < rank; ++k)
    rs.theta_weight_ =
        rs.theta_weight_ + Rational(rs.marks_[k]) * rs.simple_root_weight(k + 1);

  // Minuscule-node symmetry tables.
  WeylWord w0 = longest_word(rs, all_nodes(rs));
  for (int node = 1; node <= rank; ++node) {
    if (rs.marks_[node - 1] != 1) continue;
    DiagramAut aut;
    aut.node = node;
    WeylWord wi = longest_word(rs, all_nodes_except(rs, node));
    auto bar = [&](const Weight& v) {
      return apply_word(rs, w0, apply_word(rs, wi, v));
    };
    aut.finite_word = reduced_word_from_action(rs, bar(rs.rho()));
    if (aut.finite_word.size() != w0.size() - wi.size())
      throw std::logic_error("RootSystem: finite part word not reduced");
    aut.shift = -rs.fundamental_weight(node);

    aut.node_perm.assign(rank + 1, -1);
    auto match_simple = [&](const Weight& img) {
      for (int k = 1; k <= rank; ++k)
        if (img == rs.simple_root_weight(k)) return k;
      return -1;
    };
    for (int j = 1; j <= rank; ++j) {
      Weight img = bar(rs.simple_root_weight(j));
      if (j == node) {
        if (!(img == -rs.theta_weight_))
          throw std::logic_error("RootSystem: symmetry does not send node to 0");
        aut.node_perm[j] = 0;
      } else {
        int k = match_simple(img);
        if (k < 0) throw std::logic_error("RootSystem: symmetry image not simple");
        aut.node_perm[j] = k;
      }
    }
    int k0 = match_simple(bar(-rs.theta_weight_));
    if (k0 < 0) throw std::logic_error("RootSystem: image of node 0 not simple");
    aut.node_perm[0] = k0;
    std::vector<char> hit(rank + 1, 0);
    for (int v : aut.node_perm) {
      if (v < 0 || v > rank || hit[v])
        throw std::logic_error("RootSystem: node permutation not a bijection");
      hit[v] = 1;
    }

    std::vector<int> p(rank + 1);
    std::iota(p.begin(), p.end(), 0);
    int order = 0;
    for (;;) {
      std::vector<int> q(rank + 1);
      for (int j = 0; j <= rank; ++j) q[j] = aut.node_perm[p[j]];
      p = q;
      ++order;
      bool ident = true;
      for (int j = 0; j <= rank; ++j)
        if (p[j] != j) ident = false;
      if (ident) break;
    }
    aut.order = order;

    // Cross-check: order of the fundamental coweight modulo the coroot
    // lattice, from the rational solve cartan^T x = e_node.
    {
      int n = rank;
      std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) m[a][b] = Rational(rs.cartan_[b][a]);
        m[a][n] = Rational(a == node - 1 ? 1 : 0);
      }
      for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row)
          if (!m[row][col].is_zero()) {
            piv = row;
            break;
          }
        if (piv < 0) throw std::logic_error("RootSystem: singular Cartan matrix");
        std::swap(m[col], m[piv]);
        Rational inv = Rational(1) / m[col][col];
        for (int b = col; b <= n; ++b) m[col][b] *= inv;
        for (int row = 0; row < n; ++row) {
          if (row == col || m[row][col].is_zero()) continue;
          Rational f = m[row][col];
          for (int b = col; b <= n; ++b) m[row][b] -= f * m[col][b];
        }
      }
      long long lattice_order = 1;
      for (int a = 0; a < n; ++a)
        lattice_order = std::lcm(lattice_order, m[a][n].den());
      if (lattice_order != aut.order)
        throw std::logic_error("RootSystem: symmetry order mismatch");
    }

    rs.minuscule_.push_back(std::move(aut));
  }
  return rs;
}

}  // namespace pathcrystal
