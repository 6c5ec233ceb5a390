#pragma once
// Finite-group symmetry machinery for rings graded by a product of projective
// lines: ring endomorphisms made of a factor permutation, one 2x2 matrix per
// factor, and a global scalar; the order-16 group generated by two elements
// g, h subject to g^4 = h^4 = 1 and hg = g^3 h; the induced action on points
// of the product of lines; orbits, stabilizers, and isotypic slices.

#include <syzygy/linalg.hpp>
#include <syzygy/ring.hpp>

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

namespace syz {

// ------------------------------------------------------------- ActionSpec --

// The ring map sends x_{i,a} to sum_b mats[i][2a+b] * x_{perm[i], b}, then the
// whole image is multiplied by `scalar` once.  On a fixed multidegree this is
// a linear action; it is not a ring homomorphism unless scalar == 1.
struct ActionSpec {
  RingRef ring;
  std::vector<int> perm;                         // factor i draws from perm[i]
  std::vector<std::array<FieldElement, 4>> mats; // row-major 2x2 per factor
  FieldElement scalar;

  bool operator==(const ActionSpec& o) const {
    return same_ring(ring, o.ring) && perm == o.perm && mats == o.mats &&
           scalar == o.scalar;
  }
  bool operator!=(const ActionSpec& o) const { return !(*this == o); }
};

inline ActionSpec make_action(const RingRef& ring, std::vector<int> perm,
                              std::vector<std::array<FieldElement, 4>> mats,
                              FieldElement scalar) {
  if (!ring->graded) throw std::invalid_argument("actions need a graded ring");
  const int n = ring->nfactors();
  if (static_cast<int>(perm.size()) != n || static_cast<int>(mats.size()) != n)
    throw std::invalid_argument("action arity does not match the ring");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)])
      throw std::invalid_argument("factor permutation is not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }
  return {ring, std::move(perm), std::move(mats), std::move(scalar)};
}

inline ActionSpec identity_action(const RingRef& ring) {
  const int n = ring->nfactors();
  const FieldElement one = FieldElement::one(ring->field);
  const FieldElement zero = FieldElement::zero(ring->field);
  std::vector<std::array<FieldElement, 4>> mats(
      static_cast<std::size_t>(n), std::array<FieldElement, 4>{one, zero, zero, one});
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  return {ring, std::move(perm), std::move(mats), one};
}

inline ActionSpec scale_action(ActionSpec s, const FieldElement& c) {
  s.scalar = s.scalar * c;
  return s;
}

inline Polynomial apply_action(const ActionSpec& s, const Polynomial& p) {
  if (!same_ring(p.ring(), s.ring))
    throw std::invalid_argument("polynomial does not live in the action's ring");
  std::map<int, Polynomial> images;
  for (int i = 0; i < s.ring->nfactors(); ++i) {
    const auto& M = s.mats[static_cast<std::size_t>(i)];
    int src = s.perm[static_cast<std::size_t>(i)];
    for (int a = 0; a < 2; ++a) {
      Polynomial img = Polynomial::zero(s.ring);
      for (int b = 0; b < 2; ++b)
        img += Polynomial::variable(s.ring, 2 * src + b) *
               M[static_cast<std::size_t>(2 * a + b)];
      images.emplace(2 * i + a, std::move(img));
    }
  }
  return p.substitute(images) * s.scalar;
}

// apply_action(compose(a,b), p) == apply_action(a, apply_action(b, p)).
inline ActionSpec compose(const ActionSpec& a, const ActionSpec& b) {
  if (!same_ring(a.ring, b.ring))
    throw std::invalid_argument("composing actions on different rings");
  const int n = a.ring->nfactors();
  ActionSpec c;
  c.ring = a.ring;
  c.perm.resize(static_cast<std::size_t>(n));
  c.mats.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int mid = b.perm[static_cast<std::size_t>(i)];
    c.perm[static_cast<std::size_t>(i)] = a.perm[static_cast<std::size_t>(mid)];
    const auto& Mb = b.mats[static_cast<std::size_t>(i)];
    const auto& Ma = a.mats[static_cast<std::size_t>(mid)];
    auto& Mc = c.mats[static_cast<std::size_t>(i)];
    for (int r = 0; r < 2; ++r)
      for (int s2 = 0; s2 < 2; ++s2)
        Mc[static_cast<std::size_t>(2 * r + s2)] =
            Mb[static_cast<std::size_t>(2 * r)] * Ma[static_cast<std::size_t>(s2)] +
            Mb[static_cast<std::size_t>(2 * r + 1)] * Ma[static_cast<std::size_t>(2 + s2)];
  }
  c.scalar = a.scalar * b.scalar;
  return c;
}

// Identity acting on every multidegree: trivial permutation, every factor
// matrix the same scalar multiple of I, and that scalar cancelling the global
// one on each single-factor coordinate.
inline bool is_identity_action(const ActionSpec& s) {
  const int n = s.ring->nfactors();
  for (int i = 0; i < n; ++i)
    if (s.perm[static_cast<std::size_t>(i)] != i) return false;
  const FieldElement zero = FieldElement::zero(s.ring->field);
  const FieldElement& mu = s.mats[0][0];
  for (int i = 0; i < n; ++i) {
    const auto& M = s.mats[static_cast<std::size_t>(i)];
    if (M[1] != zero || M[2] != zero) return false;
    if (M[0] != mu || M[3] != mu) return false;
  }
  return s.scalar * mu == FieldElement::one(s.ring->field);
}

inline int order_of(const ActionSpec& s, int bound = 256) {
  ActionSpec acc = s;
  for (int k = 1; k <= bound; ++k) {
    if (is_identity_action(acc)) return k;
    acc = compose(acc, s);
  }
  throw std::runtime_error("order_of: no identity power within bound");
}

// Matrix of the action on the space spanned by monomials_of(ring, d), columns
// indexed by source monomials leading-first; satisfies
// action_matrix(compose(a,b)) = action_matrix(a) * action_matrix(b).
inline SparseMatrix action_matrix(const ActionSpec& s, const MultiDegree& d) {
  auto monos = monomials_of(s.ring, d);
  std::map<Monomial, int, GrlexGreater> row_of;
  for (std::size_t r = 0; r < monos.size(); ++r)
    row_of.emplace(monos[r], static_cast<int>(r));
  SparseMatrix M(s.ring->field, static_cast<int>(monos.size()),
                 static_cast<int>(monos.size()));
  for (std::size_t c = 0; c < monos.size(); ++c) {
    Polynomial img = apply_action(
        s, Polynomial::monomial(s.ring, monos[c], FieldElement::one(s.ring->field)));
    for (auto& [m, coeff] : img.terms()) {
      auto it = row_of.find(m);
      if (it == row_of.end())
        throw std::logic_error("action image leaves the multidegree slice");
      M.set(it->second, static_cast<int>(c), coeff);
    }
  }
  return M;
}

inline FieldElement matrix_trace(const SparseMatrix& M) {
  FieldElement t = FieldElement::zero(M.field);
  for (int i = 0; i < std::min(M.nrows, M.ncols); ++i) t = t + M.get(i, i);
  return t;
}

// ------------------------------------------------------------ GroupElement --

// Normal form g^a h^b with a,b mod 4 and the rewriting rule hg = g^3 h.
struct GroupElement {
  int a = 0, b = 0;
  bool operator==(const GroupElement& o) const { return a == o.a && b == o.b; }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  bool operator<(const GroupElement& o) const {
    return a != o.a ? a < o.a : b < o.b;
  }
  bool is_identity() const { return a == 0 && b == 0; }
  std::string to_string() const {
    if (is_identity()) return "1";
    std::string s;
    if (a) s += (a == 1) ? "g" : "g^" + std::to_string(a);
    if (b) {
      if (!s.empty()) s += "*";
      s += (b == 1) ? "h" : "h^" + std::to_string(b);
    }
    return s;
  }
};

inline GroupElement gmul(GroupElement x, GroupElement y) {
  int t = (x.b % 2) ? 3 : 1;  // 3^b mod 4
  return {(x.a + t * y.a) % 4, (x.b + y.b) % 4};
}

inline GroupElement ginv(GroupElement x) {
  int bi = (4 - x.b) % 4;
  int t = (x.b % 2) ? 3 : 1;
  int ai = (4 - (t * x.a) % 4) % 4;
  return {ai, bi};
}

inline std::vector<GroupElement> all_group_elements() {
  std::vector<GroupElement> out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) out.push_back({a, b});
  return out;
}

// A representation: generator images for g and h, extended by normal form.
struct GroupAction {
  ActionSpec g, h;

  ActionSpec spec_of(GroupElement w) const {
    ActionSpec acc = identity_action(g.ring);
    for (int k = 0; k < w.a; ++k) acc = compose(acc, g);
    for (int k = 0; k < w.b; ++k) acc = compose(acc, h);
    return acc;
  }
};

// ------------------------------------------------------------ ProductPoint --

// A point of the product of projective lines, one (x0 : x1) pair per factor,
// normalized so the first nonzero coordinate of each factor is 1.
struct ProductPoint {
  FieldRef field;
  std::vector<std::array<FieldElement, 2>> coords;

  bool operator==(const ProductPoint& o) const {
    return same_field(field, o.field) && coords == o.coords;
  }
  bool operator!=(const ProductPoint& o) const { return !(*this == o); }
  bool operator<(const ProductPoint& o) const {  // arbitrary total order for sets
    if (coords.size() != o.coords.size()) return coords.size() < o.coords.size();
    for (std::size_t i = 0; i < coords.size(); ++i)
      for (int a = 0; a < 2; ++a) {
        std::string x = coords[i][static_cast<std::size_t>(a)].to_string();
        std::string y = o.coords[i][static_cast<std::size_t>(a)].to_string();
        if (x != y) return x < y;
      }
    return false;
  }

  // Flat coordinate vector (x_{1,0}, x_{1,1}, x_{2,0}, ...) for evaluation.
  std::vector<FieldElement> flat() const {
    std::vector<FieldElement> v;
    v.reserve(coords.size() * 2);
    for (auto& c : coords) {
      v.push_back(c[0]);
      v.push_back(c[1]);
    }
    return v;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (i) s += " x ";
      s += "(" + coords[i][0].to_string() + " : " + coords[i][1].to_string() + ")";
    }
    return s;
  }
};

inline ProductPoint make_point(const FieldRef& f,
                               std::vector<std::array<FieldElement, 2>> raw) {
  for (auto& c : raw) {
    if (!c[0].is_zero()) {
      FieldElement inv = c[0].inverse();
      c[0] = FieldElement::one(f);
      c[1] = c[1] * inv;
    } else if (!c[1].is_zero()) {
      c[1] = FieldElement::one(f);
    } else {
      throw std::invalid_argument("projective point with a zero factor");
    }
  }
  return {f, std::move(raw)};
}

// Raw coordinate image under a spec, factor i receiving M_i applied to the
// source factor perm[i]; no normalization, so the exact identity
//   evaluate(apply_action(s, p), pt) = s.scalar * evaluate(p, act_coords(s, pt))
// holds coordinate-for-coordinate.
inline std::vector<std::array<FieldElement, 2>> act_coords(
    const ActionSpec& s, const std::vector<std::array<FieldElement, 2>>& pt) {
  const FieldRef& f = pt.empty() ? s.ring->field : pt[0][0].field();
  auto entry = [&](const FieldElement& e) { return coerce(e, f); };
  std::vector<std::array<FieldElement, 2>> out(pt.size());
  for (std::size_t i = 0; i < pt.size(); ++i) {
    const auto& M = s.mats[i];
    const auto& src = pt[static_cast<std::size_t>(s.perm[i])];
    out[i][0] = entry(M[0]) * src[0] + entry(M[1]) * src[1];
    out[i][1] = entry(M[2]) * src[0] + entry(M[3]) * src[1];
  }
  return out;
}

// Left action of the group on points: w acts through the spec of w^{-1}, so
// evaluate(apply_action(spec_of(w), p), pt) agrees with
// evaluate(p, act_on_point(w^{-1}, pt)) up to per-factor scalars.
inline ProductPoint act_on_point(const GroupAction& rep, GroupElement w,
                                 const ProductPoint& pt) {
  return make_point(pt.field, act_coords(rep.spec_of(ginv(w)), pt.coords));
}

// ----------------------------------------------------- orbits / stabilizers --

struct OrbitPartition {
  std::vector<std::vector<int>> orbits;              // index lists into input
  std::vector<std::vector<GroupElement>> stabilizers;  // per input point
  std::vector<GroupElement> subgroup;                // closure of the input list
};

inline OrbitPartition orbits(const std::vector<ProductPoint>& points,
                             const std::vector<GroupElement>& generators,
                             const GroupAction& rep) {
  // Close the listed elements into a subgroup.
  std::vector<GroupElement> H = {GroupElement{}};
  auto contains = [&](GroupElement w) {
    for (auto& x : H)
      if (x == w) return true;
    return false;
  };
  for (auto& w : generators)
    if (!contains(w)) H.push_back(w);
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < H.size(); ++i)
      for (std::size_t j = 0; j < H.size(); ++j) {
        GroupElement w = gmul(H[i], H[j]);
        if (!contains(w)) {
          H.push_back(w);
          grew = true;
        }
      }
  }

  auto index_of = [&](const ProductPoint& q) -> int {
    for (std::size_t k = 0; k < points.size(); ++k)
      if (points[k] == q) return static_cast<int>(k);
    return -1;
  };

  OrbitPartition part;
  part.subgroup = H;
  part.stabilizers.resize(points.size());
  std::vector<bool> assigned(points.size(), false);
  for (std::size_t seed = 0; seed < points.size(); ++seed) {
    if (assigned[seed]) continue;
    std::vector<int> orbit;
    for (auto& w : H) {
      ProductPoint q = act_on_point(rep, w, points[seed]);
      int at = index_of(q);
      if (at < 0)
        throw std::invalid_argument("point set is not closed under the group action");
      if (!assigned[static_cast<std::size_t>(at)]) {
        assigned[static_cast<std::size_t>(at)] = true;
        orbit.push_back(at);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    part.orbits.push_back(std::move(orbit));
  }
  for (std::size_t k = 0; k < points.size(); ++k)
    for (auto& w : H)
      if (act_on_point(rep, w, points[k]) == points[k])
        part.stabilizers[k].push_back(w);
  return part;
}

// --------------------------------------------------------------- isotypic --

// Basis of { p of multidegree d : apply_action(spec_k, p) = c_k p for all k }.
inline std::vector<Polynomial> isotypic_slice(
    const RingRef& ring, const MultiDegree& d,
    const std::vector<std::pair<ActionSpec, FieldElement>>& constraints) {
  auto monos = monomials_of(ring, d);
  const int n = static_cast<int>(monos.size());
  const int k = static_cast<int>(constraints.size());
  SparseMatrix S(ring->field, k * n, n);
  for (int t = 0; t < k; ++t) {
    SparseMatrix M = action_matrix(constraints[static_cast<std::size_t>(t)].first, d);
    const FieldElement& c = constraints[static_cast<std::size_t>(t)].second;
    for (int i = 0; i < n; ++i) {
      for (auto& [j, v] : M.rows[static_cast<std::size_t>(i)])
        S.set(t * n + i, j, v);
      S.set(t * n + i, i, S.get(t * n + i, i) - c);
    }
  }
  auto K = kernel(S);
  std::vector<Polynomial> basis;
  for (auto& v : K.basis) {
    Polynomial p(ring);
    for (int j = 0; j < n; ++j)
      p.add_term(monos[static_cast<std::size_t>(j)], v[static_cast<std::size_t>(j)]);
    basis.push_back(std::move(p));
  }
  return basis;
}

}  // namespace syz
