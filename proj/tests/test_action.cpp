#include <catch2/catch_amalgamated.hpp>

#include <syzygy/action.hpp>
#include <syzygy/parse.hpp>

#include <random>

using namespace syz;

namespace {

RingRef xring() {
  static RingRef r = make_ring(
      field_QQi(),
      {"x10", "x11", "x20", "x21", "x30", "x31", "x40", "x41"}, true);
  return r;
}

FieldElement fe(long v) { return FieldElement::from_long(xring()->field, v); }
FieldElement imag() { return FieldElement::imaginary_unit(xring()->field); }

std::array<FieldElement, 4> matI() { return {fe(1), fe(0), fe(0), fe(1)}; }
std::array<FieldElement, 4> matA() { return {fe(1), fe(0), fe(0), fe(-1)}; }
std::array<FieldElement, 4> matB() { return {fe(0), fe(1), fe(1), fe(0)}; }
std::array<FieldElement, 4> matBA() { return {fe(0), fe(-1), fe(1), fe(0)}; }

ActionSpec gstar() {
  return make_action(xring(), {1, 0, 3, 2}, {matI(), matA(), matI(), matA()},
                     fe(1));
}
ActionSpec hstar() {
  return make_action(xring(), {2, 3, 0, 1}, {matB(), matBA(), matI(), matA()},
                     fe(1));
}
ActionSpec rho1g() { return scale_action(gstar(), imag()); }
ActionSpec rho1h() { return scale_action(hstar(), fe(-1)); }
ActionSpec sigma() {
  return make_action(xring(), {0, 1, 2, 3}, {matI(), matI(), matB(), matB()},
                     fe(1));
}

GroupAction rho1() { return {rho1g(), rho1h()}; }
GroupAction stars() { return {gstar(), hstar()}; }

// x_{1,a} x_{2,b} x_{3,c} x_{4,d} as a monomial polynomial.
Polynomial basis_mono(int a, int b, int c, int d) {
  Monomial m(8, 0);
  m[static_cast<std::size_t>(0 + (a ? 1 : 0))] = 1;
  m[static_cast<std::size_t>(2 + (b ? 1 : 0))] = 1;
  m[static_cast<std::size_t>(4 + (c ? 1 : 0))] = 1;
  m[static_cast<std::size_t>(6 + (d ? 1 : 0))] = 1;
  return Polynomial::monomial(xring(), m, fe(1));
}

bool same_matrix(const SparseMatrix& X, const SparseMatrix& Y) {
  if (X.nrows != Y.nrows || X.ncols != Y.ncols) return false;
  for (int i = 0; i < X.nrows; ++i)
    for (int j = 0; j < X.ncols; ++j)
      if (X.get(i, j) != Y.get(i, j)) return false;
  return true;
}

Polynomial random_poly(std::mt19937_64& rng, const MultiDegree& d) {
  auto monos = monomials_of(xring(), d);
  Polynomial p = Polynomial::zero(xring());
  std::uniform_int_distribution<long> coeff(-5, 5);
  for (auto& m : monos)
    if (rng() % 3 == 0)
      p.add_term(m, FieldElement::gaussian(xring()->field, Rat(coeff(rng)),
                                           Rat(coeff(rng))));
  return p;
}

ProductPoint random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> c(-4, 4);
  std::vector<std::array<FieldElement, 2>> raw;
  for (int i = 0; i < 4; ++i) {
    FieldElement a = FieldElement::gaussian(xring()->field, Rat(c(rng)), Rat(c(rng)));
    FieldElement b = FieldElement::gaussian(xring()->field, Rat(c(rng)), Rat(c(rng)));
    if (a.is_zero() && b.is_zero()) a = fe(1);
    raw.push_back({a, b});
  }
  return make_point(xring()->field, raw);
}

}  // namespace

TEST_CASE("generator substitutions on the 16 monomials", "[action]") {
  // rho1(g) x1a x2b x3c x4d = i (-1)^{b+d} x1b x2a x3d x4c
  // rho1(h) x1a x2b x3c x4d =   (-1)^{b+d} x1c x2d x3a' x4b'   (a' = 1-a)
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          Polynomial src = basis_mono(a, b, c, d);
          FieldElement sign = fe((b + d) % 2 ? -1 : 1);
          Polynomial img_g = basis_mono(b, a, d, c) * (imag() * sign);
          CAPTURE(a, b, c, d);
          REQUIRE(apply_action(rho1g(), src) == img_g);
          Polynomial img_h = basis_mono(c, d, 1 - a, 1 - b) * sign;
          REQUIRE(apply_action(rho1h(), src) == img_h);
          // unscaled liftings: g* = -i rho1(g) ... just check h* sign pattern
          FieldElement hsign = fe((1 - b + d) % 2 ? -1 : 1);
          REQUIRE(apply_action(hstar(), src) ==
                  basis_mono(c, d, 1 - a, 1 - b) * hsign);
        }
}

TEST_CASE("composition matches sequential application", "[action]") {
  std::mt19937_64 rng(2026);
  std::vector<ActionSpec> specs = {gstar(), hstar(), rho1g(), rho1h(), sigma()};
  for (int trial = 0; trial < 12; ++trial) {
    const ActionSpec& A = specs[rng() % specs.size()];
    const ActionSpec& B = specs[rng() % specs.size()];
    Polynomial p = random_poly(rng, {1, 1, 1, 1});
    REQUIRE(apply_action(compose(A, B), p) == apply_action(A, apply_action(B, p)));
  }
  // compose with identity is the spec itself
  ActionSpec id = identity_action(xring());
  REQUIRE(compose(gstar(), id) == gstar());
  REQUIRE(compose(id, hstar()) == hstar());
  // associativity at the spec level
  ActionSpec lhs = compose(compose(gstar(), hstar()), rho1g());
  ActionSpec rhs = compose(gstar(), compose(hstar(), rho1g()));
  REQUIRE(lhs == rhs);
}

TEST_CASE("orders and the sign-twisted relation of the naive liftings", "[action]") {
  REQUIRE(order_of(gstar()) == 4);
  REQUIRE(order_of(hstar()) == 4);
  REQUIRE(order_of(rho1g()) == 4);
  REQUIRE(order_of(rho1h()) == 4);
  REQUIRE(order_of(sigma()) == 2);
  REQUIRE(is_identity_action(identity_action(xring())));
  REQUIRE_FALSE(is_identity_action(gstar()));

  // g* h* = - h* (g*)^3
  ActionSpec lhs = compose(gstar(), hstar());
  ActionSpec g3 = compose(gstar(), compose(gstar(), gstar()));
  ActionSpec rhs = scale_action(compose(hstar(), g3), fe(-1));
  MultiDegree d = {1, 1, 1, 1};
  REQUIRE(same_matrix(action_matrix(lhs, d), action_matrix(rhs, d)));

  // the twist repairs it: rho1(g) rho1(h) = rho1(h) rho1(g)^3
  ActionSpec lhs1 = compose(rho1g(), rho1h());
  ActionSpec rhs1 =
      compose(rho1h(), compose(rho1g(), compose(rho1g(), rho1g())));
  REQUIRE(same_matrix(action_matrix(lhs1, d), action_matrix(rhs1, d)));
}

TEST_CASE("group element arithmetic", "[action]") {
  auto G = all_group_elements();
  REQUIRE(G.size() == 16);
  // h g = g^3 h
  REQUIRE(gmul({0, 1}, {1, 0}) == GroupElement{3, 1});
  for (auto& w : G) {
    REQUIRE(gmul(w, ginv(w)).is_identity());
    REQUIRE(gmul(ginv(w), w).is_identity());
  }
  // associativity over the whole table
  for (auto& a : G)
    for (auto& b : G)
      for (auto& c : G)
        REQUIRE(gmul(gmul(a, b), c) == gmul(a, gmul(b, c)));
  // orders: g and h have order 4
  REQUIRE(gmul(gmul(GroupElement{1, 0}, GroupElement{1, 0}),
               gmul(GroupElement{1, 0}, GroupElement{1, 0}))
              .is_identity());
}

TEST_CASE("representation is a homomorphism on all 256 pairs", "[action]") {
  MultiDegree d = {1, 1, 1, 1};
  GroupAction rep = rho1();
  auto G = all_group_elements();
  std::vector<SparseMatrix> mats;
  for (auto& w : G) mats.push_back(action_matrix(rep.spec_of(w), d));
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = 0; j < G.size(); ++j) {
      SparseMatrix prod = action_matrix(
          compose(rep.spec_of(G[i]), rep.spec_of(G[j])), d);
      GroupElement wij = gmul(G[i], G[j]);
      std::size_t k = 0;
      while (!(G[k] == wij)) ++k;
      CAPTURE(G[i].to_string(), G[j].to_string());
      REQUIRE(same_matrix(prod, mats[k]));
    }
}

TEST_CASE("character on the 16-dimensional slice is regular", "[action]") {
  MultiDegree d = {1, 1, 1, 1};
  GroupAction rep = rho1();
  for (auto& w : all_group_elements()) {
    FieldElement tr = matrix_trace(action_matrix(rep.spec_of(w), d));
    CAPTURE(w.to_string());
    if (w.is_identity())
      REQUIRE(tr == fe(16));
    else
      REQUIRE(tr == fe(0));
  }
  // sigma is an involution on the same slice
  SparseMatrix S = action_matrix(sigma(), d);
  SparseMatrix S2 = action_matrix(compose(sigma(), sigma()), d);
  REQUIRE(same_matrix(S2, action_matrix(identity_action(xring()), d)));
  REQUIRE(S.nrows == 16);
}

TEST_CASE("point action is compatible with substitution", "[action]") {
  std::mt19937_64 rng(77);
  GroupAction rep = stars();
  for (int trial = 0; trial < 10; ++trial) {
    ActionSpec S = rep.spec_of(all_group_elements()[rng() % 16]);
    Polynomial p = random_poly(rng, {1, 1, 1, 1});
    ProductPoint pt = random_point(rng);
    // exact identity on raw (unnormalized) image coordinates
    auto raw = act_coords(S, pt.coords);
    std::vector<FieldElement> flat;
    for (auto& c : raw) {
      flat.push_back(c[0]);
      flat.push_back(c[1]);
    }
    REQUIRE(apply_action(S, p).evaluate(pt.flat()) ==
            S.scalar * p.evaluate(flat));
  }
}

TEST_CASE("fixed points of the three involutions", "[action]") {
  GroupAction rep = stars();
  GroupElement g2{2, 0}, h2{0, 2}, g2h2{2, 2};
  FieldElement one = fe(1), zero = fe(0), im = imag();

  std::vector<ProductPoint> fix_g2;
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<std::array<FieldElement, 2>> raw;
    for (int i = 0; i < 4; ++i)
      raw.push_back((mask >> i) & 1 ? std::array<FieldElement, 2>{one, zero}
                                    : std::array<FieldElement, 2>{zero, one});
    fix_g2.push_back(make_point(xring()->field, raw));
  }
  for (auto& pt : fix_g2) REQUIRE(act_on_point(rep, g2, pt) == pt);

  // (1:±1)^4 is fixed by h^2 and (1:±i)^4 by g^2 h^2
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<std::array<FieldElement, 2>> raw1, raw2;
    for (int i = 0; i < 4; ++i) {
      FieldElement s = (mask >> i) & 1 ? one : fe(-1);
      raw1.push_back({one, s});
      raw2.push_back({one, s * im});
    }
    ProductPoint p1 = make_point(xring()->field, raw1);
    ProductPoint p2 = make_point(xring()->field, raw2);
    REQUIRE(act_on_point(rep, h2, p1) == p1);
    REQUIRE(act_on_point(rep, g2h2, p2) == p2);
  }

  // orbits of Fix(g^2) under <g^2>: 16 singletons, full stabilizers
  auto part = orbits(fix_g2, {g2}, rep);
  REQUIRE(part.orbits.size() == 16);
  REQUIRE(part.subgroup.size() == 2);
  for (auto& st : part.stabilizers) REQUIRE(st.size() == 2);

  // identity fixes any point
  std::mt19937_64 rng(5);
  ProductPoint q = random_point(rng);
  REQUIRE(act_on_point(rep, GroupElement{}, q) == q);
}

TEST_CASE("isotypic slices of the 16-dimensional space", "[action]") {
  MultiDegree d = {1, 1, 1, 1};
  FieldElement one = fe(1), im = imag();

  // invariants: dimension 1
  auto inv = isotypic_slice(xring(), d, {{rho1g(), one}, {rho1h(), one}});
  REQUIRE(inv.size() == 1);
  // the generator is fixed by both generator actions
  REQUIRE(apply_action(rho1g(), inv[0]) == inv[0]);
  REQUIRE(apply_action(rho1h(), inv[0]) == inv[0]);

  // the (-,+) slice also has dimension 1
  auto mp = isotypic_slice(xring(), d, {{rho1g(), fe(-1)}, {rho1h(), one}});
  REQUIRE(mp.size() == 1);

  // all 8 one-dimensional characters of the group (scalars must satisfy
  // c_g^2 = 1 from the braid relation and c_h^4 = 1): each slice has
  // dimension 1, and together they span half of the 16-dimensional space;
  // the two 2-dimensional irreducibles carry the other half (each twice),
  // which the regular character computed above certifies.
  int total = 0;
  for (long cg : {1L, -1L})
    for (int k = 0; k < 4; ++k) {
      FieldElement ch = im.pow(k);
      auto slice = isotypic_slice(
          xring(), d, {{rho1g(), fe(cg)}, {rho1h(), ch}});
      CAPTURE(cg, k);
      REQUIRE(slice.size() == 1);
      total += static_cast<int>(slice.size());
    }
  REQUIRE(total == 8);
}
