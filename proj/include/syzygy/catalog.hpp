#pragma once
// Built-in constants: the rings, named polynomials, group actions, point
// lists, and witness data that every verification check draws from.  All
// polynomial constants are entered through the expression parser (or built
// from previously entered constants), never as flat coefficient dumps, so the
// catalog itself is exercised by the test suite.

#include <syzygy/action.hpp>
#include <syzygy/parse.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace syz {

// One irreducible surface inside the singular locus of the degree-10
// hypersurface: its two ideal generators (optionally a second generating
// pair cutting the same surface), a witness point, and the rank the 5x5
// Hessian of f must have there.
struct SingularSurface {
  std::string name;
  Polynomial gen_a, gen_b;
  std::optional<std::pair<Polynomial, Polynomial>> alt_gens;
  FieldRef witness_field;
  std::vector<FieldElement> witness;  // projective representative, 5 coords
  int hessian_rank = 0;
};

struct Catalog {
  // Rings.  The source ring carries the group action and needs i; relations
  // and Jacobian work runs in a parallel copy over the rationals.
  RingRef xring;    // x10,...,x41 over QQ(i), graded
  RingRef xring_q;  // the same variables over QQ, graded
  RingRef uring6;   // u0..u5 over QQ (relation variables)
  RingRef uring5;   // u0..u4 over QQ (hyperplane-section variables)

  // Source-ring polynomials.
  Polynomial F1, F2;              // the two invariant (1,1,1,1)-forms
  std::vector<Polynomial> U;      // U0..U5, body variant of U5, over QQ(i)
  Polynomial U5_text, U5_appendix;
  std::vector<Polynomial> U_q;    // the same six forms over QQ
  Polynomial U5_text_q, U5_appendix_q;
  Polynomial product_of_norms_q;  // prod_i (x_i0^2 + x_i1^2) over QQ

  // Group actions on the source ring.
  ActionSpec gstar, hstar, rho1_g, rho1_h, rho2_g, rho2_h, sigma;
  GroupAction star_action, rho1_action, rho2_action;

  // Point lists over QQ(i).
  std::vector<ProductPoint> fix_g2, fix_h2, fix_g2h2;
  std::vector<ProductPoint> base_points;       // the 64 common zeros of the U's
  ProductPoint base_rep1, base_rep2;           // the two displayed orbit reps

  // Target-ring polynomials (uring5).
  Polynomial H0, H1, H2, H3, H4, Q0, Q1, G0, G0_alt, G1, F0;
  Polynomial f;                   // homogeneous degree 10, primitive
  Polynomial f_display_literal;   // the displayed grouping, taken verbatim

  // Witness data for the singularity checks.
  std::vector<SingularSurface> surfaces;  // S1, S2_0, S2_1, S3_0, S3_1, S4, S6
  FieldRef smooth_field;                  // QQ[t]/(11 t^4 - 68 t^2 + 108)
  std::vector<FieldElement> smooth_point; // (1 : t : 3 : 1 : 0)
  std::vector<Rat> jacobian_witness;      // affine chart coords of
                                          // ((1:1),(1:0),(1:-1),(1:2))
  std::vector<Rat> jacobian_generic;      // ((1:2),(1:2),(1:2),(1:3))

  Catalog();
};

namespace detail {

inline Polynomial P(const RingRef& r, const std::string& s) {
  return parse_polynomial(r, s);
}

inline std::vector<Polynomial> build_us(const RingRef& r, Polynomial* text,
                                        Polynomial* appendix,
                                        Polynomial* norms = nullptr) {
  Polynomial U0 = P(r,
      "x20*x21*x30*x31*(x10^2+x11^2)*(x40^2+x41^2)"
      "-x10*x11*x40*x41*(x20^2+x21^2)*(x30^2+x31^2)");
  Polynomial U1 = P(r,
      "x10*x11*x30*x31*(x20^2+x21^2)*(x40^2+x41^2)"
      "+x20*x21*x40*x41*(x10^2+x11^2)*(x30^2+x31^2)");
  Polynomial U2 = P(r, "(x10^2*x20^2+x11^2*x21^2)*(x30^2*x40^2+x31^2*x41^2)");
  Polynomial U3 = P(r, "(x11^2*x20^2+x10^2*x21^2)*(x31^2*x40^2+x30^2*x41^2)");
  Polynomial U4 = P(r, "4*x10*x11*x20*x21*x30*x31*x40*x41");
  Polynomial prod =
      P(r, "(x10^2+x11^2)*(x20^2+x21^2)*(x30^2+x31^2)*(x40^2+x41^2)");
  FieldElement half = FieldElement::from_rat(r->field, Rat(1, 2));
  *text = U0 + (U2 + U3) * half + U4 - prod * half;
  *appendix = U0 + (U2 + U3) * half + U4 + prod * half;
  if (norms) *norms = prod;
  return {U0, U1, U2, U3, U4, *text};
}

}  // namespace detail

inline Catalog::Catalog() {
  using detail::P;
  const std::vector<std::string> xnames = {"x10", "x11", "x20", "x21",
                                           "x30", "x31", "x40", "x41"};
  xring = make_ring(field_QQi(), xnames, true);
  xring_q = make_ring(field_QQ(), xnames, true);
  uring6 = make_ring(field_QQ(), {"u0", "u1", "u2", "u3", "u4", "u5"}, false);
  uring5 = make_ring(field_QQ(), {"u0", "u1", "u2", "u3", "u4"}, false);

  // --- source-ring forms -------------------------------------------------
  F1 = P(xring,
         "(x20*x30-x21*x31)*(x11*x40+x10*x41)"
         "-i*(x20*x31-x21*x30)*(x10*x40+x11*x41)");
  F2 = P(xring,
         "(x20*x30-x21*x31)*(x11*x40+x10*x41)"
         "+i*(x20*x31-x21*x30)*(x10*x40+x11*x41)");
  U = detail::build_us(xring, &U5_text, &U5_appendix);
  U_q = detail::build_us(xring_q, &U5_text_q, &U5_appendix_q,
                         &product_of_norms_q);

  // --- actions ------------------------------------------------------------
  const FieldRef& K = xring->field;
  auto e = [&](long v) { return FieldElement::from_long(K, v); };
  std::array<FieldElement, 4> I = {e(1), e(0), e(0), e(1)};
  std::array<FieldElement, 4> A = {e(1), e(0), e(0), e(-1)};
  std::array<FieldElement, 4> B = {e(0), e(1), e(1), e(0)};
  std::array<FieldElement, 4> BA = {e(0), e(-1), e(1), e(0)};
  FieldElement im = FieldElement::imaginary_unit(K);

  gstar = make_action(xring, {1, 0, 3, 2}, {I, A, I, A}, e(1));
  hstar = make_action(xring, {2, 3, 0, 1}, {B, BA, I, A}, e(1));
  rho1_g = scale_action(gstar, im);
  rho1_h = scale_action(hstar, e(-1));
  // The degree-(2,2,2,2) action is determined by making the multiplication
  // of two degree-(1,1,1,1) forms equivariant: on that slice it is the same
  // substitution with the square of the degree-1 scalar.
  rho2_g = scale_action(gstar, im * im);
  rho2_h = scale_action(hstar, e(-1) * e(-1));
  sigma = make_action(xring, {0, 1, 2, 3}, {I, I, B, B}, e(1));
  star_action = {gstar, hstar};
  rho1_action = {rho1_g, rho1_h};
  rho2_action = {rho2_g, rho2_h};

  // --- point lists ---------------------------------------------------------
  FieldElement one = e(1), zero = e(0);
  auto pt01 = [&](int bit) {
    return bit ? std::array<FieldElement, 2>{one, zero}
               : std::array<FieldElement, 2>{zero, one};
  };
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<std::array<FieldElement, 2>> a, b, c;
    for (int i = 0; i < 4; ++i) {
      int bit = (mask >> i) & 1;
      a.push_back(pt01(bit));
      b.push_back({one, bit ? one : e(-1)});
      c.push_back({one, bit ? im : im * e(-1)});
    }
    fix_g2.push_back(make_point(K, a));
    fix_h2.push_back(make_point(K, b));
    fix_g2h2.push_back(make_point(K, c));
  }

  auto sign_pt = [&](int bit) {
    return std::array<FieldElement, 2>{one, bit ? e(-1) : one};
  };
  auto im_pt = [&](int bit) {
    return std::array<FieldElement, 2>{one, bit ? im * e(-1) : im};
  };
  for (int m = 0; m < 16; ++m) {
    int b0 = m & 1, b1 = (m >> 1) & 1, b2 = (m >> 2) & 1, b3 = (m >> 3) & 1;
    base_points.push_back(
        make_point(K, {pt01(b0), pt01(b1), sign_pt(b2), im_pt(b3)}));
    base_points.push_back(
        make_point(K, {pt01(b0), pt01(b1), im_pt(b2), sign_pt(b3)}));
    base_points.push_back(
        make_point(K, {sign_pt(b0), im_pt(b1), pt01(b2), pt01(b3)}));
    base_points.push_back(
        make_point(K, {im_pt(b0), sign_pt(b1), pt01(b2), pt01(b3)}));
  }
  base_rep1 = make_point(
      K, {pt01(0), pt01(0), {one, im * e(-1)}, {one, one}});
  base_rep2 = make_point(
      K, {pt01(0), pt01(1), {one, im * e(-1)}, {one, e(-1)}});

  // --- target-ring table ----------------------------------------------------
  H0 = P(uring5, "u0");
  H1 = P(uring5, "u1");
  H2 = P(uring5, "u2-u3");
  H3 = P(uring5, "-2*u0+u2+u3-2*u4");
  H4 = P(uring5, "u2+u3+2*u4");
  Q0 = P(uring5, "u4^2-u2*u3");
  Q1 = P(uring5, "(u0+u4)^2-u2*u3");
  Polynomial u4 = P(uring5, "u4"), u3v = P(uring5, "u3");
  G0 = H1 * H1 * H3 + (Q0 - H0 * u4 * 2) * H4 + H0 * Q0 * 2;
  G0_alt = (H0 * H0 + H1 * H1) * H3 + H4 * Q0 * 2 + (H0 * 2 - H4) * Q1;
  G1 = H1 * H1 * H3 + Q1 * H4;
  F0 = H4 * G1 + (u3v * 3 + u4) * H0 * H1 * H1 * 4 - H0 * H0 * H4 * H4 * 2 -
       H0 * H4 * H4 * H4;

  // The displayed equation groups the degree-10 form into three blocks.  The
  // display's outer heads are inconsistent (the first and last blocks have
  // total degrees 8 and 12); swapping the two heads yields the homogeneous
  // degree-10 form that the degree-10 relation restricts to, on the nose.
  Polynomial inner1 =
      (H0 * H0 + Q1).pow(2) +
      Q1 * (H1 * H1 * 4 - (H3 - H4) * (H0 * 4 + H4 * 3));
  Polynomial big2 =
      (Q0 - Q1) * (H1 * H1 * H2 * 6 - H3 * H4 * H4 * 2 + H4.pow(3) * 3 -
                   H4 * Q0 * 6) * 2 +
      Q0 * H0.pow(3) * 4 + Q1 * (H0 * H1 * H1 * 4 + H0 * Q0 + H4 * Q0 * 3) * 4 -
      H4 * Q1 * Q1 * 12 + F0 * (H3 - H4) +
      G0 * (H4 * (H3 - H4) + (Q0 - Q1 - H1 * H1) * 2) * 2;
  Polynomial head_q = Q1 * Q1, head_g = G1 * G1;
  f_display_literal = head_q * inner1 + Q1 * G1 * big2 +
                      head_g * (H0 * H0 * Q0 * Q0) * 4;
  f = head_g * inner1 + Q1 * G1 * big2 + head_q * (H0 * H0 * Q0 * Q0) * 4;

  // --- singularity witnesses -------------------------------------------------
  FieldRef QQ = uring5->field;
  auto qpt = [&](long a, long b, long c, long d, long ee) {
    std::vector<FieldElement> v;
    for (long t : {a, b, c, d, ee}) v.push_back(FieldElement::from_long(QQ, t));
    return v;
  };
  FieldRef sqrt5 = field_extension({Rat(-5), Rat(0), Rat(1)});  // t^2 = 5
  FieldElement t5 = FieldElement::generator(sqrt5);
  auto ext = [&](long v) { return FieldElement::from_long(sqrt5, v); };
  std::vector<FieldElement> s4pt = {
      ext(2), t5 * FieldElement::from_rat(sqrt5, Rat(1, 5)), ext(-2), ext(-2),
      ext(1)};  // (2 : 1/sqrt5 : -2 : -2 : 1), since t/5 = 1/sqrt5

  surfaces = {
      {"S1", H2, H3, std::nullopt, QQ, qpt(1, 1, 5, 5, 4), 1},
      {"S2_0", H0, Q0, std::make_pair(H0, Q1), QQ, qpt(0, 1, 4, 1, -2), 1},
      {"S2_1", H1, Q1, std::nullopt, QQ, qpt(1, 0, 4, 1, 1), 1},
      {"S3_0", H0, G0, std::make_pair(H0, G1), QQ, qpt(0, 1, 1, -1, 0), 2},
      {"S3_1", H1, G0, std::nullopt, QQ, qpt(3, 0, 0, 4, 4), 2},
      {"S4", H2, F0, std::nullopt, sqrt5, s4pt, 2},
      {"S6", Q0, G1, std::nullopt, QQ, qpt(1, -1, 1, 0, 0), 2},
  };

  smooth_field = field_extension({Rat(108), Rat(0), Rat(-68), Rat(0), Rat(11)});
  FieldElement t = FieldElement::generator(smooth_field);
  smooth_point = {FieldElement::one(smooth_field), t,
                  FieldElement::from_long(smooth_field, 3),
                  FieldElement::one(smooth_field),
                  FieldElement::zero(smooth_field)};

  jacobian_witness = {Rat(1), Rat(0), Rat(-1), Rat(2)};
  jacobian_generic = {Rat(2), Rat(2), Rat(2), Rat(3)};
}

inline const Catalog& catalog() {
  static const Catalog c;
  return c;
}

}  // namespace syz
