#include <catch2/catch_amalgamated.hpp>

#include <syzygy/field.hpp>

#include <random>

using namespace syz;

namespace {

FieldElement rnd_element(const FieldRef& f, std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 9);
  auto q = [&] { return Rat(num(rng), den(rng)); };
  switch (f->kind) {
    case FieldKind::Rational: return FieldElement::from_rat(f, q());
    case FieldKind::Gaussian: return FieldElement::gaussian(f, q(), q());
    case FieldKind::Prime:
      return FieldElement::from_residue(f, static_cast<std::uint32_t>(rng() % f->p));
    case FieldKind::Extension: {
      std::vector<Rat> c(static_cast<std::size_t>(f->extension_degree()));
      for (auto& x : c) x = q();
      return FieldElement::from_coeffs(f, std::move(c));
    }
  }
  return FieldElement::zero(f);
}

void check_axioms(const FieldRef& f, unsigned seed) {
  std::mt19937 rng(seed);
  const auto zero = FieldElement::zero(f);
  const auto one = FieldElement::one(f);
  REQUIRE(zero.is_zero());
  REQUIRE(one.is_one());
  REQUIRE(zero != one);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = rnd_element(f, rng), b = rnd_element(f, rng), c = rnd_element(f, rng);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + zero == a);
    REQUIRE(a * one == a);
    REQUIRE(a - a == zero);
    REQUIRE(a * zero == zero);
    if (!a.is_zero()) {
      REQUIRE(a * a.inverse() == one);
      REQUIRE(a / a == one);
      REQUIRE(a.pow(3) * a.pow(-3) == one);
    }
    REQUIRE(a.pow(5) == a * a * a * a * a);
  }
}

}  // namespace

TEST_CASE("rational arithmetic basics", "[field]") {
  auto QQ = field_QQ();
  auto half = FieldElement::from_rat(QQ, Rat(1, 2));
  auto third = FieldElement::from_rat(QQ, Rat(1, 3));
  REQUIRE((half + third).to_string() == "5/6");
  REQUIRE(half + third == FieldElement::from_rat(QQ, Rat(5, 6)));
  REQUIRE((half * third).rat() == Rat(1, 6));
  REQUIRE(half.inverse() == FieldElement::from_long(QQ, 2));
  REQUIRE(FieldElement::from_rat(QQ, Rat(-4, 6)).to_string() == "-2/3");
  REQUIRE(FieldElement::from_long(QQ, 7).to_string() == "7");
  REQUIRE(QQ->name() == "QQ");
}

TEST_CASE("gaussian rationals", "[field]") {
  auto K = field_QQi();
  auto i = FieldElement::imaginary_unit(K);
  auto one = FieldElement::one(K);
  REQUIRE(i * i == -one);
  // (1+i)(1-i) = 2
  REQUIRE((one + i) * (one - i) == FieldElement::from_long(K, 2));
  // conj multiplicativity and inversion
  auto z = FieldElement::gaussian(K, Rat(3, 2), Rat(-5, 7));
  auto w = FieldElement::gaussian(K, Rat(-1, 3), Rat(2));
  REQUIRE((z * w).conj() == z.conj() * w.conj());
  REQUIRE(z * z.inverse() == one);
  REQUIRE((one + i).inverse() == FieldElement::gaussian(K, Rat(1, 2), Rat(-1, 2)));
  REQUIRE(i.pow(4) == one);
  REQUIRE(i.to_string() == "(0 + i)");
  REQUIRE(K->name() == "QQi");
}

TEST_CASE("prime field arithmetic", "[field]") {
  auto F7 = field_GF(7);
  auto a = FieldElement::from_long(F7, -1);
  REQUIRE(a.residue() == 6);
  REQUIRE(FieldElement::from_long(F7, 3) * FieldElement::from_long(F7, 5) ==
          FieldElement::from_long(F7, 1));
  REQUIRE(FieldElement::from_long(F7, 3).inverse() == FieldElement::from_long(F7, 5));
  REQUIRE(FieldElement::from_long(F7, 2).pow(6) == FieldElement::one(F7));  // Fermat
  REQUIRE(F7->name() == "GF 7");
  REQUIRE_THROWS_AS(field_GF(10), std::invalid_argument);

  // 1/2 has no image mod 2.
  auto QQ = field_QQ();
  REQUIRE_THROWS_AS(reduce_mod_prime(FieldElement::from_rat(QQ, Rat(1, 2)), 2),
                    std::domain_error);
  REQUIRE(reduce_mod_prime(FieldElement::from_rat(QQ, Rat(1, 2)), 7).residue() == 4);
  REQUIRE(reduce_mod_prime(FieldElement::from_long(QQ, -1), 7).residue() == 6);
}

TEST_CASE("quadratic extension QQ[t]/(t^2-5)", "[field]") {
  auto K = field_extension({Rat(-5), Rat(0), Rat(1)});
  auto t = FieldElement::generator(K);
  REQUIRE(t * t == FieldElement::from_long(K, 5));
  REQUIRE((t * t).as_rational() == Rat(5));
  REQUIRE(t.pow(4) == FieldElement::from_long(K, 25));
  // 1/(1+t) = (t-1)/4
  auto one = FieldElement::one(K);
  REQUIRE((one + t).inverse() ==
          FieldElement::from_coeffs(K, {Rat(-1, 4), Rat(1, 4)}));
  REQUIRE(K->name() == "QQ[t]/(t^2-5)");
  REQUIRE(t.to_string() == "(t)");
  REQUIRE((one + t).to_string() == "(1 + t)");
}

TEST_CASE("reducible modulus is reported on inversion", "[field]") {
  auto K = field_extension({Rat(-1), Rat(0), Rat(1)});  // t^2 - 1 = (t-1)(t+1)
  auto t = FieldElement::generator(K);
  auto one = FieldElement::one(K);
  REQUIRE_THROWS_AS((t - one).inverse(), ZeroDivisorError);
  // (t-1)(t+1) = 0 without either factor vanishing.
  REQUIRE(((t - one) * (t + one)).is_zero());
  REQUIRE_FALSE((t - one).is_zero());
}

TEST_CASE("field axioms hold in every field kind", "[field]") {
  check_axioms(field_QQ(), 101);
  check_axioms(field_QQi(), 102);
  check_axioms(field_GF(10007), 103);
  check_axioms(field_extension({Rat(-5), Rat(0), Rat(1)}), 104);
  check_axioms(field_extension({Rat(108), Rat(0), Rat(-68), Rat(0), Rat(11)}), 105);
}

TEST_CASE("coercion embeds rationals", "[field]") {
  auto QQ = field_QQ();
  auto q = FieldElement::from_rat(QQ, Rat(5, 6));
  REQUIRE(coerce(q, field_QQi()) == FieldElement::gaussian(field_QQi(), Rat(5, 6), Rat(0)));
  REQUIRE(coerce(q, field_GF(10007)).residue() == rat_mod_p(Rat(5, 6), 10007));
  auto K = field_extension({Rat(-5), Rat(0), Rat(1)});
  REQUIRE(coerce(q, K) == FieldElement::from_coeffs(K, {Rat(5, 6)}));
  REQUIRE(coerce(q, QQ) == q);
  auto i = FieldElement::imaginary_unit(field_QQi());
  REQUIRE_THROWS_AS(coerce(i, QQ), FieldMismatchError);
  REQUIRE_THROWS_AS(q + i, FieldMismatchError);
}

TEST_CASE("montgomery arithmetic matches plain modular arithmetic", "[field]") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {3u, 7u, 10007u, 2147483629u}) {
    Mont m(p);
    for (int trial = 0; trial < 200; ++trial) {
      std::uint64_t a = rng() % p, b = rng() % p;
      auto am = m.to(static_cast<std::uint32_t>(a)), bm = m.to(static_cast<std::uint32_t>(b));
      REQUIRE(m.from(m.mul(am, bm)) == static_cast<std::uint32_t>((a * b) % p));
      REQUIRE(m.from(m.add(am, bm)) == static_cast<std::uint32_t>((a + b) % p));
      REQUIRE(m.from(m.sub(am, bm)) == static_cast<std::uint32_t>((a + p - b) % p));
      if (a) {
        REQUIRE(m.from(m.mul(am, m.inv(am))) == 1u);
        REQUIRE(m.from(m.pow(am, p - 1)) == 1u);
      }
    }
  }
}

TEST_CASE("prime stream yields distinct 31-bit primes deterministically", "[field]") {
  PrimeStream s1(42), s2(42);
  std::vector<std::uint32_t> primes;
  for (int k = 0; k < 12; ++k) {
    std::uint32_t p = s1.next();
    REQUIRE(p == s2.next());
    REQUIRE(p >= (1u << 30));
    mpz_class z(static_cast<unsigned long>(p));
    REQUIRE(mpz_probab_prime_p(z.get_mpz_t(), 40) != 0);
    for (auto q : primes) REQUIRE(p != q);
    primes.push_back(p);
  }
}

TEST_CASE("chinese remaindering and rational reconstruction", "[field]") {
  // 5/6 from its residues modulo three primes.
  std::vector<std::uint32_t> primes = {10007, 10009, 10037};
  Rat target(5, 6);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> residues;
  for (auto p : primes) residues.emplace_back(rat_mod_p(target, p), p);
  REQUIRE(rational_reconstruct(residues) == target);

  // Negative value round-trip.
  Rat neg(-731, 1024);
  residues.clear();
  for (auto p : primes) residues.emplace_back(rat_mod_p(neg, p), p);
  REQUIRE(rational_reconstruct(residues) == neg);

  // Reconstruction respects the ring homomorphism: residues of a+b reconstruct a+b.
  std::mt19937 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    Rat a(static_cast<long>(rng() % 2000) - 1000, 1 + static_cast<long>(rng() % 40));
    Rat b(static_cast<long>(rng() % 2000) - 1000, 1 + static_cast<long>(rng() % 40));
    a.canonicalize();
    b.canonicalize();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> rs;
    for (auto p : primes) {
      Mont m(p);
      rs.emplace_back(m.from(m.add(m.to(rat_mod_p(a, p)), m.to(rat_mod_p(b, p)))), p);
    }
    REQUIRE(rational_reconstruct(rs) == a + b);
  }

  // A value whose numerator exceeds the bound for a single small prime fails.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> tiny = {
      {rat_mod_p(Rat(123456789, 987654321), 101), 101}};
  REQUIRE_THROWS_AS(rational_reconstruct(tiny), ReconstructionError);

  // CRT alone: x = 3 mod 5, x = 4 mod 7 -> 18 mod 35.
  auto [v, mod] = crt({{3, 5}, {4, 7}});
  REQUIRE(v == 18);
  REQUIRE(mod == 35);
}
