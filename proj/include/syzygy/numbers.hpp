#pragma once
// Arbitrary-precision integer/rational helpers on top of GMP, plus the
// word-sized modular kit used by the multi-modular linear algebra:
// deterministic prime generation, Montgomery arithmetic, CRT and rational
// reconstruction.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace syz {

using Int = mpz_class;
using Rat = mpq_class;

struct ReconstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int numer(const Rat& q) { return Int(q.get_num()); }
inline Int denom(const Rat& q) { return Int(q.get_den()); }

inline std::string rat_to_string(const Rat& q) {
  Rat c(q);
  c.canonicalize();
  return c.get_str();
}

// ----------------------------------------------------------------- primes ---

// Deterministic stream of distinct 31-bit primes derived from a seed.
class PrimeStream {
 public:
  explicit PrimeStream(std::uint64_t seed) : rng_(seed) {}

  std::uint32_t next() {
    for (;;) {
      std::uint64_t c = (rng_() % (1ull << 30)) + (1ull << 30);  // in [2^30, 2^31)
      c |= 1;
      mpz_class z(static_cast<unsigned long>(c));
      if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0) continue;
      bool fresh = true;
      for (std::uint32_t p : issued_)
        if (p == c) { fresh = false; break; }
      if (!fresh) continue;
      issued_.push_back(static_cast<std::uint32_t>(c));
      return static_cast<std::uint32_t>(c);
    }
  }

  const std::vector<std::uint32_t>& issued() const { return issued_; }

 private:
  std::mt19937_64 rng_;
  std::vector<std::uint32_t> issued_;
};

// ------------------------------------------------------------- Montgomery ---

// Montgomery arithmetic modulo an odd prime p < 2^31 (R = 2^32).  Values are
// kept in Montgomery form inside the elimination kernels; `to`/`from` convert
// at the boundary.
struct Mont {
  std::uint32_t p = 0;
  std::uint32_t pinv = 0;  // -p^{-1} mod 2^32
  std::uint32_t r2 = 0;    // 2^64 mod p
  std::uint32_t one = 0;   // 2^32 mod p (the Montgomery form of 1)

  Mont() = default;
  explicit Mont(std::uint32_t prime) : p(prime) {
    if (p < 3 || (p & 1u) == 0) throw std::invalid_argument("Mont: need an odd prime");
    std::uint32_t x = p;  // Newton iteration for p^{-1} mod 2^32
    for (int it = 0; it < 5; ++it) x *= 2u - p * x;
    pinv = ~x + 1u;  // -p^{-1}
    std::uint64_t r = (~std::uint64_t{0} % p) + 1;  // 2^64 mod p ... via (2^64-1 mod p)+1
    if (r == p) r = 0;
    r2 = static_cast<std::uint32_t>(r);
    one = redc(r2);  // REDC(2^64 mod p) = 2^32 mod p
  }

  std::uint32_t redc(std::uint64_t t) const {
    std::uint32_t m = static_cast<std::uint32_t>(t) * pinv;
    std::uint64_t s = (t + static_cast<std::uint64_t>(m) * p) >> 32;
    return s >= p ? static_cast<std::uint32_t>(s - p) : static_cast<std::uint32_t>(s);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return redc(static_cast<std::uint64_t>(a) * b);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;  // p < 2^31 so no wraparound
    return s >= p ? s - p : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
  std::uint32_t to(std::uint32_t a) const { return mul(a % p, r2); }
  std::uint32_t from(std::uint32_t a) const { return redc(a); }
  std::uint32_t pow(std::uint32_t base, std::uint64_t e) const {
    std::uint32_t acc = one, b = base;
    while (e) {
      if (e & 1) acc = mul(acc, b);
      b = mul(b, b);
      e >>= 1;
    }
    return acc;
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("Mont::inv of zero");
    return pow(a, p - 2);
  }
};

// Residue of an exact rational mod p (plain form, not Montgomery).
// Throws if the denominator vanishes mod p.
inline std::uint32_t rat_mod_p(const Rat& q, std::uint32_t p) {
  Int n = numer(q), d = denom(q);
  unsigned long dn = mpz_fdiv_ui(d.get_mpz_t(), p);
  if (dn == 0) throw std::domain_error("denominator divisible by the chosen prime");
  unsigned long nn = mpz_fdiv_ui(n.get_mpz_t(), p);
  Mont M(p);
  return M.from(M.mul(M.to(static_cast<std::uint32_t>(nn)),
                      M.inv(M.to(static_cast<std::uint32_t>(dn)))));
}

// --------------------------------------------------------- CRT / lifting ----

// Combine residues r_i mod p_i (pairwise coprime) into the unique residue
// mod prod(p_i), returned together with the modulus.
inline std::pair<Int, Int> crt(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& residues) {
  Int r = 0, m = 1;
  for (auto [ri, pi] : residues) {
    Int p(static_cast<unsigned long>(pi));
    if (m == 1) {
      r = static_cast<unsigned long>(ri);
      m = p;
      continue;
    }
    Int minv;
    if (mpz_invert(minv.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()) == 0)
      throw std::invalid_argument("crt: moduli not coprime");
    Int diff = (Int(static_cast<unsigned long>(ri)) - r) % p;
    if (diff < 0) diff += p;
    Int k = (diff * minv) % p;
    r += k * m;
    m *= p;
  }
  return {r, m};
}

// Rational reconstruction: the unique a/b with |a|, b <= sqrt(M/2), b > 0,
// gcd(b, M) = 1 and a = b*r (mod M), if it exists.
inline std::optional<Rat> rational_reconstruct_mod(const Int& r0, const Int& m0) {
  Int bound;
  mpz_sqrt(bound.get_mpz_t(), Int(m0 / 2).get_mpz_t());
  Int r = r0 % m0;
  if (r < 0) r += m0;
  // Half-extended Euclid on (m0, r): stop when the remainder drops to bound.
  Int a = m0, b = r, x0 = 0, x1 = 1;
  while (b > bound) {
    Int q = a / b;
    Int t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  // candidate: b / x1 (sign-normalized)
  if (x1 == 0) return std::nullopt;
  Int num = b, den = x1;
  if (den < 0) {
    den = -den;
    num = -num;
  }
  if (den > bound || num > bound || num < -bound) return std::nullopt;
  Int g;
  mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), m0.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rat q(num, den);
  q.canonicalize();
  // Verify: num = den * r (mod m0) is implied by the Euclidean identity, but
  // the gcd(num, den) cancellation must still satisfy it; check explicitly.
  Int lhs = (numer(q) - denom(q) * r) % m0;
  if (lhs != 0) return std::nullopt;
  return q;
}

inline Rat rational_reconstruct(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& residues) {
  if (residues.empty()) throw ReconstructionError("rational_reconstruct: no residues");
  auto [r, m] = crt(residues);
  auto q = rational_reconstruct_mod(r, m);
  if (!q) throw ReconstructionError("rational reconstruction failed within the bound for the given primes");
  return *q;
}

}  // namespace syz
