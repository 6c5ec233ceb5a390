#pragma once
// Exact coefficient fields: rationals, Gaussian rationals, prime fields, and
// simple extensions QQ[t]/(m(t)).  Elements are immutable values; arithmetic
// between different field kinds is rejected.

#include <syzygy/numbers.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace syz {

struct FieldMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZeroDivisorError : std::runtime_error {
  // Raised when inversion in QQ[t]/(m) meets a zero divisor, which proves the
  // modulus reducible.  Reported distinctly instead of being silently accepted.
  using std::runtime_error::runtime_error;
};

enum class FieldKind { Rational, Gaussian, Prime, Extension };

// --------------------------------------------------------- dense QQ[t] ops --
// Minimal dense polynomial helpers over QQ used by the extension field
// (coefficients low degree first, no trailing zeros).
namespace qpoly {

inline void trim(std::vector<Rat>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int deg(const std::vector<Rat>& a) { return static_cast<int>(a.size()) - 1; }

inline std::vector<Rat> mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rat> c(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

inline std::vector<Rat> add(std::vector<Rat> a, const std::vector<Rat>& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

inline std::vector<Rat> scale(std::vector<Rat> a, const Rat& c) {
  if (c == 0) return {};
  for (auto& x : a) x *= c;
  return a;
}

// Euclidean division a = q*b + r with deg r < deg b.
inline std::pair<std::vector<Rat>, std::vector<Rat>> divmod(std::vector<Rat> a,
                                                            const std::vector<Rat>& b) {
  if (b.empty()) throw std::domain_error("qpoly::divmod by zero");
  std::vector<Rat> q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
  const Rat lead = b.back();
  while (a.size() >= b.size()) {
    Rat c = a.back() / lead;
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
    if (a.empty()) break;
  }
  trim(q);
  return {q, a};
}

// Extended gcd: returns (g, u) with u*a = g (mod m); g monic.
inline std::pair<std::vector<Rat>, std::vector<Rat>> half_ext_gcd(std::vector<Rat> a,
                                                                  std::vector<Rat> m) {
  std::vector<Rat> r0 = std::move(m), r1 = std::move(a);
  std::vector<Rat> s0 = {}, s1 = {Rat(1)};  // coefficients of `a`
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    std::vector<Rat> s = add(s0, scale(mul(q, s1), Rat(-1)));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (!r0.empty() && r0.back() != 1) {
    Rat inv = 1 / r0.back();
    r0 = scale(std::move(r0), inv);
    s0 = scale(std::move(s0), inv);
  }
  return {r0, s0};
}

}  // namespace qpoly

// -------------------------------------------------------------- FieldSpec ---

struct FieldSpec {
  FieldKind kind = FieldKind::Rational;
  std::uint32_t p = 0;             // Prime only
  std::vector<Rat> modulus;        // Extension only, low degree first

  bool operator==(const FieldSpec& o) const {
    return kind == o.kind && p == o.p && modulus == o.modulus;
  }

  int extension_degree() const { return static_cast<int>(modulus.size()) - 1; }

  std::string name() const {
    switch (kind) {
      case FieldKind::Rational: return "QQ";
      case FieldKind::Gaussian: return "QQi";
      case FieldKind::Prime: return "GF " + std::to_string(p);
      case FieldKind::Extension: {
        std::ostringstream os;
        os << "QQ[t]/(";
        bool first = true;
        for (int d = extension_degree(); d >= 0; --d) {
          const Rat& c = modulus[static_cast<std::size_t>(d)];
          if (c == 0) continue;
          Rat a(c);
          a.canonicalize();
          if (!first) os << (a > 0 ? "+" : "-");
          Rat mag = a > 0 ? a : Rat(-a);
          if (first && a < 0) os << "-";
          if (d == 0 || mag != 1) os << mag.get_str();
          if (d > 0) {
            if (mag != 1) os << "*";
            os << "t";
            if (d > 1) os << "^" << d;
          }
          first = false;
        }
        os << ")";
        return os.str();
      }
    }
    return "?";
  }
};

using FieldRef = std::shared_ptr<const FieldSpec>;

inline FieldRef field_QQ() {
  static FieldRef f = std::make_shared<FieldSpec>(FieldSpec{FieldKind::Rational, 0, {}});
  return f;
}
inline FieldRef field_QQi() {
  static FieldRef f = std::make_shared<FieldSpec>(FieldSpec{FieldKind::Gaussian, 0, {}});
  return f;
}
inline FieldRef field_GF(std::uint32_t p) {
  mpz_class z(static_cast<unsigned long>(p));
  if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
    throw std::invalid_argument("field_GF: characteristic must be prime");
  return std::make_shared<FieldSpec>(FieldSpec{FieldKind::Prime, p, {}});
}
inline FieldRef field_extension(std::vector<Rat> modulus) {
  for (auto& x : modulus) x.canonicalize();
  qpoly::trim(modulus);
  if (qpoly::deg(modulus) < 1)
    throw std::invalid_argument("field_extension: modulus must be non-constant");
  return std::make_shared<FieldSpec>(FieldSpec{FieldKind::Extension, 0, std::move(modulus)});
}

inline bool same_field(const FieldRef& a, const FieldRef& b) {
  return a == b || (a && b && *a == *b);
}

// ------------------------------------------------------------ FieldElement --

class FieldElement {
 public:
  FieldElement() : spec_(field_QQ()) {}

  static FieldElement zero(const FieldRef& f) { return FieldElement(f); }
  static FieldElement one(const FieldRef& f) {
    FieldElement e(f);
    switch (f->kind) {
      case FieldKind::Rational:
      case FieldKind::Gaussian: e.re_ = 1; break;
      case FieldKind::Prime: e.r_ = 1 % f->p; break;
      case FieldKind::Extension: e.c_ = {Rat(1)}; break;
    }
    return e;
  }
  static FieldElement from_rat(const FieldRef& f, Rat q) {
    q.canonicalize();
    FieldElement e(f);
    switch (f->kind) {
      case FieldKind::Rational:
      case FieldKind::Gaussian: e.re_ = std::move(q); break;
      case FieldKind::Prime: e.r_ = rat_mod_p(q, f->p); break;
      case FieldKind::Extension:
        if (q != 0) e.c_ = {std::move(q)};
        break;
    }
    return e;
  }
  static FieldElement from_long(const FieldRef& f, long v) { return from_rat(f, Rat(v)); }
  // i in QQi.
  static FieldElement imaginary_unit(const FieldRef& f) {
    require(f->kind == FieldKind::Gaussian, "i exists only in QQi");
    FieldElement e(f);
    e.im_ = 1;
    return e;
  }
  // t in QQ[t]/(m).
  static FieldElement generator(const FieldRef& f) {
    require(f->kind == FieldKind::Extension, "t exists only in an extension field");
    FieldElement e(f);
    e.c_ = {Rat(0), Rat(1)};
    if (f->extension_degree() == 1) e.reduce_extension();
    return e;
  }
  static FieldElement from_residue(const FieldRef& f, std::uint32_t r) {
    require(f->kind == FieldKind::Prime, "from_residue needs a prime field");
    FieldElement e(f);
    e.r_ = r % f->p;
    return e;
  }
  static FieldElement from_coeffs(const FieldRef& f, std::vector<Rat> c) {
    require(f->kind == FieldKind::Extension, "from_coeffs needs an extension field");
    FieldElement e(f);
    for (auto& x : c) x.canonicalize();
    e.c_ = std::move(c);
    e.reduce_extension();
    return e;
  }
  static FieldElement gaussian(const FieldRef& f, Rat re, Rat im) {
    require(f->kind == FieldKind::Gaussian, "gaussian() needs QQi");
    FieldElement e(f);
    re.canonicalize();
    im.canonicalize();
    e.re_ = std::move(re);
    e.im_ = std::move(im);
    return e;
  }

  const FieldRef& field() const { return spec_; }
  FieldKind kind() const { return spec_->kind; }

  bool is_zero() const {
    switch (kind()) {
      case FieldKind::Rational: return re_ == 0;
      case FieldKind::Gaussian: return re_ == 0 && im_ == 0;
      case FieldKind::Prime: return r_ == 0;
      case FieldKind::Extension: return c_.empty();
    }
    return true;
  }
  bool is_one() const { return *this == one(spec_); }

  bool operator==(const FieldElement& o) const {
    if (!same_field(spec_, o.spec_)) return false;
    switch (kind()) {
      case FieldKind::Rational: return re_ == o.re_;
      case FieldKind::Gaussian: return re_ == o.re_ && im_ == o.im_;
      case FieldKind::Prime: return r_ == o.r_;
      case FieldKind::Extension: return c_ == o.c_;
    }
    return false;
  }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  FieldElement operator+(const FieldElement& o) const {
    check_same(o);
    FieldElement e(spec_);
    switch (kind()) {
      case FieldKind::Rational: e.re_ = re_ + o.re_; break;
      case FieldKind::Gaussian:
        e.re_ = re_ + o.re_;
        e.im_ = im_ + o.im_;
        break;
      case FieldKind::Prime: {
        std::uint64_t s = static_cast<std::uint64_t>(r_) + o.r_;
        e.r_ = static_cast<std::uint32_t>(s >= spec_->p ? s - spec_->p : s);
        break;
      }
      case FieldKind::Extension: e.c_ = qpoly::add(c_, o.c_); break;
    }
    return e;
  }
  FieldElement operator-() const {
    FieldElement e(spec_);
    switch (kind()) {
      case FieldKind::Rational: e.re_ = -re_; break;
      case FieldKind::Gaussian:
        e.re_ = -re_;
        e.im_ = -im_;
        break;
      case FieldKind::Prime: e.r_ = r_ == 0 ? 0 : spec_->p - r_; break;
      case FieldKind::Extension: e.c_ = qpoly::scale(c_, Rat(-1)); break;
    }
    return e;
  }
  FieldElement operator-(const FieldElement& o) const { return *this + (-o); }

  FieldElement operator*(const FieldElement& o) const {
    check_same(o);
    FieldElement e(spec_);
    switch (kind()) {
      case FieldKind::Rational: e.re_ = re_ * o.re_; break;
      case FieldKind::Gaussian:
        e.re_ = re_ * o.re_ - im_ * o.im_;
        e.im_ = re_ * o.im_ + im_ * o.re_;
        break;
      case FieldKind::Prime: {
        Mont m(spec_->p);
        e.r_ = m.from(m.mul(m.to(r_), m.to(o.r_)));
        break;
      }
      case FieldKind::Extension: {
        e.c_ = qpoly::mul(c_, o.c_);
        e.reduce_extension();
        break;
      }
    }
    return e;
  }

  FieldElement inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    FieldElement e(spec_);
    switch (kind()) {
      case FieldKind::Rational: e.re_ = 1 / re_; break;
      case FieldKind::Gaussian: {
        Rat n = re_ * re_ + im_ * im_;
        e.re_ = re_ / n;
        e.im_ = -im_ / n;
        break;
      }
      case FieldKind::Prime: {
        Mont m(spec_->p);
        e.r_ = m.from(m.inv(m.to(r_)));
        break;
      }
      case FieldKind::Extension: {
        auto [g, u] = qpoly::half_ext_gcd(c_, spec_->modulus);
        if (qpoly::deg(g) != 0)
          throw ZeroDivisorError("non-invertible element: the extension modulus is reducible");
        e.c_ = u;
        e.reduce_extension();
        break;
      }
    }
    return e;
  }
  FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }

  FieldElement pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    FieldElement acc = one(spec_), b = *this;
    unsigned long e = static_cast<unsigned long>(n);
    while (e) {
      if (e & 1) acc = acc * b;
      b = b * b;
      e >>= 1;
    }
    return acc;
  }

  // Complex conjugation on QQi (identity on QQ).
  FieldElement conj() const {
    if (kind() == FieldKind::Rational) return *this;
    require(kind() == FieldKind::Gaussian, "conj needs QQi (or QQ)");
    FieldElement e(spec_);
    e.re_ = re_;
    e.im_ = -im_;
    return e;
  }

  // Accessors (meaningful per kind).
  const Rat& rat() const {
    require(kind() == FieldKind::Rational, "not a rational element");
    return re_;
  }
  const Rat& real_part() const { return re_; }
  const Rat& imag_part() const { return im_; }
  std::uint32_t residue() const { return r_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  // Exact rational value if this element is rational-valued in its field.
  std::optional<Rat> as_rational() const {
    switch (kind()) {
      case FieldKind::Rational: return re_;
      case FieldKind::Gaussian:
        if (im_ == 0) return re_;
        return std::nullopt;
      case FieldKind::Prime: return std::nullopt;
      case FieldKind::Extension:
        if (c_.empty()) return Rat(0);
        if (c_.size() == 1) return c_[0];
        return std::nullopt;
    }
    return std::nullopt;
  }

  std::string to_string() const {
    switch (kind()) {
      case FieldKind::Rational: return rat_to_string(re_);
      case FieldKind::Gaussian: {
        if (im_ == 0) return rat_to_string(re_);
        std::ostringstream os;
        os << "(" << rat_to_string(re_);
        Rat im(im_);
        im.canonicalize();
        if (im > 0)
          os << " + " << (im == 1 ? std::string("i") : rat_to_string(im) + "*i");
        else
          os << " - " << (im == -1 ? std::string("i") : rat_to_string(Rat(-im)) + "*i");
        os << ")";
        return os.str();
      }
      case FieldKind::Prime: return std::to_string(r_);
      case FieldKind::Extension: {
        if (c_.empty()) return "0";
        std::ostringstream os;
        os << "(";
        bool first = true;
        for (std::size_t d = 0; d < c_.size(); ++d) {
          if (c_[d] == 0) continue;
          Rat a(c_[d]);
          a.canonicalize();
          if (!first) os << (a > 0 ? " + " : " - ");
          else if (a < 0) os << "-";
          Rat mag = a > 0 ? a : Rat(-a);
          if (d == 0 || mag != 1) os << rat_to_string(mag);
          if (d > 0) {
            if (mag != 1) os << "*";
            os << "t";
            if (d > 1) os << "^" << d;
          }
          first = false;
        }
        os << ")";
        return os.str();
      }
    }
    return "?";
  }

 private:
  explicit FieldElement(FieldRef f) : spec_(std::move(f)) {}

  static void require(bool ok, const char* msg) {
    if (!ok) throw FieldMismatchError(msg);
  }
  void check_same(const FieldElement& o) const {
    if (!same_field(spec_, o.spec_))
      throw FieldMismatchError("arithmetic between elements of different fields");
  }
  void reduce_extension() {
    qpoly::trim(c_);
    if (qpoly::deg(c_) >= spec_->extension_degree())
      c_ = qpoly::divmod(std::move(c_), spec_->modulus).second;
    qpoly::trim(c_);
  }

  FieldRef spec_;
  Rat re_, im_;            // Rational / Gaussian payload
  std::uint32_t r_ = 0;    // Prime payload
  std::vector<Rat> c_;     // Extension payload, degree < deg(modulus)
};

// Image of an exact rational in GF(p); rejects denominators divisible by p.
inline FieldElement reduce_mod_prime(const FieldElement& a, std::uint32_t p) {
  if (a.kind() != FieldKind::Rational)
    throw FieldMismatchError("reduce_mod_prime expects a rational element");
  return FieldElement::from_residue(field_GF(p), rat_mod_p(a.rat(), p));
}

// Embedding QQ -> K for any supported K; identity coercions allowed.
inline FieldElement coerce(const FieldElement& a, const FieldRef& target) {
  if (same_field(a.field(), target)) return a;
  if (a.kind() == FieldKind::Rational) {
    if (target->kind == FieldKind::Prime) return reduce_mod_prime(a, target->p);
    return FieldElement::from_rat(target, a.rat());
  }
  if (auto q = a.as_rational()) return FieldElement::from_rat(target, *q);
  throw FieldMismatchError("no embedding between the given fields");
}

}  // namespace syz
