#pragma once
// Exact multivariate polynomials over the supported fields, with optional
// product-of-projective-lines multigrading (variables in consecutive pairs).

#include <syzygy/field.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace syz {

struct Ring {
  FieldRef field;
  std::vector<std::string> vars;
  bool graded = false;  // when set, vars pair up as coordinates of P^1 factors

  int nvars() const { return static_cast<int>(vars.size()); }
  int nfactors() const { return graded ? nvars() / 2 : 0; }

  std::optional<int> var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
      if (vars[static_cast<std::size_t>(i)] == name) return i;
    return std::nullopt;
  }
};

using RingRef = std::shared_ptr<const Ring>;

inline RingRef make_ring(FieldRef field, std::vector<std::string> vars, bool graded = false) {
  if (vars.empty()) throw std::invalid_argument("ring needs at least one variable");
  if (graded && vars.size() % 2 != 0)
    throw std::invalid_argument("a graded ring needs an even number of variables");
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) throw std::invalid_argument("duplicate variable name: " + vars[i]);
  return std::make_shared<Ring>(Ring{std::move(field), std::move(vars), graded});
}

inline bool same_ring(const RingRef& a, const RingRef& b) {
  return a == b || (a && b && a->vars == b->vars && a->graded == b->graded &&
                    same_field(a->field, b->field));
}

// ---------------------------------------------------------------- Monomial --

using Monomial = std::vector<int>;      // exponent vector, one entry per variable
using MultiDegree = std::vector<int>;   // per-factor degrees (graded) or {total}

inline int total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

// Graded lexicographic order, higher total degree first, earlier variables
// weigh more.  `operator()(a,b)` is "a strictly precedes b" so that a
// std::map sorted with it iterates terms leading-first.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

inline std::string monomial_to_string(const Ring& ring, const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (int v = 0; v < ring.nvars(); ++v) {
    int e = m[static_cast<std::size_t>(v)];
    if (e == 0) continue;
    if (!first) os << "*";
    os << ring.vars[static_cast<std::size_t>(v)];
    if (e > 1) os << "^" << e;
    first = false;
  }
  return first ? "1" : os.str();
}

// -------------------------------------------------------------- Polynomial --

class Polynomial {
 public:
  using TermMap = std::map<Monomial, FieldElement, GrlexGreater>;

  // Null polynomial used only as a placeholder before assignment; any
  // arithmetic on it dereferences a null ring and is rejected by check_ring.
  Polynomial() = default;
  explicit Polynomial(RingRef ring) : ring_(std::move(ring)) {}

  static Polynomial zero(const RingRef& r) { return Polynomial(r); }
  static Polynomial constant(const RingRef& r, FieldElement c) {
    Polynomial p(r);
    p.add_term(Monomial(static_cast<std::size_t>(r->nvars()), 0), std::move(c));
    return p;
  }
  static Polynomial constant(const RingRef& r, long v) {
    return constant(r, FieldElement::from_long(r->field, v));
  }
  static Polynomial variable(const RingRef& r, int v) {
    if (v < 0 || v >= r->nvars()) throw std::out_of_range("variable index out of range");
    Monomial m(static_cast<std::size_t>(r->nvars()), 0);
    m[static_cast<std::size_t>(v)] = 1;
    Polynomial p(r);
    p.add_term(std::move(m), FieldElement::one(r->field));
    return p;
  }
  static Polynomial monomial(const RingRef& r, Monomial m, FieldElement c) {
    if (static_cast<int>(m.size()) != r->nvars())
      throw std::invalid_argument("monomial length does not match the ring");
    for (int e : m)
      if (e < 0) throw std::invalid_argument("negative exponent");
    Polynomial p(r);
    p.add_term(std::move(m), std::move(c));
    return p;
  }

  const RingRef& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  FieldElement coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldElement::zero(ring_->field) : it->second;
  }
  const std::pair<const Monomial, FieldElement>& leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero");
    return *terms_.begin();
  }
  int degree() const {  // max total degree, -1 for zero
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
  }

  bool operator==(const Polynomial& o) const {
    return same_ring(ring_, o.ring_) && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial operator-() const {
    Polynomial r(ring_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  Polynomial operator+(const Polynomial& o) const {
    check_ring(o);
    Polynomial r(*this);
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  Polynomial operator-(const Polynomial& o) const {
    check_ring(o);
    Polynomial r(*this);
    for (auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
  }
  Polynomial operator*(const Polynomial& o) const {
    check_ring(o);
    Polynomial r(ring_);
    for (auto& [ma, ca] : terms_)
      for (auto& [mb, cb] : o.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
  }
  Polynomial operator*(const FieldElement& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    for (auto& [m, a] : terms_) r.terms_.emplace(m, a * c);
    return r;
  }
  Polynomial operator*(long v) const {
    return *this * FieldElement::from_long(ring_->field, v);
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial acc = constant(ring_, 1), b = *this;
    while (n) {
      if (n & 1) acc = acc * b;
      if (n >>= 1) b = b * b;
    }
    return acc;
  }

  // Value at a point; the point's field must admit coercion from the
  // coefficient field (identity, or QQ embedded anywhere).
  FieldElement evaluate(const std::vector<FieldElement>& point) const {
    if (static_cast<int>(point.size()) != ring_->nvars())
      throw std::invalid_argument("point arity does not match the ring");
    FieldRef target = point.empty() ? ring_->field : point[0].field();
    for (auto& x : point)
      if (!same_field(x.field(), target))
        throw FieldMismatchError("point coordinates lie in different fields");
    std::vector<std::vector<FieldElement>> pows(point.size(), {FieldElement::one(target)});
    auto power = [&](std::size_t v, int e) -> const FieldElement& {
      auto& tab = pows[v];
      while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * point[v]);
      return tab[static_cast<std::size_t>(e)];
    };
    FieldElement acc = FieldElement::zero(target);
    for (auto& [m, c] : terms_) {
      FieldElement t = coerce(c, target);
      for (std::size_t v = 0; v < point.size(); ++v)
        if (m[v] > 0) t = t * power(v, m[v]);
      acc = acc + t;
    }
    return acc;
  }

  Polynomial partial(int v) const {
    if (v < 0 || v >= ring_->nvars()) throw std::out_of_range("variable index out of range");
    Polynomial r(ring_);
    for (auto& [m, c] : terms_) {
      int e = m[static_cast<std::size_t>(v)];
      if (e == 0) continue;
      Monomial mm(m);
      mm[static_cast<std::size_t>(v)] = e - 1;
      r.add_term(std::move(mm), c * FieldElement::from_long(ring_->field, e));
    }
    return r;
  }

  // Simultaneous substitution var -> image polynomial.  Images live in a
  // common target ring; variables without an image keep themselves, which
  // requires the target ring to be this ring.
  Polynomial substitute(const std::map<int, Polynomial>& images) const {
    RingRef target = ring_;
    for (auto& [v, img] : images) {
      if (v < 0 || v >= ring_->nvars()) throw std::out_of_range("substituted variable index");
      target = img.ring();
    }
    for (auto& [v, img] : images)
      if (!same_ring(img.ring(), target))
        throw std::invalid_argument("substitution images lie in different rings");
    if (!same_ring(target, ring_))
      for (int v = 0; v < ring_->nvars(); ++v)
        if (!images.count(v))
          throw std::invalid_argument(
              "cross-ring substitution must supply an image for every variable");

    std::vector<Polynomial> base;
    base.reserve(static_cast<std::size_t>(ring_->nvars()));
    for (int v = 0; v < ring_->nvars(); ++v) {
      auto it = images.find(v);
      base.push_back(it != images.end() ? it->second : variable(target, v));
    }
    std::vector<std::vector<Polynomial>> pows(base.size());
    auto power = [&](std::size_t v, int e) -> const Polynomial& {
      auto& tab = pows[v];
      if (tab.empty()) tab.push_back(constant(target, 1));
      while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * base[v]);
      return tab[static_cast<std::size_t>(e)];
    };
    Polynomial acc(target);
    for (auto& [m, c] : terms_) {
      Polynomial t = constant(target, coerce(c, target->field));
      for (std::size_t v = 0; v < base.size(); ++v)
        if (m[v] > 0) t = t * power(v, m[v]);
      acc += t;
    }
    return acc;
  }

  // Scalar c with self == c * other, when it exists.  Both zero gives 1.
  std::optional<FieldElement> proportional(const Polynomial& other) const {
    check_ring(other);
    if (other.is_zero()) {
      if (is_zero()) return FieldElement::one(ring_->field);
      return std::nullopt;
    }
    if (is_zero()) return FieldElement::zero(ring_->field);
    if (terms_.size() != other.terms_.size()) return std::nullopt;
    FieldElement c = terms_.begin()->second / other.terms_.begin()->second;
    auto it = terms_.begin();
    auto jt = other.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
      if (it->first != jt->first) return std::nullopt;
      if (it->second != jt->second * c) return std::nullopt;
    }
    return c;
  }

  // Per-factor degrees when multihomogeneous (graded ring), or {total degree}
  // when homogeneous (ungraded ring); nullopt otherwise.  Zero has any degree:
  // reported as all zeros.
  std::optional<MultiDegree> multidegree() const {
    int parts = ring_->graded ? ring_->nfactors() : 1;
    if (terms_.empty()) return MultiDegree(static_cast<std::size_t>(parts), 0);
    std::optional<MultiDegree> result;
    for (auto& [m, c] : terms_) {
      MultiDegree d(static_cast<std::size_t>(parts), 0);
      if (ring_->graded) {
        for (int f = 0; f < parts; ++f)
          d[static_cast<std::size_t>(f)] =
              m[static_cast<std::size_t>(2 * f)] + m[static_cast<std::size_t>(2 * f + 1)];
      } else {
        d[0] = total_degree(m);
      }
      if (!result) result = std::move(d);
      else if (*result != d) return std::nullopt;
    }
    return result;
  }
  bool is_multihomogeneous() const { return multidegree().has_value(); }

  // Rational-coefficient content/primitive decomposition: self = content * prim,
  // prim having coprime integer coefficients and positive leading coefficient.
  struct PrimitiveDecomposition;
  PrimitiveDecomposition primitive() const;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
      std::string cs = c.to_string();
      bool neg = !cs.empty() && cs[0] == '-';
      if (first) {
        if (neg) {
          os << "-";
          cs = cs.substr(1);
        }
      } else {
        os << (neg ? " - " : " + ");
        if (neg) cs = cs.substr(1);
      }
      std::string ms = monomial_to_string(*ring_, m);
      if (ms == "1") os << cs;
      else if (cs == "1") os << ms;
      else os << cs << "*" << ms;
      first = false;
    }
    return os.str();
  }

  // Coefficients against an explicit monomial list (matrix row construction).
  std::vector<FieldElement> coeff_row(const std::vector<Monomial>& monos) const {
    std::vector<FieldElement> row;
    row.reserve(monos.size());
    for (auto& m : monos) row.push_back(coefficient(m));
    return row;
  }

  void add_term(Monomial m, FieldElement c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  void check_ring(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_))
      throw std::invalid_argument("arithmetic between polynomials of different rings");
  }

  RingRef ring_;
  TermMap terms_;
};

inline Polynomial operator*(const FieldElement& c, const Polynomial& p) { return p * c; }
inline Polynomial operator*(long v, const Polynomial& p) { return p * v; }

struct Polynomial::PrimitiveDecomposition {
  Polynomial prim;
  Rat content;
};

inline Polynomial::PrimitiveDecomposition Polynomial::primitive() const {
  if (ring_->field->kind != FieldKind::Rational)
    throw FieldMismatchError("primitive() needs rational coefficients");
  if (is_zero()) return {*this, Rat(0)};
  Int num_gcd = 0, den_lcm = 1;
  for (auto& [m, c] : terms_) {
    const Rat& q = c.rat();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
  }
  Rat content(num_gcd, den_lcm);
  content.canonicalize();
  if (terms_.begin()->second.rat() < 0) content = -content;
  Polynomial prim(ring_);
  FieldElement inv = FieldElement::from_rat(ring_->field, content).inverse();
  for (auto& [m, c] : terms_) prim.add_term(m, c * inv);
  return {std::move(prim), std::move(content)};
}

// ------------------------------------------------------ monomial catalogues --

// All monomials of the given per-factor multidegree in a graded ring,
// leading-first.  Their number is the product of (d_i + 1).
inline std::vector<Monomial> monomials_of(const RingRef& r, const MultiDegree& deg) {
  if (!r->graded) throw std::invalid_argument("monomials_of needs a graded ring");
  if (static_cast<int>(deg.size()) != r->nfactors())
    throw std::invalid_argument("multidegree arity does not match the ring");
  std::vector<Monomial> out;
  Monomial cur(static_cast<std::size_t>(r->nvars()), 0);
  auto rec = [&](auto&& self, int f) -> void {
    if (f == r->nfactors()) {
      out.push_back(cur);
      return;
    }
    int d = deg[static_cast<std::size_t>(f)];
    if (d < 0) throw std::invalid_argument("negative multidegree");
    for (int a = 0; a <= d; ++a) {
      cur[static_cast<std::size_t>(2 * f)] = d - a;
      cur[static_cast<std::size_t>(2 * f + 1)] = a;
      self(self, f + 1);
    }
    cur[static_cast<std::size_t>(2 * f)] = cur[static_cast<std::size_t>(2 * f + 1)] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), GrlexGreater{});
  return out;
}

// All monomials of the given total degree, leading-first.
inline std::vector<Monomial> monomials_of_total(const RingRef& r, int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  std::vector<Monomial> out;
  Monomial cur(static_cast<std::size_t>(r->nvars()), 0);
  auto rec = [&](auto&& self, int v, int left) -> void {
    if (v == r->nvars() - 1) {
      cur[static_cast<std::size_t>(v)] = left;
      out.push_back(cur);
      cur[static_cast<std::size_t>(v)] = 0;
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[static_cast<std::size_t>(v)] = e;
      self(self, v + 1, left - e);
    }
    cur[static_cast<std::size_t>(v)] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), GrlexGreater{});
  return out;
}

}  // namespace syz
