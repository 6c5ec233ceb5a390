#pragma once

// Degree-bounded relation (syzygy) spaces among polynomials, exact ideal
// membership with explicit cofactor certificates, and proportionality modulo
// an ideal — all reduced to certified exact linear algebra.
//
// Small systems are assembled exactly as sparse coefficient matrices and
// handed to the certified kernel.  Large rational systems never materialize
// the product polynomials: the coefficient matrix is probed by evaluation at
// random points modulo word-size primes.  A full-column-rank evaluation
// modulo a single prime is an exact certificate that no relation exists (it
// exhibits a nonzero integer minor); a deficient rank yields a modular kernel
// that is reconstructed over the rationals and then certified exactly by
// integer grid convolution.  Either way, every reported relation is exact and
// every reported dimension is two-sided certified.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "syzygy/grid.hpp"
#include "syzygy/linalg.hpp"
#include "syzygy/ring.hpp"

namespace syz {

// ------------------------------------------------------- symmetric indices --

// All exponent tuples e in N^m with sum n, in ascending colexicographic
// order: (n,0,...,0) first, (0,...,0,n) last.
inline std::vector<std::vector<int>> sym_indices(int m, int n) {
  if (m <= 0) throw std::invalid_argument("sym_indices: need at least one input");
  if (n < 0) throw std::invalid_argument("sym_indices: negative degree");
  std::vector<std::vector<int>> out;
  std::vector<int> e(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == 0) {
      e[0] = rem;
      out.push_back(e);
      e[0] = 0;
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      e[static_cast<std::size_t>(pos)] = v;
      self(self, pos - 1, rem - v);
    }
    e[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, m - 1, n);
  return out;
}

namespace detail {

// Shared precondition: nonzero inputs in one ring, all homogeneous with one
// common multidegree, so their degree-n products share one grading slice.
inline void require_uniform_inputs(const std::vector<Polynomial>& polys) {
  if (polys.empty()) throw std::invalid_argument("no input polynomials");
  const RingRef& ring = polys.front().ring();
  std::optional<MultiDegree> shared;
  for (const auto& p : polys) {
    if (p.ring().get() != ring.get())
      throw std::invalid_argument("inputs live in different rings");
    if (p.is_zero()) throw std::invalid_argument("zero input polynomial");
    auto md = p.multidegree();
    if (!md) throw std::invalid_argument("inputs must be homogeneous");
    if (!shared)
      shared = md;
    else if (*shared != *md)
      throw std::invalid_argument("mixed multidegrees among the inputs");
  }
}

}  // namespace detail

// -------------------------------------------------------- product assembly --

// Every degree-n product of the inputs, keyed by its exponent tuple, in
// colexicographic order.  Products along the enumeration share prefixes.
inline std::vector<std::pair<std::vector<int>, Polynomial>> sym_products(
    const std::vector<Polynomial>& polys, int n) {
  detail::require_uniform_inputs(polys);
  if (n < 0) throw std::invalid_argument("sym_products: negative degree");
  const int m = static_cast<int>(polys.size());
  std::vector<std::pair<std::vector<int>, Polynomial>> out;
  std::vector<int> e(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto&& self, int pos, int rem, const Polynomial& acc) -> void {
    if (pos == 0) {
      e[0] = rem;
      Polynomial prod = acc;
      for (int t = 0; t < rem; ++t) prod = prod * polys[0];
      out.emplace_back(e, std::move(prod));
      e[0] = 0;
      return;
    }
    Polynomial cur = acc;
    for (int v = 0; v <= rem; ++v) {
      e[static_cast<std::size_t>(pos)] = v;
      self(self, pos - 1, rem - v, cur);
      if (v < rem) cur = cur * polys[static_cast<std::size_t>(pos)];
    }
    e[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, m - 1, n, Polynomial::constant(polys.front().ring(), 1));
  return out;
}

// ---------------------------------------------------------- relation space --

struct RelationSpace {
  int degree = 0;
  std::vector<std::string> names;       // fresh variable names
  RingRef vring;                        // ring those names generate
  std::vector<Polynomial> basis;        // degree-n forms vanishing on the inputs
  std::string certificate;              // how the result was certified
  std::vector<std::uint32_t> primes;    // moduli involved (empty on the exact path)
  int dimension() const { return static_cast<int>(basis.size()); }
};

namespace detail {

// Primitive-integer, positive-leading-coefficient normal form over QQ;
// leading-coefficient-one elsewhere.
inline Polynomial normalize_relation_poly(const Polynomial& p) {
  if (p.is_zero()) return p;
  if (p.ring()->field->kind == FieldKind::Rational) {
    Polynomial prim = p.primitive().prim;
    if (prim.leading_term().second.rat() < 0) prim = -prim;
    return prim;
  }
  FieldElement lead = p.leading_term().second;
  return p * Polynomial::constant(p.ring(), FieldElement::one(p.ring()->field) / lead);
}

// Exact expansion of sum_e c_e * prod_i inputs[i]^{e_i}, sharing prefix
// products along the lex-sorted support.  Fallback certifier for rings the
// grid cannot handle.
inline bool exact_zero_combination(const std::vector<Polynomial>& inputs,
                                   std::vector<std::pair<std::vector<int>, Rat>> support) {
  if (support.empty()) return true;
  std::sort(support.begin(), support.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  const RingRef& ring = inputs.front().ring();
  const int m = static_cast<int>(inputs.size());
  Polynomial acc = Polynomial::zero(ring);
  auto walk = [&](auto&& self, int i, std::size_t lo, std::size_t hi,
                  const Polynomial& prefix) -> void {
    if (i == m) {
      for (std::size_t r = lo; r < hi; ++r)
        acc = acc + prefix * Polynomial::constant(ring, FieldElement::from_rat(ring->field,
                                                                               support[r].second));
      return;
    }
    std::size_t a = lo;
    while (a < hi) {
      const int v = support[a].first[static_cast<std::size_t>(i)];
      std::size_t b = a;
      while (b < hi && support[b].first[static_cast<std::size_t>(i)] == v) ++b;
      Polynomial next = prefix;
      for (int t = 0; t < v; ++t) next = next * inputs[static_cast<std::size_t>(i)];
      self(self, i + 1, a, b, next);
      a = b;
    }
  };
  walk(walk, 0, 0, support.size(), Polynomial::constant(ring, 1));
  return acc.is_zero();
}

// Exact certification dispatcher: integer grid convolution when the ring is
// pair-graded with integer data, exact polynomial expansion otherwise.
inline bool certify_relation_vector(const std::vector<Polynomial>& inputs,
                                    const std::vector<std::pair<std::vector<int>, Rat>>& support,
                                    std::string& how) {
  bool integral = true;
  for (auto& [e, c] : support) {
    (void)e;
    if (c.get_den() != 1) integral = false;
  }
  if (integral) {
    try {
      std::vector<std::pair<std::vector<int>, mpz_class>> zs;
      zs.reserve(support.size());
      for (auto& [e, c] : support) zs.emplace_back(e, mpz_class(c.get_num()));
      bool ok = certify_zero_combination(inputs, zs);
      how = "integer grid convolution";
      return ok;
    } catch (const GridError&) {
      // fall through to the generic expansion
    }
  }
  how = "exact polynomial expansion";
  return exact_zero_combination(inputs, support);
}

// Exact sparse assembly + certified kernel: the small-system path.
inline RelationSpace relation_space_exact(const std::vector<Polynomial>& polys, int n,
                                          RelationSpace shell, const KernelOptions& opt) {
  auto products = sym_products(polys, n);
  const int ncols = static_cast<int>(products.size());
  std::map<Monomial, int> row_of;
  for (auto& [e, p] : products) {
    (void)e;
    for (auto& [mono, c] : p.terms()) {
      (void)c;
      row_of.emplace(mono, 0);
    }
  }
  int r = 0;
  for (auto& [mono, idx] : row_of) {
    (void)mono;
    idx = r++;
  }
  const FieldRef& field = polys.front().ring()->field;
  SparseMatrix A(field, r, ncols);
  for (int j = 0; j < ncols; ++j)
    for (auto& [mono, c] : products[static_cast<std::size_t>(j)].second.terms())
      A.set(row_of.at(mono), j, c);

  KernelResult K = kernel(A, opt);
  for (auto& vec : K.basis) {
    Polynomial rel = Polynomial::zero(shell.vring);
    Polynomial check = Polynomial::zero(polys.front().ring());
    for (int j = 0; j < ncols; ++j) {
      const FieldElement& c = vec[static_cast<std::size_t>(j)];
      if (c.is_zero()) continue;
      Monomial mono(products[static_cast<std::size_t>(j)].first.begin(),
                    products[static_cast<std::size_t>(j)].first.end());
      rel.add_term(std::move(mono), c);
      check = check + products[static_cast<std::size_t>(j)].second * Polynomial::constant(polys.front().ring(), c);
    }
    if (!check.is_zero())
      throw std::logic_error("relation_space: certified kernel vector fails exact substitution");
    shell.basis.push_back(normalize_relation_poly(rel));
  }
  shell.primes = K.primes;
  std::ostringstream how;
  how << "exact sparse assembly (" << r << " monomial rows x " << ncols
      << " product columns), certified kernel, exact substitution check";
  shell.certificate = how.str();
  return shell;
}

// Evaluation matrix modulo one prime: rows are random points, columns follow
// the colex tuples; entries are products of power tables of the inputs.
struct EvalProbe {
  std::uint32_t p = 0;
  RrefInfo info;
  std::vector<std::vector<std::uint32_t>> kernel;  // plain residues
};

inline EvalProbe evaluation_probe(const std::vector<Polynomial>& W,
                                  const std::vector<std::vector<int>>& tuples, int n,
                                  std::uint32_t p, int nrows, std::uint64_t seed,
                                  bool want_kernel) {
  EvalProbe probe;
  probe.p = p;
  const RingRef& ring = W.front().ring();
  const int nv = static_cast<int>(ring->vars.size());
  const int m = static_cast<int>(W.size());
  const int ncols = static_cast<int>(tuples.size());

  // Per-variable maximal exponent across all inputs, for the power tables.
  std::vector<int> vmax(static_cast<std::size_t>(nv), 0);
  for (auto& w : W)
    for (auto& [mono, c] : w.terms()) {
      (void)c;
      for (int v = 0; v < nv; ++v)
        vmax[static_cast<std::size_t>(v)] =
            std::max(vmax[static_cast<std::size_t>(v)], mono[static_cast<std::size_t>(v)]);
    }

  // Input coefficients reduced once.
  Mont mont(p);
  std::vector<std::vector<std::pair<Monomial, std::uint32_t>>> terms(static_cast<std::size_t>(m));
  for (int t = 0; t < m; ++t)
    for (auto& [mono, c] : W[static_cast<std::size_t>(t)].terms())
      terms[static_cast<std::size_t>(t)].emplace_back(mono, mont.to(rat_mod_p(c.rat(), p)));

  ModMatrix E(p, nrows, ncols);
  std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(p) * 0x9e3779b97f4a7c15ULL));
  std::uniform_int_distribution<std::uint32_t> coord(0, p - 1);
  std::vector<std::vector<std::uint32_t>> pw(static_cast<std::size_t>(nv));
  std::vector<std::vector<std::uint32_t>> wpow(static_cast<std::size_t>(m));
  const std::uint32_t one = mont.to(1);
  for (int i = 0; i < nrows; ++i) {
    for (int v = 0; v < nv; ++v) {
      auto& tab = pw[static_cast<std::size_t>(v)];
      tab.assign(static_cast<std::size_t>(vmax[static_cast<std::size_t>(v)]) + 1, one);
      std::uint32_t x = mont.to(coord(rng));
      for (int k = 1; k <= vmax[static_cast<std::size_t>(v)]; ++k)
        tab[static_cast<std::size_t>(k)] = mont.mul(tab[static_cast<std::size_t>(k) - 1], x);
    }
    for (int t = 0; t < m; ++t) {
      std::uint32_t val = 0;
      for (auto& [mono, c] : terms[static_cast<std::size_t>(t)]) {
        std::uint32_t tv = c;
        for (int v = 0; v < nv; ++v) {
          int ex = mono[static_cast<std::size_t>(v)];
          if (ex) tv = mont.mul(tv, pw[static_cast<std::size_t>(v)][static_cast<std::size_t>(ex)]);
        }
        val = mont.add(val, tv);
      }
      auto& tab = wpow[static_cast<std::size_t>(t)];
      tab.assign(static_cast<std::size_t>(n) + 1, one);
      for (int k = 1; k <= n; ++k)
        tab[static_cast<std::size_t>(k)] = mont.mul(tab[static_cast<std::size_t>(k) - 1], val);
    }
    auto* row = E.row(i);
    for (int j = 0; j < ncols; ++j) {
      std::uint32_t val = one;
      const auto& e = tuples[static_cast<std::size_t>(j)];
      for (int t = 0; t < m; ++t)
        if (e[static_cast<std::size_t>(t)])
          val = mont.mul(val, wpow[static_cast<std::size_t>(t)][static_cast<std::size_t>(
                                  e[static_cast<std::size_t>(t)])]);
      row[j] = val;
    }
  }

  probe.info = mod_rref(E);
  if (want_kernel && probe.info.rank < ncols) probe.kernel = mod_kernel_from_rref(E, probe.info);
  return probe;
}

// Modular evaluation + exact certification: the large rational path.
inline RelationSpace relation_space_modular(const std::vector<Polynomial>& polys, int n,
                                            RelationSpace shell, const KernelOptions& opt) {
  const RingRef& ring = polys.front().ring();
  const int m = static_cast<int>(polys.size());

  // Scale each input to its primitive integer form; relations transform back
  // through the recorded contents.
  std::vector<Polynomial> W;
  std::vector<Rat> content;
  for (auto& p : polys) {
    auto pc = p.primitive();
    W.push_back(pc.prim);
    content.push_back(pc.content);
  }

  auto tuples = sym_indices(m, n);
  const int ncols = static_cast<int>(tuples.size());

  PrimeStream ps(opt.seed ^ 0x5851f42d4c957f2dULL);
  std::vector<EvalProbe> probes;
  int margin = 97;
  int want = std::max(2, opt.min_primes);
  for (int round = 0; round < opt.max_rounds; ++round) {
    while (static_cast<int>(probes.size()) < want + round) {
      std::uint32_t p = ps.next();
      try {
        probes.push_back(evaluation_probe(W, tuples, n, p, ncols + margin,
                                          opt.seed + static_cast<std::uint64_t>(round), true));
      } catch (const std::domain_error&) {
        // bad prime for the input coefficients: draw another
      }
      // A full-rank probe is a one-prime certificate of an empty space: its
      // evaluation matrix is the reduction of an integer matrix V.A, so a
      // full-rank minor modulo p is nonzero over QQ and ker(A) = 0.
      if (!probes.empty() && probes.back().info.rank == ncols) {
        std::ostringstream how;
        how << "empty: full column rank of the evaluation matrix (" << (ncols + margin)
            << " random points) modulo " << probes.back().p;
        shell.certificate = how.str();
        shell.primes = {probes.back().p};
        return shell;
      }
    }

    // Group deficient probes by pivot structure and reconstruct.
    std::map<std::vector<int>, std::vector<const EvalProbe*>> groups;
    for (auto& pr : probes) groups[pr.info.pivots].push_back(&pr);
    for (auto& [piv, group] : groups) {
      (void)piv;
      if (static_cast<int>(group.size()) < want) continue;
      const std::size_t dim = group.front()->kernel.size();
      bool shaped = true;
      for (auto* g : group) shaped = shaped && g->kernel.size() == dim;
      if (!shaped || dim == 0) continue;

      std::vector<Polynomial> basis;
      std::vector<std::string> hows;
      bool all_ok = true;
      for (std::size_t k = 0; k < dim && all_ok; ++k) {
        try {
          std::vector<Rat> vec;
          vec.reserve(static_cast<std::size_t>(ncols));
          for (int j = 0; j < ncols; ++j) {
            std::vector<std::pair<std::uint32_t, std::uint32_t>> residues;
            for (auto* g : group)
              residues.emplace_back(g->kernel[k][static_cast<std::size_t>(j)], g->p);
            vec.push_back(rational_reconstruct(residues));
          }
          normalize_primitive_qq(vec);
          // Certify the W-coordinate relation exactly.
          std::vector<std::pair<std::vector<int>, Rat>> support;
          for (int j = 0; j < ncols; ++j)
            if (vec[static_cast<std::size_t>(j)] != 0)
              support.emplace_back(tuples[static_cast<std::size_t>(j)],
                                   vec[static_cast<std::size_t>(j)]);
          std::string how;
          if (!certify_relation_vector(W, support, how)) {
            all_ok = false;
            break;
          }
          hows.push_back(how);
          // Transform back to the caller's scaling and normalize.
          Polynomial rel = Polynomial::zero(shell.vring);
          for (auto& [e, c] : support) {
            Rat rc = c;
            for (int i = 0; i < m; ++i)
              for (int t = 0; t < e[static_cast<std::size_t>(i)]; ++t)
                rc /= content[static_cast<std::size_t>(i)];
            rel.add_term(Monomial(e.begin(), e.end()), FieldElement::from_rat(ring->field, rc));
          }
          basis.push_back(normalize_relation_poly(rel));
        } catch (const ReconstructionError&) {
          all_ok = false;
        }
      }
      if (!all_ok) continue;

      // Upper bound: nullity <= ncols - rank(E mod p) for each probe in the
      // group; lower bound: `dim` exactly-certified independent vectors.
      shell.basis = std::move(basis);
      std::ostringstream how;
      how << "dimension " << dim << ": rank " << (ncols - static_cast<int>(dim))
          << " evaluation probes modulo " << group.size()
          << " primes (upper bound), reconstructed basis certified by " << hows.front();
      shell.certificate = how.str();
      for (auto* g : group) shell.primes.push_back(g->p);
      return shell;
    }

    margin = margin * 2 + 1;  // points may have been unlucky: denser probes
  }
  throw std::runtime_error("relation_space: could not certify the relation space");
}

}  // namespace detail

// Basis of all degree-n forms R in fresh variables (one per input) with
// R(polys) identically zero.  Names default to v0..v{m-1}.
inline RelationSpace relation_space(const std::vector<Polynomial>& polys, int n,
                                    std::vector<std::string> names = {},
                                    const KernelOptions& opt = {}) {
  detail::require_uniform_inputs(polys);
  if (n < 0) throw std::invalid_argument("relation_space: negative degree");
  const int m = static_cast<int>(polys.size());
  if (names.empty())
    for (int i = 0; i < m; ++i) names.push_back("v" + std::to_string(i));
  if (static_cast<int>(names.size()) != m)
    throw std::invalid_argument("relation_space: one name per input required");

  RelationSpace shell;
  shell.degree = n;
  shell.names = names;
  shell.vring = make_ring(polys.front().ring()->field, names);

  constexpr int kDenseThreshold = 64;
  const long long ncols = static_cast<long long>(sym_indices(m, n).size());
  if (polys.front().ring()->field->kind == FieldKind::Rational && ncols > kDenseThreshold)
    return detail::relation_space_modular(polys, n, std::move(shell), opt);
  return detail::relation_space_exact(polys, n, std::move(shell), opt);
}

// -------------------------------------------------------- ideal membership --

struct MembershipCertificate {
  Polynomial target;
  std::vector<Polynomial> gens;
  std::vector<Polynomial> cofactors;  // target == sum cofactors[i] * gens[i]
  int bound = 0;
};

namespace detail {

struct CofactorColumns {
  std::vector<Polynomial> products;          // gens[gi] * monomial, per column
  std::vector<std::pair<int, Monomial>> of;  // (generator index, monomial)
};

// Column layout for cofactors: exact-degree monomials when everything is
// homogeneous at the bound (then bounded membership IS ideal membership),
// all monomials up to the bound otherwise.
inline CofactorColumns cofactor_columns(const std::vector<Polynomial>& gens, int bound,
                                        bool homogeneous_mode) {
  const RingRef& ring = gens.front().ring();
  CofactorColumns cols;
  for (int gi = 0; gi < static_cast<int>(gens.size()); ++gi) {
    const Polynomial& g = gens[static_cast<std::size_t>(gi)];
    const int dg = g.degree();
    if (dg > bound) continue;
    std::vector<Monomial> monos;
    if (homogeneous_mode) {
      monos = monomials_of_total(ring, bound - dg);
    } else {
      for (int d = 0; d <= bound - dg; ++d)
        for (auto& mn : monomials_of_total(ring, d)) monos.push_back(mn);
    }
    for (auto& mn : monos) {
      cols.products.push_back(g * Polynomial::monomial(ring, mn, FieldElement::one(ring->field)));
      cols.of.emplace_back(gi, mn);
    }
  }
  return cols;
}

inline bool all_homogeneous_at(const std::vector<Polynomial>& targets,
                               const std::vector<Polynomial>& gens, int bound) {
  for (auto& g : gens)
    if (!g.multidegree()) return false;
  for (auto& t : targets) {
    auto md = t.multidegree();
    if (!md || t.degree() != bound) return false;
  }
  return true;
}

inline void require_membership_inputs(const std::vector<Polynomial>& targets,
                                      const std::vector<Polynomial>& gens, int bound) {
  if (targets.empty()) throw std::invalid_argument("membership: no targets");
  if (gens.empty()) throw std::invalid_argument("membership: no generators");
  const RingRef& ring = targets.front().ring();
  for (auto& t : targets)
    if (t.ring().get() != ring.get()) throw std::invalid_argument("membership: mixed rings");
  for (auto& g : gens) {
    if (g.ring().get() != ring.get()) throw std::invalid_argument("membership: mixed rings");
    if (g.is_zero()) throw std::invalid_argument("membership: zero generator");
  }
  for (auto& t : targets)
    if (t.degree() > bound)
      throw std::invalid_argument("membership: target degree exceeds the bound");
}

}  // namespace detail

// Batch membership: every target is tested against the same degree-bounded
// span of the generators, sharing one elimination.  Each certificate is
// verified exactly; each refusal is Farkas-backed (see solve_multi).
inline std::vector<std::optional<MembershipCertificate>> membership_multi(
    const std::vector<Polynomial>& targets, const std::vector<Polynomial>& gens, int bound,
    const KernelOptions& opt = {}) {
  detail::require_membership_inputs(targets, gens, bound);
  const RingRef& ring = targets.front().ring();
  const FieldRef& field = ring->field;
  const bool homog = detail::all_homogeneous_at(targets, gens, bound);
  auto cols = detail::cofactor_columns(gens, bound, homog);

  std::map<Monomial, int> row_of;
  for (auto& p : cols.products)
    for (auto& [mono, c] : p.terms()) {
      (void)c;
      row_of.emplace(mono, 0);
    }
  for (auto& t : targets)
    for (auto& [mono, c] : t.terms()) {
      (void)c;
      row_of.emplace(mono, 0);
    }
  int r = 0;
  for (auto& [mono, idx] : row_of) {
    (void)mono;
    idx = r++;
  }

  const int ncols = static_cast<int>(cols.products.size());
  SparseMatrix A(field, r, ncols);
  for (int j = 0; j < ncols; ++j)
    for (auto& [mono, c] : cols.products[static_cast<std::size_t>(j)].terms())
      A.set(row_of.at(mono), j, c);
  std::vector<std::vector<FieldElement>> rhs;
  for (auto& t : targets) {
    std::vector<FieldElement> b(static_cast<std::size_t>(r), FieldElement::zero(field));
    for (auto& [mono, c] : t.terms()) b[static_cast<std::size_t>(row_of.at(mono))] = c;
    rhs.push_back(std::move(b));
  }

  auto sols = solve_multi(A, rhs, opt);
  std::vector<std::optional<MembershipCertificate>> out(targets.size());
  for (std::size_t ti = 0; ti < targets.size(); ++ti) {
    if (!sols[ti]) continue;
    MembershipCertificate cert;
    cert.target = targets[ti];
    cert.gens = gens;
    cert.bound = bound;
    cert.cofactors.assign(gens.size(), Polynomial::zero(ring));
    for (int j = 0; j < ncols; ++j) {
      const FieldElement& c = (*sols[ti])[static_cast<std::size_t>(j)];
      if (c.is_zero()) continue;
      auto& [gi, mono] = cols.of[static_cast<std::size_t>(j)];
      cert.cofactors[static_cast<std::size_t>(gi)].add_term(mono, c);
    }
    Polynomial check = Polynomial::zero(ring);
    for (std::size_t gi = 0; gi < gens.size(); ++gi)
      check = check + cert.cofactors[gi] * gens[gi];
    if (!(check == targets[ti]))
      throw std::logic_error("membership: verified solution fails exact recombination");
    out[ti] = std::move(cert);
  }
  return out;
}

// Single-target membership: certificate with explicit cofactors, or nullopt
// ("not in the degree-bounded span"; for homogeneous data at bound = deg f
// that is ideal membership itself).
inline std::optional<MembershipCertificate> membership(const Polynomial& target,
                                                       const std::vector<Polynomial>& gens,
                                                       int bound,
                                                       const KernelOptions& opt = {}) {
  return membership_multi({target}, gens, bound, opt).front();
}

// Scalar c plus an exact certificate that f - c*g lies in the degree-bounded
// span of the generators, when the joint linear system is solvable.
inline std::optional<std::pair<FieldElement, MembershipCertificate>> proportional_mod_ideal(
    const Polynomial& f, const Polynomial& g, const std::vector<Polynomial>& gens, int bound,
    const KernelOptions& opt = {}) {
  detail::require_membership_inputs({f, g}, gens, bound);
  if (f.degree() != g.degree())
    throw std::invalid_argument("proportional_mod_ideal: degree mismatch");
  const RingRef& ring = f.ring();
  const FieldRef& field = ring->field;
  const bool homog = detail::all_homogeneous_at({f, g}, gens, bound);
  auto cols = detail::cofactor_columns(gens, bound, homog);

  std::map<Monomial, int> row_of;
  auto note = [&](const Polynomial& p) {
    for (auto& [mono, c] : p.terms()) {
      (void)c;
      row_of.emplace(mono, 0);
    }
  };
  for (auto& p : cols.products) note(p);
  note(f);
  note(g);
  int r = 0;
  for (auto& [mono, idx] : row_of) {
    (void)mono;
    idx = r++;
  }

  const int ncols = static_cast<int>(cols.products.size());
  SparseMatrix A(field, r, ncols + 1);
  for (int j = 0; j < ncols; ++j)
    for (auto& [mono, c] : cols.products[static_cast<std::size_t>(j)].terms())
      A.set(row_of.at(mono), j, c);
  for (auto& [mono, c] : g.terms()) A.set(row_of.at(mono), ncols, c);
  std::vector<FieldElement> b(static_cast<std::size_t>(r), FieldElement::zero(field));
  for (auto& [mono, c] : f.terms()) b[static_cast<std::size_t>(row_of.at(mono))] = c;

  auto sol = solve(A, b, opt);
  if (!sol) return std::nullopt;
  FieldElement c = (*sol)[static_cast<std::size_t>(ncols)];
  MembershipCertificate cert;
  cert.target = f - g * Polynomial::constant(ring, c);
  cert.gens = gens;
  cert.bound = bound;
  cert.cofactors.assign(gens.size(), Polynomial::zero(ring));
  for (int j = 0; j < ncols; ++j) {
    const FieldElement& v = (*sol)[static_cast<std::size_t>(j)];
    if (v.is_zero()) continue;
    auto& [gi, mono] = cols.of[static_cast<std::size_t>(j)];
    cert.cofactors[static_cast<std::size_t>(gi)].add_term(mono, v);
  }
  Polynomial check = Polynomial::zero(ring);
  for (std::size_t gi = 0; gi < gens.size(); ++gi)
    check = check + cert.cofactors[gi] * gens[gi];
  if (!(check == cert.target))
    throw std::logic_error("proportional_mod_ideal: solution fails exact recombination");
  return std::make_pair(c, std::move(cert));
}

// ------------------------------------------------------------- ideal slice --

namespace detail {

inline std::vector<Polynomial> ideal_slice_from_columns(std::vector<Polynomial> products,
                                                        const KernelOptions& opt) {
  if (products.empty()) return {};
  const RingRef& ring = products.front().ring();
  std::map<Monomial, int> row_of;
  for (auto& p : products)
    for (auto& [mono, c] : p.terms()) {
      (void)c;
      row_of.emplace(mono, 0);
    }
  int r = 0;
  for (auto& [mono, idx] : row_of) {
    (void)mono;
    idx = r++;
  }
  SparseMatrix A(ring->field, r, static_cast<int>(products.size()));
  for (int j = 0; j < static_cast<int>(products.size()); ++j)
    for (auto& [mono, c] : products[static_cast<std::size_t>(j)].terms())
      A.set(row_of.at(mono), j, c);
  KernelResult K = kernel(A, opt);  // certified rank and pivot columns
  std::vector<Polynomial> basis;
  for (int c : K.pivot_cols) basis.push_back(products[static_cast<std::size_t>(c)]);
  return basis;
}

}  // namespace detail

// Basis of the total-degree-d component of the ideal generated by gens: the
// pivot columns, under a certified rank, of the matrix of all gens[i] *
// (monomials of degree d - deg gens[i]).
inline std::vector<Polynomial> ideal_slice(const std::vector<Polynomial>& gens, int d,
                                           const KernelOptions& opt = {}) {
  if (gens.empty()) throw std::invalid_argument("ideal_slice: no generators");
  const RingRef& ring = gens.front().ring();
  std::vector<Polynomial> products;
  for (auto& g : gens) {
    if (g.ring().get() != ring.get()) throw std::invalid_argument("ideal_slice: mixed rings");
    if (g.is_zero()) throw std::invalid_argument("ideal_slice: zero generator");
    if (g.degree() > d) continue;
    for (auto& mn : monomials_of_total(ring, d - g.degree()))
      products.push_back(g * Polynomial::monomial(ring, mn, FieldElement::one(ring->field)));
  }
  return detail::ideal_slice_from_columns(std::move(products), opt);
}

// Multigraded variant: the multidegree-d component, for multihomogeneous
// generators in a graded ring.
inline std::vector<Polynomial> ideal_slice(const std::vector<Polynomial>& gens,
                                           const MultiDegree& d, const KernelOptions& opt = {}) {
  if (gens.empty()) throw std::invalid_argument("ideal_slice: no generators");
  const RingRef& ring = gens.front().ring();
  std::vector<Polynomial> products;
  for (auto& g : gens) {
    if (g.ring().get() != ring.get()) throw std::invalid_argument("ideal_slice: mixed rings");
    auto md = g.multidegree();
    if (!md) throw std::invalid_argument("ideal_slice: generators must be multihomogeneous");
    MultiDegree rest(d);
    bool fits = rest.size() == md->size();
    for (std::size_t k = 0; fits && k < rest.size(); ++k) {
      rest[k] -= (*md)[k];
      if (rest[k] < 0) fits = false;
    }
    if (!fits) continue;
    for (auto& mn : monomials_of(ring, rest))
      products.push_back(g * Polynomial::monomial(ring, mn, FieldElement::one(ring->field)));
  }
  return detail::ideal_slice_from_columns(std::move(products), opt);
}

}  // namespace syz
