#pragma once

// Exact certification that an integer combination of products of
// pair-homogeneous forms vanishes identically:
//
//     sum_e  c_e * W_0^{e_0} * ... * W_{m-1}^{e_{m-1}}  ==  0
//
// in a polynomial ring whose variables come in consecutive pairs
// (y_{1,0}, y_{1,1}, ..., y_{k,0}, y_{k,1}), with every W_i homogeneous of a
// fixed total degree in each pair.  Every monomial of such a product is then
// determined by its k second-slot exponents, so the whole product lives in a
// dense k-dimensional grid of integers.  Products are built by explicit
// integer convolution along a prefix-sharing depth-first walk of the support,
// accumulated into one wide-integer grid, and the combination is certified
// zero exactly when every accumulated cell is zero.
//
// Arithmetic runs in int64 cells with a proven-ahead-of-time l1-norm bound
// (the max-norm of a product never exceeds the product of l1 norms); if the
// bound analysis cannot guarantee int64, everything reruns in GMP integers.
// Either way the verdict is exact.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "syzygy/ring.hpp"

namespace syz {

struct GridError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

struct GridOverflow : std::exception {
  const char* what() const noexcept override { return "grid: int64 bound exceeded"; }
};

// One input form, preprocessed: each term becomes (linear offset into the
// grid contributed by its second-slot exponents, integer coefficient).
struct GridForm {
  std::vector<std::pair<std::int64_t, mpz_class>> terms;
  mpz_class l1;                 // sum of |coefficients|
  std::vector<int> pair_degree; // degree in each variable pair
};

inline mpz_class int128_cap() {
  static const mpz_class cap = [] {
    mpz_class c = 1;
    c <<= 126;
    return c;
  }();
  return cap;
}

inline mpz_class int64_cap() { return mpz_class("9223372036854775807"); }

template <class Cell>
struct grid_traits;

template <>
struct grid_traits<std::int64_t> {
  using acc_t = __int128;
  static std::int64_t cell_of(const mpz_class& z) {
    if (!z.fits_slong_p()) throw GridOverflow();
    return static_cast<std::int64_t>(z.get_si());
  }
  static bool acc_is_zero(const acc_t& a) { return a == 0; }
};

template <>
struct grid_traits<mpz_class> {
  using acc_t = mpz_class;
  static const mpz_class& cell_of(const mpz_class& z) { return z; }
  static bool acc_is_zero(const mpz_class& a) { return sgn(a) == 0; }
};

// The full depth-first certification pass for one cell type.
template <class Cell>
bool grid_certify_pass(const std::vector<GridForm>& forms,
                       const std::vector<std::pair<std::vector<int>, mpz_class>>& support,
                       const std::vector<int>& extent, bool bound_checked) {
  using Acc = typename grid_traits<Cell>::acc_t;
  const int k = static_cast<int>(extent.size());
  const int m = static_cast<int>(forms.size());

  std::vector<std::int64_t> stride(static_cast<std::size_t>(k), 1);
  std::int64_t cells = 1;
  for (int j = k - 1; j >= 0; --j) {
    stride[static_cast<std::size_t>(j)] = cells;
    cells *= extent[static_cast<std::size_t>(j)] + 1;
    if (cells > (1 << 24)) throw GridError("grid: too many cells");
  }

  int total = 0;
  for (int v : support.front().first) total += v;

  // stack[s]: grid for the length-s prefix product of the current branch,
  // together with its occupied per-axis extents and its l1 bound.
  struct Level {
    std::vector<Cell> grid;
    std::vector<int> occ;
    mpz_class bound;
  };
  std::vector<Level> stack(static_cast<std::size_t>(total) + 1);
  for (auto& lv : stack) {
    lv.grid.assign(static_cast<std::size_t>(cells), Cell(0));
    lv.occ.assign(static_cast<std::size_t>(k), 0);
  }
  stack[0].grid[0] = Cell(1);
  stack[0].bound = 1;

  std::vector<Acc> acc_wide(static_cast<std::size_t>(cells), Acc(0));
  mpz_class acc_bound = 0;

  // Multiply stack[s] by forms[i] into stack[s+1].
  auto step = [&](int s, int i) {
    const Level& src = stack[static_cast<std::size_t>(s)];
    Level& dst = stack[static_cast<std::size_t>(s) + 1];
    const GridForm& w = forms[static_cast<std::size_t>(i)];
    dst.bound = src.bound * w.l1;
    if (!bound_checked && dst.bound > int64_cap())
      throw detail::GridOverflow();
    for (int j = 0; j < k; ++j) {
      dst.occ[static_cast<std::size_t>(j)] =
          src.occ[static_cast<std::size_t>(j)] + w.pair_degree[static_cast<std::size_t>(j)];
      if (dst.occ[static_cast<std::size_t>(j)] > extent[static_cast<std::size_t>(j)])
        throw GridError("grid: support is not weighted-homogeneous");
    }
    // Zero the destination's occupied box, then convolve.  The innermost
    // axis is contiguous (stride 1), so walk base offsets over the outer
    // axes with an odometer and stream the last axis.
    const int last = k - 1;
    const int run = dst.occ[static_cast<std::size_t>(last)] + 1;
    std::vector<int> idx(static_cast<std::size_t>(last), 0);
    for (;;) {
      std::int64_t base = 0;
      for (int j = 0; j < last; ++j)
        base += idx[static_cast<std::size_t>(j)] * stride[static_cast<std::size_t>(j)];
      for (int a = 0; a < run; ++a) dst.grid[static_cast<std::size_t>(base + a)] = Cell(0);
      int j = last - 1;
      while (j >= 0 && idx[static_cast<std::size_t>(j)] == dst.occ[static_cast<std::size_t>(j)]) {
        idx[static_cast<std::size_t>(j)] = 0;
        --j;
      }
      if (j < 0) break;
      ++idx[static_cast<std::size_t>(j)];
    }
    const int src_run = src.occ[static_cast<std::size_t>(last)] + 1;
    idx.assign(static_cast<std::size_t>(last), 0);
    std::vector<Cell> coeffs;
    std::vector<std::int64_t> offs;
    for (auto& [off, c] : w.terms) {
      offs.push_back(off);
      coeffs.push_back(grid_traits<Cell>::cell_of(c));
    }
    const int nterms = static_cast<int>(offs.size());
    for (;;) {
      std::int64_t base = 0;
      for (int j = 0; j < last; ++j)
        base += idx[static_cast<std::size_t>(j)] * stride[static_cast<std::size_t>(j)];
      for (int a = 0; a < src_run; ++a) {
        const Cell& v = src.grid[static_cast<std::size_t>(base + a)];
        if (v == Cell(0)) continue;
        for (int t = 0; t < nterms; ++t)
          dst.grid[static_cast<std::size_t>(base + a + offs[static_cast<std::size_t>(t)])] +=
              coeffs[static_cast<std::size_t>(t)] * v;
      }
      int j = last - 1;
      while (j >= 0 && idx[static_cast<std::size_t>(j)] == src.occ[static_cast<std::size_t>(j)]) {
        idx[static_cast<std::size_t>(j)] = 0;
        --j;
      }
      if (j < 0) break;
      ++idx[static_cast<std::size_t>(j)];
    }
  };

  // Depth-first over the lex-sorted support, sharing prefix products.
  // walk(i, lo, hi, s): support rows [lo,hi) agree on factors < i, whose
  // product (s multiplications deep) sits in stack[s].
  auto walk = [&](auto&& self, int i, std::size_t lo, std::size_t hi, int s) -> void {
    if (i == m) {
      const Level& leaf = stack[static_cast<std::size_t>(s)];
      for (std::size_t r = lo; r < hi; ++r) {
        const mpz_class& c = support[r].second;
        if (sgn(c) == 0) continue;
        mpz_class absc = abs(c);
        acc_bound += absc * leaf.bound;
        if (!bound_checked && acc_bound > int128_cap()) throw detail::GridOverflow();
        Acc cc = Acc(grid_traits<Cell>::cell_of(c));
        for (std::int64_t t = 0; t < cells; ++t)
          if (!(leaf.grid[static_cast<std::size_t>(t)] == Cell(0)))
            acc_wide[static_cast<std::size_t>(t)] +=
                cc * Acc(leaf.grid[static_cast<std::size_t>(t)]);
      }
      return;
    }
    std::size_t a = lo;
    while (a < hi) {
      const int v = support[a].first[static_cast<std::size_t>(i)];
      std::size_t b = a;
      while (b < hi && support[b].first[static_cast<std::size_t>(i)] == v) ++b;
      for (int t = 0; t < v; ++t) step(s + t, i);
      self(self, i + 1, a, b, s + v);
      a = b;
    }
  };
  walk(walk, 0, 0, support.size(), 0);

  for (auto& cell : acc_wide)
    if (!grid_traits<Cell>::acc_is_zero(cell)) return false;
  return true;
}

}  // namespace detail

// Exact check that sum_e c_e * prod_i inputs[i]^{e_i} vanishes identically.
// Requirements: the inputs' ring has an even number of variables, read as
// consecutive pairs; every input is homogeneous in each pair (checked); all
// coefficients are integers; the support tuples give every pair the same
// total degree (checked).  Returns the exact verdict.
inline bool certify_zero_combination(
    const std::vector<Polynomial>& inputs,
    const std::vector<std::pair<std::vector<int>, mpz_class>>& support) {
  if (support.empty()) return true;
  if (inputs.empty()) throw GridError("grid: no input forms");
  const RingRef& ring = inputs.front().ring();
  if (ring->field->kind != FieldKind::Rational)
    throw GridError("grid: rational coefficient field required");
  const int nv = static_cast<int>(ring->vars.size());
  if (nv % 2 != 0) throw GridError("grid: ring must have paired variables");
  const int k = nv / 2;
  const int m = static_cast<int>(inputs.size());

  // Per-pair degrees and extents first: strides depend on them.
  std::vector<detail::GridForm> forms(static_cast<std::size_t>(m));
  std::vector<std::vector<int>> pair_deg(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const Polynomial& w = inputs[static_cast<std::size_t>(i)];
    if (w.ring().get() != ring.get()) throw GridError("grid: mixed rings");
    if (w.is_zero()) throw GridError("grid: zero input form");
    auto& pd = pair_deg[static_cast<std::size_t>(i)];
    pd.assign(static_cast<std::size_t>(k), 0);
    bool first = true;
    for (auto& [mono, coeff] : w.terms()) {
      for (int j = 0; j < k; ++j) {
        int d = mono[static_cast<std::size_t>(2 * j)] +
                mono[static_cast<std::size_t>(2 * j + 1)];
        if (first)
          pd[static_cast<std::size_t>(j)] = d;
        else if (pd[static_cast<std::size_t>(j)] != d)
          throw GridError("grid: input form is not homogeneous in every pair");
      }
      first = false;
      (void)coeff;
    }
  }

  std::vector<int> extent(static_cast<std::size_t>(k), 0);
  {
    const auto& e0 = support.front().first;
    if (static_cast<int>(e0.size()) != m) throw GridError("grid: support arity mismatch");
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < k; ++j)
        extent[static_cast<std::size_t>(j)] +=
            e0[static_cast<std::size_t>(i)] * pair_deg[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    for (auto& [e, c] : support) {
      if (static_cast<int>(e.size()) != m) throw GridError("grid: support arity mismatch");
      for (int i = 0; i < m; ++i)
        if (e[static_cast<std::size_t>(i)] < 0) throw GridError("grid: negative exponent");
      for (int j = 0; j < k; ++j) {
        int d = 0;
        for (int i = 0; i < m; ++i)
          d += e[static_cast<std::size_t>(i)] *
               pair_deg[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (d != extent[static_cast<std::size_t>(j)])
          throw GridError("grid: support is not weighted-homogeneous");
      }
      (void)c;
    }
  }

  std::vector<std::int64_t> stride(static_cast<std::size_t>(k), 1);
  {
    std::int64_t cells = 1;
    for (int j = k - 1; j >= 0; --j) {
      stride[static_cast<std::size_t>(j)] = cells;
      cells *= extent[static_cast<std::size_t>(j)] + 1;
      if (cells > (1 << 24)) throw GridError("grid: too many cells");
    }
  }

  for (int i = 0; i < m; ++i) {
    const Polynomial& w = inputs[static_cast<std::size_t>(i)];
    auto& gf = forms[static_cast<std::size_t>(i)];
    gf.pair_degree = pair_deg[static_cast<std::size_t>(i)];
    gf.l1 = 0;
    for (auto& [mono, coeff] : w.terms()) {
      Rat r = coeff.rat();
      if (r.get_den() != 1)
        throw GridError("grid: input coefficients must be integers");
      std::int64_t off = 0;
      for (int j = 0; j < k; ++j)
        off += mono[static_cast<std::size_t>(2 * j + 1)] * stride[static_cast<std::size_t>(j)];
      gf.terms.emplace_back(off, r.get_num());
      gf.l1 += abs(r.get_num());
    }
  }

  // Sort the support lexicographically so the DFS shares prefixes.
  std::vector<std::pair<std::vector<int>, mpz_class>> sorted = support;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  try {
    return detail::grid_certify_pass<std::int64_t>(forms, sorted, extent, false);
  } catch (const detail::GridOverflow&) {
    return detail::grid_certify_pass<mpz_class>(forms, sorted, extent, true);
  }
}

}  // namespace syz
