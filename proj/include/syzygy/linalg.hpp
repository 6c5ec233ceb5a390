#pragma once
// Exact linear algebra.
//
// Large rational systems run through dense modular elimination (Montgomery
// arithmetic) for several primes, Chinese remaindering, and rational
// reconstruction; every reported object is then certified by exact
// arithmetic, so no answer depends on unverified modular computation:
//   * a kernel vector is certified by exactly checking A v = 0,
//   * independence of the reported vectors is structural (unit pattern),
//   * the rank lower bound comes from a nonzero modular minor, which for
//     matrices with p-integral entries forces a nonzero exact minor.
// Small systems and systems over QQi or an extension field use exact dense
// elimination directly (the Bareiss form is available for rank queries).

#include <syzygy/matrix.hpp>
#include <syzygy/numbers.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

namespace syz {

struct BadPrimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ------------------------------------------------------------- dense mod p --

struct ModMatrix {
  Mont m;
  int nrows = 0, ncols = 0;
  std::vector<std::uint32_t> a;  // Montgomery form, row-major

  ModMatrix(std::uint32_t p, int r, int c)
      : m(p),
        nrows(r),
        ncols(c),
        a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}

  std::uint32_t* row(int i) {
    return a.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(ncols);
  }
  const std::uint32_t* row(int i) const {
    return a.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(ncols);
  }
  void set_residue(int i, int j, std::uint32_t plain) {
    row(i)[j] = m.to(plain);
  }
};

// Reduce a rational sparse matrix modulo p; throws BadPrimeError when a
// denominator vanishes mod p.
inline ModMatrix reduce_sparse_mod(const SparseMatrix& A, std::uint32_t p) {
  if (A.field->kind != FieldKind::Rational)
    throw FieldMismatchError("modular reduction needs rational entries");
  ModMatrix M(p, A.nrows, A.ncols);
  for (int i = 0; i < A.nrows; ++i)
    for (auto& [j, v] : A.rows[static_cast<std::size_t>(i)]) {
      try {
        M.row(i)[j] = M.m.to(rat_mod_p(v.rat(), p));
      } catch (const std::domain_error&) {
        throw BadPrimeError("denominator vanishes modulo " + std::to_string(p));
      }
    }
  return M;
}

struct RrefInfo {
  int rank = 0;
  std::vector<int> pivots;
};

// In-place reduced row echelon form.  Pivots are chosen among the first
// pivot_limit columns only (default: all); trailing columns are reduced but
// never pivoted on, which makes the trailing block usable as a batch of
// right-hand sides.
inline RrefInfo mod_rref(ModMatrix& M, int pivot_limit = -1) {
  const Mont& m = M.m;
  const int R = M.nrows, C = M.ncols;
  const int P = pivot_limit < 0 ? C : pivot_limit;
  RrefInfo info;
  int r = 0;
  for (int c = 0; c < P && r < R; ++c) {
    int sel = -1;
    for (int i = r; i < R; ++i)
      if (M.row(i)[c]) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      std::swap_ranges(M.row(sel) + c, M.row(sel) + C, M.row(r) + c);
    std::uint32_t inv = m.inv(M.row(r)[c]);
    std::uint32_t* rr = M.row(r);
    for (int j = c; j < C; ++j) rr[j] = m.mul(rr[j], inv);
    for (int i = 0; i < R; ++i) {
      if (i == r) continue;
      std::uint32_t f = M.row(i)[c];
      if (!f) continue;
      std::uint32_t* ri = M.row(i);
      for (int j = c; j < C; ++j) ri[j] = m.sub(ri[j], m.mul(f, rr[j]));
    }
    info.pivots.push_back(c);
    ++r;
  }
  info.rank = r;
  return info;
}

// Kernel basis of an RREF'd matrix: one vector per free column, carrying a 1
// there and zeros at the other free columns.  Plain residues.
inline std::vector<std::vector<std::uint32_t>> mod_kernel_from_rref(const ModMatrix& M,
                                                                    const RrefInfo& info) {
  const Mont& m = M.m;
  std::vector<bool> is_pivot(static_cast<std::size_t>(M.ncols), false);
  for (int c : info.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (int f = 0; f < M.ncols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<std::uint32_t> v(static_cast<std::size_t>(M.ncols), 0);
    v[static_cast<std::size_t>(f)] = 1;
    for (int k = 0; k < info.rank; ++k) {
      std::uint32_t e = m.from(M.row(k)[f]);
      if (e) v[static_cast<std::size_t>(info.pivots[static_cast<std::size_t>(k)])] = m.p - e;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// ------------------------------------------------------- dense exact (any K) --

inline RrefInfo rref_exact(DenseMatrix& M) {
  const int R = M.nrows, C = M.ncols;
  RrefInfo info;
  int r = 0;
  for (int c = 0; c < C && r < R; ++c) {
    int sel = -1;
    for (int i = r; i < R; ++i)
      if (!M.at(i, c).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = c; j < C; ++j) std::swap(M.at(sel, j), M.at(r, j));
    FieldElement inv = M.at(r, c).inverse();
    for (int j = c; j < C; ++j) M.at(r, j) = M.at(r, j) * inv;
    for (int i = 0; i < R; ++i) {
      if (i == r || M.at(i, c).is_zero()) continue;
      FieldElement f = M.at(i, c);
      for (int j = c; j < C; ++j) M.at(i, j) = M.at(i, j) - f * M.at(r, j);
    }
    info.pivots.push_back(c);
    ++r;
  }
  info.rank = r;
  return info;
}

inline std::vector<std::vector<FieldElement>> kernel_from_rref_exact(const DenseMatrix& M,
                                                                     const RrefInfo& info) {
  std::vector<bool> is_pivot(static_cast<std::size_t>(M.ncols), false);
  for (int c : info.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (int f = 0; f < M.ncols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<FieldElement> v(static_cast<std::size_t>(M.ncols),
                                FieldElement::zero(M.field));
    v[static_cast<std::size_t>(f)] = FieldElement::one(M.field);
    for (int k = 0; k < info.rank; ++k) {
      const FieldElement& e = M.at(k, f);
      if (!e.is_zero())
        v[static_cast<std::size_t>(info.pivots[static_cast<std::size_t>(k)])] = -e;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Fraction-free Bareiss elimination; exact rank over any supported field.
inline int bareiss_rank(DenseMatrix M) {
  const int R = M.nrows, C = M.ncols;
  FieldElement prev = FieldElement::one(M.field);
  int r = 0;
  for (int c = 0; c < C && r < R; ++c) {
    int sel = -1;
    for (int i = r; i < R; ++i)
      if (!M.at(i, c).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = c; j < C; ++j) std::swap(M.at(sel, j), M.at(r, j));
    for (int i = r + 1; i < R; ++i) {
      for (int j = c + 1; j < C; ++j)
        M.at(i, j) = (M.at(r, c) * M.at(i, j) - M.at(i, c) * M.at(r, j)) / prev;
      M.at(i, c) = FieldElement::zero(M.field);
    }
    prev = M.at(r, c);
    ++r;
  }
  return r;
}

// ---------------------------------------------------------------- kernel() --

struct KernelOptions {
  int min_primes = 2;       // modular witnesses required before reconstruction
  int max_rounds = 10;
  std::uint64_t seed = 20260821ULL;
  int threads = 1;
};

struct KernelResult {
  std::vector<std::vector<FieldElement>> basis;  // certified kernel basis
  int rank = 0;                                  // certified rank
  std::vector<int> pivot_cols;
  std::vector<std::uint32_t> primes;             // modular witnesses (QQ path)
  int nullity() const { return static_cast<int>(basis.size()); }
};

namespace detail {

inline void run_indexed(int n, int threads, const std::function<void(int)>& f) {
  if (threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errs(static_cast<std::size_t>(n));
  std::vector<std::thread> pool;
  int nw = std::min(threads, n);
  for (int w = 0; w < nw; ++w)
    pool.emplace_back([&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= n) break;
        try {
          f(i);
        } catch (...) {
          errs[static_cast<std::size_t>(i)] = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

struct ModKernelData {
  std::uint32_t p = 0;
  bool valid = false;
  RrefInfo info;
  std::vector<std::vector<std::uint32_t>> kernel;
};

inline void normalize_primitive_qq(std::vector<Rat>& v) {
  Int num_gcd = 0, den_lcm = 1;
  int first = -1;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (v[t] == 0) continue;
    if (first < 0) first = static_cast<int>(t);
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v[t].get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v[t].get_den().get_mpz_t());
  }
  if (first < 0) return;
  Rat content(num_gcd, den_lcm);
  content.canonicalize();
  if (v[static_cast<std::size_t>(first)] < 0) content = -content;
  for (auto& x : v) {
    x /= content;
    x.canonicalize();
  }
}

inline void normalize_monic(std::vector<FieldElement>& v) {
  for (auto& x : v)
    if (!x.is_zero()) {
      FieldElement inv = x.inverse();
      for (auto& y : v) y = y * inv;
      return;
    }
}

inline KernelResult kernel_exact_dense(const SparseMatrix& A) {
  DenseMatrix M = to_dense(A);
  RrefInfo info = rref_exact(M);
  auto basis = kernel_from_rref_exact(M, info);
  for (auto& v : basis) normalize_monic(v);
  return {std::move(basis), info.rank, std::move(info.pivots), {}};
}

inline KernelResult kernel_mod_direct(const SparseMatrix& A) {
  const std::uint32_t p = A.field->p;
  ModMatrix M(p, A.nrows, A.ncols);
  for (int i = 0; i < A.nrows; ++i)
    for (auto& [j, v] : A.rows[static_cast<std::size_t>(i)]) M.row(i)[j] = M.m.to(v.residue());
  RrefInfo info = mod_rref(M);
  auto raw = mod_kernel_from_rref(M, info);
  std::vector<std::vector<FieldElement>> basis;
  for (auto& rv : raw) {
    std::vector<FieldElement> v;
    v.reserve(rv.size());
    for (auto r : rv) v.push_back(FieldElement::from_residue(A.field, r));
    normalize_monic(v);
    basis.push_back(std::move(v));
  }
  return {std::move(basis), info.rank, std::move(info.pivots), {p}};
}

inline KernelResult kernel_multimodular(const SparseMatrix& A, const KernelOptions& opt) {
  PrimeStream ps(opt.seed);
  std::vector<ModKernelData> cands;
  int want = std::max(2, opt.min_primes);
  for (int round = 0; round < opt.max_rounds; ++round) {
    int have = 0;
    for (auto& c : cands) have += c.valid ? 1 : 0;
    int need = std::max(1, want - have);
    std::size_t base = cands.size();
    cands.resize(base + static_cast<std::size_t>(need));
    for (int k = 0; k < need; ++k) cands[base + static_cast<std::size_t>(k)].p = ps.next();
    run_indexed(need, opt.threads, [&](int k) {
      auto& slot = cands[base + static_cast<std::size_t>(k)];
      try {
        ModMatrix M = reduce_sparse_mod(A, slot.p);
        slot.info = mod_rref(M);
        slot.kernel = mod_kernel_from_rref(M, slot.info);
        slot.valid = true;
      } catch (const BadPrimeError&) {
        slot.valid = false;
      }
    });

    int rank_star = -1;
    for (auto& c : cands)
      if (c.valid) rank_star = std::max(rank_star, c.info.rank);
    if (rank_star < 0) continue;

    // A full-column-rank prime certifies a zero kernel outright.
    if (rank_star == A.ncols) {
      for (auto& c : cands)
        if (c.valid && c.info.rank == rank_star)
          return {{}, rank_star, c.info.pivots, {c.p}};
    }

    // Among maximal-rank primes keep the lexicographically earliest pivot
    // structure (the exact pivot set is a lexicographic lower bound for
    // every full-rank modular pivot set).
    const std::vector<int>* best = nullptr;
    for (auto& c : cands)
      if (c.valid && c.info.rank == rank_star)
        if (!best || c.info.pivots < *best) best = &c.info.pivots;
    std::vector<const ModKernelData*> good;
    for (auto& c : cands)
      if (c.valid && c.info.rank == rank_star && c.info.pivots == *best)
        good.push_back(&c);
    if (static_cast<int>(good.size()) < want) continue;

    const std::size_t k = good.front()->kernel.size();
    const std::size_t n = static_cast<std::size_t>(A.ncols);
    std::vector<std::vector<Rat>> vecs(k, std::vector<Rat>(n, Rat(0)));
    bool ok = true;
    try {
      for (std::size_t v = 0; v < k && ok; ++v)
        for (std::size_t t = 0; t < n; ++t) {
          std::vector<std::pair<std::uint32_t, std::uint32_t>> residues;
          residues.reserve(good.size());
          for (auto* g : good)
            residues.emplace_back(g->kernel[v][t], g->p);
          vecs[v][t] = rational_reconstruct(residues);
        }
    } catch (const ReconstructionError&) {
      ok = false;
    }
    if (ok) {
      std::vector<std::vector<FieldElement>> basis;
      for (auto& v : vecs) {
        normalize_primitive_qq(v);
        std::vector<FieldElement> fv;
        fv.reserve(v.size());
        for (auto& q : v) fv.push_back(FieldElement::from_rat(A.field, q));
        auto img = mat_apply(A, fv);
        for (auto& y : img)
          if (!y.is_zero()) {
            ok = false;
            break;
          }
        if (!ok) break;
        basis.push_back(std::move(fv));
      }
      if (ok) {
        std::vector<std::uint32_t> primes;
        for (auto* g : good) primes.push_back(g->p);
        return {std::move(basis), rank_star, *best, std::move(primes)};
      }
    }
    want += 2;  // reconstruction or certification failed: widen the modulus
  }
  throw std::runtime_error("kernel: could not certify a kernel basis");
}

}  // namespace detail

// Certified kernel basis over QQ (multi-modular), GF(p) (direct), or any
// other supported field (exact dense elimination).  Basis vectors are
// normalized: primitive integer with positive first entry over QQ, first
// nonzero entry 1 elsewhere.
inline KernelResult kernel(const SparseMatrix& A, const KernelOptions& opt = {}) {
  switch (A.field->kind) {
    case FieldKind::Rational: return detail::kernel_multimodular(A, opt);
    case FieldKind::Prime: return detail::kernel_mod_direct(A);
    default: return detail::kernel_exact_dense(A);
  }
}

// ------------------------------------------------------------------ solve --

// One solution of A x = b, or nullopt with an exact Farkas certificate
// (a left-kernel vector y with y.b != 0) backing the refusal.
inline std::optional<std::vector<FieldElement>> solve(const SparseMatrix& A,
                                                      const std::vector<FieldElement>& b,
                                                      const KernelOptions& opt = {}) {
  if (static_cast<int>(b.size()) != A.nrows)
    throw std::invalid_argument("right-hand side size mismatch");

  auto augmented_exact = [&]() -> std::optional<std::vector<FieldElement>> {
    DenseMatrix M(A.field, A.nrows, A.ncols + 1);
    for (int i = 0; i < A.nrows; ++i) {
      for (auto& [j, v] : A.rows[static_cast<std::size_t>(i)]) M.at(i, j) = v;
      M.at(i, A.ncols) = b[static_cast<std::size_t>(i)];
    }
    RrefInfo info = rref_exact(M);
    for (int c : info.pivots)
      if (c == A.ncols) return std::nullopt;
    std::vector<FieldElement> x(static_cast<std::size_t>(A.ncols),
                                FieldElement::zero(A.field));
    for (int k = 0; k < info.rank; ++k)
      x[static_cast<std::size_t>(info.pivots[static_cast<std::size_t>(k)])] =
          M.at(k, A.ncols);
    return x;
  };

  if (A.field->kind != FieldKind::Rational) return augmented_exact();

  PrimeStream ps(opt.seed ^ 0x9e3779b97f4a7c15ULL);
  struct Cand {
    std::uint32_t p;
    RrefInfo info;
    bool consistent = false;
    std::vector<std::uint32_t> x;
  };
  std::vector<Cand> cands;
  int want = std::max(2, opt.min_primes);
  int inconsistent_votes = 0;
  for (int round = 0; round < opt.max_rounds; ++round) {
    while (static_cast<int>(cands.size()) < want + round) {
      Cand cand;
      cand.p = ps.next();
      try {
        ModMatrix M(cand.p, A.nrows, A.ncols + 1);
        for (int i = 0; i < A.nrows; ++i) {
          for (auto& [j, v] : A.rows[static_cast<std::size_t>(i)]) {
            M.row(i)[j] = M.m.to(rat_mod_p(v.rat(), cand.p));
          }
          M.row(i)[A.ncols] = M.m.to(rat_mod_p(b[static_cast<std::size_t>(i)].rat(), cand.p));
        }
        cand.info = mod_rref(M);
        cand.consistent = true;
        for (int c : cand.info.pivots)
          if (c == A.ncols) cand.consistent = false;
        if (cand.consistent) {
          cand.x.assign(static_cast<std::size_t>(A.ncols), 0);
          for (int k = 0; k < cand.info.rank; ++k)
            cand.x[static_cast<std::size_t>(cand.info.pivots[static_cast<std::size_t>(k)])] =
                M.m.from(M.row(k)[A.ncols]);
        } else {
          ++inconsistent_votes;
        }
        cands.push_back(std::move(cand));
      } catch (const std::domain_error&) {
        // bad prime, draw another
      }
    }

    // Try to reconstruct from consistent primes sharing a pivot structure.
    std::map<std::vector<int>, std::vector<const Cand*>> groups;
    for (auto& c : cands)
      if (c.consistent) groups[c.info.pivots].push_back(&c);
    for (auto& [piv, group] : groups) {
      if (static_cast<int>(group.size()) < 2) continue;
      try {
        std::vector<FieldElement> x;
        x.reserve(static_cast<std::size_t>(A.ncols));
        for (int t = 0; t < A.ncols; ++t) {
          std::vector<std::pair<std::uint32_t, std::uint32_t>> residues;
          for (auto* g : group) residues.emplace_back(g->x[static_cast<std::size_t>(t)], g->p);
          x.push_back(FieldElement::from_rat(A.field, rational_reconstruct(residues)));
        }
        if (mat_apply(A, x) == b) return x;
      } catch (const ReconstructionError&) {
      }
    }

    // Certified refusal: a left-kernel vector not orthogonal to b.
    if (inconsistent_votes > 0 || round >= 1) {
      KernelResult left = kernel(transpose(A), opt);
      for (auto& y : left.basis) {
        FieldElement dot = FieldElement::zero(A.field);
        for (int i = 0; i < A.nrows; ++i)
          dot = dot + y[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)];
        if (!dot.is_zero()) return std::nullopt;
      }
      // b is orthogonal to a certified-complete left kernel, hence solvable:
      // keep widening the modulus until reconstruction lands.
      if (static_cast<int>(left.basis.size()) + left.rank == A.nrows) {
        want += 2;
        continue;
      }
    }
    want += 1;
  }
  throw std::runtime_error("solve: could not certify an answer");
}

// Batch variant of solve(): all right-hand sides share one elimination per
// prime (the RHS block is appended as non-pivot columns).  Returns one
// optional solution per right-hand side; every nullopt is backed by an exact
// Farkas certificate (a verified left-kernel vector with y.b != 0), computed
// once for the whole batch.
inline std::vector<std::optional<std::vector<FieldElement>>> solve_multi(
    const SparseMatrix& A,
    const std::vector<std::vector<FieldElement>>& rhs,
    const KernelOptions& opt = {}) {
  std::vector<std::optional<std::vector<FieldElement>>> out(rhs.size());
  if (rhs.empty()) return out;
  for (auto& b : rhs)
    if (static_cast<int>(b.size()) != A.nrows)
      throw std::invalid_argument("right-hand side size mismatch");

  if (A.field->kind != FieldKind::Rational) {
    for (std::size_t j = 0; j < rhs.size(); ++j) out[j] = solve(A, rhs[j], opt);
    return out;
  }

  const int L = A.ncols;
  const int m = static_cast<int>(rhs.size());
  std::vector<char> done(rhs.size(), 0);

  PrimeStream ps(opt.seed ^ 0xc2b2ae3d27d4eb4fULL);
  struct Cand {
    std::uint32_t p;
    RrefInfo info;                               // pivots all < L
    std::vector<char> consistent;                // per right-hand side
    std::vector<std::vector<std::uint32_t>> x;   // per rhs: residues at pivots
  };
  std::vector<Cand> cands;
  int want = std::max(2, opt.min_primes);
  bool farkas_done = false;

  for (int round = 0; round < opt.max_rounds; ++round) {
    while (static_cast<int>(cands.size()) < want + round) {
      Cand cand;
      cand.p = ps.next();
      try {
        ModMatrix M(cand.p, A.nrows, L + m);
        for (int i = 0; i < A.nrows; ++i) {
          auto* row = M.row(i);
          for (auto& [j, v] : A.rows[static_cast<std::size_t>(i)])
            row[j] = M.m.to(rat_mod_p(v.rat(), cand.p));
          for (int jb = 0; jb < m; ++jb)
            row[L + jb] =
                M.m.to(rat_mod_p(rhs[static_cast<std::size_t>(jb)][static_cast<std::size_t>(i)].rat(), cand.p));
        }
        cand.info = mod_rref(M, L);
        const int rank = cand.info.rank;
        cand.consistent.assign(rhs.size(), 1);
        for (int r = rank; r < A.nrows; ++r) {
          const auto* row = M.row(r);
          for (int jb = 0; jb < m; ++jb)
            if (row[L + jb] != 0) cand.consistent[static_cast<std::size_t>(jb)] = 0;
        }
        cand.x.assign(rhs.size(), {});
        for (int jb = 0; jb < m; ++jb) {
          if (!cand.consistent[static_cast<std::size_t>(jb)]) continue;
          auto& xj = cand.x[static_cast<std::size_t>(jb)];
          xj.resize(static_cast<std::size_t>(rank));
          for (int k = 0; k < rank; ++k) xj[static_cast<std::size_t>(k)] = M.m.from(M.row(k)[L + jb]);
        }
        cands.push_back(std::move(cand));
      } catch (const std::domain_error&) {
        // bad prime, draw another
      }
    }

    // Group primes by pivot structure and reconstruct each open system.
    std::map<std::vector<int>, std::vector<const Cand*>> groups;
    for (auto& c : cands) groups[c.info.pivots].push_back(&c);
    for (auto& [piv, group] : groups) {
      if (static_cast<int>(group.size()) < 2) continue;
      for (std::size_t jb = 0; jb < rhs.size(); ++jb) {
        if (done[jb]) continue;
        bool all_consistent = true;
        for (auto* g : group) all_consistent = all_consistent && g->consistent[jb] != 0;
        if (!all_consistent) continue;
        try {
          std::vector<FieldElement> x(static_cast<std::size_t>(L), FieldElement::zero(A.field));
          for (std::size_t k = 0; k < piv.size(); ++k) {
            std::vector<std::pair<std::uint32_t, std::uint32_t>> residues;
            for (auto* g : group) residues.emplace_back(g->x[jb][k], g->p);
            x[static_cast<std::size_t>(piv[k])] =
                FieldElement::from_rat(A.field, rational_reconstruct(residues));
          }
          if (mat_apply(A, x) == rhs[jb]) {
            out[jb] = std::move(x);
            done[jb] = 1;
          }
        } catch (const ReconstructionError&) {
        }
      }
    }

    bool any_open = false;
    for (std::size_t jb = 0; jb < rhs.size(); ++jb) any_open = any_open || !done[jb];
    if (!any_open) return out;

    // One exact left kernel settles every remaining refusal: y.b != 0 refutes
    // solvability; y.b == 0 for the whole (complete) left kernel proves b lies
    // in the column space, so reconstruction just needs more primes.
    if (!farkas_done && round >= 1) {
      KernelResult left = kernel(transpose(A), opt);
      for (std::size_t jb = 0; jb < rhs.size(); ++jb) {
        if (done[jb]) continue;
        for (auto& y : left.basis) {
          FieldElement dot = FieldElement::zero(A.field);
          for (int i = 0; i < A.nrows; ++i)
            dot = dot + y[static_cast<std::size_t>(i)] * rhs[jb][static_cast<std::size_t>(i)];
          if (!dot.is_zero()) {
            out[jb] = std::nullopt;
            done[jb] = 1;
            break;
          }
        }
      }
      farkas_done = true;
      any_open = false;
      for (std::size_t jb = 0; jb < rhs.size(); ++jb) any_open = any_open || !done[jb];
      if (!any_open) return out;
    }
    want += 2;
  }
  throw std::runtime_error("solve_multi: could not certify all answers");
}

}  // namespace syz
