#pragma once
// Exact matrix containers: a sparse row-major form for large structured
// matrices and a dense form for small ones.

#include <syzygy/field.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace syz {

struct SparseMatrix {
  FieldRef field;
  int nrows = 0, ncols = 0;
  // Each row holds (column, value) pairs sorted by column, values nonzero.
  std::vector<std::vector<std::pair<int, FieldElement>>> rows;

  SparseMatrix(FieldRef f, int r, int c)
      : field(std::move(f)), nrows(r), ncols(c), rows(static_cast<std::size_t>(r)) {}

  void set(int i, int j, FieldElement v) {
    if (i < 0 || i >= nrows || j < 0 || j >= ncols)
      throw std::out_of_range("sparse matrix index");
    auto& row = rows[static_cast<std::size_t>(i)];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == j) {
      if (v.is_zero()) row.erase(it);
      else it->second = std::move(v);
    } else if (!v.is_zero()) {
      row.insert(it, {j, std::move(v)});
    }
  }

  FieldElement get(int i, int j) const {
    const auto& row = rows[static_cast<std::size_t>(i)];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == j) return it->second;
    return FieldElement::zero(field);
  }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (auto& r : rows) n += r.size();
    return n;
  }
};

inline SparseMatrix transpose(const SparseMatrix& a) {
  SparseMatrix t(a.field, a.ncols, a.nrows);
  for (int i = 0; i < a.nrows; ++i)
    for (auto& [j, v] : a.rows[static_cast<std::size_t>(i)])
      t.rows[static_cast<std::size_t>(j)].emplace_back(i, v);
  return t;  // columns were scanned in increasing i, so each row is sorted
}

// y = A x, exactly.
inline std::vector<FieldElement> mat_apply(const SparseMatrix& a,
                                       const std::vector<FieldElement>& x) {
  if (static_cast<int>(x.size()) != a.ncols)
    throw std::invalid_argument("matrix-vector size mismatch");
  std::vector<FieldElement> y(static_cast<std::size_t>(a.nrows),
                              FieldElement::zero(a.field));
  for (int i = 0; i < a.nrows; ++i) {
    FieldElement acc = FieldElement::zero(a.field);
    for (auto& [j, v] : a.rows[static_cast<std::size_t>(i)])
      acc = acc + v * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = std::move(acc);
  }
  return y;
}

struct DenseMatrix {
  FieldRef field;
  int nrows = 0, ncols = 0;
  std::vector<FieldElement> a;  // row-major

  DenseMatrix(FieldRef f, int r, int c)
      : field(std::move(f)),
        nrows(r),
        ncols(c),
        a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c),
          FieldElement::zero(field)) {}

  FieldElement& at(int i, int j) {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(ncols) +
             static_cast<std::size_t>(j)];
  }
  const FieldElement& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(ncols) +
             static_cast<std::size_t>(j)];
  }
};

inline DenseMatrix to_dense(const SparseMatrix& s) {
  DenseMatrix d(s.field, s.nrows, s.ncols);
  for (int i = 0; i < s.nrows; ++i)
    for (auto& [j, v] : s.rows[static_cast<std::size_t>(i)]) d.at(i, j) = v;
  return d;
}

}  // namespace syz
