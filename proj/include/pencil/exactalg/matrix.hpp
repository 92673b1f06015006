#ifndef PENCIL_EXACTALG_MATRIX_HPP
#define PENCIL_EXACTALG_MATRIX_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pencil/errors.hpp"
#include "pencil/exactalg/cyclotomic.hpp"
#include "pencil/exactalg/rational.hpp"

namespace pencil {

/// Dense row-major matrix over an exact field.
template <class Scalar> class ExactMatrix {
public:
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {
    if (rows == 0 || cols == 0)
      throw BadInput("matrix dimensions must be positive");
  }

  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0)
      throw BadInput("matrix dimensions must be positive");
    if (data_.size() != rows * cols)
      throw BadInput("matrix expects " + std::to_string(rows * cols) +
                     " entries, got " + std::to_string(data_.size()));
  }

  static ExactMatrix from_rows(const std::vector<std::vector<Scalar>> &rows) {
    if (rows.empty())
      throw BadInput("matrix needs at least one row");
    std::vector<Scalar> flat;
    for (const auto &r : rows) {
      if (r.size() != rows.front().size())
        throw BadInput("ragged matrix rows");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return ExactMatrix(rows.size(), rows.front().size(), std::move(flat));
  }

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = Scalar(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

private:
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

/// Row echelon form together with its pivot columns.
template <class Scalar> struct Echelon {
  ExactMatrix<Scalar> form;
  std::vector<std::size_t> pivots;
};

/// Fraction-free (Bareiss) forward elimination. Every update is
/// (p*a_ik - a_ic*p_k) / previous_pivot, which divides exactly, so integer
/// inputs keep integer intermediates.
template <class Scalar> Echelon<Scalar> bareiss_echelon(ExactMatrix<Scalar> m) {
  std::vector<std::size_t> pivots;
  Scalar prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c)))
      ++p;
    if (p == m.rows())
      continue;
    if (p != r)
      for (std::size_t k = 0; k < m.cols(); ++k)
        std::swap(m(p, k), m(r, k));
    const Scalar pivot = m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Scalar lead = m(i, c);
      for (std::size_t k = c + 1; k < m.cols(); ++k)
        m(i, k) = (pivot * m(i, k) - lead * m(r, k)) / prev;
      m(i, c) = Scalar(0);
    }
    prev = pivot;
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class Scalar> std::size_t exact_matrix_rank(const ExactMatrix<Scalar> &m) {
  return bareiss_echelon(m).pivots.size();
}

/// Basis of the right nullspace. For each non-pivot column f the basis vector
/// has a 1 at f, zeros at the other free columns, and is solved on pivots.
template <class Scalar>
std::vector<std::vector<Scalar>> exact_matrix_nullspace(const ExactMatrix<Scalar> &m) {
  auto [e, pivots] = bareiss_echelon(m);
  // Reduce to reduced row echelon form with unit pivots.
  for (std::size_t i = pivots.size(); i-- > 0;) {
    const std::size_t pc = pivots[i];
    const Scalar inv = Scalar(1) / e(i, pc);
    for (std::size_t k = pc; k < e.cols(); ++k)
      e(i, k) *= inv;
    for (std::size_t above = 0; above < i; ++above) {
      const Scalar f = e(above, pc);
      if (is_zero(f))
        continue;
      for (std::size_t k = pc; k < e.cols(); ++k)
        e(above, k) -= f * e(i, k);
    }
  }
  std::vector<bool> is_pivot(e.cols(), false);
  for (auto pc : pivots)
    is_pivot[pc] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < e.cols(); ++f) {
    if (is_pivot[f])
      continue;
    std::vector<Scalar> v(e.cols(), Scalar(0));
    v[f] = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -e(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// A point of the projective line: a finite parameter t = [t, 1] or infinity.
template <class Scalar> struct LineParam {
  Scalar value{0};
  bool infinite = false;

  static LineParam at(Scalar v) { return {std::move(v), false}; }
  static LineParam infinity() { return {Scalar(0), true}; }
};

/// Rows (1, t, ..., t^n) of the degree-n rational normal curve, row
/// (0, ..., 0, 1) at infinity; true iff the rows are independent.
template <class Scalar>
bool vandermonde_general_position(std::size_t n,
                                  const std::vector<LineParam<Scalar>> &params) {
  if (params.size() > n + 1)
    throw TooManyPoints(std::to_string(params.size()) +
                        " points on a rational normal curve of degree " +
                        std::to_string(n));
  if (params.empty())
    return true;
  ExactMatrix<Scalar> m(params.size(), n + 1);
  for (std::size_t r = 0; r < params.size(); ++r) {
    if (params[r].infinite) {
      m(r, n) = Scalar(1);
      continue;
    }
    Scalar power(1);
    for (std::size_t c = 0; c <= n; ++c) {
      m(r, c) = power;
      power *= params[r].value;
    }
  }
  return exact_matrix_rank(m) == params.size();
}

} // namespace pencil

#endif // PENCIL_EXACTALG_MATRIX_HPP
