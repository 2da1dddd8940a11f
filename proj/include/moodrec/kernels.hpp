#ifndef MOODREC_KERNELS_HPP
#define MOODREC_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "moodrec/error.hpp"

namespace moodrec {

/// Row-major dense matrix of feature vectors.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::span<double> row(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Compressed sparse rows. Column positions are sorted ascending within
/// each row; values at missing positions are zero.
struct CsrMatrix {
  std::vector<std::size_t> row_start;  // size rows()+1
  std::vector<std::int32_t> cols;
  std::vector<double> vals;

  std::size_t rows() const {
    return row_start.empty() ? 0 : row_start.size() - 1;
  }
  std::span<const std::int32_t> row_cols(std::size_t i) const {
    return {cols.data() + row_start[i], row_start[i + 1] - row_start[i]};
  }
  std::span<const double> row_vals(std::size_t i) const {
    return {vals.data() + row_start[i], row_start[i + 1] - row_start[i]};
  }
};

/// Non-owning view of one sparse row.
struct SparseVec {
  std::span<const std::int32_t> cols;
  std::span<const double> vals;
};

// Cosine of two sparse rows; missing positions are zero. Matches the dense
// formula bit for bit because zero terms do not perturb the running sums.
double sparse_cosine(SparseVec a, SparseVec b);

enum class Exec {
  Serial,
  Parallel,
  Auto,  // parallel when built with OpenMP and the row count warrants it
};

// out[i] = cosine(query, m.row(i)).
//
// The _serial variants are the reference implementations; the _omp variants
// parallelize over rows. Each row's score is an independent left-to-right
// sum, so both produce bit-identical output for any thread count.
void dense_cosine_scores_serial(const DenseMatrix& m,
                                std::span<const double> query,
                                std::span<double> out);
void dense_cosine_scores_omp(const DenseMatrix& m,
                             std::span<const double> query,
                             std::span<double> out);
void dense_cosine_scores(const DenseMatrix& m, std::span<const double> query,
                         std::span<double> out, Exec exec = Exec::Auto);

void sparse_cosine_scores_serial(const CsrMatrix& m, SparseVec query,
                                 std::span<double> out);
void sparse_cosine_scores_omp(const CsrMatrix& m, SparseVec query,
                              std::span<double> out);
void sparse_cosine_scores(const CsrMatrix& m, SparseVec query,
                          std::span<double> out, Exec exec = Exec::Auto);

}  // namespace moodrec

#endif  // MOODREC_KERNELS_HPP
