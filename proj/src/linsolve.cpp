#include "imverma/linsolve.hpp"

#include <stdexcept>

namespace imverma {

std::vector<std::vector<Scalar>> nullspace(std::vector<std::vector<Scalar>> rows,
                                           int ncols) {
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != ncols)
      throw std::invalid_argument("ragged matrix");
  const int m = static_cast<int>(rows.size());
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < ncols && rank < m; ++col) {
    int piv = -1;
    for (int r = rank; r < m; ++r)
      if (!rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[static_cast<std::size_t>(piv)], rows[static_cast<std::size_t>(rank)]);
    auto& prow = rows[static_cast<std::size_t>(rank)];
    const Scalar inv = prow[static_cast<std::size_t>(col)].inverse();
    for (int c = col; c < ncols; ++c) prow[static_cast<std::size_t>(c)] *= inv;
    for (int r = 0; r < m; ++r) {
      if (r == rank) continue;
      Scalar f = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (f.is_zero()) continue;
      for (int c = col; c < ncols; ++c)
        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
            f * prow[static_cast<std::size_t>(c)];
    }
    pivot_col.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<std::vector<Scalar>> kernel;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<Scalar> v(static_cast<std::size_t>(ncols), Scalar::zero());
    v[static_cast<std::size_t>(free)] = Scalar::one();
    for (int r = 0; r < rank; ++r)
      v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] =
          -rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(free)];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace imverma
