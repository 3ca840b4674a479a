#ifndef BCX_QLINALG_HPP
#define BCX_QLINALG_HPP

#include <vector>

#include "bcx/element_set.hpp"
#include "bcx/numbers.hpp"

namespace bcx {

// Column-major exact rational matrix. Columns are matroid elements.
class QMatrix {
  public:
    QMatrix() = default;
    explicit QMatrix(std::vector<std::vector<Rational>> columns);

    int rows() const { return rows_; }
    int cols() const { return static_cast<int>(cols_.size()); }
    const std::vector<Rational>& column(int j) const { return cols_[j]; }

    // Rank of the submatrix formed by the 1-based columns in s.
    int column_rank(const ElementSet& s) const;
    int rank() const { return column_rank(ElementSet::full(cols())); }

    // Basis of the right nullspace of the submatrix on the given columns;
    // each vector is indexed by position within selection (ascending labels).
    std::vector<std::vector<Rational>> nullspace(const ElementSet& s) const;

  private:
    int rows_ = 0;
    std::vector<std::vector<Rational>> cols_;
};

}  // namespace bcx

#endif
