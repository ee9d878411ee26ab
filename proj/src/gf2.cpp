#include "dynq/gf2.hpp"

namespace dynq {

Gf2Matrix Gf2Matrix::with_column(const std::vector<int>& column) const {
    Gf2Matrix out(rows_, cols_ + 1);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c)
            if (get(r, c)) out.set(r, c, true);
        if (column[r]) out.set(r, cols_, true);
    }
    return out;
}

int gf2_rank(Gf2Matrix m) {
    int rank = 0;
    for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (m.get(r, c)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank) {
            m.xor_row(rank, pivot);
            m.xor_row(pivot, rank);
            m.xor_row(rank, pivot);
        }
        for (int r = 0; r < m.rows(); ++r)
            if (r != rank && m.get(r, c)) m.xor_row(r, rank);
        ++rank;
    }
    return rank;
}

bool gf2_solvable(const Gf2Matrix& b, const std::vector<int>& d) {
    return gf2_rank(b) == gf2_rank(b.with_column(d));
}

}  // namespace dynq
