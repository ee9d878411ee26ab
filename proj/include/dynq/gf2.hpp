#ifndef DYNQ_GF2_HPP
#define DYNQ_GF2_HPP

#include <cstdint>
#include <vector>

namespace dynq {

/// Dense 0/1 matrix over Z2, rows as 64-bit word vectors.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64),
          data_(static_cast<size_t>(rows) * words_, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const { return (word(r, c >> 6) >> (c & 63)) & 1; }
    void set(int r, int c, bool v) {
        uint64_t& w = data_[static_cast<size_t>(r) * words_ + (c >> 6)];
        if (v)
            w |= uint64_t(1) << (c & 63);
        else
            w &= ~(uint64_t(1) << (c & 63));
    }

    void xor_row(int dst, int src) {
        for (int i = 0; i < words_; ++i)
            data_[static_cast<size_t>(dst) * words_ + i] ^=
                data_[static_cast<size_t>(src) * words_ + i];
    }

    /// Appends one extra column (for augmented-rank tests).
    Gf2Matrix with_column(const std::vector<int>& column) const;

private:
    uint64_t word(int r, int wi) const { return data_[static_cast<size_t>(r) * words_ + wi]; }

    int rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<uint64_t> data_;
};

/// Rank over Z2 by Gaussian elimination.
int gf2_rank(Gf2Matrix m);

/// True iff B x = d is solvable over Z2, i.e. rank(B) = rank(B | d).
bool gf2_solvable(const Gf2Matrix& b, const std::vector<int>& d);

}  // namespace dynq

#endif
