#ifndef DYNQ_BITS_HPP
#define DYNQ_BITS_HPP

#include <cstdint>
#include <vector>

namespace dynq {

/// Fixed-width dynamic bitset with the handful of operations the
/// relation algebra needs.  Width is set once at construction.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }
    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }

    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

    /// dst |= (*this << k); bits shifted past dst's width are dropped.
    /// The widths of *this and dst may differ.
    void or_shifted_into(Bitset& dst, int k) const {
        if (k >= dst.nbits_) return;
        const size_t wordshift = k >> 6;
        const int bitshift = k & 63;
        const size_t sw = w_.size(), dw = dst.w_.size();
        if (bitshift == 0) {
            for (size_t i = 0; i < sw && i + wordshift < dw; ++i)
                dst.w_[i + wordshift] |= w_[i];
        } else {
            for (size_t i = 0; i < sw; ++i) {
                if (!w_[i]) continue;
                if (i + wordshift < dw) dst.w_[i + wordshift] |= w_[i] << bitshift;
                if (i + wordshift + 1 < dw)
                    dst.w_[i + wordshift + 1] |= w_[i] >> (64 - bitshift);
            }
        }
        dst.trim();
    }

    /// Invokes f(i) for every set bit i.
    template <typename F>
    void for_each(F&& f) const {
        for (size_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t w = w_[wi];
            while (w) {
                int b = __builtin_ctzll(w);
                f(static_cast<int>(wi * 64 + b));
                w &= w - 1;
            }
        }
    }

private:
    void trim() {
        int excess = static_cast<int>(w_.size()) * 64 - nbits_;
        if (excess > 0 && !w_.empty()) w_.back() &= ~uint64_t(0) >> excess;
    }

    int nbits_ = 0;
    std::vector<uint64_t> w_;
};

/// Square boolean matrix backed by one Bitset row per node.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int n) : n_(n), rows_(n, Bitset(n)) {}

    int n() const { return n_; }
    bool test(int i, int j) const { return rows_[i].test(j); }
    void set(int i, int j) { rows_[i].set(j); }
    void reset(int i, int j) { rows_[i].reset(j); }
    Bitset& row(int i) { return rows_[i]; }
    const Bitset& row(int i) const { return rows_[i]; }

    void set_diagonal() {
        for (int i = 0; i < n_; ++i) rows_[i].set(i);
    }

    bool operator==(const BitMatrix& o) const { return n_ == o.n_ && rows_ == o.rows_; }

    std::vector<std::pair<int, int>> pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < n_; ++i)
            rows_[i].for_each([&](int j) { out.emplace_back(i, j); });
        return out;
    }

private:
    int n_ = 0;
    std::vector<Bitset> rows_;
};

}  // namespace dynq

#endif
