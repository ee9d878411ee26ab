#include "dynq/rpq.hpp"

namespace dynq {

RpqState::RpqState(const Dfa& dfa, int n) : dfa_(dfa), n_(n), states_(dfa.num_states()) {
    rel_.assign(static_cast<size_t>(states_) * states_, BitMatrix(n));
    for (int p = 0; p < states_; ++p) rel_[p * states_ + p].set_diagonal();
}

std::vector<std::vector<char>> RpqState::phi_tables(const std::string& sigma, int u,
                                                    int v) const {
    const int Q = states_;
    // phi[i][p*Q+q], i = 1..Q.
    std::vector<std::vector<char>> phi(Q + 1, std::vector<char>(Q * Q, 0));
    for (int p = 0; p < Q; ++p)
        for (int q = 0; q < Q; ++q)
            phi[1][p * Q + q] = dfa_.step(p, sigma) == q || pair(p, q, u, v);
    for (int i = 2; i <= Q; ++i) {
        for (int p = 0; p < Q; ++p)
            for (int q = 0; q < Q; ++q) {
                char val = phi[i - 1][p * Q + q];
                for (int pp = 0; pp < Q && !val; ++pp) {
                    if (!phi[1][p * Q + pp]) continue;
                    for (int qq = 0; qq < Q && !val; ++qq)
                        if (pair(pp, qq, v, u) && phi[i - 1][qq * Q + q]) val = 1;
                }
                phi[i][p * Q + q] = val;
            }
    }
    return phi;
}

bool RpqState::phi_reach(const std::string& sigma, int i, int p, int q, int u, int v) const {
    auto phi = phi_tables(sigma, u, v);
    i = std::min(std::max(i, 1), states_);
    return phi[i][p * states_ + q];
}

void RpqState::insert(const std::string& sigma, int u, int v) {
    const int Q = states_;
    auto phi = phi_tables(sigma, u, v);

    // R'_{p,q}(x,y) := R_{p,q}(x,y) or
    //   exists p',q': R_{p,p'}(x,u) and phi^Q_{p',q'}(u,v) and R_{q',q}(v,y)
    std::vector<BitMatrix> next = rel_;
    for (int p = 0; p < Q; ++p)
        for (int q = 0; q < Q; ++q) {
            BitMatrix& out = next[p * Q + q];
            for (int pp = 0; pp < Q; ++pp) {
                const BitMatrix& left = rel_[p * Q + pp];
                for (int qq = 0; qq < Q; ++qq) {
                    if (!phi[Q][pp * Q + qq]) continue;
                    const Bitset& right = rel_[qq * Q + q].row(v);
                    for (int x = 0; x < n_; ++x)
                        if (left.test(x, u)) out.row(x) |= right;
                }
            }
        }
    rel_ = std::move(next);
}

BitMatrix RpqState::query() const {
    BitMatrix out(n_);
    for (int f : dfa_.finals())
        for (int x = 0; x < n_; ++x) out.row(x) |= rel_[dfa_.start() * states_ + f].row(x);
    return out;
}

void RpqState::inject_pair(int p, int q, int x, int y, bool present) {
    if (present)
        rel_[p * states_ + q].set(x, y);
    else
        rel_[p * states_ + q].reset(x, y);
}

RpqState rpq_init(const Dfa& dfa, int n) { return RpqState(dfa, n); }

RpqState rpq_insert(const RpqState& s, const std::string& sigma, int u, int v) {
    RpqState out = s;
    out.insert(sigma, u, v);
    return out;
}

}  // namespace dynq
