#include "dynq/dist.hpp"

#include <deque>

#include "dynq/errors.hpp"

namespace dynq {

namespace {

/// out |= { l1 + l2 : l1 in a, l2 in b }, truncated to out's width.
void conv_into(const Bitset& a, const Bitset& b, Bitset& out) {
    a.for_each([&](int l1) { b.or_shifted_into(out, l1); });
}

}  // namespace

InsDistState::InsDistState(int n, int lmax) : n_(n), lmax_(lmax) {
    grid_.assign(n, std::vector<std::vector<Bitset>>(
                        n, std::vector<Bitset>(lmax + 1, Bitset(lmax + 1))));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            grid_[x][y][0].set(0);  // zero walks, zero total length
            if (x == y)
                for (int t = 0; t <= lmax; ++t) grid_[x][x][t].set(0);
        }
}

bool InsDistState::holds(int x, int y, int t, int l) const {
    if (t < 0 || t > lmax_ || l < 0 || l > lmax_) return false;
    return grid_[x][y][t].test(l);
}

bool InsDistState::has_length(int x, int y, int l) const {
    if (l < 0 || l > lmax_)
        throw BoundExceeded("length " + std::to_string(l) + " exceeds the maintained bound");
    return grid_[x][y][1].test(l);
}

void InsDistState::insert(int u, int v) {
    const int L = lmax_;
    // Cycles through the new edge: l + t for (v,u,t,l), folding the t
    // extra traversals of (u,v) into the length.
    Bitset cyc(L + 1);
    for (int t = 0; t <= L; ++t) grid_[v][u][t].or_shifted_into(cyc, t);

    std::vector<std::vector<std::vector<Bitset>>> next = grid_;
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
            // users[tp] = lengths of tp new-edge-using walks x -> y
            std::vector<Bitset> users(L + 1, Bitset(L + 1));
            users[0].set(0);
            for (int tp = 1; tp <= L; ++tp) {
                Bitset base(L + 1);
                // l_{+1} + l_{+2} + tp over equal path counts tp
                Bitset sum(L + 1);
                conv_into(grid_[x][u][tp], grid_[v][y][tp], sum);
                sum.or_shifted_into(base, tp);
                conv_into(base, cyc, users[tp]);
            }
            // Two-dimensional sumset with the non-users.
            std::vector<Bitset>& out = next[x][y];
            for (auto& row : out) row.clear();
            for (int tm = 0; tm <= L; ++tm) {
                if (grid_[x][y][tm].none()) continue;
                for (int tp = 0; tp + tm <= L; ++tp) {
                    if (users[tp].none()) continue;
                    conv_into(grid_[x][y][tm], users[tp], out[tm + tp]);
                }
            }
        }
    grid_ = std::move(next);
}

std::set<std::tuple<int, int, int>> InsDistState::length_triples() const {
    std::set<std::tuple<int, int, int>> out;
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            grid_[x][y][1].for_each([&](int l) { out.insert({x, y, l}); });
    return out;
}

InsDistState insdist_init(int n, int lmax) { return InsDistState(n, lmax); }

InsDistState insdist_insert(const InsDistState& s, int u, int v) {
    InsDistState out = s;
    out.insert(u, v);
    return out;
}

// ---------------------------------------------------------------------------

AcyDistState::AcyDistState(int n) : n_(n), tc_(n) {
    d_.assign(static_cast<size_t>(n) * n, Bitset(n));
    for (int x = 0; x < n; ++x) d_[x * n + x].set(0);
}

bool AcyDistState::has_length(int x, int y, int l) const {
    if (l < 0 || l >= n_) return false;
    return d_[x * n_ + y].test(l);
}

std::set<std::tuple<int, int, int>> AcyDistState::length_triples() const {
    std::set<std::tuple<int, int, int>> out;
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            d_[x * n_ + y].for_each([&](int l) { out.insert({x, y, l}); });
    return out;
}

void AcyDistState::insert_union(int u, int v) {
    std::vector<Bitset> next = d_;
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            d_[x * n_ + u].for_each(
                [&](int dd) { d_[v * n_ + y].or_shifted_into(next[x * n_ + y], dd + 1); });
    d_ = std::move(next);
}

void AcyDistState::delete_union(const BitMatrix& old_edges, int u, int v) {
    std::vector<Bitset> next(static_cast<size_t>(n_) * n_, Bitset(n_));
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
            if (!tc_.reaches(x, y)) continue;
            if (!(tc_.reaches(x, u) && tc_.reaches(v, y))) {
                next[x * n_ + y] = d_[x * n_ + y];
                continue;
            }
            Bitset& out = next[x * n_ + y];
            for (int z = 0; z < n_; ++z) {
                if (!tc_.reaches(z, u)) continue;
                old_edges.row(z).for_each([&](int zp) {
                    if (z == u && zp == v) return;
                    if (tc_.reaches(zp, u)) return;
                    d_[x * n_ + z].for_each(
                        [&](int dd) { d_[zp * n_ + y].or_shifted_into(out, dd + 1); });
                });
            }
        }
    d_ = std::move(next);
}

void AcyDistState::apply(const LabeledGraph& g_before, const Modification& m) {
    g_before.check_mod(m);
    if (!g_before.directed())
        throw UnsupportedModification("acyclic distance maintenance requires a directed graph");
    if (m.kind == ModKind::Insert) {
        if (g_before.has_union_edge(m.u, m.v)) return;
        if (tc_.cycle_check(m.u, m.v)) throw CycleWouldForm(m.u, m.v);
        insert_union(m.u, m.v);
        tc_.apply(g_before, m);
    } else {
        if (!g_before.has_edge(m.u, m.sym, m.v))
            throw DeleteAbsentEdge(g_before.symbol_name(m.sym), m.u, m.v);
        for (int s = 0; s < g_before.alphabet_size(); ++s)
            if (s != m.sym && g_before.has_edge(m.u, s, m.v)) return;
        delete_union(union_adjacency(g_before), m.u, m.v);
        tc_.apply(g_before, m);
    }
}

AcyDistState acydist_init(int n) { return AcyDistState(n); }

AcyDistState acydist_update(const AcyDistState& s, const LabeledGraph& g_before,
                            const Modification& m) {
    AcyDistState out = s;
    out.apply(g_before, m);
    return out;
}

// ---------------------------------------------------------------------------

UndirDistState::UndirDistState(int n) : n_(n) {
    d_odd_.assign(static_cast<size_t>(n) * n, kInf);
    d_even_.assign(static_cast<size_t>(n) * n, kInf);
    for (int x = 0; x < n; ++x) d_even_[x * n + x] = 0;
    isolated_.assign(n, 1);
}

bool UndirDistState::connected(int x, int y) const {
    return d_odd(x, y) != kInf || d_even(x, y) != kInf;
}

bool UndirDistState::has_length(int x, int y, int l) const {
    if (l == 0) return x == y;
    if (x == y && l % 2 == 0) return !isolated_[x];
    int base = (l % 2 == 1) ? d_odd(x, y) : d_even(x, y);
    return base != kInf && base <= l;
}

void UndirDistState::recompute(const LabeledGraph& g_after) {
    if (g_after.directed())
        throw UnsupportedModification("parity distances require an undirected graph");
    n_ = g_after.n();
    d_odd_.assign(static_cast<size_t>(n_) * n_, kInf);
    d_even_.assign(static_cast<size_t>(n_) * n_, kInf);
    isolated_.assign(n_, 1);
    BitMatrix adj = union_adjacency(g_after);
    for (int x = 0; x < n_; ++x)
        if (adj.row(x).any()) isolated_[x] = 0;

    // BFS on G x K2 from every (x, even).
    for (int x = 0; x < n_; ++x) {
        std::vector<int> dist(static_cast<size_t>(n_) * 2, kInf);
        std::deque<int> queue;
        dist[x * 2] = 0;
        queue.push_back(x * 2);
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            int v = cur / 2, parity = cur % 2;
            adj.row(v).for_each([&](int w) {
                int nxt = w * 2 + (1 - parity);
                if (dist[nxt] == kInf) {
                    dist[nxt] = dist[cur] + 1;
                    queue.push_back(nxt);
                }
            });
        }
        for (int y = 0; y < n_; ++y) {
            d_even_[x * n_ + y] = dist[y * 2];
            d_odd_[x * n_ + y] = dist[y * 2 + 1];
        }
    }
}

UndirDistState undir_init(const LabeledGraph& g) {
    UndirDistState s(g.n());
    s.recompute(g);
    return s;
}

UndirDistState undir_update(const UndirDistState& s, const LabeledGraph& g_after) {
    UndirDistState out = s;
    out.recompute(g_after);
    return out;
}

// ---------------------------------------------------------------------------

ParikhState::ParikhState(int n, int k, int lmax) : n_(n), k_(k), lmax_(lmax) {
    radix_ = 2 * lmax + 1;
    int64_t space = 1;
    for (int i = 0; i < k; ++i) {
        space *= radix_;
        if (space > (int64_t(1) << 22))
            throw BoundExceeded("parikh vector space too large for this k and lmax");
    }
    space_ = static_cast<int>(space);
    valid_ = Bitset(space_);
    for (int idx = 0; idx < space_; ++idx) {
        int rest = idx, total = 0;
        bool ok = true;
        for (int i = 0; i < k; ++i) {
            int digit = rest % radix_;
            rest /= radix_;
            total += digit;
            if (digit > lmax) ok = false;
        }
        if (ok && total <= lmax) valid_.set(idx);
    }
    grid_.assign(n, std::vector<std::vector<Bitset>>(
                        n, std::vector<Bitset>(lmax + 1, Bitset(space_))));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            grid_[x][y][0].set(0);
            if (x == y)
                for (int t = 0; t <= lmax; ++t) grid_[x][x][t].set(0);
        }
}

int ParikhState::offset_of(int sym) const {
    int off = 1;
    for (int i = 0; i < sym; ++i) off *= radix_;
    return off;
}

int ParikhState::encode(const std::vector<int>& vec) const {
    int idx = 0;
    for (int i = k_ - 1; i >= 0; --i) idx = idx * radix_ + vec[i];
    return idx;
}

std::vector<int> ParikhState::decode(int idx) const {
    std::vector<int> vec(k_);
    for (int i = 0; i < k_; ++i) {
        vec[i] = idx % radix_;
        idx /= radix_;
    }
    return vec;
}

bool ParikhState::holds(int x, int y, int t, const std::vector<int>& vec) const {
    if (t < 0 || t > lmax_) return false;
    int total = 0;
    for (int c : vec) {
        if (c < 0 || c > lmax_) return false;
        total += c;
    }
    if (total > lmax_) return false;
    return grid_[x][y][t].test(encode(vec));
}

bool ParikhState::has_vector(int x, int y, const std::vector<int>& vec) const {
    return holds(x, y, 1, vec);
}

void ParikhState::insert(int sym, int u, int v) {
    const int L = lmax_;
    const int off = offset_of(sym);

    Bitset cyc(space_);
    for (int t = 0; t <= L; ++t) grid_[v][u][t].or_shifted_into(cyc, t * off);
    cyc &= valid_;

    std::vector<std::vector<std::vector<Bitset>>> next = grid_;
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
            std::vector<Bitset> users(L + 1, Bitset(space_));
            users[0].set(0);
            for (int tp = 1; tp <= L; ++tp) {
                if (grid_[x][u][tp].none() || grid_[v][y][tp].none()) continue;
                Bitset sum(space_);
                conv_into(grid_[x][u][tp], grid_[v][y][tp], sum);
                sum &= valid_;
                Bitset base(space_);
                sum.or_shifted_into(base, tp * off);
                base &= valid_;
                conv_into(base, cyc, users[tp]);
                users[tp] &= valid_;
            }
            std::vector<Bitset>& out = next[x][y];
            for (auto& row : out) row.clear();
            for (int tm = 0; tm <= L; ++tm) {
                if (grid_[x][y][tm].none()) continue;
                for (int tp = 0; tp + tm <= L; ++tp) {
                    if (users[tp].none()) continue;
                    conv_into(grid_[x][y][tm], users[tp], out[tm + tp]);
                }
            }
            for (auto& row : out) row &= valid_;
        }
    grid_ = std::move(next);
}

std::set<std::tuple<int, int, std::vector<int>>> ParikhState::vector_triples() const {
    std::set<std::tuple<int, int, std::vector<int>>> out;
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            grid_[x][y][1].for_each([&](int idx) { out.insert({x, y, decode(idx)}); });
    return out;
}

ParikhState parikh_init(int n, int k, int lmax) { return ParikhState(n, k, lmax); }

ParikhState parikh_insert(const ParikhState& s, int sym, int u, int v) {
    ParikhState out = s;
    out.insert(sym, u, v);
    return out;
}

// ---------------------------------------------------------------------------

FactorDistState::FactorDistState(const LabeledGraph& g, DistRegime regime, int lmax)
    : graph_(g), regime_(regime) {
    switch (regime) {
        case DistRegime::InsertOnly: {
            // Replay initial edges through the insert procedure.
            ins_ = InsDistState(g.n(), lmax);
            LabeledGraph replay(g.n(), g.alphabet(), g.directed());
            for (const auto& [u, s, v] : g.edges()) {
                if (!replay.has_union_edge(u, v)) ins_.insert(u, v);
                replay.apply({ModKind::Insert, s, u, v});
            }
            break;
        }
        case DistRegime::Acyclic: {
            acy_ = AcyDistState(g.n());
            LabeledGraph replay(g.n(), g.alphabet(), g.directed());
            for (const auto& [u, s, v] : g.edges()) {
                Modification m{ModKind::Insert, s, u, v};
                acy_.apply(replay, m);
                replay.apply(m);
            }
            break;
        }
        case DistRegime::Undirected:
            und_ = undir_init(g);
            break;
    }
}

int FactorDistState::lmax_bound() const {
    return regime_ == DistRegime::InsertOnly ? ins_.lmax() : -1;
}

bool FactorDistState::has_length(int x, int y, int l) const {
    switch (regime_) {
        case DistRegime::InsertOnly:
            return ins_.has_length(x, y, l);
        case DistRegime::Acyclic:
            return acy_.has_length(x, y, l);
        case DistRegime::Undirected:
            return und_.has_length(x, y, l);
    }
    return false;
}

const UndirDistState& FactorDistState::undirected() const { return und_; }

void FactorDistState::apply(const Modification& m) {
    switch (regime_) {
        case DistRegime::InsertOnly: {
            if (m.kind != ModKind::Insert)
                throw UnsupportedModification(
                    "deletions are not maintainable in the insert-only regime");
            bool fresh = !graph_.has_union_edge(m.u, m.v);
            graph_.apply(m);
            if (fresh) ins_.insert(m.u, m.v);
            break;
        }
        case DistRegime::Acyclic:
            acy_.apply(graph_, m);
            graph_.apply(m);
            break;
        case DistRegime::Undirected:
            graph_.apply(m);
            und_.recompute(graph_);
            break;
    }
}

// ---------------------------------------------------------------------------

AnbncnState::AnbncnState(const LabeledGraph& g, DistRegime regime, int lmax)
    : graph_(g), regime_(regime), lmax_(lmax) {
    if (g.alphabet_size() < 3)
        throw ParseError("the a^n b^n c^n query needs an alphabet with at least three symbols");
    if (lmax_ <= 0) {
        switch (regime) {
            case DistRegime::InsertOnly:
                lmax_ = g.n() * g.n();
                break;
            case DistRegime::Acyclic:
                lmax_ = g.n();
                break;
            case DistRegime::Undirected:
                lmax_ = 2 * g.n() + 2;
                break;
        }
    }
    for (int s = 0; s < 3; ++s) {
        LabeledGraph sub(g.n(), {g.symbol_name(s)}, g.directed());
        for (auto [u, v] : g.edges_with_symbol(s))
            if (!sub.has_edge(u, 0, v)) sub.apply({ModKind::Insert, 0, u, v});
        per_symbol_.emplace_back(sub, regime, lmax_);
    }
}

void AnbncnState::apply(const Modification& m) {
    graph_.check_mod(m);
    if (m.sym < 3) {
        Modification sub{m.kind, 0, m.u, m.v};
        per_symbol_[m.sym].apply(sub);
    }
    graph_.apply(m);
}

bool AnbncnState::query(int x, int y) const {
    const int n = graph_.n();
    for (int count = 0; count <= lmax_; ++count) {
        bool count_ok = false;
        for (int z1 = 0; z1 < n && !count_ok; ++z1) {
            if (!per_symbol_[0].has_length(x, z1, count)) continue;
            for (int z2 = 0; z2 < n && !count_ok; ++z2) {
                if (!per_symbol_[1].has_length(z1, z2, count)) continue;
                if (per_symbol_[2].has_length(z2, y, count)) count_ok = true;
            }
        }
        if (count_ok) return true;
    }
    return false;
}

}  // namespace dynq
