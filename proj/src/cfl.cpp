#include "dynq/cfl.hpp"

#include "dynq/errors.hpp"

namespace dynq {

Rel4 Rel4::compose(const Rel4& p, const Rel4& q) {
    const int n = p.n_;
    Rel4 out(n);
    for (int a = 0; a < n; ++a)
        for (int d = 0; d < n; ++d) {
            Bitset& dst = out.inner_[a * n + d];
            p.inner_[a * n + d].for_each(
                [&](int mm) { dst |= q.inner_[mm]; });  // mm already encodes (m, m')
        }
    return out;
}

Rel4 Rel4::glue_left(const BitMatrix& bin, const Rel4& s) {
    const int n = s.n_;
    Rel4 out(n);
    for (int a = 0; a < n; ++a) {
        for (int t = 0; t < n; ++t) {
            if (!bin.test(a, t)) continue;
            for (int d = 0; d < n; ++d) out.inner_[a * n + d] |= s.inner_[t * n + d];
        }
    }
    return out;
}

Rel4 Rel4::glue_right(const Rel4& s, const BitMatrix& bin) {
    const int n = s.n_;
    Rel4 out(n);
    for (int t = 0; t < n; ++t) {
        for (int d = 0; d < n; ++d) {
            if (!bin.test(t, d)) continue;
            for (int a = 0; a < n; ++a) out.inner_[a * n + d] |= s.inner_[a * n + t];
        }
    }
    return out;
}

BitMatrix Rel4::plug(const Rel4& s, const Bitset& edges) {
    const int n = s.n_;
    BitMatrix out(n);
    for (int a = 0; a < n; ++a)
        for (int d = 0; d < n; ++d)
            if (s.inner_[a * n + d].intersects(edges)) out.set(a, d);
    return out;
}

// ---------------------------------------------------------------------------

CflState::CflState(const CnfGrammar& grammar, int n)
    : grammar_(grammar), n_(n), vars_(grammar.num_variables), tc_(n), answer_(n) {
    rel_.assign(static_cast<size_t>(vars_) * vars_, Rel4(n));
    for (int X = 0; X < vars_; ++X) {
        Rel4& r = rel_[X * vars_ + X];
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) r.set(x, x, y, y);
    }
    if (grammar_.start_to_eps) answer_.set_diagonal();
}

BitMatrix CflState::preterm_plug(int Z, const std::vector<Bitset>& mask_by_var) const {
    BitMatrix out(n_);
    for (int U = 0; U < vars_; ++U) {
        if (mask_by_var[U].size() == 0 || mask_by_var[U].none()) continue;
        const Rel4& r = rel_[Z * vars_ + U];
        for (int a = 0; a < n_; ++a)
            for (int m = 0; m < n_; ++m)
                if (!out.test(a, m) && r.inner(a, m).intersects(mask_by_var[U])) out.set(a, m);
    }
    return out;
}

void CflState::apply(const LabeledGraph& g_before, const Modification& m) {
    g_before.check_mod(m);
    if (m.kind == ModKind::Insert) {
        if (g_before.has_edge(m.u, m.sym, m.v)) return;  // idempotent
        if (tc_.cycle_check(m.u, m.v)) throw CycleWouldForm(m.u, m.v);
        insert_edge(g_before, m.sym, m.u, m.v);
    } else {
        if (!g_before.has_edge(m.u, m.sym, m.v))
            throw DeleteAbsentEdge(g_before.symbol_name(m.sym), m.u, m.v);
        delete_edge(g_before, m.sym, m.u, m.v);
    }
}

void CflState::insert_edge(const LabeledGraph& g_before, int sym, int u, int v) {
    const std::string& sigma = g_before.symbol_name(sym);

    // Mask holding just the new edge position, per preterminal of sigma.
    std::vector<Bitset> mask(vars_, Bitset(n_ * n_));
    for (int U : grammar_.preterminals(sigma)) mask[U].set(u * n_ + v);

    std::vector<BitMatrix> plug(vars_);
    for (int Z = 0; Z < vars_; ++Z) plug[Z] = preterm_plug(Z, mask);

    // case2[Z][Y]: Z derives s1 U1 s2 Y s3 with the new edge realizing U1.
    std::vector<Rel4> case2(static_cast<size_t>(vars_) * vars_, Rel4(n_));
    std::vector<Rel4> case3(static_cast<size_t>(vars_) * vars_, Rel4(n_));
    for (const auto& r : grammar_.binary) {
        for (int Y = 0; Y < vars_; ++Y) {
            Rel4 left = Rel4::glue_left(plug[r.left], rel_[r.right * vars_ + Y]);
            Rel4 right = Rel4::glue_right(rel_[r.left * vars_ + Y], plug[r.right]);
            for (int X = 0; X < vars_; ++X) {
                case2[X * vars_ + Y] |= Rel4::compose(rel_[X * vars_ + r.lhs], left);
                case3[X * vars_ + Y] |= Rel4::compose(rel_[X * vars_ + r.lhs], right);
            }
        }
    }

    std::vector<Rel4> next = rel_;
    for (int X = 0; X < vars_; ++X)
        for (int Y = 0; Y < vars_; ++Y) {
            next[X * vars_ + Y] |= case2[X * vars_ + Y];
            next[X * vars_ + Y] |= case3[X * vars_ + Y];
        }
    // Both witnesses use the new edge: the chunk above the Y-hole carries
    // one plugged occurrence on each side of the hole.
    for (const auto& r : grammar_.binary) {
        for (int Y = 0; Y < vars_; ++Y) {
            Rel4 psi1 = Rel4::glue_right(case2[r.left * vars_ + Y], plug[r.right]);
            Rel4 psi2 = Rel4::glue_left(plug[r.left], case3[r.right * vars_ + Y]);
            for (int X = 0; X < vars_; ++X) {
                next[X * vars_ + Y] |= Rel4::compose(rel_[X * vars_ + r.lhs], psi1);
                next[X * vars_ + Y] |= Rel4::compose(rel_[X * vars_ + r.lhs], psi2);
            }
        }
    }

    rel_ = std::move(next);
    tc_.apply(g_before, Modification{ModKind::Insert, sym, u, v});
    LabeledGraph after = apply_mod(g_before, Modification{ModKind::Insert, sym, u, v});
    refresh_query(after);
}

void CflState::delete_edge(const LabeledGraph& g_before, int sym, int u, int v) {
    // Candidate replacement edges per preterminal: the same pair under a
    // different label, or an alternative edge (z,z') with T(z,u) and not
    // T(z',u) as in the acyclic reachability program.
    std::vector<Bitset> mask(vars_, Bitset(n_ * n_));
    for (const auto& [z, s, zp] : g_before.edges()) {
        bool is_deleted_pair = (z == u && zp == v);
        for (int U : grammar_.preterminals(g_before.symbol_name(s))) {
            if (is_deleted_pair) {
                if (s != sym) mask[U].set(z * n_ + zp);
            } else if (tc_.reaches(z, u) && !tc_.reaches(zp, u)) {
                mask[U].set(z * n_ + zp);
            }
        }
    }

    std::vector<BitMatrix> plug(vars_);
    for (int Z = 0; Z < vars_; ++Z) plug[Z] = preterm_plug(Z, mask);

    std::vector<Rel4> mid1(static_cast<size_t>(vars_) * vars_, Rel4(n_));
    std::vector<Rel4> mid2(static_cast<size_t>(vars_) * vars_, Rel4(n_));
    for (const auto& r : grammar_.binary) {
        for (int Y = 0; Y < vars_; ++Y) {
            Rel4 left = Rel4::glue_left(plug[r.left], rel_[r.right * vars_ + Y]);
            Rel4 right = Rel4::glue_right(rel_[r.left * vars_ + Y], plug[r.right]);
            for (int X = 0; X < vars_; ++X) {
                mid1[X * vars_ + Y] |= Rel4::compose(rel_[X * vars_ + r.lhs], left);
                mid2[X * vars_ + Y] |= Rel4::compose(rel_[X * vars_ + r.lhs], right);
            }
        }
    }
    std::vector<Rel4> both(static_cast<size_t>(vars_) * vars_, Rel4(n_));
    for (const auto& r : grammar_.binary) {
        for (int Y = 0; Y < vars_; ++Y) {
            Rel4 psi1 = Rel4::glue_right(mid1[r.left * vars_ + Y], plug[r.right]);
            Rel4 psi2 = Rel4::glue_left(plug[r.left], mid2[r.right * vars_ + Y]);
            for (int X = 0; X < vars_; ++X) {
                both[X * vars_ + Y] |= Rel4::compose(rel_[X * vars_ + r.lhs], psi1);
                both[X * vars_ + Y] |= Rel4::compose(rel_[X * vars_ + r.lhs], psi2);
            }
        }
    }

    // Premise windows.  A side (x,y) with no old path through (u,v)
    // keeps its old witnesses; a side with T(x,u) and T(v,y) must
    // justify a replacement edge.
    std::vector<Bitset> row_plain(n_, Bitset(n_)), row_mid(n_, Bitset(n_));
    std::vector<Bitset> col_plain(n_, Bitset(n_)), col_mid(n_, Bitset(n_));
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
            bool via = tc_.reaches(x, u) && tc_.reaches(v, y);
            (via ? row_mid : row_plain)[x].set(y);
            (via ? col_mid : col_plain)[y].set(x);
        }
    auto build_windows = [&](const std::vector<Bitset>& rows, const std::vector<Bitset>& cols) {
        std::vector<Bitset> w(static_cast<size_t>(n_) * n_, Bitset(n_ * n_));
        for (int a = 0; a < n_; ++a)
            for (int d = 0; d < n_; ++d)
                rows[a].for_each([&](int y1) { cols[d].or_shifted_into(w[a * n_ + d], y1 * n_); });
        return w;
    };
    auto w_pp = build_windows(row_plain, col_plain);
    auto w_pm = build_windows(row_plain, col_mid);
    auto w_mp = build_windows(row_mid, col_plain);
    auto w_mm = build_windows(row_mid, col_mid);

    std::vector<Rel4> next(static_cast<size_t>(vars_) * vars_, Rel4(n_));
    for (int X = 0; X < vars_; ++X)
        for (int Y = 0; Y < vars_; ++Y) {
            const int i = X * vars_ + Y;
            Rel4& dst = next[i];
            for (int a = 0; a < n_; ++a)
                for (int d = 0; d < n_; ++d) {
                    const int ad = a * n_ + d;
                    Bitset acc = rel_[i].inner(a, d);
                    acc &= w_pp[ad];
                    Bitset t = mid2[i].inner(a, d);
                    t &= w_pm[ad];
                    acc |= t;
                    t = mid1[i].inner(a, d);
                    t &= w_mp[ad];
                    acc |= t;
                    t = both[i].inner(a, d);
                    t &= w_mm[ad];
                    acc |= t;
                    dst.inner(a, d) = acc;
                }
        }

    rel_ = std::move(next);
    tc_.apply(g_before, Modification{ModKind::Delete, sym, u, v});
    LabeledGraph after = apply_mod(g_before, Modification{ModKind::Delete, sym, u, v});
    refresh_query(after);
}

void CflState::refresh_query(const LabeledGraph& g_after) {
    // Q(x,y) = (S -> eps and x = y) or some terminal edge (z1,z2) fills
    // the hole of an R_{S->U} chunk with U -> tau.
    std::vector<Bitset> em(vars_, Bitset(n_ * n_));
    for (const auto& [z1, s, z2] : g_after.edges())
        for (int U : grammar_.preterminals(g_after.symbol_name(s))) em[U].set(z1 * n_ + z2);

    BitMatrix q(n_);
    if (grammar_.start_to_eps) q.set_diagonal();
    const int S = grammar_.start;
    for (int U = 0; U < vars_; ++U) {
        if (em[U].none()) continue;
        const Rel4& r = rel_[S * vars_ + U];
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y)
                if (!q.test(x, y) && r.inner(x, y).intersects(em[U])) q.set(x, y);
    }
    answer_ = q;
}

std::set<std::vector<int>> CflState::derived(int X, const std::vector<int>& Ys) const {
    const int k = static_cast<int>(Ys.size());
    if (k < 1 || k > 3) throw ArityUnsupported("derived relations support 1 <= k <= 3");
    std::set<std::vector<int>> out;
    if (k == 1) {
        relation(X, Ys[0]).for_each_tuple(
            [&](int a, int b, int c, int d) { out.insert({a, b, c, d}); });
        return out;
    }
    if (k == 2) {
        for (const auto& r : grammar_.binary) {
            const Rel4& top = rel_[X * vars_ + r.lhs];
            const Rel4& l = rel_[r.left * vars_ + Ys[0]];
            const Rel4& rr = rel_[r.right * vars_ + Ys[1]];
            l.for_each_tuple([&](int m1, int y1, int x2, int m2) {
                rr.for_each_tuple([&](int m2b, int y2, int x3, int m3) {
                    if (m2b != m2) return;
                    for (int x1 = 0; x1 < n_; ++x1)
                        for (int y3 = 0; y3 < n_; ++y3)
                            if (top.test(x1, m1, m3, y3))
                                out.insert({x1, y1, x2, y2, x3, y3});
                });
            });
        }
        return out;
    }
    // k == 3: the hole pair (Y1,Y2) or (Y2,Y3) descends through one child
    // of the top rule; reuse the k = 2 materialization for that child.
    for (const auto& r : grammar_.binary) {
        const Rel4& top = rel_[X * vars_ + r.lhs];
        // psi1: Y1,Y2 under the left child, Y3 under the right child.
        {
            auto inner_pairs = derived(r.left, {Ys[0], Ys[1]});
            const Rel4& third = rel_[r.right * vars_ + Ys[2]];
            for (const auto& t : inner_pairs) {
                // t = (m1, y1, x2, y2, x3, m2)
                third.for_each_tuple([&](int m2b, int y3, int x4, int m3) {
                    if (m2b != t[5]) return;
                    for (int x1 = 0; x1 < n_; ++x1)
                        for (int y4 = 0; y4 < n_; ++y4)
                            if (top.test(x1, t[0], m3, y4))
                                out.insert({x1, t[1], t[2], t[3], t[4], y3, x4, y4});
                });
            }
        }
        // psi2: Y1 under the left child, Y2,Y3 under the right child.
        {
            auto inner_pairs = derived(r.right, {Ys[1], Ys[2]});
            const Rel4& first = rel_[r.left * vars_ + Ys[0]];
            for (const auto& t : inner_pairs) {
                // t = (m2, y2, x3, y3, x4, m3)
                first.for_each_tuple([&](int m1, int y1, int x2, int m2b) {
                    if (m2b != t[0]) return;
                    for (int x1 = 0; x1 < n_; ++x1)
                        for (int y4 = 0; y4 < n_; ++y4)
                            if (top.test(x1, m1, t[5], y4))
                                out.insert({x1, y1, x2, t[1], t[2], t[3], t[4], y4});
                });
            }
        }
    }
    return out;
}

CflState cfl_init(const CnfGrammar& grammar, int n) { return CflState(grammar, n); }

CflState cfl_update(const CflState& s, const LabeledGraph& g_before, const Modification& m) {
    CflState out = s;
    out.apply(g_before, m);
    return out;
}

}  // namespace dynq
