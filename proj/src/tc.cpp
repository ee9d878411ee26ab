#include "dynq/tc.hpp"

#include "dynq/errors.hpp"

namespace dynq {

TcState::TcState(int n, bool acyclic_mode) : t_(n), acyclic_mode_(acyclic_mode) {
    t_.set_diagonal();
}

bool TcState::cycle_check(int u, int v) const {
    if (u == v) return true;
    return t_.test(v, u);  // reflexive T: v != u and T(v,u) means a real path
}

BitMatrix union_adjacency(const LabeledGraph& g) {
    BitMatrix e(g.n());
    for (const auto& [u, s, v] : g.edges()) e.set(u, v);
    return e;
}

void TcState::apply_union(const BitMatrix& union_edges, ModKind kind, int u, int v) {
    const int n = t_.n();
    if (kind == ModKind::Insert) {
        if (acyclic_mode_ && cycle_check(u, v)) throw CycleWouldForm(u, v);
        // T'(x,y) := T(x,y) or (T(x,u) and T(v,y))
        BitMatrix next = t_;
        for (int x = 0; x < n; ++x)
            if (t_.test(x, u)) next.row(x) |= t_.row(v);
        t_ = next;
    } else {
        // T'(x,y) := T(x,y) and ( (not T(x,u) or not T(v,y))
        //   or exists z,z': T(x,z) and E(z,z') and (z,z') != (u,v)
        //      and T(z',y) and T(z,u) and not T(z',u) )
        BitMatrix next(n);
        // Witness rows: for every z with T(z,u), every surviving edge
        // (z,z') with not T(z',u) contributes T(x,z) and T(z',y).
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
                if (!t_.test(x, y)) continue;
                if (!(t_.test(x, u) && t_.test(v, y))) {
                    next.set(x, y);
                    continue;
                }
                bool alive = false;
                for (int z = 0; z < n && !alive; ++z) {
                    if (!t_.test(x, z) || !t_.test(z, u)) continue;
                    union_edges.row(z).for_each([&](int zp) {
                        if (alive) return;
                        if (z == u && zp == v) return;
                        if (!t_.test(zp, u) && t_.test(zp, y)) alive = true;
                    });
                }
                if (alive) next.set(x, y);
            }
        }
        t_ = next;
    }
}

void TcState::apply(const LabeledGraph& g_before, const Modification& m) {
    g_before.check_mod(m);
    if (acyclic_mode_ && !g_before.directed())
        throw UnsupportedModification("acyclic TC maintenance requires a directed graph");
    if (m.kind == ModKind::Insert) {
        // Union graph unchanged: repeated insert or parallel label.
        if (g_before.has_union_edge(m.u, m.v)) return;
        apply_union(union_adjacency(g_before), ModKind::Insert, m.u, m.v);
    } else {
        if (!g_before.has_edge(m.u, m.sym, m.v))
            throw DeleteAbsentEdge(g_before.symbol_name(m.sym), m.u, m.v);
        // A parallel edge with another label keeps the union edge alive.
        for (int s = 0; s < g_before.alphabet_size(); ++s)
            if (s != m.sym && g_before.has_edge(m.u, s, m.v)) return;
        apply_union(union_adjacency(g_before), ModKind::Delete, m.u, m.v);
    }
}

TcState tc_update(const TcState& s, const LabeledGraph& g_before, const Modification& m) {
    TcState out = s;
    out.apply(g_before, m);
    return out;
}

}  // namespace dynq
