#include "dynq/ecrpq.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "dynq/errors.hpp"

namespace dynq {

// ---------------------------------------------------------------------------
// Plan compilation.

EcrpqPlan ecrpq_compile(const EcrpqQuery& q, const std::vector<std::string>& alphabet) {
    const int m = q.atom_count();
    if (m == 0) throw ParseError("an ECRPQ plan needs at least one path atom");
    for (const auto& r : q.relations) require_valid_sync(r.automaton);

    // Tape assignment: plan tape i corresponds to atom i's path variable.
    // Per relation: which plan tape each of its own tapes reads.
    std::vector<std::vector<int>> rel_tapes;
    std::vector<char> constrained(m, 0);
    for (const auto& r : q.relations) {
        std::vector<int> tapes;
        for (const auto& p : r.paths) {
            int idx = q.path_index(p);
            if (idx < 0) throw ParseError("relation references unbound path variable " + p);
            tapes.push_back(idx);
            constrained[idx] = 1;
        }
        rel_tapes.push_back(std::move(tapes));
    }
    std::vector<int> free_tapes;
    for (int i = 0; i < m; ++i)
        if (!constrained[i]) free_tapes.push_back(i);

    const int R = static_cast<int>(q.relations.size());

    // Product state: per-relation state plus finished bits of free tapes.
    struct PState {
        std::vector<int> rel_states;
        unsigned finished;
        bool operator<(const PState& o) const {
            return std::tie(rel_states, finished) < std::tie(o.rel_states, o.finished);
        }
    };

    // Candidate columns: every column over (alphabet + pad) except all-pad.
    std::vector<std::vector<std::string>> columns;
    {
        std::vector<std::string> syms = alphabet;
        syms.push_back(std::string());  // pad
        std::vector<int> pick(m, 0);
        for (;;) {
            std::vector<std::string> col(m);
            bool all_pad = true;
            for (int i = 0; i < m; ++i) {
                col[i] = syms[pick[i]];
                if (!SyncAutomaton::is_pad(col[i])) all_pad = false;
            }
            if (!all_pad) columns.push_back(col);
            int i = m - 1;
            while (i >= 0 && ++pick[i] == static_cast<int>(syms.size())) pick[i--] = 0;
            if (i < 0) break;
        }
    }

    std::map<PState, int> ids;
    std::vector<PState> order;
    PState init;
    for (const auto& r : q.relations) init.rel_states.push_back(r.automaton.start);
    init.finished = 0;
    ids[init] = 0;
    order.push_back(init);

    SyncAutomaton plan;
    plan.arity = m;
    plan.start = 0;

    for (size_t cur = 0; cur < order.size(); ++cur) {
        PState state = order[cur];
        for (const auto& col : columns) {
            // Free-tape discipline.
            unsigned finished = state.finished;
            bool ok = true;
            for (size_t fi = 0; fi < free_tapes.size(); ++fi) {
                int tape = free_tapes[fi];
                if (SyncAutomaton::is_pad(col[tape]))
                    finished |= 1u << fi;
                else if (state.finished & (1u << fi))
                    ok = false;
            }
            if (!ok) continue;
            // Per-relation component moves (relations may be
            // nondeterministic, so branch over choices).
            std::vector<std::vector<int>> choices(R);
            for (int j = 0; j < R && ok; ++j) {
                std::vector<std::string> sub;
                for (int t : rel_tapes[j]) sub.push_back(col[t]);
                for (const auto& tr : q.relations[j].automaton.transitions)
                    if (tr.from == state.rel_states[j] && tr.column == sub)
                        choices[j].push_back(tr.to);
                if (choices[j].empty()) ok = false;
            }
            if (!ok) continue;
            std::vector<int> pick(R, 0);
            for (;;) {
                PState next;
                next.finished = finished;
                for (int j = 0; j < R; ++j) next.rel_states.push_back(choices[j][pick[j]]);
                auto [it, fresh] = ids.emplace(next, static_cast<int>(order.size()));
                if (fresh) order.push_back(next);
                plan.transitions.push_back({static_cast<int>(cur), col, it->second});
                int j = R - 1;
                while (j >= 0 && ++pick[j] == static_cast<int>(choices[j].size())) pick[j--] = 0;
                if (j < 0) break;
            }
        }
    }
    plan.num_states = static_cast<int>(order.size());
    for (size_t i = 0; i < order.size(); ++i) {
        bool fin = true;
        for (int j = 0; j < R; ++j)
            if (!q.relations[j].automaton.is_final(order[i].rel_states[j])) fin = false;
        if (fin) plan.finals.push_back(static_cast<int>(i));
    }

    // Prune to useful states so the padding discipline holds on every
    // remaining path, which the relation composition relies on.
    {
        std::vector<char> coreach(plan.num_states, 0);
        for (int f : plan.finals) coreach[f] = 1;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& t : plan.transitions)
                if (coreach[t.to] && !coreach[t.from]) {
                    coreach[t.from] = 1;
                    changed = true;
                }
        }
        std::vector<int> remap(plan.num_states, -1);
        int next_id = 0;
        remap[plan.start] = next_id++;  // keep the start even if dead
        for (int s = 0; s < plan.num_states; ++s)
            if (coreach[s] && remap[s] < 0) remap[s] = next_id++;
        SyncAutomaton pruned;
        pruned.arity = plan.arity;
        pruned.num_states = next_id;
        pruned.start = remap[plan.start];
        for (int f : plan.finals)
            if (remap[f] >= 0) pruned.finals.push_back(remap[f]);
        for (const auto& t : plan.transitions)
            if (remap[t.from] >= 0 && coreach[t.from] && coreach[t.to])
                pruned.transitions.push_back({remap[t.from], t.column, remap[t.to]});
        plan = std::move(pruned);
    }

    EcrpqPlan out;
    out.automaton = std::move(plan);
    out.alphabet = alphabet;
    out.constraints = q.constraints;
    for (const auto& row : out.constraints)
        if (static_cast<int>(row.coeffs.size()) != m * static_cast<int>(alphabet.size()))
            throw ParseError("constraint row width must be atoms * alphabet size");

    // Endpoint structure.
    auto slot_of = [&](const std::string& var) -> std::pair<int, bool> {
        for (int i = 0; i < m; ++i) {
            if (q.atoms[i].x == var) return {i, false};
            if (q.atoms[i].y == var) return {i, true};
        }
        throw ParseError("variable " + var + " does not occur in any atom");
    };
    for (const auto& h : q.head) out.head_slots.push_back(slot_of(h));
    std::map<std::string, std::pair<int, bool>> first_slot;
    for (int i = 0; i < m; ++i) {
        for (bool is_y : {false, true}) {
            const std::string& var = is_y ? q.atoms[i].y : q.atoms[i].x;
            auto it = first_slot.find(var);
            if (it == first_slot.end())
                first_slot[var] = {i, is_y};
            else
                out.shared.push_back({it->second.first, it->second.second, i, is_y});
        }
    }

    require_valid_sync(out.automaton);
    return out;
}

// ---------------------------------------------------------------------------
// ECRPQ state.

EcrpqState::EcrpqState(const EcrpqPlan& plan, const std::vector<LabeledGraph>& copies)
    : plan_(plan), copies_(copies) {
    if (static_cast<int>(copies_.size()) != plan_.arity())
        throw ParseError("copy count does not match the plan arity");
    for (const auto& g : copies_) {
        if (!g.is_acyclic())
            throw UnsupportedModification("ECRPQ maintenance requires acyclic copies");
        TcState t(g.n());
        LabeledGraph replay(g.n(), g.alphabet(), g.directed());
        for (const auto& [u, s, v] : g.edges()) {
            Modification m{ModKind::Insert, s, u, v};
            t.apply(replay, m);
            replay.apply(m);
        }
        tc_.push_back(std::move(t));
    }
    recompute();
}

const std::set<EcrpqTuple>& EcrpqState::relation(int p, int q) const {
    static const std::set<EcrpqTuple> kEmpty;
    auto it = rel_.find({p, q});
    return it == rel_.end() ? kEmpty : it->second;
}

void EcrpqState::recompute() {
    rel_.clear();
    const int m = plan_.arity();
    const int k = static_cast<int>(plan_.alphabet.size());
    const int states = plan_.automaton.num_states;

    // Pack (state, positions, counts); counts on an acyclic copy never
    // exceed its node count.
    std::vector<int64_t> stride(m);
    int64_t space = states;
    for (int i = 0; i < m; ++i) {
        stride[i] = space;
        space *= copies_[i].n();
    }
    std::vector<std::vector<int64_t>> cstride(m, std::vector<int64_t>(k));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < k; ++j) {
            cstride[i][j] = space;
            space *= copies_[i].n() + 1;
        }
    if (space > (int64_t(1) << 26))
        throw BoundExceeded("ECRPQ relation space too large for this instance");

    std::vector<char> seen(space, 0);
    std::vector<int64_t> touched;
    std::deque<int64_t> work;
    std::vector<int> xs(m, 0);

    auto decode_tuple = [&](int64_t key, const std::vector<int>& starts) {
        EcrpqTuple t;
        t.xs = starts;
        t.ys.resize(m);
        t.counts.assign(m, std::vector<int>(k, 0));
        for (int i = 0; i < m; ++i) {
            t.ys[i] = static_cast<int>(key / stride[i] % copies_[i].n());
            for (int j = 0; j < k; ++j)
                t.counts[i][j] = static_cast<int>(key / cstride[i][j] % (copies_[i].n() + 1));
        }
        return t;
    };

    for (int p = 0; p < states; ++p) {
        std::fill(xs.begin(), xs.end(), 0);
        for (;;) {
            for (int64_t key : touched) seen[key] = 0;
            touched.clear();
            work.clear();
            int64_t init = p;
            for (int i = 0; i < m; ++i) init += stride[i] * xs[i];
            seen[init] = 1;
            touched.push_back(init);
            work.push_back(init);
            while (!work.empty()) {
                int64_t key = work.front();
                work.pop_front();
                int q = static_cast<int>(key % states);
                rel_[{p, q}].insert(decode_tuple(key, xs));
                std::vector<int> pos(m);
                for (int i = 0; i < m; ++i)
                    pos[i] = static_cast<int>(key / stride[i] % copies_[i].n());
                for (const auto& tr : plan_.automaton.transitions) {
                    if (tr.from != q) continue;
                    bool all_pad = true;
                    for (const auto& c : tr.column)
                        if (!SyncAutomaton::is_pad(c)) all_pad = false;
                    if (all_pad) continue;
                    std::function<void(int, int64_t)> expand = [&](int i, int64_t acc) {
                        if (i == m) {
                            if (!seen[acc]) {
                                seen[acc] = 1;
                                touched.push_back(acc);
                                work.push_back(acc);
                            }
                            return;
                        }
                        if (SyncAutomaton::is_pad(tr.column[i])) {
                            expand(i + 1, acc);
                            return;
                        }
                        int si = copies_[i].symbol(tr.column[i]);
                        if (si < 0) return;
                        int sym = 0;
                        while (sym < k && plan_.alphabet[sym] != tr.column[i]) ++sym;
                        int cur =
                            sym < k
                                ? static_cast<int>(key / cstride[i][sym] % (copies_[i].n() + 1))
                                : 0;
                        if (sym < k && cur + 1 > copies_[i].n()) return;
                        for (int w = 0; w < copies_[i].n(); ++w) {
                            if (!copies_[i].has_edge(pos[i], si, w)) continue;
                            int64_t next = acc + stride[i] * (w - pos[i]);
                            if (sym < k) next += cstride[i][sym];
                            expand(i + 1, next);
                        }
                    };
                    expand(0, key - q + tr.to);
                }
            }
            int i = m - 1;
            while (i >= 0 && ++xs[i] == copies_[i].n()) xs[i--] = 0;
            if (i < 0) break;
        }
    }
}

void EcrpqState::update(int copy, const Modification& m) {
    if (copy < 0 || copy >= static_cast<int>(copies_.size()))
        throw ParseError("copy index out of range");
    LabeledGraph& g = copies_[copy];
    g.check_mod(m);
    if (m.kind == ModKind::Insert) {
        if (g.has_edge(m.u, m.sym, m.v)) return;
        if (tc_[copy].cycle_check(m.u, m.v)) throw CycleWouldForm(m.u, m.v);
        insert_edge(copy, m.sym, m.u, m.v);
        tc_[copy].apply(g, m);
        g.apply(m);
    } else {
        if (!g.has_edge(m.u, m.sym, m.v))
            throw DeleteAbsentEdge(g.symbol_name(m.sym), m.u, m.v);
        tc_[copy].apply(g, m);
        g.apply(m);
        recompute();  // documented substitution for the deletion formulas
    }
}

void EcrpqState::insert_edge(int copy, int sym, int u, int v) {
    const int m = plan_.arity();
    const int k = static_cast<int>(plan_.alphabet.size());
    const std::string& sigma = copies_[copy].symbol_name(sym);
    const int states = plan_.automaton.num_states;

    // Index the pre-state: prefixes by end tuple, suffixes by start tuple.
    std::map<std::tuple<int, int, std::vector<int>>, std::vector<const EcrpqTuple*>> by_end,
        by_start;
    for (const auto& [pq, tuples] : rel_) {
        for (const auto& t : tuples) {
            by_end[{pq.first, pq.second, t.ys}].push_back(&t);
            by_start[{pq.first, pq.second, t.xs}].push_back(&t);
        }
    }

    std::vector<std::pair<std::pair<int, int>, EcrpqTuple>> additions;
    for (const auto& tr : plan_.automaton.transitions) {
        if (tr.column[copy] != sigma) continue;
        // Compatible middle endpoints for the other tapes.
        std::vector<std::vector<std::pair<int, int>>> moves(m);
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            if (i == copy) {
                moves[i] = {{u, v}};
                continue;
            }
            if (SyncAutomaton::is_pad(tr.column[i])) {
                for (int w = 0; w < copies_[i].n(); ++w) moves[i].push_back({w, w});
            } else {
                int si = copies_[i].symbol(tr.column[i]);
                if (si < 0) {
                    ok = false;
                    break;
                }
                for (auto [a, b] : copies_[i].edges_with_symbol(si)) moves[i].push_back({a, b});
            }
            if (moves[i].empty()) ok = false;
        }
        if (!ok) continue;

        std::vector<int> pick(m, 0);
        for (;;) {
            std::vector<int> xprime(m), yprime(m);
            for (int i = 0; i < m; ++i) {
                xprime[i] = moves[i][pick[i]].first;
                yprime[i] = moves[i][pick[i]].second;
            }
            // Symbol counts contributed by the middle column.
            std::vector<std::vector<int>> mid(m, std::vector<int>(k, 0));
            for (int i = 0; i < m; ++i)
                if (!SyncAutomaton::is_pad(tr.column[i]))
                    for (int s = 0; s < k; ++s)
                        if (plan_.alphabet[s] == tr.column[i]) ++mid[i][s];

            for (int p = 0; p < states; ++p) {
                auto pit = by_end.find({p, tr.from, xprime});
                if (pit == by_end.end()) continue;
                for (int q = 0; q < states; ++q) {
                    auto sit = by_start.find({tr.to, q, yprime});
                    if (sit == by_start.end()) continue;
                    for (const EcrpqTuple* pre : pit->second)
                        for (const EcrpqTuple* suf : sit->second) {
                            EcrpqTuple nt;
                            nt.xs = pre->xs;
                            nt.ys = suf->ys;
                            nt.counts.assign(m, std::vector<int>(k, 0));
                            for (int i = 0; i < m; ++i)
                                for (int s = 0; s < k; ++s)
                                    nt.counts[i][s] =
                                        pre->counts[i][s] + suf->counts[i][s] + mid[i][s];
                            additions.push_back({{p, q}, std::move(nt)});
                        }
                }
            }
            int i = m - 1;
            while (i >= 0 && ++pick[i] == static_cast<int>(moves[i].size())) pick[i--] = 0;
            if (i < 0) break;
        }
    }
    for (auto& [pq, t] : additions) rel_[pq].insert(std::move(t));
}

std::set<std::vector<int>> EcrpqState::eval() const {
    std::set<std::vector<int>> out;
    const int m = plan_.arity();
    const int k = static_cast<int>(plan_.alphabet.size());
    for (int f : plan_.automaton.finals) {
        for (const auto& t : relation(plan_.automaton.start, f)) {
            auto endpoint = [&](int atom, bool is_y) { return is_y ? t.ys[atom] : t.xs[atom]; };
            bool consistent = true;
            for (const auto& [a, ay, b, by] : plan_.shared)
                if (endpoint(a, ay) != endpoint(b, by)) consistent = false;
            if (!consistent) continue;
            std::vector<int64_t> ell;
            for (int i = 0; i < m; ++i)
                for (int s = 0; s < k; ++s) ell.push_back(t.counts[i][s]);
            if (!constraints_hold(plan_.constraints, ell)) continue;
            std::vector<int> head;
            for (const auto& [atom, is_y] : plan_.head_slots) head.push_back(endpoint(atom, is_y));
            out.insert(head);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// CRPQ state.

CrpqState::CrpqState(const CrpqQuery& q, const LabeledGraph& g, int lmax)
    : query_(q), n_(g.n()), k_(g.alphabet_size()), lmax_(lmax), alphabet_(g.alphabet()) {
    for (const auto& row : q.constraints)
        if (static_cast<int>(row.coeffs.size()) !=
            static_cast<int>(q.atoms.size()) * k_)
            throw ParseError("constraint row width must be atoms * alphabet size");
    for (const auto& atom : q.atoms)
        product_.emplace_back(n_ * atom.dfa.num_states(), k_, lmax);
    // Replay initial edges.
    for (const auto& [u, s, v] : g.edges()) insert(s, u, v);
}

void CrpqState::insert(int sym, int u, int v) {
    for (size_t j = 0; j < query_.atoms.size(); ++j) {
        const Dfa& dfa = query_.atoms[j].dfa;
        const int Q = dfa.num_states();
        for (int p = 0; p < Q; ++p) {
            int q = dfa.step(p, alphabet_[sym]);
            product_[j].insert(sym, u * Q + p, v * Q + q);
        }
    }
}

std::set<std::tuple<int, int, std::vector<int>>> CrpqState::atom_relation(int atom) const {
    const Dfa& dfa = query_.atoms[atom].dfa;
    const int Q = dfa.num_states();
    std::set<std::tuple<int, int, std::vector<int>>> out;
    for (auto& [px, py, vec] : product_[atom].vector_triples()) {
        int x = px / Q, p = px % Q;
        int y = py / Q, f = py % Q;
        if (p == dfa.start() && dfa.is_final(f)) out.insert({x, y, vec});
    }
    return out;
}

std::set<std::vector<int>> CrpqState::eval() const {
    const int m = static_cast<int>(query_.atoms.size());
    std::set<std::vector<int>> out;
    if (m == 0) {
        if (constraints_hold(query_.constraints, {})) out.insert(std::vector<int>{});
        return out;
    }

    // Distinct variables in order of first occurrence.
    std::vector<std::string> vars;
    auto var_id = [&](const std::string& v) {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == v) return static_cast<int>(i);
        vars.push_back(v);
        return static_cast<int>(vars.size() - 1);
    };
    std::vector<std::pair<int, int>> atom_vars;  // (x var, y var)
    for (const auto& a : query_.atoms) atom_vars.push_back({var_id(a.x), var_id(a.y)});
    std::vector<int> head_vars;
    for (const auto& h : query_.head) head_vars.push_back(var_id(h));

    // Per-atom vector lists keyed by endpoints.
    std::vector<std::map<std::pair<int, int>, std::vector<std::vector<int>>>> lists(m);
    for (int j = 0; j < m; ++j)
        for (auto& [x, y, vec] : atom_relation(j)) lists[j][{x, y}].push_back(vec);

    std::vector<int> assign(vars.size(), 0);
    for (;;) {
        // Gather per-atom vector lists for this assignment.
        bool feasible = true;
        std::vector<const std::vector<std::vector<int>>*> atom_lists(m);
        for (int j = 0; j < m && feasible; ++j) {
            auto it = lists[j].find({assign[atom_vars[j].first], assign[atom_vars[j].second]});
            if (it == lists[j].end())
                feasible = false;
            else
                atom_lists[j] = &it->second;
        }
        if (feasible) {
            // Search for a combination satisfying the constraints.
            std::vector<int> pick(m, 0);
            bool found = false;
            for (;;) {
                std::vector<int64_t> ell;
                for (int j = 0; j < m; ++j)
                    for (int s = 0; s < k_; ++s) ell.push_back((*atom_lists[j])[pick[j]][s]);
                if (constraints_hold(query_.constraints, ell)) {
                    found = true;
                    break;
                }
                int j = m - 1;
                while (j >= 0 && ++pick[j] == static_cast<int>(atom_lists[j]->size()))
                    pick[j--] = 0;
                if (j < 0) break;
            }
            if (found) {
                std::vector<int> head;
                for (int hv : head_vars) head.push_back(assign[hv]);
                out.insert(head);
            }
        }
        int i = static_cast<int>(vars.size()) - 1;
        while (i >= 0 && ++assign[i] == n_) assign[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

}  // namespace dynq
