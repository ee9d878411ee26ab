#include "dynq/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "dynq/errors.hpp"
#include "dynq/tc.hpp"

namespace dynq {

BitMatrix oracle_reach(const LabeledGraph& g) {
    const int n = g.n();
    BitMatrix adj = union_adjacency(g);
    BitMatrix out(n);
    for (int s = 0; s < n; ++s) {
        std::vector<char> seen(n, 0);
        std::deque<int> queue{s};
        seen[s] = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            out.set(s, v);
            adj.row(v).for_each([&](int w) {
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            });
        }
    }
    return out;
}

namespace {

std::set<std::tuple<int, int, int>> length_sets_from(const BitMatrix& adj, int n, int lmax) {
    std::set<std::tuple<int, int, int>> out;
    BitMatrix cur(n);
    cur.set_diagonal();
    for (int l = 0; l <= lmax; ++l) {
        for (int x = 0; x < n; ++x)
            cur.row(x).for_each([&](int y) { out.insert({x, y, l}); });
        if (l == lmax) break;
        BitMatrix next(n);
        for (int x = 0; x < n; ++x)
            cur.row(x).for_each([&](int m) { next.row(x) |= adj.row(m); });
        cur = next;
    }
    return out;
}

}  // namespace

std::set<std::tuple<int, int, int>> oracle_length_sets(const LabeledGraph& g, int lmax) {
    return length_sets_from(union_adjacency(g), g.n(), lmax);
}

std::set<std::tuple<int, int, int>> oracle_length_sets_symbol(const LabeledGraph& g, int sym,
                                                              int lmax) {
    BitMatrix adj(g.n());
    for (auto [u, v] : g.edges_with_symbol(sym)) adj.set(u, v);
    return length_sets_from(adj, g.n(), lmax);
}

std::set<std::pair<int, int>> oracle_rpq(const LabeledGraph& g, const Dfa& dfa) {
    const int n = g.n();
    const int q = dfa.num_states();
    std::set<std::pair<int, int>> out;
    for (int x = 0; x < n; ++x) {
        std::vector<char> seen(static_cast<size_t>(n) * q, 0);
        std::deque<std::pair<int, int>> queue;
        queue.emplace_back(x, dfa.start());
        seen[x * q + dfa.start()] = 1;
        while (!queue.empty()) {
            auto [v, p] = queue.front();
            queue.pop_front();
            if (dfa.is_final(p)) out.emplace(x, v);
            for (const auto& [a, s, b] : g.edges()) {
                if (a != v) continue;
                int p2 = dfa.step(p, g.symbol_name(s));
                if (!seen[b * q + p2]) {
                    seen[b * q + p2] = 1;
                    queue.emplace_back(b, p2);
                }
            }
        }
    }
    return out;
}

std::set<std::pair<int, int>> oracle_cfl(const LabeledGraph& g, const CnfGrammar& grammar) {
    const int n = g.n();
    std::set<std::tuple<int, int, int>> facts;  // (X, u, v)
    std::deque<std::tuple<int, int, int>> work;
    auto add = [&](int X, int u, int v) {
        if (facts.insert({X, u, v}).second) work.push_back({X, u, v});
    };
    for (const auto& r : grammar.terminal)
        for (const auto& [u, s, v] : g.edges())
            if (g.symbol_name(s) == r.terminal) add(r.lhs, u, v);
    while (!work.empty()) {
        auto [Y, u, v] = work.front();
        work.pop_front();
        for (const auto& r : grammar.binary) {
            if (r.left == Y)
                for (int w = 0; w < n; ++w)
                    if (facts.count({r.right, v, w})) add(r.lhs, u, w);
            if (r.right == Y)
                for (int w = 0; w < n; ++w)
                    if (facts.count({r.left, w, u})) add(r.lhs, w, v);
        }
    }
    std::set<std::pair<int, int>> out;
    if (grammar.start_to_eps)
        for (int x = 0; x < n; ++x) out.emplace(x, x);
    for (const auto& [X, u, v] : facts)
        if (X == grammar.start) out.emplace(u, v);
    return out;
}

std::set<std::tuple<int, int, std::vector<int>>> oracle_parikh(const LabeledGraph& g, int lmax) {
    const int k = g.alphabet_size();
    const int n = g.n();
    // Dense DP over (x, y, vector) with vectors in radix lmax+1.
    int64_t space = 1;
    for (int i = 0; i < k; ++i) {
        space *= lmax + 1;
        if (space > (int64_t(1) << 26)) throw BudgetExceeded("parikh oracle space too large");
    }
    std::vector<int> stride(k, 1);
    for (int i = 1; i < k; ++i) stride[i] = stride[i - 1] * (lmax + 1);

    std::vector<char> seen(static_cast<size_t>(n) * n * space, 0);
    std::deque<int64_t> work;
    auto add = [&](int x, int y, int64_t vecidx) {
        int64_t key = (static_cast<int64_t>(x) * n + y) * space + vecidx;
        if (!seen[key]) {
            seen[key] = 1;
            work.push_back(key);
        }
    };
    for (int x = 0; x < n; ++x) add(x, x, 0);
    while (!work.empty()) {
        int64_t key = work.front();
        work.pop_front();
        int64_t vecidx = key % space;
        int y = static_cast<int>((key / space) % n);
        int x = static_cast<int>(key / space / n);
        int total = 0;
        int64_t rest = vecidx;
        for (int i = 0; i < k; ++i) {
            total += static_cast<int>(rest % (lmax + 1));
            rest /= lmax + 1;
        }
        if (total >= lmax) continue;
        for (const auto& [u, s, v] : g.edges()) {
            if (u != y) continue;
            if (static_cast<int>(vecidx / stride[s] % (lmax + 1)) + 1 > lmax) continue;
            add(x, v, vecidx + stride[s]);
        }
    }
    std::set<std::tuple<int, int, std::vector<int>>> out;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int64_t vi = 0; vi < space; ++vi) {
                if (!seen[(static_cast<int64_t>(x) * n + y) * space + vi]) continue;
                std::vector<int> vec(k);
                int64_t rest = vi;
                for (int i = 0; i < k; ++i) {
                    vec[i] = static_cast<int>(rest % (lmax + 1));
                    rest /= lmax + 1;
                }
                out.insert({x, y, std::move(vec)});
            }
    return out;
}

std::vector<std::tuple<int, int, std::vector<std::string>>> oracle_dag_path_labels(
    const LabeledGraph& g, const OracleBudget& budget) {
    if (!g.is_acyclic()) throw UnsupportedModification("path enumeration requires a DAG");
    std::vector<std::tuple<int, int, std::vector<std::string>>> out;
    std::vector<std::string> label;
    int64_t emitted = 0;
    std::function<void(int, int)> dfs = [&](int start, int v) {
        if (++emitted > budget.max_enumeration)
            throw BudgetExceeded("too many DAG paths to enumerate");
        out.emplace_back(start, v, label);
        for (const auto& [a, s, b] : g.edges()) {
            if (a != v) continue;
            label.push_back(g.symbol_name(s));
            dfs(start, b);
            label.pop_back();
        }
    };
    for (int x = 0; x < g.n(); ++x) dfs(x, x);
    return out;
}

// ---------------------------------------------------------------------------

ExplicitProduct::ExplicitProduct(const std::vector<LabeledGraph>& factors,
                                 const std::vector<std::vector<int>>& rules, bool labeled,
                                 const OracleBudget& budget) {
    const int m = static_cast<int>(factors.size());
    for (const auto& f : factors) {
        sizes_.push_back(f.n());
        total_ *= f.n();
        if (total_ > budget.max_enumeration)
            throw BudgetExceeded("product node space exceeds the enumeration budget");
    }
    std::vector<std::vector<int>> effective_rules = rules;
    if (effective_rules.empty()) effective_rules.push_back(std::vector<int>(m, 1));

    // Common alphabet for labeled products.
    std::set<std::string> alphabet;
    for (const auto& f : factors)
        for (const auto& s : f.alphabet()) alphabet.insert(s);

    adj_.assign(total_, {});
    for (int64_t a = 0; a < total_; ++a) {
        std::vector<int> xs = decode(a);
        for (int64_t b = 0; b < total_; ++b) {
            std::vector<int> ys = decode(b);
            bool edge = false;
            for (const auto& rule : effective_rules) {
                if (labeled) {
                    for (const auto& sym : alphabet) {
                        bool ok = true;
                        for (int i = 0; i < m && ok; ++i) {
                            if (rule[i] == 0)
                                ok = xs[i] == ys[i];
                            else {
                                int si = factors[i].symbol(sym);
                                ok = si >= 0 && factors[i].has_edge(xs[i], si, ys[i]);
                            }
                        }
                        if (ok) {
                            edge = true;
                            break;
                        }
                    }
                } else {
                    bool ok = true;
                    for (int i = 0; i < m && ok; ++i) {
                        if (rule[i] == 0)
                            ok = xs[i] == ys[i];
                        else
                            ok = factors[i].has_union_edge(xs[i], ys[i]);
                    }
                    edge = ok;
                }
                if (edge) break;
            }
            if (edge) adj_[a].push_back(b);
        }
    }
}

int64_t ExplicitProduct::encode(const std::vector<int>& tuple) const {
    int64_t id = 0;
    for (size_t i = 0; i < sizes_.size(); ++i) id = id * sizes_[i] + tuple[i];
    return id;
}

std::vector<int> ExplicitProduct::decode(int64_t id) const {
    std::vector<int> out(sizes_.size());
    for (int i = static_cast<int>(sizes_.size()) - 1; i >= 0; --i) {
        out[i] = static_cast<int>(id % sizes_[i]);
        id /= sizes_[i];
    }
    return out;
}

bool ExplicitProduct::reachable(const std::vector<int>& from, const std::vector<int>& to) const {
    int64_t s = encode(from), t = encode(to);
    std::vector<char> seen(total_, 0);
    std::deque<int64_t> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
        int64_t v = queue.front();
        queue.pop_front();
        if (v == t) return true;
        for (int64_t w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    }
    return false;
}

// ---------------------------------------------------------------------------

std::set<std::vector<int>> oracle_ecrpq(const EcrpqOracleQuery& q,
                                        const std::vector<LabeledGraph>& copies,
                                        const OracleBudget& budget) {
    const int m = q.plan.arity;
    if (static_cast<int>(copies.size()) != m)
        throw ParseError("copy count does not match plan arity");
    const int k = static_cast<int>(q.alphabet.size());
    for (const auto& g : copies)
        if (!g.is_acyclic()) throw UnsupportedModification("ECRPQ oracle requires acyclic copies");

    // Search nodes (state, positions, counts) packed into one integer:
    // counts on an acyclic copy never exceed its node count.
    std::vector<int64_t> stride;
    int64_t space = q.plan.num_states;
    for (int i = 0; i < m; ++i) {
        stride.push_back(space);
        space *= copies[i].n();
    }
    std::vector<std::vector<int64_t>> cstride(m, std::vector<int64_t>(k));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < k; ++j) {
            cstride[i][j] = space;
            space *= copies[i].n() + 1;
        }
    if (space > (int64_t(1) << 26))
        throw BudgetExceeded("ECRPQ oracle space exceeds the enumeration budget");

    // Per-symbol transition relations per copy.
    std::vector<std::map<std::string, std::vector<std::pair<int, int>>>> moves(m);
    for (int i = 0; i < m; ++i)
        for (const auto& [u, s, v] : copies[i].edges())
            moves[i][copies[i].symbol_name(s)].push_back({u, v});

    std::set<std::vector<int>> out;
    std::vector<int> xs(m, 0);
    std::vector<char> seen(space, 0);
    std::vector<int64_t> touched;
    std::deque<int64_t> work;
    int64_t visited_total = 0;

    for (;;) {
        // BFS from (start, xs, zero counts).
        for (int64_t key : touched) seen[key] = 0;
        touched.clear();
        work.clear();
        int64_t init = q.plan.start;
        for (int i = 0; i < m; ++i) init += stride[i] * xs[i];
        seen[init] = 1;
        touched.push_back(init);
        work.push_back(init);
        while (!work.empty()) {
            int64_t key = work.front();
            work.pop_front();
            if (++visited_total > budget.max_enumeration)
                throw BudgetExceeded("ECRPQ oracle exceeded its enumeration budget");
            int state = static_cast<int>(key % q.plan.num_states);
            std::vector<int> pos(m);
            for (int i = 0; i < m; ++i) pos[i] = static_cast<int>(key / stride[i] % copies[i].n());

            if (q.plan.is_final(state)) {
                auto endpoint = [&](int atom, bool is_y) { return is_y ? pos[atom] : xs[atom]; };
                bool consistent = true;
                for (const auto& [a, ay, b, by] : q.shared)
                    if (endpoint(a, ay) != endpoint(b, by)) consistent = false;
                if (consistent) {
                    std::vector<int64_t> ell;
                    for (int i = 0; i < m; ++i)
                        for (int j = 0; j < k; ++j)
                            ell.push_back(key / cstride[i][j] % (copies[i].n() + 1));
                    if (constraints_hold(q.constraints, ell)) {
                        std::vector<int> head;
                        for (const auto& [atom, is_y] : q.head_slots)
                            head.push_back(endpoint(atom, is_y));
                        out.insert(head);
                    }
                }
            }

            for (const auto& tr : q.plan.transitions) {
                if (tr.from != state) continue;
                bool all_pad = true;
                for (const auto& c : tr.column)
                    if (!SyncAutomaton::is_pad(c)) all_pad = false;
                if (all_pad) continue;  // never part of a canonical encoding

                // Branch over moves of the stepping tapes.
                std::vector<const std::vector<std::pair<int, int>>*> opts(m, nullptr);
                bool ok = true;
                for (int i = 0; i < m && ok; ++i) {
                    if (SyncAutomaton::is_pad(tr.column[i])) continue;
                    auto it = moves[i].find(tr.column[i]);
                    if (it == moves[i].end()) {
                        ok = false;
                        break;
                    }
                    opts[i] = &it->second;
                }
                if (!ok) continue;
                std::function<void(int, int64_t)> expand = [&](int i, int64_t acc) {
                    if (i == m) {
                        if (!seen[acc]) {
                            seen[acc] = 1;
                            touched.push_back(acc);
                            work.push_back(acc);
                        }
                        return;
                    }
                    if (!opts[i]) {
                        expand(i + 1, acc);
                        return;
                    }
                    int sym = 0;
                    while (sym < k && q.alphabet[sym] != tr.column[i]) ++sym;
                    int cur_count =
                        sym < k ? static_cast<int>(key / cstride[i][sym] % (copies[i].n() + 1))
                                : 0;
                    for (const auto& [a, b] : *opts[i]) {
                        if (a != pos[i]) continue;
                        int64_t next = acc + stride[i] * (b - pos[i]);
                        if (sym < k) {
                            if (cur_count + 1 > copies[i].n()) continue;
                            next += cstride[i][sym];
                        }
                        expand(i + 1, next);
                    }
                };
                expand(0, key - state + tr.to);
            }
        }
        int i = m - 1;
        while (i >= 0) {
            if (++xs[i] < copies[i].n()) break;
            xs[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

}  // namespace dynq
