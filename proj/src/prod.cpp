#include "dynq/prod.hpp"

#include <algorithm>
#include <set>

#include "dynq/errors.hpp"

namespace dynq {

namespace {

constexpr int kMaxConstRules = 8;
constexpr int kMaxDirectedFactors = 8;
constexpr int kMaxLengthBound = 127;

/// Feasible-length mask for lengths 0..127.
struct LenMask {
    uint64_t w[2] = {0, 0};
    void set(int i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    bool any() const { return w[0] || w[1]; }
    LenMask shifted_down(int k) const {
        LenMask r;
        if (k >= 128) return r;
        int ws = k >> 6, bs = k & 63;
        if (ws == 0) {
            if (bs == 0) {
                r = *this;
            } else {
                r.w[0] = (w[0] >> bs) | (w[1] << (64 - bs));
                r.w[1] = w[1] >> bs;
            }
        } else {
            r.w[0] = bs == 0 ? w[1] : (w[1] >> bs);
            r.w[1] = 0;
        }
        return r;
    }
    LenMask operator&(const LenMask& o) const {
        LenMask r;
        r.w[0] = w[0] & o.w[0];
        r.w[1] = w[1] & o.w[1];
        return r;
    }
};

SyncAutomaton equality_relation(int arity, const std::vector<std::string>& alphabet) {
    SyncAutomaton a;
    a.arity = arity;
    a.num_states = 1;
    a.start = 0;
    a.finals = {0};
    for (const auto& sym : alphabet)
        a.transitions.push_back({0, std::vector<std::string>(arity, sym), 0});
    return a;
}

std::vector<std::string> union_alphabet(const std::vector<LabeledGraph>& factors) {
    std::set<std::string> syms;
    for (const auto& f : factors)
        for (const auto& s : f.alphabet()) syms.insert(s);
    return {syms.begin(), syms.end()};
}

EcrpqPlan equal_labels_plan(int m, const std::vector<std::string>& alphabet) {
    EcrpqQuery q;
    for (int i = 0; i < m; ++i) {
        std::string xi = "x" + std::to_string(i), yi = "y" + std::to_string(i);
        q.node_vars.push_back(xi);
        q.node_vars.push_back(yi);
        q.atoms.push_back({xi, "p" + std::to_string(i), yi});
    }
    for (int i = 0; i < m; ++i) {
        q.head.push_back(q.atoms[i].x);
    }
    for (int i = 0; i < m; ++i) q.head.push_back(q.atoms[i].y);
    EcrpqQuery::RelationAtom rel;
    rel.automaton = equality_relation(m, alphabet);
    for (int i = 0; i < m; ++i) rel.paths.push_back(q.atoms[i].path);
    q.relations.push_back(std::move(rel));
    return ecrpq_compile(q, alphabet);
}

}  // namespace

bool product_reach(const std::vector<FactorDistState>& factors, const std::vector<int>& xs,
                   const std::vector<int>& ys) {
    int64_t bound = 1;
    for (const auto& f : factors) bound *= f.graph().n();
    for (const auto& f : factors) {
        int fb = f.lmax_bound();
        if (fb >= 0 && fb < bound)
            throw BoundExceeded("factor maintains lengths only up to " + std::to_string(fb) +
                                ", need " + std::to_string(bound));
    }
    for (int l = 0; l <= bound; ++l) {
        bool all = true;
        for (size_t i = 0; i < factors.size() && all; ++i)
            if (!factors[i].has_length(xs[i], ys[i], l)) all = false;
        if (all) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------

LabeledProductState::LabeledProductState(const std::vector<LabeledGraph>& factors)
    : state_(equal_labels_plan(static_cast<int>(factors.size()), union_alphabet(factors)),
             factors) {}

void LabeledProductState::update(int factor, const Modification& m) {
    state_.update(factor, m);
}

bool LabeledProductState::reach(const std::vector<int>& xs, const std::vector<int>& ys) const {
    std::vector<int> key;
    key.insert(key.end(), xs.begin(), xs.end());
    key.insert(key.end(), ys.begin(), ys.end());
    return state_.eval().count(key) > 0;
}

// ---------------------------------------------------------------------------

namespace {

LabeledGraph reversed(const LabeledGraph& g) {
    LabeledGraph r(g.n(), g.alphabet(), g.directed());
    for (const auto& [u, s, v] : g.edges())
        if (!r.has_edge(v, s, u)) r.apply({ModKind::Insert, s, v, u});
    return r;
}

}  // namespace

PalindromeState::PalindromeState(const LabeledGraph& g)
    : graph_(g),
      state_(equal_labels_plan(2, g.alphabet()), {g, reversed(g)}) {}

void PalindromeState::apply(const Modification& m) {
    Modification rev{m.kind, m.sym, m.v, m.u};
    state_.update(0, m);
    state_.update(1, rev);
    graph_.apply(m);
}

bool PalindromeState::query(int x, int y) const {
    if (x == y) return true;  // the empty word is a palindrome
    const auto& plan = state_.plan();
    for (int f : plan.automaton.finals) {
        for (const auto& t : state_.relation(plan.automaton.start, f)) {
            if (t.xs[0] != x || t.xs[1] != y) continue;
            if (t.ys[0] == t.ys[1]) return true;                      // even: w w^R
            if (graph_.has_union_edge(t.ys[0], t.ys[1])) return true; // odd: w sigma w^R
        }
    }
    return false;
}

bool palindrome_query_acyclic(const LabeledGraph& g, int x, int y) {
    if (!g.is_acyclic()) throw UnsupportedModification("palindrome query requires a DAG");
    PalindromeState s(g);
    return s.query(x, y);
}

// ---------------------------------------------------------------------------

NepsState::NepsState(const NepsSpec& spec, const std::vector<LabeledGraph>& factors,
                     DistRegime regime, int lmax)
    : spec_(spec), regime_(regime) {
    if (static_cast<int>(factors.size()) != spec.factors)
        throw ParseError("factor count does not match the NEPS spec");
    if (regime != DistRegime::Undirected && spec.rule_count() > kMaxConstRules)
        throw ComplexityGuard("only undirected NEPS admits more than " +
                              std::to_string(kMaxConstRules) + " transition rules");
    if (regime == DistRegime::InsertOnly && spec.factors > kMaxDirectedFactors)
        throw ComplexityGuard("products of general directed graphs are limited to " +
                              std::to_string(kMaxDirectedFactors) + " factors");

    int64_t bound = 1;
    for (const auto& f : factors) bound *= f.n();
    if (bound > kMaxLengthBound && regime == DistRegime::InsertOnly)
        throw BoundExceeded("product length bound exceeds the supported range");
    lmax_ = lmax > 0 ? lmax : static_cast<int>(std::min<int64_t>(bound, kMaxLengthBound));
    for (const auto& f : factors) factors_.emplace_back(f, regime, lmax_);
}

void NepsState::update(const NepsModification& m) {
    if (m.kind == NepsModification::Kind::RuleFlip) {
        spec_.flip(m.rule, m.bit);
        return;
    }
    if (m.factor < 0 || m.factor >= static_cast<int>(factors_.size()))
        throw ParseError("factor index out of range");
    factors_[m.factor].apply(m.mod);
}

bool NepsState::reach(const std::vector<int>& xs, const std::vector<int>& ys) const {
    if (regime_ == DistRegime::Undirected) return reach_undirected(xs, ys);
    return reach_by_lengths(xs, ys);
}

bool NepsState::reach_by_lengths(const std::vector<int>& xs, const std::vector<int>& ys) const {
    const int m = spec_.factors;
    const int k = spec_.rule_count();
    // Multiplicity bound: in the undirected regime a solution above
    // 2 max|V| + 3 can shed two uses of a rule and stay feasible, since
    // parity thresholds never exceed 2|V| - 1.
    int max_n = 0;
    for (const auto& f : factors_) max_n = std::max(max_n, f.graph().n());
    const int undirected_bound = 2 * max_n + 3;

    // Per-factor feasible length masks for this query pair.
    std::vector<LenMask> len(m);
    std::vector<int> cap(m);
    for (int i = 0; i < m; ++i) {
        switch (regime_) {
            case DistRegime::Acyclic: cap[i] = factors_[i].graph().n() - 1; break;
            case DistRegime::InsertOnly: cap[i] = lmax_; break;
            case DistRegime::Undirected: cap[i] = std::max(1, k) * undirected_bound; break;
        }
        cap[i] = std::min(cap[i], kMaxLengthBound);
        for (int l = 0; l <= cap[i]; ++l)
            if (factors_[i].has_length(xs[i], ys[i], l)) len[i].set(l);
    }

    // Active rules and their multiplicity bounds.
    std::vector<int> active, bound;
    for (int j = 0; j < k; ++j) {
        if (spec_.rule_is_zero(j)) continue;  // self-loops, covered by l = 0
        int b = regime_ == DistRegime::Undirected ? undirected_bound : kMaxLengthBound;
        if (regime_ != DistRegime::Undirected)
            for (int i = 0; i < m; ++i)
                if (spec_.rules[j][i]) b = std::min(b, cap[i]);
        active.push_back(j);
        bound.push_back(b);
    }

    // Enumerate multiplicities of all but the first active rule; the
    // first one is decided by mask intersection.
    const int ka = static_cast<int>(active.size());
    std::vector<int> mult(ka, 0);
    for (;;) {
        std::vector<int> base(m, 0);
        bool overflow = false;
        for (int a = 1; a < ka; ++a)
            for (int i = 0; i < m; ++i) {
                base[i] += mult[a] * spec_.rules[active[a]][i];
                if (base[i] > cap[i]) overflow = true;
            }
        if (!overflow) {
            if (ka == 0) {
                bool all = true;
                for (int i = 0; i < m; ++i)
                    if (!len[i].test(0)) all = false;
                if (all) return true;
            } else {
                // Feasible multiplicities of rule active[0], vectorized.
                LenMask feas;
                feas.w[0] = ~uint64_t(0);
                feas.w[1] = ~uint64_t(0);
                bool possible = true;
                for (int i = 0; i < m && possible; ++i) {
                    if (spec_.rules[active[0]][i]) {
                        feas = feas & len[i].shifted_down(base[i]);
                    } else if (!len[i].test(base[i])) {
                        possible = false;
                    }
                }
                if (possible && feas.any()) return true;
            }
        }
        // Advance the outer multiplicities.
        int a = ka - 1;
        while (a >= 1 && ++mult[a] > bound[a]) mult[a--] = 0;
        if (a < 1) break;
    }
    return false;
}

Gf2Matrix NepsState::constraint_matrix(const std::vector<int>& xs) const {
    const int m = spec_.factors, k = spec_.rule_count();
    Gf2Matrix b(m, k);
    for (int i = 0; i < m; ++i) {
        const UndirDistState& und = factors_[i].undirected();
        bool bipartite = und.d_odd(xs[i], xs[i]) == UndirDistState::kInf;
        if (!bipartite) continue;  // zero row
        for (int j = 0; j < k; ++j)
            if (spec_.rules[j][i]) b.set(i, j, true);
    }
    return b;
}

bool NepsState::reach_undirected(const std::vector<int>& xs, const std::vector<int>& ys) const {
    const int m = spec_.factors;
    std::vector<int> d(m, 0);
    for (int i = 0; i < m; ++i) {
        const UndirDistState& und = factors_[i].undirected();
        if (!(xs[i] == ys[i] || und.connected(xs[i], ys[i]))) return false;
        bool bipartite = und.d_odd(xs[i], xs[i]) == UndirDistState::kInf;
        if (!bipartite) continue;  // d stays 0 on zeroed rows
        d[i] = und.d_odd(xs[i], ys[i]) != UndirDistState::kInf ? 1 : 0;
    }
    // Parity of per-factor movement is invariant on bipartite components,
    // so an unsolvable system rules the pair out.  Solvability alone is
    // not enough when a factor cannot move or pad its walk (zero rule
    // rows, isolated endpoints), so positives are confirmed against the
    // bounded multiplicity enumeration.
    if (!gf2_solvable(constraint_matrix(xs), d)) return false;
    return reach_by_lengths(xs, ys);
}

}  // namespace dynq
