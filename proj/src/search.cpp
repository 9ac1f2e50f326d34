#include "opstar/search.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>

namespace opstar {

namespace {

struct BudgetUp {};

// Exact-cover packer over the arcs of K*_n, n <= 32.  Factors are built one
// cycle at a time; cycles start at the least vertex not yet in the factor,
// so each factor is enumerated exactly once.  In anchored mode the first arc
// of every factor is forced to the least uncovered arc, which is sound
// because some remaining factor must contain it.
class Packer {
  public:
    Packer(const CycleType& type, std::mt19937* rng)
        : type_(canonical_type(type)), n_(type_order(type)), rng_(rng) {
        if (n_ < 2 || n_ > 32) throw OpError(OpError::Code::BadInstance, "order out of range");
        all_ = (n_ == 32) ? ~0u : ((1u << n_) - 1);
        avail_.assign(n_, 0);
        for (int v = 0; v < n_; ++v) avail_[v] = all_ & ~(1u << v);
    }

    // Fixes the canonical block factor (cycles of ascending length on
    // consecutive vertices) as factor 0.
    void fix_canonical_first() {
        TwoFactor f;
        f.n = n_;
        int next = 0;
        for (int m : type_) {
            Cycle c;
            for (int p = 0; p < m; ++p) c.push_back(next + p);
            next += m;
            f.cycles.push_back(std::move(c));
        }
        commit(f);
    }

    void set_budget(long long budget) {
        budget_ = budget;
        nodes_ = 0;
    }

    int factors_done() const { return static_cast<int>(done_.size()); }
    int factors_needed() const { return n_ - 1; }
    Decomposition result() const { return {done_, n_}; }
    long long nodes() const { return nodes_; }

    // Exhausts all completions; true leaves a full packing committed.
    bool complete(bool anchored) {
        if (factors_done() == factors_needed()) return true;
        Factor st;
        init_factor(st);
        return next_cycle(st, anchored, /*recurse=*/true);
    }

    // Builds and commits one additional factor; no recursion beyond it.
    bool add_one_factor() {
        Factor st;
        init_factor(st);
        return next_cycle(st, /*anchored=*/false, /*recurse=*/false);
    }

  private:
    CycleType type_;
    int n_;
    uint32_t all_ = 0;
    std::vector<uint32_t> avail_;
    std::vector<TwoFactor> done_;
    long long budget_ = 0, nodes_ = 0;
    std::mt19937* rng_;

    struct Factor {
        std::vector<Cycle> cycles;
        uint32_t free = 0;
        std::map<int, int> remaining;  // length -> count
    };

    void init_factor(Factor& st) {
        st.free = all_;
        for (int m : type_) ++st.remaining[m];
    }

    void commit(const TwoFactor& f) {
        for (const Arc& a : arcs_of(f)) avail_[a.tail] &= ~(1u << a.head);
        done_.push_back(f);
    }

    void uncommit() {
        for (const Arc& a : arcs_of(done_.back())) avail_[a.tail] |= (1u << a.head);
        done_.pop_back();
    }

    bool next_cycle(Factor& st, bool anchored, bool recurse) {
        if (st.free == 0) {
            commit({st.cycles, n_});
            if (!recurse || complete(anchored)) return true;
            uncommit();
            return false;
        }
        const int u = std::countr_zero(st.free);
        std::vector<int> lens;
        for (auto& [m, cnt] : st.remaining)
            if (cnt > 0 && m <= std::popcount(st.free)) lens.push_back(m);
        if (rng_) std::shuffle(lens.begin(), lens.end(), *rng_);
        for (int m : lens) {
            --st.remaining[m];
            st.cycles.push_back({u});
            st.free &= ~(1u << u);
            if (extend(st, m, anchored, recurse)) return true;
            st.free |= (1u << u);
            st.cycles.pop_back();
            ++st.remaining[m];
        }
        return false;
    }

    bool extend(Factor& st, int m, bool anchored, bool recurse) {
        if (++nodes_ > budget_) throw BudgetUp{};
        const int u = st.cycles.back().front(), cur = st.cycles.back().back();
        if (static_cast<int>(st.cycles.back().size()) == m) {
            if (!(avail_[cur] & (1u << u))) return false;
            return next_cycle(st, anchored, recurse);
        }
        uint32_t cand = avail_[cur] & st.free;
        // Anchored first arc of a fresh factor: force the least uncovered
        // arc, whose tail is 0 (all vertices have equal covered out-degree).
        if (anchored && st.cycles.size() == 1 && st.cycles.back().size() == 1)
            cand = avail_[0] ? (1u << std::countr_zero(avail_[0])) : 0;
        std::vector<int> heads;
        while (cand) {
            heads.push_back(std::countr_zero(cand));
            cand &= cand - 1;
        }
        if (rng_) std::shuffle(heads.begin(), heads.end(), *rng_);
        for (int w : heads) {
            st.cycles.back().push_back(w);
            st.free &= ~(1u << w);
            if (extend(st, m, anchored, recurse)) return true;
            st.free |= (1u << w);
            st.cycles.back().pop_back();
        }
        return false;
    }
};

}  // namespace

SearchResult exhaustive_pack(const CycleType& type, long long node_budget) {
    Packer p(type, nullptr);
    p.set_budget(node_budget);
    p.fix_canonical_first();
    SearchResult r;
    try {
        r.status = p.complete(/*anchored=*/true) ? SearchStatus::Found
                                                 : SearchStatus::ProvedNonexistent;
        if (r.status == SearchStatus::Found) r.dec = p.result();
    } catch (const BudgetUp&) {
        r.status = SearchStatus::Exhausted;
    }
    r.nodes = p.nodes();
    return r;
}

SearchResult heuristic_pack(const CycleType& type, const PackBudget& budget) {
    const int n = type_order(type);
    std::mt19937 rng(budget.seed);
    SearchResult r;
    long long total = 0;
    const int endgame = std::min(budget.endgame, n - 2);
    for (int attempt = 0; attempt < budget.attempts; ++attempt) {
        Packer p(type, &rng);
        p.fix_canonical_first();
        bool dead = false;
        while (p.factors_done() < p.factors_needed() - endgame) {
            p.set_budget(budget.factor_nodes);
            try {
                if (!p.add_one_factor()) dead = true;
            } catch (const BudgetUp&) {
                dead = true;
            }
            total += p.nodes();
            if (dead) break;
        }
        if (dead) continue;
        p.set_budget(budget.endgame_nodes);
        try {
            if (p.complete(/*anchored=*/true)) {
                r.status = SearchStatus::Found;
                r.dec = p.result();
                r.nodes = total + p.nodes();
                return r;
            }
        } catch (const BudgetUp&) {
        }
        total += p.nodes();
    }
    r.status = SearchStatus::Exhausted;
    r.nodes = total;
    return r;
}

namespace {

// Backtracking over q starter factors on Z_{n-1} u {inf} with joint base-q
// difference coverage.
class StarterSearch {
  public:
    StarterSearch(const CycleType& type, int q, long long budget)
        : type_(canonical_type(type)), n_(type_order(type)), q_(q), budget_(budget) {
        if (q < 1 || (n_ - 1) % q != 0)
            throw OpError(OpError::Code::BadModulus, "q must divide n-1");
        fin_used_.assign(static_cast<size_t>(n_ - 1) * q, 1);
        for (int d = 1; d < n_ - 1; ++d)
            for (int r = 0; r < q; ++r) fin_used_[static_cast<size_t>(d) * q + r] = 0;
        pinf_used_.assign(q, 0);
        minf_used_.assign(q, 0);
    }

    std::optional<StarterSet> run() {
        try {
            if (!starter(0)) return std::nullopt;
        } catch (const BudgetUp&) {
            return std::nullopt;
        }
        StarterSet ss;
        ss.n = n_;
        ss.q = q_;
        ss.type = type_;
        ss.starters = starters_;
        if (!validate_starter_set(ss).ok)
            throw OpError(OpError::Code::BadStarter, "search produced an invalid starter set");
        return ss;
    }

  private:
    CycleType type_;
    int n_, q_;
    long long budget_, nodes_ = 0;
    std::vector<char> fin_used_, pinf_used_, minf_used_;
    std::vector<TwoFactor> starters_;

    struct Factor {
        std::vector<Cycle> cycles;
        std::vector<char> in_factor;
        std::map<int, int> remaining;
    };

    // Vertex indices: 0..n-2 finite, n-1 stands for inf.
    char* slot(int a, int b) {
        if (a == n_ - 1) return &minf_used_[mod(b, q_)];
        if (b == n_ - 1) return &pinf_used_[mod(a, q_)];
        return &fin_used_[static_cast<size_t>(mod(b - a, n_ - 1)) * q_ + mod(a, q_)];
    }

    bool take(int a, int b) {
        char* s = slot(a, b);
        if (*s) return false;
        return *s = 1, true;
    }

    void put_back(int a, int b) { *slot(a, b) = 0; }

    bool starter(int j) {
        if (j == q_) return true;
        Factor st;
        st.in_factor.assign(n_, 0);
        for (int m : type_) ++st.remaining[m];
        return next_cycle(st, j);
    }

    bool next_cycle(Factor& st, int j) {
        int u = 0;
        while (u < n_ && st.in_factor[u]) ++u;
        if (u == n_) {
            TwoFactor f;
            f.n = n_;
            f.cycles = st.cycles;
            for (Cycle& c : f.cycles)  // internal index n-1 is the inf sentinel
                for (Vertex& v : c)
                    if (v == n_ - 1) v = kInfinity;
            starters_.push_back(std::move(f));
            if (starter(j + 1)) return true;
            starters_.pop_back();
            return false;
        }
        int free_cnt = 0;
        for (int v = 0; v < n_; ++v)
            if (!st.in_factor[v]) ++free_cnt;
        for (auto& [m, cnt] : st.remaining) {
            if (cnt == 0 || m > free_cnt) continue;
            --cnt;
            st.cycles.push_back({u});
            st.in_factor[u] = 1;
            if (extend(st, j, m)) return true;
            st.in_factor[u] = 0;
            st.cycles.pop_back();
            ++cnt;
        }
        return false;
    }

    bool extend(Factor& st, int j, int m) {
        if (++nodes_ > budget_) throw BudgetUp{};
        const int u = st.cycles.back().front(), cur = st.cycles.back().back();
        if (static_cast<int>(st.cycles.back().size()) == m) {
            if (!take(cur, u)) return false;
            if (next_cycle(st, j)) return true;
            put_back(cur, u);
            return false;
        }
        for (int w = 0; w < n_; ++w) {
            if (st.in_factor[w] || !take(cur, w)) continue;
            st.cycles.back().push_back(w);
            st.in_factor[w] = 1;
            if (extend(st, j, m)) return true;
            st.in_factor[w] = 0;
            st.cycles.back().pop_back();
            put_back(cur, w);
        }
        return false;
    }
};

}  // namespace

std::optional<StarterSet> starter_search(const CycleType& type, int q, long long node_budget) {
    return StarterSearch(type, q, node_budget).run();
}

}  // namespace opstar
