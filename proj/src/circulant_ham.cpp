#include "opstar/circulant_ham.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>

namespace opstar {

namespace {

int gcd3(int a, int b, int c) { return std::gcd(a, std::gcd(b, c)); }

// Undirected simple graph on Z_t given by explicit edge list.
struct UGraph {
    int t = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> inc;  // vertex -> incident edge ids

    void build_incidence() {
        inc.assign(t, {});
        for (size_t e = 0; e < edges.size(); ++e) {
            inc[edges[e].first].push_back(static_cast<int>(e));
            inc[edges[e].second].push_back(static_cast<int>(e));
        }
    }
};

UGraph circulant_ugraph(int t, const std::vector<int>& gens) {
    UGraph g;
    g.t = t;
    for (int d : gens) {
        if (2 * d == t) {
            for (int i = 0; i < t / 2; ++i) g.edges.emplace_back(i, i + t / 2);
        } else {
            for (int i = 0; i < t; ++i) g.edges.emplace_back(i, mod(i + d, t));
        }
    }
    g.build_incidence();
    return g;
}

// Backtracking partition of g's edges into k Hamilton cycles.  Each cycle is
// grown from vertex 0; neighbor order is fixed by `order` (a permutation of
// edge preference) so restarts with reshuffled order explore new regions.
struct HamSearch {
    const UGraph& g;
    int k;
    uint64_t budget;
    uint64_t nodes = 0;
    std::vector<char> edge_used;
    std::vector<char> visited;
    std::vector<int> path;
    std::vector<std::vector<int>> done;
    std::vector<std::vector<int>> pref;  // per-vertex incident edge order

    HamSearch(const UGraph& gr, int kk, uint64_t b) : g(gr), k(kk), budget(b) {
        edge_used.assign(g.edges.size(), 0);
        visited.assign(g.t, 0);
        pref.resize(g.t);
        for (int v = 0; v < g.t; ++v) pref[v] = g.inc[v];
    }

    void shuffle(std::mt19937_64& rng) {
        for (auto& p : pref) std::shuffle(p.begin(), p.end(), rng);
    }

    bool remaining_connected() const {
        // Remaining graph must be connected (it is 2r-regular by construction).
        std::vector<int> stack = {0};
        std::vector<char> seen(g.t, 0);
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int e : g.inc[u]) {
                if (edge_used[e]) continue;
                int w = g.edges[e].first ^ g.edges[e].second ^ u;
                if (!seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    stack.push_back(w);
                }
            }
        }
        return cnt == g.t;
    }

    // The unused edges form a 2-regular graph once k-1 Hamilton cycles are
    // fixed; the decomposition completes iff that graph is a single t-cycle.
    bool take_complement_cycle() {
        std::vector<int> c = {0};
        int in_edge = -1, u = 0;
        for (int step = 0; step < g.t; ++step) {
            int next = -1;
            for (int e : g.inc[u]) {
                if (edge_used[e] || e == in_edge) continue;
                next = g.edges[e].first ^ g.edges[e].second ^ u;
                in_edge = e;
                break;
            }
            if (next == -1) return false;
            if (next == 0) {
                if (step != g.t - 1) return false;
                done.push_back(std::move(c));
                return true;
            }
            c.push_back(next);
            u = next;
        }
        return false;
    }

    bool extend(int u) {
        if (++nodes > budget) return false;
        if (static_cast<int>(path.size()) == g.t) {
            for (int e : pref[u]) {
                if (edge_used[e]) continue;
                int w = g.edges[e].first ^ g.edges[e].second ^ u;
                if (w != 0) continue;
                edge_used[e] = 1;
                done.push_back(path);
                bool ok;
                if (static_cast<int>(done.size()) == k) {
                    ok = true;
                } else if (static_cast<int>(done.size()) == k - 1) {
                    ok = take_complement_cycle();
                    if (ok) return true;
                } else if (!remaining_connected()) {
                    ok = false;
                } else {
                    ok = start_cycle();
                }
                if (ok) return true;
                done.pop_back();
                edge_used[e] = 0;
            }
            return false;
        }
        for (int e : pref[u]) {
            if (edge_used[e]) continue;
            int w = g.edges[e].first ^ g.edges[e].second ^ u;
            if (visited[w]) continue;
            edge_used[e] = 1;
            visited[w] = 1;
            path.push_back(w);
            if (extend(w)) return true;
            path.pop_back();
            visited[w] = 0;
            edge_used[e] = 0;
        }
        return false;
    }

    bool start_cycle() {
        std::vector<int> saved_path = path;
        std::vector<char> saved_visited = visited;
        path = {0};
        std::fill(visited.begin(), visited.end(), 0);
        visited[0] = 1;
        bool ok = extend(0);
        if (!ok) {
            path = std::move(saved_path);
            visited = std::move(saved_visited);
        }
        return ok;
    }

    std::optional<std::vector<std::vector<int>>> run() {
        visited.assign(g.t, 0);
        if (start_cycle()) return done;
        return std::nullopt;
    }
};

std::optional<std::vector<std::vector<int>>> hamilton_partition(const UGraph& g, int k,
                                                                uint64_t budget, int restarts) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    for (int attempt = 0; attempt <= restarts; ++attempt) {
        HamSearch hs(g, k, budget);
        if (attempt > 0) hs.shuffle(rng);
        if (auto res = hs.run()) return res;
    }
    return std::nullopt;
}

void check_hamilton_decomposition(const UGraph& g, const std::vector<std::vector<int>>& cycles) {
    // Independent edge-partition check: every cycle Hamilton, edges disjoint,
    // union equals the circulant's edge set.
    std::map<std::pair<int, int>, int> want;
    for (auto [u, v] : g.edges) ++want[std::minmax(u, v)];
    std::map<std::pair<int, int>, int> got;
    for (const auto& c : cycles) {
        if (static_cast<int>(c.size()) != g.t)
            throw OpError(OpError::Code::SearchFailed, "non-Hamilton cycle in decomposition");
        std::vector<char> seen(g.t, 0);
        for (int v : c) {
            if (v < 0 || v >= g.t || seen[v])
                throw OpError(OpError::Code::SearchFailed, "bad cycle vertices");
            seen[v] = 1;
        }
        for (size_t i = 0; i < c.size(); ++i)
            ++got[std::minmax(c[i], c[(i + 1) % c.size()])];
    }
    if (got != want) throw OpError(OpError::Code::SearchFailed, "edge partition check failed");
}

// Directed Hamilton factor from a single difference d with gcd(t,d)=1.
TwoFactor difference_cycle_factor(int t, int d) {
    Cycle c;
    c.reserve(t);
    int v = 0;
    for (int i = 0; i < t; ++i) {
        c.push_back(v);
        v = mod(v + d, t);
    }
    TwoFactor f;
    f.n = t;
    f.cycles = {std::move(c)};
    return f;
}

// Both orientations of an undirected Hamilton cycle.
std::pair<TwoFactor, TwoFactor> direct_both_ways(int t, const std::vector<int>& cyc) {
    TwoFactor fwd, rev;
    fwd.n = rev.n = t;
    fwd.cycles = {Cycle(cyc.begin(), cyc.end())};
    rev.cycles = {Cycle(cyc.rbegin(), cyc.rend())};
    return {fwd, rev};
}

}  // namespace

HamiltonDecomposition hamilton_decompose_circulant(int t, std::vector<int> gens) {
    std::sort(gens.begin(), gens.end());
    for (int d : gens)
        if (d <= 0 || d >= t)
            throw OpError(OpError::Code::HypothesisViolated, "generator out of range");
    static std::map<std::pair<int, std::vector<int>>, HamiltonDecomposition> cache;
    static std::mutex cache_mu;
    {
        std::lock_guard<std::mutex> lock(cache_mu);
        auto it = cache.find({t, gens});
        if (it != cache.end()) return it->second;
    }

    // Degree check: +-gens must be pairwise distinct residues.
    std::set<int> res;
    for (int d : gens) {
        res.insert(d);
        res.insert(mod(-d, t));
    }
    HamiltonDecomposition hd;
    hd.t = t;
    hd.generators = gens;

    if (gens.size() == 1) {
        if (std::gcd(t, gens[0]) != 1)
            throw OpError(OpError::Code::HypothesisViolated, "single generator not coprime to t");
        std::vector<int> c;
        int v = 0;
        for (int i = 0; i < t; ++i) {
            c.push_back(v);
            v = mod(v + gens[0], t);
        }
        hd.cycles = {c};
    } else if (gens.size() == 2) {
        if (res.size() != 4)
            throw OpError(OpError::Code::HypothesisViolated, "degree-4 circulant required");
        if (std::gcd(t, std::gcd(gens[0], gens[1])) != 1)
            throw OpError(OpError::Code::HypothesisViolated, "disconnected circulant");
        // Fast path: both generators individually coprime to t.
        if (std::gcd(t, gens[0]) == 1 && std::gcd(t, gens[1]) == 1) {
            hd.cycles = {hamilton_decompose_circulant(t, {gens[0]}).cycles[0],
                         hamilton_decompose_circulant(t, {gens[1]}).cycles[0]};
        } else {
            UGraph g = circulant_ugraph(t, gens);
            auto cycles = hamilton_partition(g, 2, 500'000, 300);
            if (!cycles)
                throw OpError(OpError::Code::SearchFailed,
                              "Hamilton decomposition search exhausted (degree 4, t=" +
                                  std::to_string(t) + ")");
            check_hamilton_decomposition(g, *cycles);
            hd.cycles = *cycles;
        }
    } else if (gens.size() == 3) {
        if (t % 2 != 0)
            throw OpError(OpError::Code::HypothesisViolated, "three generators require even t");
        if (res.size() != 6)
            throw OpError(OpError::Code::HypothesisViolated, "degree-6 circulant required");
        bool cond = false;
        for (int ci = 0; ci < 3 && !cond; ++ci) {
            int a = gens[(ci + 1) % 3], b = gens[(ci + 2) % 3], c = gens[ci];
            cond = gcd3(t, a, b) * std::gcd(t, c) == 2;
        }
        if (!cond)
            throw OpError(OpError::Code::HypothesisViolated,
                          "gcd condition of the degree-6 Hamilton decomposition theorem fails");
        UGraph g = circulant_ugraph(t, gens);
        auto cycles = hamilton_partition(g, 3, 2'000'000, 300);
        if (!cycles)
            throw OpError(OpError::Code::SearchFailed,
                          "Hamilton decomposition search exhausted (degree 6, t=" +
                              std::to_string(t) + ")");
        check_hamilton_decomposition(g, *cycles);
        hd.cycles = *cycles;
    } else {
        throw OpError(OpError::Code::HypothesisViolated, "1..3 generators supported");
    }

    std::lock_guard<std::mutex> lock(cache_mu);
    cache.emplace(std::make_pair(t, gens), hd);
    return hd;
}

CirculantFactorization ct_factorization(int t, int s) {
    if (s < 2 || s >= t) throw OpError(OpError::Code::HypothesisViolated, "need 2 <= s < t");
    if (t % 2 == 0 && s == 4)
        throw OpError(OpError::Code::HypothesisViolated, "s = 4 with even t is excluded");

    std::vector<int> signed_d;
    if (s % 2 == 1) {
        for (int d = 1; d <= (s - 1) / 2; ++d) {
            signed_d.push_back(d);
            signed_d.push_back(-d);
        }
    } else {
        signed_d.push_back(-1);
        for (int d = 2; d <= s / 2; ++d) {
            signed_d.push_back(d);
            signed_d.push_back(-d);
        }
    }
    CirculantFactorization out;
    out.t = t;
    out.d = make_connection_set(t, signed_d);

    const int k = s / 2;
    // Blocks of generators handled by undirected Hamilton decomposition, plus
    // single signed differences handled directly.
    std::vector<std::vector<int>> blocks;
    std::vector<int> singles;  // signed differences

    if (s == 2) {
        singles = {-1};
    } else if (s == 3) {
        singles = {1, -1};
    } else if (s == 4) {  // t odd here
        singles = {-1};
        blocks.push_back({2});
    } else if (s == 5) {
        if (t % 2 == 0) {
            blocks.push_back({1, 2});
        } else {
            singles = {1, -1};
            blocks.push_back({2});
        }
    } else {
        // k >= 3: T = {2..k} in pairs, with a leading triple when |T| is odd.
        if (s % 2 == 1)
            singles = {1, -1};
        else
            singles = {-1};
        int start = 2;
        if ((k - 1) % 2 == 1) {
            if (t % 2 == 0) {
                blocks.push_back({2, 3, 4});
            } else {
                blocks.push_back({2});  // gcd(t,2)=1 for odd t
                blocks.push_back({3, 4});
            }
            start = 5;
        }
        for (int a = start; a + 1 <= k; a += 2) blocks.push_back({a, a + 1});
    }

    for (int d : singles) out.factors.push_back(difference_cycle_factor(t, mod(d, t)));
    for (auto& b : blocks) {
        HamiltonDecomposition hd = hamilton_decompose_circulant(t, b);
        for (const auto& c : hd.cycles) {
            auto [fwd, rev] = direct_both_ways(t, c);
            out.factors.push_back(fwd);
            out.factors.push_back(rev);
        }
    }

    CertificateReport rep =
        verify_arc_partition(out.factors, t, {t}, circulant_digraph(t, out.d));
    if (!rep.ok)
        throw OpError(OpError::Code::SearchFailed,
                      "ct_factorization self-check failed: " + rep.failures.front().second);
    if (static_cast<int>(out.factors.size()) != s - 1)
        throw OpError(OpError::Code::SearchFailed, "ct_factorization factor count mismatch");
    return out;
}

CirculantFactorization c2_factorization(int t, int s) {
    if (t % 2 != 0) throw OpError(OpError::Code::HypothesisViolated, "t must be even");
    if (s < 2 || s >= t) throw OpError(OpError::Code::HypothesisViolated, "need 2 <= s < t");

    std::vector<int> signed_d;
    const int k = (s - 1) / 2;  // |T|; T = {1..k}
    for (int d = 1; d <= k; ++d) {
        signed_d.push_back(d);
        signed_d.push_back(-d);
    }
    if (s % 2 == 0) signed_d.push_back(t / 2);

    CirculantFactorization out;
    out.t = t;
    out.d = make_connection_set(t, signed_d);

    std::vector<std::vector<int>> blocks;
    int start = 1;
    if (k % 2 == 1) {
        blocks.push_back({1});
        start = 2;
    }
    for (int a = start; a + 1 <= k; a += 2) blocks.push_back({a, a + 1});

    for (auto& b : blocks) {
        HamiltonDecomposition hd = hamilton_decompose_circulant(t, b);
        for (const auto& cyc : hd.cycles) {
            // 1-factorize the even cycle into two matchings, alternating edges
            // starting from the lexicographically least vertex, then turn each
            // matching edge into a digon.
            size_t zero = std::find(cyc.begin(), cyc.end(),
                                    *std::min_element(cyc.begin(), cyc.end())) -
                          cyc.begin();
            TwoFactor m[2];
            m[0].n = m[1].n = t;
            for (int i = 0; i < t; ++i) {
                int u = cyc[(zero + i) % t], v = cyc[(zero + i + 1) % t];
                m[i % 2].cycles.push_back({u, v});
            }
            out.factors.push_back(m[0]);
            out.factors.push_back(m[1]);
        }
    }
    if (s % 2 == 0) {
        TwoFactor half;
        half.n = t;
        for (int i = 0; i < t / 2; ++i) half.cycles.push_back({i, i + t / 2});
        out.factors.push_back(half);
    }

    CycleType digon_type(t / 2, 2);
    CertificateReport rep =
        verify_arc_partition(out.factors, t, digon_type, circulant_digraph(t, out.d));
    if (!rep.ok)
        throw OpError(OpError::Code::SearchFailed,
                      "c2_factorization self-check failed: " + rep.failures.front().second);
    if (static_cast<int>(out.factors.size()) != s - 1)
        throw OpError(OpError::Code::SearchFailed, "c2_factorization factor count mismatch");
    return out;
}

}  // namespace opstar
