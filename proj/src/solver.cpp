#include "opstar/solver.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "opstar/catalog.hpp"
#include "opstar/circulant_ham.hpp"
#include "opstar/orthogonal.hpp"
#include "opstar/recursion.hpp"
#include "opstar/rotational.hpp"

namespace opstar {

namespace {

using Status = SolveOutcome::Status;
using Witness = SolveOutcome::Witness;

bool is_known_exception(const CycleType& t) {
    return t == CycleType{4} || t == CycleType{6} || t == CycleType{3, 3};
}

// Open cases: the unresolved order-14 list, plus the open two-table family
// (m1 in {4,6}, m2 > m1 even, m1 + m2 >= 14).
bool is_open_case(const CycleType& t) {
    static const std::vector<CycleType> open14 = {
        {4, 10},   {6, 8},    {3, 3, 8},    {3, 4, 7},   {3, 5, 6},
        {4, 4, 6}, {4, 5, 5}, {3, 3, 3, 5}, {3, 3, 4, 4}};
    for (const CycleType& o : open14)
        if (t == o) return true;
    return t.size() == 2 && (t[0] == 4 || t[0] == 6) && t[1] > t[0] && t[1] % 2 == 0 &&
           t[0] + t[1] >= 14;
}

void certify(const Decomposition& d, const CycleType& type) {
    CertificateReport rep = verify_decomposition(d, type);
    if (!rep.ok)
        throw OpError(OpError::Code::ConditionFailed,
                      "construction failed certification: " + rep.failures.front().second);
}

SolveOutcome solved(const std::string& rule, const CycleType& type, std::vector<long long> params,
                    Decomposition dec, std::vector<StrategyTrace> children = {},
                    long long nodes = 0) {
    certify(dec, type);
    SolveOutcome out;
    out.status = Status::Solved;
    out.dec = std::move(dec);
    out.nodes = nodes;
    out.trace.push_back({rule, type, std::move(params)});
    for (const StrategyTrace& c : children) out.trace.insert(out.trace.end(), c.begin(), c.end());
    return out;
}

std::string type_key(const CycleType& t) {
    std::ostringstream oss;
    for (size_t i = 0; i < t.size(); ++i) oss << (i ? "," : "") << t[i];
    return oss.str();
}

// ---- result cache (append-only; the last entry for a key wins) ----

std::string serialize_dec(const Decomposition& d) {
    std::ostringstream oss;
    oss << d.n;
    for (const TwoFactor& f : d.factors) {
        oss << ' ';
        for (size_t c = 0; c < f.cycles.size(); ++c) {
            if (c) oss << ';';
            for (size_t v = 0; v < f.cycles[c].size(); ++v)
                oss << (v ? "," : "") << f.cycles[c][v];
        }
    }
    return oss.str();
}

std::optional<Decomposition> parse_dec(const std::string& s) {
    std::istringstream iss(s);
    Decomposition d;
    if (!(iss >> d.n)) return std::nullopt;
    std::string tok;
    while (iss >> tok) {
        TwoFactor f;
        f.n = d.n;
        std::istringstream fs(tok);
        std::string cyc;
        while (std::getline(fs, cyc, ';')) {
            Cycle c;
            std::istringstream cs(cyc);
            std::string v;
            while (std::getline(cs, v, ',')) c.push_back(std::stoi(v));
            f.cycles.push_back(std::move(c));
        }
        d.factors.push_back(std::move(f));
    }
    if (d.factors.empty()) return std::nullopt;
    return d;
}

std::string cache_file(const SearchBudget& b) {
    std::string dir = b.cache_dir;
    if (dir.empty())
        if (const char* e = std::getenv("OPSTAR_CACHE_DIR")) dir = e;
    if (dir.empty() || dir == "-") return {};  // "-" disables caching entirely
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    return dir + "/results-v1.cache";
}

std::optional<Decomposition> cache_load(const std::string& file, const CycleType& type) {
    if (file.empty()) return std::nullopt;
    std::ifstream in(file);
    if (!in) return std::nullopt;
    const std::string key = type_key(type) + " ";
    std::string line, hit;
    while (std::getline(in, line))
        if (line.rfind(key, 0) == 0) hit = line.substr(key.size());
    if (hit.empty()) return std::nullopt;
    return parse_dec(hit);
}

void cache_store(const std::string& file, const CycleType& type, const Decomposition& d) {
    if (file.empty()) return;
    const bool fresh = !std::filesystem::exists(file) || std::filesystem::file_size(file) == 0;
    std::ofstream out(file, std::ios::app);
    if (!out) return;
    if (fresh) out << "# opstar result cache v1 (append-only; last entry per type wins)\n";
    out << type_key(type) << ' ' << serialize_dec(d) << '\n';
}

// ---- extension builders (Theorem-level steps over the circulant join) ----

Decomposition build_long_cycle(const Decomposition& base_dec, const CycleType& bt, int t) {
    const int s = type_order(bt);
    int a = 0;
    for (int m : bt) a += delta(m);
    if (t <= s || s + a > 2 * (t / 2))
        throw OpError(OpError::Code::HypothesisViolated,
                      "long-cycle extension needs t > s and s + a <= 2*floor(t/2)");
    SplitAssignment assign;
    for (int m : bt) {
        assign.s_i.push_back(m / 2);
        assign.t_i.push_back(delta(m));
    }
    const int r = (s + a) / 2;
    assign.s_i.push_back(r);
    assign.t_i.push_back(t - 2 * r);
    if (s == 3 && t % 2 == 0) {
        SpecialGadget g = special_3_t(t);
        return join_extend_circulant(base_dec, t, g.s_set, g.h, g.ct_factors, assign);
    }
    if (s == 4 && t % 2 == 0) {
        if (bt != CycleType{2, 2})
            throw OpError(OpError::Code::HypothesisViolated,
                          "no even-t split gadget for this order-4 base");
        if (t == 6) {  // below the gadget's range; the catalog has this one
            std::optional<CatalogEntry> e = catalog_lookup({2, 2, 6});
            return catalog_expand(*e);
        }
        SpecialGadget g = special_22_t(t);
        return join_extend_circulant(base_dec, t, g.s_set, g.h, g.ct_factors, assign);
    }
    CirculantFactorization ct = ct_factorization(t, s);
    OrthogonalSubdigraph orth = orthogonal_paths({s, t, a, OrthogonalFlavor::Paths});
    return join_extend_circulant(base_dec, t, orth.s_set, orth.arcs, ct.factors, assign);
}

Decomposition build_digon_extension(const Decomposition& base_dec, const CycleType& bt, int t) {
    const int s = type_order(bt);
    int a = 0;
    for (int m : bt) a += delta(m);
    if (t % 2 != 0 || t <= s || s + a > t)
        throw OpError(OpError::Code::HypothesisViolated,
                      "digon extension needs t even, t > s and s + a <= t");
    SplitAssignment assign;
    for (int m : bt) {
        assign.s_i.push_back(m / 2);
        assign.t_i.push_back(delta(m));
    }
    const int r = (s + a) / 2;
    for (int i = 0; i < r; ++i) {
        assign.s_i.push_back(1);
        assign.t_i.push_back(0);
    }
    for (int i = 0; i < (t - s - a) / 2; ++i) {
        assign.s_i.push_back(0);
        assign.t_i.push_back(2);
    }
    CirculantFactorization c2 = c2_factorization(t, s);
    OrthogonalSubdigraph orth = orthogonal_digons({s, t, a, OrthogonalFlavor::Digons});
    return join_extend_circulant(base_dec, t, orth.s_set, orth.arcs, c2.factors, assign);
}

// ---- search wrappers recording replayable parameters ----

std::optional<SolveOutcome> try_starter(const CycleType& type, int q, long long nodes) {
    std::optional<StarterSet> ss = starter_search(type, q, nodes);
    if (!ss) return std::nullopt;
    return solved("starter-expand", type, {q, nodes}, expand_starters(*ss));
}

std::optional<SolveOutcome> try_pack(const CycleType& type, const PackBudget& pb) {
    SearchResult r = heuristic_pack(type, pb);
    if (r.status != SearchStatus::Found) return std::nullopt;
    return solved("heuristic-pack", type,
                  {pb.seed, pb.attempts, pb.factor_nodes, pb.endgame_nodes, pb.endgame},
                  std::move(r.dec), {}, r.nodes);
}

SolveOutcome solve_impl(const CycleType& type, const SearchBudget& B);

// Tries every balanced split of the (all-even) type into two halves of equal
// vertex count, most balanced cardinality first.
std::optional<SolveOutcome> try_doubling(const CycleType& type, const SearchBudget& B) {
    const int k = static_cast<int>(type.size());
    const int n = type_order(type);
    if (k < 2 || k > 16 || n % 2 != 0) return std::nullopt;
    std::vector<std::pair<CycleType, CycleType>> parts;
    std::set<std::pair<CycleType, CycleType>> seen;
    for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
        if (!(mask & 1)) continue;  // fix m_1 on the left to halve the space
        CycleType left, right;
        for (int i = 0; i < k; ++i) ((mask >> i) & 1 ? left : right).push_back(type[i]);
        if (type_order(left) != n / 2) continue;
        if (seen.insert({left, right}).second) parts.emplace_back(left, right);
    }
    std::stable_sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        auto skew = [](const auto& p) {
            return std::abs(static_cast<int>(p.first.size()) - static_cast<int>(p.second.size()));
        };
        return skew(a) < skew(b);
    });
    int tried = 0;
    for (const auto& [left, right] : parts) {
        if (tried >= 6) break;
        if (is_known_exception(left) || is_known_exception(right)) continue;
        ++tried;
        SolveOutcome lo = solve_impl(left, B);
        if (lo.status != Status::Solved) continue;
        SolveOutcome ro = (right == left) ? lo : solve_impl(right, B);
        if (ro.status != Status::Solved) continue;
        Decomposition dec = bipartite_double(lo.dec, ro.dec);
        return solved("bipartite-double", type, {}, std::move(dec), {lo.trace, ro.trace},
                      lo.nodes + ro.nodes);
    }
    return std::nullopt;
}

SolveOutcome solve_impl(const CycleType& type, const SearchBudget& B) {
    const int n = type_order(type);
    const int k = static_cast<int>(type.size());

    // 1. Known nonexistent instances.
    if (is_known_exception(type)) {
        SolveOutcome out;
        out.status = Status::Nonexistent;
        out.witness = Witness::KnownException;
        out.trace.push_back({"known-exception", type, {}});
        return out;
    }

    // 2. Starter catalog and the one explicit join family.
    if (std::optional<CatalogEntry> e = catalog_lookup(type))
        return solved("catalog", type, {}, catalog_expand(*e));
    if (type == CycleType{2, 2, 4}) return solved("join-2-2-4", type, {}, lemma_224());

    // 3. Uniform bases with closed-form constructions.
    if (type.front() == type.back() && type[0] == 2)
        return solved("round-robin-digons", type, {n}, round_robin_digons(n));
    if (k == 1 && n % 2 == 1) return solved("doubled-hamilton", type, {n}, doubled_hamilton(n));

    // 4. Bipartite doubling (all lengths even).
    bool all_even = true, has_two = false;
    int odd_count = 0;
    for (int m : type) {
        if (m % 2) ++odd_count;
        all_even = all_even && m % 2 == 0;
        has_two = has_two || m == 2;
    }
    if (all_even && k >= 2)
        if (std::optional<SolveOutcome> o = try_doubling(type, B)) return *o;

    // 5a. Extension by one long cycle: the largest length joins the rest.
    if (k >= 2) {
        CycleType base(type.begin(), type.end() - 1);
        const int t = type.back();
        const int s = type_order(base);
        const int a = odd_count - delta(t);
        if (t > s && s + a <= 2 * (t / 2) && !is_known_exception(base)) {
            SolveOutcome bo = solve_impl(base, B);
            if (bo.status == Status::Solved) {
                try {
                    return extend_by_long_cycle(bo, base, t);
                } catch (const OpError&) {
                }
            }
        }
    }

    // 5b. Extension by digons: the 2s (all but j of them) join the rest.
    if (has_two && type.back() > 2) {
        CycleType non2;
        int twos = 0;
        for (int m : type) {
            if (m == 2)
                ++twos;
            else
                non2.push_back(m);
        }
        for (int j = 0; j < twos; ++j) {
            CycleType base = non2;
            for (int i = 0; i < j; ++i) base.push_back(2);
            base = canonical_type(base);
            const int t = 2 * (twos - j);
            const int s = type_order(base);
            int a = 0;
            for (int m : base) a += delta(m);
            if (t <= s) break;  // keeping more 2s only shrinks t further
            if (s + a > t || is_known_exception(base)) continue;
            SolveOutcome bo = solve_impl(base, B);
            if (bo.status != Status::Solved) continue;
            try {
                return extend_by_digons(bo, base, t);
            } catch (const OpError&) {
            }
        }
    }

    // 6. Two-table residue: m1 in {4,6} with odd companion has no base
    //    construction; a base-1 starter search settles it directly.
    if (k == 2 && (type[0] == 4 || type[0] == 6) && type[1] % 2 == 1)
        if (std::optional<SolveOutcome> o = try_starter(type, 1, B.starter_nodes)) return *o;

    // 7. Bounded search (cached).  Cases the source results leave open get
    //    the same full ladder: in practice the packer settles all of them,
    //    and a certified solution beats an honest Unknown.
    const bool open = is_open_case(type);
    const std::string cf = cache_file(B);
    if (std::optional<Decomposition> d = cache_load(cf, type)) {
        try {
            return solved("cache", type, {}, *d);
        } catch (const OpError&) {  // stale or corrupt entry: fall through
        }
    }
    long long nodes = 0;
    if (n <= 32) {
        if (n % 2 == 1 || has_two)
            if (std::optional<SolveOutcome> o = try_starter(type, 1, B.starter_nodes)) {
                cache_store(cf, type, o->dec);
                return *o;
            }
        const unsigned sd = B.seed;
        std::vector<PackBudget> ladder = {
            {sd, 400, B.pack_factor_nodes, B.pack_endgame_nodes, 3},
            {sd, 300, 100000, 5000000, 3},
            {sd, 20000, 100000, 5000000, 5},
            {sd + 1, 20000, 100000, 5000000, 5},
            {sd + 2, 20000, 100000, 5000000, 5},
            {sd, 200, 100000, 20000000, 6}};
        if (B.pack_attempts > 0)
            for (PackBudget& pb : ladder) pb.attempts = std::min(pb.attempts, B.pack_attempts);
        for (size_t rung = 0; rung < ladder.size(); ++rung) {
            if (std::optional<SolveOutcome> o = try_pack(type, ladder[rung])) {
                o->nodes += nodes;
                cache_store(cf, type, o->dec);
                return *o;
            }
            if (rung == 1)
                for (int q : {3, 5})
                    if ((n - 1) % q == 0)
                        if (std::optional<SolveOutcome> o = try_starter(type, q, B.starter_nodes)) {
                            cache_store(cf, type, o->dec);
                            return *o;
                        }
        }
        if (n <= 10) {
            SearchResult r = exhaustive_pack(type, B.exhaustive_nodes);
            if (r.status == SearchStatus::Found) {
                SolveOutcome o =
                    solved("exhaustive-pack", type, {B.exhaustive_nodes}, r.dec, {}, r.nodes);
                cache_store(cf, type, o.dec);
                return o;
            }
            if (r.status == SearchStatus::ProvedNonexistent) {
                SolveOutcome out;
                out.status = Status::Nonexistent;
                out.witness = Witness::ExhaustiveSearchLog;
                out.nodes = r.nodes;
                out.trace.push_back({"exhausted-space", type, {B.exhaustive_nodes}});
                return out;
            }
            nodes += r.nodes;
        }
    }

    // 8. Honest failure.
    SolveOutcome out;
    out.status = Status::Unknown;
    out.witness = open ? Witness::OpenCase : Witness::BudgetExhausted;
    out.nodes = nodes;
    out.trace.push_back({"unresolved", type, {}});
    return out;
}

}  // namespace

std::string to_string(const StrategyTrace& trace) {
    std::ostringstream oss;
    for (size_t i = 0; i < trace.size(); ++i) {
        if (i) oss << " | ";
        oss << trace[i].rule << '(' << type_key(trace[i].type);
        for (long long p : trace[i].params) oss << ';' << p;
        oss << ')';
    }
    return oss.str();
}

SolveOutcome extend_by_long_cycle(const SolveOutcome& base, const CycleType& base_type, int t) {
    if (base.status != Status::Solved)
        throw OpError(OpError::Code::HypothesisViolated, "extension base is not solved");
    CycleType bt = canonical_type(base_type);
    Decomposition dec = build_long_cycle(base.dec, bt, t);
    CycleType full = bt;
    full.push_back(t);
    return solved("extend-long-cycle", canonical_type(full), {t}, std::move(dec), {base.trace},
                  base.nodes);
}

SolveOutcome extend_by_digons(const SolveOutcome& base, const CycleType& base_type, int t) {
    if (base.status != Status::Solved)
        throw OpError(OpError::Code::HypothesisViolated, "extension base is not solved");
    CycleType bt = canonical_type(base_type);
    Decomposition dec = build_digon_extension(base.dec, bt, t);
    CycleType full = bt;
    for (int i = 0; i < t / 2; ++i) full.push_back(2);
    return solved("extend-digons", canonical_type(full), {t}, std::move(dec), {base.trace},
                  base.nodes);
}

SolveOutcome solve(const CycleType& type, const SearchBudget& budget) {
    if (type.empty()) throw OpError(OpError::Code::BadInstance, "empty cycle type");
    for (int m : type)
        if (m < 2) throw OpError(OpError::Code::InstanceTooSmall, "cycle lengths must be >= 2");
    return solve_impl(canonical_type(type), budget);
}

SolveOutcome brute_force_search(const CycleType& type, const SearchBudget& budget,
                                int exhaust_cap) {
    if (type.empty()) throw OpError(OpError::Code::BadInstance, "empty cycle type");
    for (int m : type)
        if (m < 2) throw OpError(OpError::Code::InstanceTooSmall, "cycle lengths must be >= 2");
    const CycleType canon = canonical_type(type);
    SolveOutcome out;
    if (type_order(canon) <= exhaust_cap) {
        SearchResult r = exhaustive_pack(canon, budget.exhaustive_nodes);
        if (r.status == SearchStatus::Found)
            return solved("exhaustive-pack", canon, {budget.exhaustive_nodes}, r.dec, {}, r.nodes);
        out.status = r.status == SearchStatus::ProvedNonexistent ? Status::Nonexistent
                                                                 : Status::Unknown;
        out.witness = r.status == SearchStatus::ProvedNonexistent ? Witness::ExhaustiveSearchLog
                                                                  : Witness::BudgetExhausted;
        out.nodes = r.nodes;
        out.trace.push_back({r.status == SearchStatus::ProvedNonexistent ? "exhausted-space"
                                                                         : "unresolved",
                             canon,
                             {budget.exhaustive_nodes}});
        return out;
    }
    PackBudget pb{budget.seed, budget.pack_attempts > 0 ? budget.pack_attempts : 3000, 100000,
                  5000000, 5};
    SearchResult r = heuristic_pack(canon, pb);
    if (r.status == SearchStatus::Found)
        return solved("heuristic-pack", canon,
                      {pb.seed, pb.attempts, pb.factor_nodes, pb.endgame_nodes, pb.endgame}, r.dec,
                      {}, r.nodes);
    out.status = Status::Unknown;
    out.witness = Witness::BudgetExhausted;
    out.nodes = r.nodes;
    out.trace.push_back({"unresolved", canon, {}});
    return out;
}

namespace {

Decomposition replay_at(const StrategyTrace& tr, size_t& pos, const SearchBudget& B) {
    if (pos >= tr.size()) throw OpError(OpError::Code::BadInstance, "trace is truncated");
    const TraceStep st = tr[pos++];
    const CycleType& ty = st.type;
    auto param = [&](size_t i) -> long long {
        if (i >= st.params.size())
            throw OpError(OpError::Code::BadInstance, "trace step is missing a parameter");
        return st.params[i];
    };
    if (st.rule == "catalog") {
        std::optional<CatalogEntry> e = catalog_lookup(ty);
        if (!e) throw OpError(OpError::Code::BadInstance, "type is not in the catalog");
        return catalog_expand(*e);
    }
    if (st.rule == "join-2-2-4") return lemma_224();
    if (st.rule == "round-robin-digons") return round_robin_digons(type_order(ty));
    if (st.rule == "doubled-hamilton") return doubled_hamilton(type_order(ty));
    if (st.rule == "bipartite-double") {
        Decomposition left = replay_at(tr, pos, B);
        Decomposition right = replay_at(tr, pos, B);
        return bipartite_double(left, right);
    }
    if (st.rule == "extend-long-cycle" || st.rule == "extend-digons") {
        if (pos >= tr.size()) throw OpError(OpError::Code::BadInstance, "trace is truncated");
        const CycleType bt = tr[pos].type;
        Decomposition base = replay_at(tr, pos, B);
        const int t = static_cast<int>(param(0));
        return st.rule == "extend-long-cycle" ? build_long_cycle(base, bt, t)
                                              : build_digon_extension(base, bt, t);
    }
    if (st.rule == "starter-expand") {
        std::optional<StarterSet> ss = starter_search(ty, static_cast<int>(param(0)), param(1));
        if (!ss) throw OpError(OpError::Code::SearchFailed, "starter search did not reproduce");
        return expand_starters(*ss);
    }
    if (st.rule == "heuristic-pack") {
        PackBudget pb{static_cast<unsigned>(param(0)), static_cast<int>(param(1)), param(2),
                      param(3), static_cast<int>(param(4))};
        SearchResult r = heuristic_pack(ty, pb);
        if (r.status != SearchStatus::Found)
            throw OpError(OpError::Code::SearchFailed, "packing search did not reproduce");
        return r.dec;
    }
    if (st.rule == "exhaustive-pack") {
        SearchResult r = exhaustive_pack(ty, param(0));
        if (r.status != SearchStatus::Found)
            throw OpError(OpError::Code::SearchFailed, "exhaustive search did not reproduce");
        return r.dec;
    }
    if (st.rule == "cache") {
        std::optional<Decomposition> d = cache_load(cache_file(B), ty);
        if (!d) throw OpError(OpError::Code::BadInstance, "cached result is gone");
        return *d;
    }
    throw OpError(OpError::Code::BadInstance, "rule has no replay: " + st.rule);
}

}  // namespace

Decomposition replay_trace(const StrategyTrace& trace, const SearchBudget& budget) {
    if (trace.empty()) throw OpError(OpError::Code::BadInstance, "empty trace");
    size_t pos = 0;
    Decomposition d = replay_at(trace, pos, budget);
    if (pos != trace.size())
        throw OpError(OpError::Code::BadInstance, "trace has trailing steps");
    certify(d, trace.front().type);
    return d;
}

Decomposition round_robin_digons(int n) {
    if (n < 2 || n % 2 != 0)
        throw OpError(OpError::Code::BadInstance, "digon factorization needs even order");
    Decomposition d;
    d.n = n;
    for (int i = 0; i < n - 1; ++i) {
        TwoFactor f;
        f.n = n;
        f.cycles.push_back({i, n - 1});
        for (int j = 1; j <= (n - 2) / 2; ++j)
            f.cycles.push_back({mod(i + j, n - 1), mod(i - j, n - 1)});
        d.factors.push_back(std::move(f));
    }
    return d;
}

Decomposition doubled_hamilton(int n) {
    if (n < 3 || n % 2 == 0)
        throw OpError(OpError::Code::BadInstance, "doubled Hamilton construction needs odd order");
    // Zigzag Hamilton cycle on Z_{n-1} u {n-1}; its rotations partition the
    // edges of K_n, and both orientations of each give the directed factors.
    Cycle seq{n - 1, 0};
    int lo = 1, hi = n - 2;
    bool low = true;
    while (lo <= hi) {
        seq.push_back(low ? lo++ : hi--);
        low = !low;
    }
    Decomposition d;
    d.n = n;
    for (int i = 0; i < (n - 1) / 2; ++i) {
        Cycle c;
        for (Vertex v : seq) c.push_back(v == n - 1 ? n - 1 : mod(v + i, n - 1));
        d.factors.push_back({{c}, n});
        Cycle rev(c.rbegin(), c.rend());
        d.factors.push_back({{rev}, n});
    }
    return d;
}

Decomposition lemma_224() {
    const Decomposition base{{TwoFactor{{{0, 1}}, 2}}, 2};
    const std::vector<TwoFactor> dprime = {TwoFactor{{{1, 4}, {0, 5, 2, 3}}, 6}};
    std::vector<std::vector<SubComponent>> fam = {
        {{false, {0}}, {false, {1}}, {true, {2, 5, 3, 4}}},
        {{false, {1}}, {false, {2}}, {true, {3, 5, 4, 0}}},
        {{false, {2}}, {false, {3}}, {true, {4, 5, 1, 0}}},
    };
    for (int j = 1; j <= 3; ++j) {
        std::vector<SubComponent> hj;
        for (const SubComponent& c : fam[2]) {
            SubComponent rc{c.is_cycle, {}};
            for (int v : c.verts) rc.verts.push_back(mod(v + j, 6));
            hj.push_back(std::move(rc));
        }
        fam.push_back(std::move(hj));
    }
    return join_extend(base, dprime, fam, SplitAssignment{{1, 1, 0}, {0, 0, 4}});
}

}  // namespace opstar
