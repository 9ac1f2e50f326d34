#include "opstar/recursion.hpp"

#include <map>
#include <set>
#include <string>

namespace opstar {

namespace {

[[noreturn]] void condition_failed(const std::string& cond, const std::string& why) {
    throw OpError(OpError::Code::ConditionFailed, "condition (" + cond + "): " + why);
}

// Cycle type of a decomposition, taken from its first factor; verified
// against every factor downstream.
CycleType type_of(const Decomposition& d) {
    if (d.factors.empty())
        throw OpError(OpError::Code::BadInstance, "decomposition has no factors");
    return cycle_type_of(d.factors[0]);
}

void require_verified(const Decomposition& d, const CycleType& type, const std::string& label) {
    CertificateReport rep = verify_decomposition(d, type);
    if (!rep.ok) condition_failed("1", label + ": " + rep.failures.front().second);
}

// Shifts every vertex of a factor by `offset` (disjoint-union relabeling).
TwoFactor shift(const TwoFactor& f, int offset, int n) {
    TwoFactor out;
    out.n = n;
    for (const Cycle& c : f.cycles) {
        Cycle sc;
        for (Vertex v : c) sc.push_back(v + offset);
        out.cycles.push_back(std::move(sc));
    }
    return out;
}

}  // namespace

CycleType assignment_type(const SplitAssignment& assign) {
    if (assign.s_i.size() != assign.t_i.size() || assign.s_i.empty())
        throw OpError(OpError::Code::BadInstance, "split assignment arity mismatch");
    CycleType m;
    for (int i = 0; i < assign.k(); ++i) {
        if (assign.s_i[i] < 0 || assign.t_i[i] < 0)
            condition_failed("2c", "negative s_i or t_i");
        if (assign.m(i) < 2) condition_failed("2c", "cycle length below 2");
        m.push_back(assign.m(i));
    }
    return m;
}

Decomposition bipartite_double(const Decomposition& sol_x, const Decomposition& sol_y) {
    const int n = sol_x.n;
    if (sol_y.n != n)
        throw OpError(OpError::Code::SizeMismatch, "input solutions have different orders");
    const CycleType tx = type_of(sol_x), ty = type_of(sol_y);
    for (int m : tx)
        if (m % 2 != 0)
            throw OpError(OpError::Code::OddLengthInBipartite, "odd cycle length in X solution");
    for (int m : ty)
        if (m % 2 != 0)
            throw OpError(OpError::Code::OddLengthInBipartite, "odd cycle length in Y solution");
    require_verified(sol_x, tx, "X solution");
    require_verified(sol_y, ty, "Y solution");

    // Concatenated type; X = {0..n-1}, Y = {n..2n-1}.
    CycleType m = tx;
    m.insert(m.end(), ty.begin(), ty.end());

    Decomposition out;
    out.n = 2 * n;
    // Paired factors on the disjoint union.
    for (int q = 0; q < n - 1; ++q) {
        TwoFactor f = sol_x.factors[q];
        f.n = 2 * n;
        TwoFactor g = shift(sol_y.factors[q], n, 2 * n);
        f.cycles.insert(f.cycles.end(), g.cycles.begin(), g.cycles.end());
        out.factors.push_back(std::move(f));
    }
    // Alternating bipartite factor: X/Y blocks of size m_i/2 in index order.
    TwoFactor alt;
    alt.n = 2 * n;
    int next = 0;
    for (int mi : m) {
        Cycle c;
        for (int p = 0; p < mi / 2; ++p) {
            c.push_back(next + p);
            c.push_back(n + next + p);
        }
        next += mi / 2;
        alt.cycles.push_back(std::move(c));
    }
    for (int j = 0; j < n; ++j) out.factors.push_back(rotate(alt, j, n, n));

    CertificateReport rep = verify_decomposition(out, canonical_type(m));
    if (!rep.ok)
        throw OpError(OpError::Code::ConditionFailed,
                      "doubled decomposition failed certification: " + rep.failures.front().second);
    return out;
}

namespace {

struct ComponentShapeCheck {
    // Validates one H_j component against the assignment slot and returns
    // its vertex set.
    static std::set<Vertex> check(const SubComponent& c, int s_i, int t_i, int m_i, int j, int i) {
        const std::string where =
            "H_" + std::to_string(j) + " component " + std::to_string(i + 1);
        if (t_i == m_i) {
            if (!c.is_cycle || static_cast<int>(c.verts.size()) != m_i)
                condition_failed("2d", where + " must be a directed " + std::to_string(m_i) +
                                           "-cycle");
        } else {
            if (c.is_cycle || static_cast<int>(c.verts.size()) != t_i + 1)
                condition_failed("2d", where + " must be a directed " + std::to_string(t_i) +
                                           "-path");
            if (s_i < 1) condition_failed("2c", where + ": path slot needs s_i >= 1");
        }
        std::set<Vertex> vs(c.verts.begin(), c.verts.end());
        if (vs.size() != c.verts.size())
            condition_failed("2d", where + " repeats a vertex");
        return vs;
    }
};

}  // namespace

Decomposition join_extend(const Decomposition& sol_s,
                          const std::vector<TwoFactor>& dprime_factors,
                          const std::vector<std::vector<SubComponent>>& h_family,
                          const SplitAssignment& assign) {
    const CycleType m = assignment_type(assign);
    const int k = assign.k();
    const int s = sol_s.n;

    int sum_s = 0, sum_st = 0;
    for (int i = 0; i < k; ++i) {
        sum_s += assign.s_i[i];
        sum_st += assign.s_i[i] + assign.t_i[i];
    }
    if (sum_s != s) condition_failed("2b", "sum of s_i differs from |X|");
    const int t = sum_st;
    if (t <= s) condition_failed("2c", "need t > s");

    // Condition (1): the small solution, whose type must be a prefix of m.
    const CycleType base_type = type_of(sol_s);
    const int ell = static_cast<int>(base_type.size());
    if (ell < 1 || ell >= k) condition_failed("1", "base type arity out of range");
    if (canonical_type(CycleType(m.begin(), m.begin() + ell)) != canonical_type(base_type))
        condition_failed("1", "base solution type does not match m_1..m_l");
    require_verified(sol_s, base_type, "base solution");

    // Condition (2d): validate the family H_0..H_{t-1}.
    if (static_cast<int>(h_family.size()) != t)
        condition_failed("2d", "family must have exactly t members");
    std::vector<std::set<Vertex>> base_verts(k);
    for (int j = 0; j < t; ++j) {
        if (static_cast<int>(h_family[j].size()) != k)
            condition_failed("2d", "H_" + std::to_string(j) + " must have k components");
        std::set<Vertex> all;
        for (int i = 0; i < k; ++i) {
            const SubComponent& c = h_family[j][i];
            for (Vertex v : c.verts)
                if (v < 0 || v >= t)
                    condition_failed("2d", "vertex outside Z_t");
            std::set<Vertex> vs = ComponentShapeCheck::check(c, assign.s_i[i], assign.t_i[i],
                                                             m[i], j, i);
            for (Vertex v : vs)
                if (!all.insert(v).second)
                    condition_failed("2d", "H_" + std::to_string(j) + " components overlap");
            if (j == 0) {
                base_verts[i] = vs;
            } else {
                std::set<Vertex> want;
                for (Vertex v : base_verts[i]) want.insert(mod(v + j, t));
                if (vs != want)
                    condition_failed("2d", "H_" + std::to_string(j) + " component " +
                                               std::to_string(i + 1) +
                                               " is not the rho^j image of H_0's");
                if (!c.is_cycle && assign.t_i[i] > 0) {
                    const SubComponent& c0 = h_family[0][i];
                    if (c.verts.front() != mod(c0.verts.front() + j, t) ||
                        c.verts.back() != mod(c0.verts.back() + j, t))
                        condition_failed("2d", "H_" + std::to_string(j) + " component " +
                                                   std::to_string(i + 1) +
                                                   " endpoints do not track rho^j");
                }
            }
        }
    }

    // The family's arcs, with duplicates rejected, determine the ground set
    // left for condition (2a).
    std::set<Arc> h_arcs;
    for (const auto& hj : h_family)
        for (const Arc& a : component_arcs(hj))
            if (!h_arcs.insert(a).second)
                condition_failed("2d", "family repeats an arc");
    std::vector<Arc> ground;
    for (const Arc& a : complete_symmetric_arcs(t))
        if (!h_arcs.count(a)) ground.push_back(a);
    if (ground.size() + h_arcs.size() != complete_symmetric_arcs(t).size())
        condition_failed("2d", "family arc not inside K*_t");

    // Condition (2a): s-1 factors of the tail type on the remaining arcs.
    if (static_cast<int>(dprime_factors.size()) != s - 1)
        condition_failed("2a", "need exactly s-1 factors on Y");
    const CycleType tail_type = canonical_type(CycleType(m.begin() + ell, m.end()));
    CertificateReport arep = verify_arc_partition(dprime_factors, t, tail_type, ground);
    if (!arep.ok) condition_failed("2a", arep.failures.front().second);

    // Build L_1..L_k from H_0, choosing lowest available indices.  X keeps
    // labels {0..s-1}; y_i becomes s + i.
    std::vector<char> used_x(s, 0), used_y(t, 0);
    std::vector<std::vector<int>> chosen_u(k);   // X vertices, global labels
    std::vector<std::vector<int>> chosen_v(k);   // extra Y vertices, Z_t labels
    for (int i = 0; i < k; ++i) {
        const int si = assign.s_i[i], ti = assign.t_i[i];
        if (ti == m[i]) {  // case (i): the cycle is used unchanged
            for (Vertex v : base_verts[i]) used_y[v] = 1;
            continue;
        }
        // Reserved Y vertices: components j > i always; component i too when
        // it is a nonempty path (its vertices are already in L_i).
        std::vector<char> reserved(t, 0);
        for (int j = (ti > 0 ? i : i + 1); j < k; ++j)
            for (Vertex v : base_verts[j]) reserved[v] = 1;
        for (int p = 0, x = 0; p < si; ++p) {
            while (x < s && used_x[x]) ++x;
            if (x == s) condition_failed("2b", "ran out of X vertices");
            used_x[x] = 1;
            chosen_u[i].push_back(x);
        }
        const int extra = (ti > 0 ? si - 1 : si);
        for (int p = 0, y = 0; p < extra; ++p) {
            while (y < t && (used_y[y] || reserved[y])) ++y;
            if (y == t) condition_failed("2c", "ran out of Y vertices");
            used_y[y] = 1;
            chosen_v[i].push_back(y);
        }
        if (ti > 0)
            for (Vertex v : h_family[0][i].verts) used_y[v] = 1;
    }

    Decomposition out;
    out.n = s + t;
    const auto glob = [&](Vertex y, int j) { return s + mod(y + j, t); };
    // F_j: the rho^j rotation of F_0 with H_j's components substituted in.
    for (int j = 0; j < t; ++j) {
        TwoFactor f;
        f.n = s + t;
        for (int i = 0; i < k; ++i) {
            const int si = assign.s_i[i], ti = assign.t_i[i];
            Cycle c;
            if (ti == m[i]) {
                for (Vertex v : h_family[j][i].verts) c.push_back(s + v);
            } else if (ti == 0) {
                for (int p = 0; p < si; ++p) {
                    c.push_back(chosen_u[i][p]);
                    c.push_back(glob(chosen_v[i][p], j));
                }
            } else {
                for (Vertex v : h_family[j][i].verts) c.push_back(s + v);
                c.push_back(chosen_u[i][0]);
                for (int p = 1; p < si; ++p) {
                    c.push_back(glob(chosen_v[i][p - 1], j));
                    c.push_back(chosen_u[i][p]);
                }
            }
            f.cycles.push_back(std::move(c));
        }
        out.factors.push_back(std::move(f));
    }
    // Mixed factors: one base factor on X with one D' factor on Y.
    for (int q = 0; q < s - 1; ++q) {
        TwoFactor f = sol_s.factors[q];
        f.n = s + t;
        TwoFactor g = shift(dprime_factors[q], s, s + t);
        f.cycles.insert(f.cycles.end(), g.cycles.begin(), g.cycles.end());
        out.factors.push_back(std::move(f));
    }

    CertificateReport rep = verify_decomposition(out, canonical_type(m));
    if (!rep.ok)
        throw OpError(OpError::Code::ConditionFailed,
                      "joined decomposition failed certification: " + rep.failures.front().second);
    return out;
}

Decomposition join_extend_circulant(const Decomposition& sol_s, int t,
                                    const ConnectionSet& s_set, const std::vector<Arc>& h,
                                    const std::vector<TwoFactor>& complement_factors,
                                    const SplitAssignment& assign) {
    const CycleType m = assignment_type(assign);
    const int k = assign.k();
    const int s = sol_s.n;
    if (s_set.t != t || static_cast<int>(s_set.residues.size()) != t - s)
        throw OpError(OpError::Code::SizeMismatch, "|S| must equal t - s");

    // Decompose h into directed paths and cycles (in/out degree at most 1).
    std::map<Vertex, Vertex> succ;
    std::map<Vertex, Vertex> pred;
    for (const Arc& a : h) {
        if (a.tail < 0 || a.tail >= t || a.head < 0 || a.head >= t || a.tail == a.head)
            condition_failed("2d", "subdigraph arc outside K*_t");
        if (!succ.emplace(a.tail, a.head).second || !pred.emplace(a.head, a.tail).second)
            condition_failed("2d", "subdigraph vertex has degree above 1");
    }
    std::set<Vertex> touched;
    for (const Arc& a : h) {
        touched.insert(a.tail);
        touched.insert(a.head);
    }
    std::vector<SubComponent> paths, cycles;
    std::set<Vertex> placed;
    for (Vertex v0 = 0; v0 < t; ++v0) {
        if (!touched.count(v0) || placed.count(v0)) continue;
        // Walk back to a source; if none, v0 lies on a cycle.
        Vertex start = v0;
        while (pred.count(start)) {
            start = pred.at(start);
            if (start == v0) break;
        }
        SubComponent c;
        c.is_cycle = (start == v0 && pred.count(v0));
        Vertex v = start;
        while (true) {
            c.verts.push_back(v);
            placed.insert(v);
            auto it = succ.find(v);
            if (it == succ.end() || it->second == start) break;
            v = it->second;
        }
        (c.is_cycle ? cycles : paths).push_back(std::move(c));
    }

    // Match components to assignment slots: exact shape, lowest-labeled
    // candidate first; t_i = 0 slots take the lowest untouched vertices.
    std::vector<SubComponent> h0(k);
    std::vector<char> path_used(paths.size(), 0), cycle_used(cycles.size(), 0);
    Vertex next_free = 0;
    for (int i = 0; i < k; ++i) {
        const int ti = assign.t_i[i];
        if (ti == 0) {
            while (next_free < t && touched.count(next_free)) ++next_free;
            if (next_free == t) condition_failed("2d", "no untouched vertex for a P_0 slot");
            h0[i].verts = {next_free++};
        } else if (ti == m[i]) {
            size_t pick = cycles.size();
            for (size_t p = 0; p < cycles.size(); ++p)
                if (!cycle_used[p] && static_cast<int>(cycles[p].verts.size()) == m[i]) {
                    pick = p;
                    break;
                }
            if (pick == cycles.size())
                condition_failed("2d", "no cycle component of length " + std::to_string(m[i]));
            cycle_used[pick] = 1;
            h0[i] = cycles[pick];
        } else {
            size_t pick = paths.size();
            for (size_t p = 0; p < paths.size(); ++p)
                if (!path_used[p] && static_cast<int>(paths[p].verts.size()) == ti + 1) {
                    pick = p;
                    break;
                }
            if (pick == paths.size())
                condition_failed("2d", "no path component with " + std::to_string(ti) + " arcs");
            path_used[pick] = 1;
            h0[i] = paths[pick];
        }
    }
    for (size_t p = 0; p < paths.size(); ++p)
        if (!path_used[p]) condition_failed("2d", "unassigned path component");
    for (size_t p = 0; p < cycles.size(); ++p)
        if (!cycle_used[p]) condition_failed("2d", "unassigned cycle component");

    std::vector<std::vector<SubComponent>> h_family;
    for (int j = 0; j < t; ++j) {
        std::vector<SubComponent> hj;
        for (const SubComponent& c : h0) {
            SubComponent rc;
            rc.is_cycle = c.is_cycle;
            for (Vertex v : c.verts) rc.verts.push_back(mod(v + j, t));
            hj.push_back(std::move(rc));
        }
        h_family.push_back(std::move(hj));
    }
    return join_extend(sol_s, complement_factors, h_family, assign);
}

}  // namespace opstar
