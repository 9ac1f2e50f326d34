#include "opstar/core.hpp"

namespace opstar {

ConnectionSet make_connection_set(int t, const std::vector<int>& signed_residues) {
    if (t < 2) throw OpError(OpError::Code::BadConnectionSet, "modulus must be >= 2");
    ConnectionSet s;
    s.t = t;
    for (int d : signed_residues) {
        int r = mod(d, t);
        if (r == 0) throw OpError(OpError::Code::BadConnectionSet, "residue 0 in connection set");
        s.residues.insert(r);
    }
    return s;
}

std::vector<Arc> complete_symmetric_arcs(int n) {
    if (n < 2) throw OpError(OpError::Code::InstanceTooSmall, "K*_n needs n >= 2");
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<size_t>(n) * (n - 1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) arcs.push_back({i, j});
    return arcs;
}

std::vector<Arc> circulant_digraph(int t, const ConnectionSet& s) {
    if (s.t != t) throw OpError(OpError::Code::BadConnectionSet, "connection set modulus mismatch");
    for (int d : s.residues)
        if (d <= 0 || d >= t) throw OpError(OpError::Code::BadConnectionSet, "residue out of range");
    std::vector<Arc> arcs;
    arcs.reserve(s.residues.size() * static_cast<size_t>(t));
    for (int d : s.residues)
        for (int i = 0; i < t; ++i) arcs.push_back({i, mod(i + d, t)});
    return arcs;
}

Vertex rotate_vertex(Vertex v, int j, int t, int base) {
    if (v == kInfinity || v < base || v >= base + t) return v;
    return base + mod(v - base + j, t);
}

TwoFactor rotate(const TwoFactor& f, int j, int t, int base) {
    TwoFactor out;
    out.n = f.n;
    out.cycles.reserve(f.cycles.size());
    for (const Cycle& c : f.cycles) {
        Cycle rc;
        rc.reserve(c.size());
        for (Vertex v : c) rc.push_back(rotate_vertex(v, j, t, base));
        out.cycles.push_back(std::move(rc));
    }
    return out;
}

CycleType cycle_type_of(const TwoFactor& f) {
    CycleType t;
    t.reserve(f.cycles.size());
    for (const Cycle& c : f.cycles) t.push_back(static_cast<int>(c.size()));
    std::sort(t.begin(), t.end());
    return t;
}

std::vector<Arc> arcs_of(const TwoFactor& f) {
    std::vector<Arc> arcs;
    for (const Cycle& c : f.cycles) {
        for (size_t i = 0; i < c.size(); ++i)
            arcs.push_back({c[i], c[(i + 1) % c.size()]});
    }
    return arcs;
}

namespace {

void gen_partitions(int rem, int min_part, CycleType& cur, std::vector<CycleType>& out) {
    if (rem == 0) {
        out.push_back(cur);
        return;
    }
    for (int m = min_part; m <= rem; ++m) {
        if (rem - m == 1) continue;  // no part of size 1 can follow
        cur.push_back(m);
        gen_partitions(rem - m, m, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<CycleType> enumerate_cycle_types(int min_n, int max_n) {
    std::vector<CycleType> out;
    CycleType cur;
    for (int n = std::max(2, min_n); n <= max_n; ++n) gen_partitions(n, 2, cur, out);
    return out;
}

TwoFactor normalize_infinity(const TwoFactor& f, int n) {
    TwoFactor out;
    out.n = n;
    out.cycles.reserve(f.cycles.size());
    for (const Cycle& c : f.cycles) {
        Cycle nc;
        nc.reserve(c.size());
        for (Vertex v : c) nc.push_back(v == kInfinity ? n - 1 : v);
        out.cycles.push_back(std::move(nc));
    }
    return out;
}

}  // namespace opstar
