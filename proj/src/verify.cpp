#include "opstar/verify.hpp"

#include <map>
#include <sstream>

namespace opstar {

std::string to_string(FailureKind k) {
    switch (k) {
        case FailureKind::MissingArc: return "MissingArc";
        case FailureKind::DuplicateArc: return "DuplicateArc";
        case FailureKind::NotSpanning: return "NotSpanning";
        case FailureKind::WrongCycleType: return "WrongCycleType";
        case FailureKind::WrongFactorCount: return "WrongFactorCount";
        case FailureKind::NotOrthogonal: return "NotOrthogonal";
        case FailureKind::WrongShape: return "WrongShape";
    }
    return "?";
}

namespace {

std::string arc_str(const Arc& a) {
    std::ostringstream os;
    os << "(" << a.tail << "," << a.head << ")";
    return os.str();
}

}  // namespace

CertificateReport verify_two_factor(const TwoFactor& f, int n, const CycleType& type) {
    CertificateReport rep;
    std::vector<int> seen(n, 0);
    bool range_ok = true;
    for (const Cycle& c : f.cycles) {
        if (c.size() < 2) {
            rep.fail(FailureKind::WrongShape, "cycle shorter than 2");
            return rep;
        }
        for (Vertex v : c) {
            if (v < 0 || v >= n) {
                range_ok = false;
                continue;
            }
            ++seen[v];
        }
    }
    if (!range_ok) rep.fail(FailureKind::NotSpanning, "vertex outside [0,n)");
    for (int v = 0; v < n; ++v) {
        if (seen[v] == 0)
            rep.fail(FailureKind::NotSpanning, "vertex " + std::to_string(v) + " uncovered");
        else if (seen[v] > 1)
            rep.fail(FailureKind::NotSpanning, "vertex " + std::to_string(v) + " repeated");
    }
    if (cycle_type_of(f) != canonical_type(type))
        rep.fail(FailureKind::WrongCycleType, "cycle lengths do not match requested type");
    return rep;
}

CertificateReport verify_decomposition(const Decomposition& d, const CycleType& type) {
    CertificateReport rep;
    const int n = d.n;
    if (n < 2) {
        rep.fail(FailureKind::WrongFactorCount, "n < 2");
        return rep;
    }
    if (static_cast<int>(d.factors.size()) != n - 1)
        rep.fail(FailureKind::WrongFactorCount,
                 "expected " + std::to_string(n - 1) + " factors, got " +
                     std::to_string(d.factors.size()));
    for (size_t i = 0; i < d.factors.size(); ++i) {
        CertificateReport fr = verify_two_factor(d.factors[i], n, type);
        for (auto& [k, msg] : fr.failures)
            rep.fail(k, "factor " + std::to_string(i) + ": " + msg);
    }
    // Arc multiset must be exactly K*_n, each arc once.
    std::map<Arc, int> count;
    for (const TwoFactor& f : d.factors)
        for (const Arc& a : arcs_of(f)) ++count[a];
    for (const Arc& a : complete_symmetric_arcs(n)) {
        auto it = count.find(a);
        if (it == count.end())
            rep.fail(FailureKind::MissingArc, "arc " + arc_str(a) + " missing");
        else if (it->second > 1)
            rep.fail(FailureKind::DuplicateArc,
                     "arc " + arc_str(a) + " used " + std::to_string(it->second) + " times");
    }
    for (auto& [a, c] : count)
        if (a.tail == a.head || a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
            rep.fail(FailureKind::DuplicateArc, "arc " + arc_str(a) + " outside K*_n");
    return rep;
}

std::vector<Arc> component_arcs(const std::vector<SubComponent>& comps) {
    std::vector<Arc> arcs;
    for (const SubComponent& c : comps) {
        if (c.is_cycle) {
            for (size_t i = 0; i < c.verts.size(); ++i)
                arcs.push_back({c.verts[i], c.verts[(i + 1) % c.verts.size()]});
        } else {
            for (size_t i = 0; i + 1 < c.verts.size(); ++i)
                arcs.push_back({c.verts[i], c.verts[i + 1]});
        }
    }
    return arcs;
}

CertificateReport verify_orthogonal(const std::vector<Arc>& h, int t, const ConnectionSet& s,
                                    const std::vector<ShapeSpec>& shape) {
    CertificateReport rep;
    if (s.t != t) {
        rep.fail(FailureKind::NotOrthogonal, "connection set modulus mismatch");
        return rep;
    }
    // (a) difference multiset equals S exactly.
    std::map<int, int> diff_count;
    for (const Arc& a : h) {
        if (a.tail < 0 || a.tail >= t || a.head < 0 || a.head >= t || a.tail == a.head) {
            rep.fail(FailureKind::NotOrthogonal, "arc " + arc_str(a) + " outside Z_t");
            return rep;
        }
        ++diff_count[arc_difference(a, t)];
    }
    for (int d : s.residues) {
        auto it = diff_count.find(d);
        if (it == diff_count.end())
            rep.fail(FailureKind::NotOrthogonal, "difference " + std::to_string(d) + " missing");
        else if (it->second != 1)
            rep.fail(FailureKind::NotOrthogonal, "difference " + std::to_string(d) + " used " +
                                                     std::to_string(it->second) + " times");
    }
    for (auto& [d, c] : diff_count)
        if (!s.residues.count(d))
            rep.fail(FailureKind::NotOrthogonal, "difference " + std::to_string(d) + " not in S");

    // (b) components recomputed from the raw arcs must match the shape.
    std::vector<int> out(t, -1), in(t, -1);
    for (const Arc& a : h) {
        if (out[a.tail] != -1) {
            rep.fail(FailureKind::WrongShape, "vertex " + std::to_string(a.tail) + " out-degree > 1");
            return rep;
        }
        if (in[a.head] != -1) {
            rep.fail(FailureKind::WrongShape, "vertex " + std::to_string(a.head) + " in-degree > 1");
            return rep;
        }
        out[a.tail] = a.head;
        in[a.head] = a.tail;
    }
    std::vector<ShapeSpec> found;
    std::vector<char> visited(t, 0);
    int touched = 0;
    for (int v = 0; v < t; ++v)
        if (out[v] != -1 || in[v] != -1) ++touched;
    // Paths: start where in-degree is 0 but out-degree is 1.
    for (int v = 0; v < t; ++v) {
        if (in[v] == -1 && out[v] != -1) {
            int len = 0, u = v;
            while (u != -1 && !visited[u]) {
                visited[u] = 1;
                int next = out[u];
                if (next != -1) ++len;
                u = next;
            }
            found.push_back({false, len});
        }
    }
    // Remaining touched vertices lie on cycles.
    for (int v = 0; v < t; ++v) {
        if ((out[v] != -1 || in[v] != -1) && !visited[v]) {
            int len = 0, u = v;
            while (!visited[u]) {
                visited[u] = 1;
                ++len;
                u = out[u];
                if (u == -1) break;  // half-open chain reached again: malformed
            }
            found.push_back({true, len});
        }
    }
    std::vector<ShapeSpec> want;
    int p0 = 0;
    for (const ShapeSpec& sp : shape) {
        if (!sp.is_cycle && sp.len == 0)
            ++p0;
        else
            want.push_back(sp);
    }
    std::sort(found.begin(), found.end());
    std::sort(want.begin(), want.end());
    if (found != want)
        rep.fail(FailureKind::WrongShape, "component shapes do not match spec");
    if (t - touched < p0)
        rep.fail(FailureKind::WrongShape, "not enough isolated vertices for P_0 components");
    return rep;
}

CertificateReport verify_arc_partition(const std::vector<TwoFactor>& factors, int t,
                                       const CycleType& type, const std::vector<Arc>& ground) {
    CertificateReport rep;
    for (size_t i = 0; i < factors.size(); ++i) {
        CertificateReport fr = verify_two_factor(factors[i], t, type);
        for (auto& [k, msg] : fr.failures)
            rep.fail(k, "factor " + std::to_string(i) + ": " + msg);
    }
    std::map<Arc, int> count;
    for (const TwoFactor& f : factors)
        for (const Arc& a : arcs_of(f)) ++count[a];
    std::map<Arc, int> want;
    for (const Arc& a : ground) ++want[a];
    for (auto& [a, c] : want) {
        auto it = count.find(a);
        if (it == count.end() || it->second < c)
            rep.fail(FailureKind::MissingArc, "arc " + arc_str(a) + " missing from partition");
    }
    for (auto& [a, c] : count) {
        auto it = want.find(a);
        if (it == want.end())
            rep.fail(FailureKind::DuplicateArc, "arc " + arc_str(a) + " outside ground set");
        else if (c > it->second)
            rep.fail(FailureKind::DuplicateArc, "arc " + arc_str(a) + " duplicated");
    }
    return rep;
}

}  // namespace opstar
