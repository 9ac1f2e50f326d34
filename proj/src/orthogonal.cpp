#include "opstar/orthogonal.hpp"

#include <algorithm>

namespace opstar {

namespace {

int cl2(int d) { return (d + 1) / 2; }  // ceil(d/2) for d >= 0
int fl2(int d) { return d / 2; }        // floor(d/2) for d >= 0
int cl4(int d) { return (d + 3) / 4; }  // ceil(d/4) for d >= 0

Arc mk(int i, int j, int t) { return {mod(i, t), mod(j, t)}; }

void pm(std::set<int>& s, int d) {
    s.insert(d);
    s.insert(-d);
}

// Signed connection set for Lemma 6.2.
std::set<int> paths_s_set(int s, int t) {
    std::set<int> r;
    if (s % 2 == 1) {
        for (int d = (s + 1) / 2; d < t - d; ++d) pm(r, d);
        if (t % 2 == 0) r.insert(t / 2);
    } else {
        r.insert(1);
        for (int d = s / 2 + 1; d < t - d; ++d) pm(r, d);
        if (t % 2 == 0) r.insert(t / 2);
    }
    return r;
}

// Signed connection set for Lemma 7.2.
std::set<int> digon_s_set(int s, int t) {
    std::set<int> r;
    if (s % 2 == 1) {
        for (int d = (s + 1) / 2; d <= t / 2 - 1; ++d) pm(r, d);
        r.insert(t / 2);
    } else {
        for (int d = s / 2; d <= t / 2 - 1; ++d) pm(r, d);
    }
    return r;
}

ConnectionSet to_conn(int t, const std::set<int>& sd) {
    return make_connection_set(t, std::vector<int>(sd.begin(), sd.end()));
}

std::set<int> minus(std::set<int> a, const std::set<int>& b) {
    for (int x : b) a.erase(x);
    return a;
}

void append_walk(std::vector<Arc>& arcs, const DirectedPath& p, int t) {
    for (size_t i = 0; i + 1 < p.size(); ++i) arcs.push_back({p[i], p[i + 1]});
    (void)t;
}

std::vector<ShapeSpec> path_shape(int a, int len) {
    std::vector<ShapeSpec> sh(a, ShapeSpec{false, 1});
    sh.push_back({false, len});
    return sh;
}

std::vector<ShapeSpec> digon_shape(int a, int pairs) {
    std::vector<ShapeSpec> sh(a, ShapeSpec{false, 1});
    for (int i = 0; i < pairs; ++i) sh.push_back({true, 2});
    return sh;
}

void gate(const OrthogonalSubdigraph& d, int t, const std::string& who) {
    CertificateReport rep = verify_orthogonal(d.arcs, t, d.s_set, d.shape);
    if (!rep.ok)
        throw OpError(OpError::Code::ConditionFailed,
                      who + " self-check failed [" + d.state.case_id +
                          "]: " + rep.failures.front().second);
}

// ---------------------------------------------------------------------------
// Lemma 6.2, Case 1: t and s both even.
// ---------------------------------------------------------------------------

Arc case1_a(int i, int t) { return mk(i, t / 2 - i + 1, t); }

OrthogonalSubdigraph paths_case1(int s, int t, int a, const std::set<int>& s_all) {
    OrthogonalSubdigraph out;
    CaseworkState& st = out.state;
    std::vector<Arc>& arcs = out.arcs;

    if (a <= (t - s) / 2 - 1) {
        st.case_id = "paths/1.1";
        for (int d = t / 2 - 1; d >= t / 2 - (a - 1); d -= 2) pm(st.t_set, d);
        for (int i = -a / 2 + 1; i <= a / 2; ++i) arcs.push_back(case1_a(i, t));
        st.r_set = minus(minus(s_all, st.t_set), {1});
        int k = -cl4(s + 2);
        append_walk(arcs, walk_P(st.r_set, k, t), t);
        arcs.push_back(mk(k + t / 2, k + t / 2 + 1, t));  // trailing difference 1
        return out;
    }

    const int ap = (t - s) / 4;
    const int d_a = t / 2 - (2 * ap - 1);
    const int d_b = (mod(t - s, 4) == 0) ? (s + 4) / 2 : (s + 2) / 2;
    st.a_prime = ap;
    st.d_a = d_a;
    st.d_b = d_b;
    for (int d = t / 2 - 1; d >= d_a; d -= 2) pm(st.t_prime, d);

    if (a < t - s) {
        const int b = a - 2 * ap;
        st.b = b;
        for (int d = d_b; d <= d_b + b - 2; d += 2) {
            pm(st.r_prime, d);
            arcs.push_back(mk(-cl2(d), fl2(d), t));
            arcs.push_back(mk(t / 2 + fl2(d), t / 2 - cl2(d), t));
        }
        st.r_set = minus(minus(minus(s_all, st.t_prime), st.r_prime), {1});
        if (st.r_set.size() > 1) {
            st.case_id = "paths/1.2";
            for (int i = -ap + 1; i <= ap; ++i) arcs.push_back(case1_a(i, t));
            const int d1 = d_b + b;
            arcs.push_back(mk(-cl2(d1) - 1, -cl2(d1), t));  // leading difference 1
            append_walk(arcs, walk_P(st.r_set, -cl2(d1), t), t);
        } else {
            st.case_id = "paths/1.2|R|=1";
            for (int i = -ap + 2; i <= ap; ++i) arcs.push_back(case1_a(i, t));
            arcs.push_back(mk(-cl2(t / 2), fl2(t / 2), t));  // lone t/2 arc
            // P': the 2-path through y_{-a'+1} absorbing difference 1 and -d_A.
            arcs.push_back(mk(-ap, -ap + 1, t));
            arcs.push_back(case1_a(-ap + 1, t));
        }
        return out;
    }

    st.case_id = "paths/1.3";
    const int b = a - 2 * ap;
    st.b = b;
    for (int i = -ap + 1; i <= ap; ++i) arcs.push_back(case1_a(i, t));
    st.r_prime = minus(minus(s_all, st.t_prime), {1});
    for (int d : st.r_prime) {
        if (d <= 0) continue;
        if (2 * d == t) {
            arcs.push_back(mk(-cl2(d), fl2(d), t));
        } else {
            arcs.push_back(mk(-cl2(d), fl2(d), t));
            arcs.push_back(mk(t / 2 + fl2(d), t / 2 - cl2(d), t));
        }
    }
    arcs.push_back(mk(-ap - 1, -ap, t));  // trailing difference 1
    return out;
}

// ---------------------------------------------------------------------------
// Lemma 6.2, Case 2: t even, s odd (s != 3).
// ---------------------------------------------------------------------------

OrthogonalSubdigraph paths_case2(int s, int t, int a, const std::set<int>& s_all) {
    OrthogonalSubdigraph out;
    CaseworkState& st = out.state;
    std::vector<Arc>& arcs = out.arcs;

    if (a == t - s) {  // Subcase 2.4
        st.case_id = "paths/2.4";
        const int ap = (t - s + 1) / 4;
        st.a_prime = ap;
        st.d_a = t / 2 - (2 * ap - 1);
        for (int d = t / 2 - 1; d >= st.d_a; d -= 2) pm(st.t_prime, d);
        for (int i = -ap; i <= ap - 1; ++i) arcs.push_back(mk(i, t / 2 - i - 1, t));
        st.r_prime = minus(s_all, st.t_prime);
        for (int d : st.r_prime) {
            if (d <= 0) continue;
            arcs.push_back(mk(fl2(d), -cl2(d), t));  // difference -d
            if (2 * d != t) arcs.push_back(mk(t / 2 - cl2(d), t / 2 + fl2(d), t));
        }
        return out;
    }

    if (a >= (t - s + 1) / 2) {  // Subcase 2.3
        const int ap = (t - s + 1) / 4;
        const int d_a = t / 2 - (2 * ap - 1);
        const int d_b = (mod(t - s, 4) == 1) ? (s + 1) / 2 : (s + 3) / 2;
        const int b = a - 2 * ap;
        st.a_prime = ap;
        st.d_a = d_a;
        st.d_b = d_b;
        st.b = b;
        for (int d = t / 2 - 1; d >= d_a; d -= 2) pm(st.t_prime, d);
        for (int i = -ap; i <= ap - 1; ++i) arcs.push_back(mk(i, t / 2 - i - 1, t));
        for (int d = d_b; d <= d_b + b - 1; d += 2) {
            pm(st.r_prime, d);
            arcs.push_back(mk(fl2(d), -cl2(d), t));  // B_{-d}
            if (d != d_b + b - 1)                    // R'' drops the top positive entry
                arcs.push_back(mk(t / 2 - cl2(d + 2), t / 2 + fl2(d - 2), t));  // B_d
        }
        st.r_set = minus(minus(s_all, st.t_prime), st.r_prime);
        if (st.r_set.size() > 1) {
            st.case_id = "paths/2.3";
            const int d1 = d_b + b + 1;
            append_walk(arcs, walk_P(st.r_set, -cl2(d1), t), t);
            // Close with the remaining +(d_b+b-1) arc into B_d territory.
            arcs.push_back(mk(t / 2 - cl2(d1), t / 2 + fl2(d_b + b - 3), t));
        } else {
            st.case_id = "paths/2.3|R|=1";
            // Reconstructed 2-path consuming {t/2, d_b+b-1 = t/2-2}.
            arcs.push_back(mk(t / 2 + fl2(t / 2), t / 2 - cl2(t / 2), t));
            arcs.push_back(mk(t / 2 - cl2(t / 2), t / 2 + fl2(t / 2) - 2, t));
        }
        return out;
    }

    if (a == 1) {  // Subcase 2.2 style (covers (5,1) and all (s,1))
        st.case_id = "paths/2.2(s,1)";
        arcs.push_back(mk(0, t / 2 + 1, t));  // A, difference -(t/2-1)
        pm(st.t_set, t / 2 - 1);
        st.r_set = minus(s_all, st.t_set);
        arcs.push_back(mk(t / 2, -1, t));  // leading +(t/2-1)
        append_walk(arcs, walk_P(st.r_set, -1, t), t);
        return out;
    }

    // Subcase 2.1 (with the (9,3) variant of Subcase 2.2).
    st.case_id = (s == 9 && a == 3) ? "paths/2.2(9,3)" : "paths/2.1";
    for (int d = t / 2 - 1; d >= t / 2 - (a - 2); d -= 2) pm(st.t_set, d);
    st.t_set.insert(-(t / 2 - a));
    for (int i = -1; i >= -(a - 1) / 2; --i) arcs.push_back(mk(i, t / 2 - i - 1, t));
    for (int i = 2; i <= (a - 1) / 2; ++i) arcs.push_back(mk(i, t / 2 - i + 1, t));
    if (s == 9 && a == 3)
        arcs.push_back(mk(t / 2 + 2, 1, t));  // replacement A_1
    else
        arcs.push_back(mk((s - a) / 2 - 1, t / 2 + (s - a) / 2 - 2, t));  // A_1
    arcs.push_back(mk(t / 2 - (a - 1) / 2, (a + 1) / 2, t));              // A_{-(a+1)/2}
    st.r_set = minus(minus(s_all, st.t_set), {t / 2 - a});
    arcs.push_back(mk(t / 2 + (a - 1) / 2, -(a + 1) / 2, t));  // leading +(t/2-a)
    append_walk(arcs, walk_P(st.r_set, -(a + 1) / 2, t), t);
    return out;
}

// ---------------------------------------------------------------------------
// Lemma 6.2, Case 3: t and s both odd.
// ---------------------------------------------------------------------------

Arc case3_a(int i, int t) {
    if (i > 0) return mk(i, (t - 1) / 2 - i, t);
    return mk(i, (t - 1) / 2 - i + 1, t);
}

OrthogonalSubdigraph paths_case3(int s, int t, int a, const std::set<int>& s_all) {
    OrthogonalSubdigraph out;
    CaseworkState& st = out.state;
    std::vector<Arc>& arcs = out.arcs;
    const int h = (t - 1) / 2;

    if (s == 3 && t == 5) {  // pinned smallest instance
        st.case_id = "paths/3.4(3,5)";
        out.arcs = {mk(0, -2, t), mk(-1, 1, t)};
        return out;
    }

    if (a == t - s - 1) {  // Subcase 3.4: an all-1-paths subdigraph
        st.case_id = "paths/3.4";
        const int ap = (t - s - 2 + 3) / 4;  // ceil((t-s-2)/4)
        const int b = 2 * ap + 1;
        st.a_prime = ap;
        st.b = b;
        const int top = (mod(t - s, 4) == 2) ? ap : ap - 1;
        for (int i = -ap; i <= top; ++i) {
            arcs.push_back(mk(i, h - i, t));          // B_i
            arcs.push_back(mk(b + h - i, b + i, t));  // C_i
        }
        return out;
    }

    if (a >= (t - s) / 2) {  // Subcase 3.3
        st.case_id = "paths/3.3";
        const int ap = (t - s - 2) / 4;
        const int d_a = h - 2 * ap;
        const int d_b = (mod(t - s, 4) == 2) ? (s + 3) / 2 : (s + 1) / 2;
        const int b = a - 2 * ap - 1;
        st.a_prime = ap;
        st.d_a = d_a;
        st.d_b = d_b;
        st.b = b;
        st.t_prime.insert(-h);
        for (int d = h - 2; d >= d_a; d -= 2) pm(st.t_prime, d);
        for (int i = -ap; i <= ap; ++i) arcs.push_back(case3_a(i, t));
        for (int d = d_b; d <= d_b + b - 2; d += 2) {
            pm(st.r_prime, d);
            arcs.push_back(mk(fl2(d), -cl2(d), t));              // B_{-d}
            arcs.push_back(mk(h - cl2(d), h + fl2(d), t));       // B_d
        }
        st.r_set = minus(minus(s_all, st.t_prime), st.r_prime);
        append_walk(arcs, walk_P(st.r_set, -cl2(d_b + b), t), t);
        return out;
    }

    // Subcases 3.1 / 3.2.
    const bool special = (s == 9 && a == 3) || ((s == 3 || s == 5) && a == 1);
    st.case_id = special ? "paths/3.2" : "paths/3.1";
    st.t_set.insert(-h);
    for (int d = h - 2; d >= h - (a - 1); d -= 2) pm(st.t_set, d);
    if (s == 9 && a == 3) {
        arcs.push_back(mk(-2, h + 1, t));
        arcs.push_back(mk(-1, h, t));
        arcs.push_back(mk(0, h - 2, t));
    } else if (special) {
        arcs.push_back(mk(h, 0, t));
    } else {
        for (int i = -(a - 1) / 2; i <= (a - 1) / 2; ++i) arcs.push_back(case3_a(i, t));
    }
    st.r_set = minus(s_all, st.t_set);
    append_walk(arcs, walk_P(st.r_set, -cl4(s + 1), t), t);
    return out;
}

// ---------------------------------------------------------------------------
// Lemma 6.2, Case 4: t odd, s even.
// ---------------------------------------------------------------------------

OrthogonalSubdigraph paths_case4(int s, int t, int a, const std::set<int>& s_all) {
    OrthogonalSubdigraph out;
    CaseworkState& st = out.state;
    std::vector<Arc>& arcs = out.arcs;
    const int h = (t - 1) / 2;

    if (t - s == 1) {
        st.case_id = "paths/4(t-s=1)";
        arcs.push_back(mk(0, 1, t));
        return out;
    }

    if (a == 0) {  // Subcase 4.2
        st.case_id = "paths/4.2";
        st.r_set = minus(s_all, {1, -h});
        const int k = -cl4(s + 2);
        append_walk(arcs, walk_P(st.r_set, k, t), t);
        arcs.push_back(mk(h + k, h + k + 1, t));  // difference 1
        arcs.push_back(mk(h + k + 1, k + 1, t));  // difference -(t-1)/2
        return out;
    }

    if (a == t - s - 1) {  // Subcase 4.4
        st.case_id = "paths/4.4";
        const int ap = (t - s - 3 + 3) / 4;  // ceil((t-s-3)/4)
        const int b = 2 * ap + 1;
        st.a_prime = ap;
        st.b = b;
        const int top = (mod(t - s, 4) == 3) ? ap : ap - 1;
        for (int i = -ap; i <= top; ++i) {
            arcs.push_back(mk(i, h - i, t));          // B_i
            arcs.push_back(mk(b + h - i, b + i, t));  // C_i
        }
        arcs.push_back(mk(-ap - 2, -ap - 1, t));  // D_0, difference 1
        return out;
    }

    if (a >= (t - s + 1) / 2) {  // Subcase 4.3
        st.case_id = "paths/4.3";
        const int ap = (t - s - 3) / 4;
        const int d_a = h - 2 * ap;
        const int d_b = (mod(t - s, 4) == 3) ? (s + 4) / 2 : (s + 2) / 2;
        const int b = a - 2 * ap - 2;
        st.a_prime = ap;
        st.d_a = d_a;
        st.d_b = d_b;
        st.b = b;
        st.t_prime.insert(-h);
        for (int d = h - 2; d >= d_a; d -= 2) pm(st.t_prime, d);
        for (int i = -ap; i <= ap; ++i) arcs.push_back(case3_a(i, t));
        for (int d = d_b; d <= d_b + b - 2; d += 2) {
            pm(st.r_prime, d);
            arcs.push_back(mk(fl2(d), -cl2(d), t));
            arcs.push_back(mk(h - cl2(d), h + fl2(d), t));
        }
        st.r_set = minus(minus(minus(s_all, st.t_prime), st.r_prime), {1});
        append_walk(arcs, walk_P(st.r_set, -cl2(d_b + b), t), t);
        arcs.push_back(mk(1 - cl2(d_b), 2 - cl2(d_b), t));  // B_0, difference 1
        return out;
    }

    // Subcase 4.1 (2 <= a <= (t-s-1)/2), with the (6,2) variant.
    st.case_id = (s == 6 && a == 2) ? "paths/4.1(6,2)" : "paths/4.1";
    st.t_set.insert(-h);
    for (int d = h - 2; d >= h - (a - 2); d -= 2) pm(st.t_set, d);
    if (s == 6 && a == 2) {
        arcs.push_back(mk(h + 1, 1, t));  // replacement A'
    } else {
        for (int i = -(a - 2) / 2; i <= (a - 2) / 2; ++i) arcs.push_back(case3_a(i, t));
    }
    st.r_set = minus(minus(s_all, st.t_set), {1});
    const int k = -cl4(s + 2);
    append_walk(arcs, walk_P(st.r_set, k, t), t);
    arcs.push_back(mk(1 + k, 2 + k, t));  // B_0, difference 1
    return out;
}

// ---------------------------------------------------------------------------
// Lemma 7.2 cases.
// ---------------------------------------------------------------------------

void push_digon(std::vector<Arc>& arcs, int i, int j, int t) {
    arcs.push_back(mk(i, j, t));
    arcs.push_back(mk(j, i, t));
}

OrthogonalSubdigraph digons_case1(int s, int t, int a) {
    OrthogonalSubdigraph out;
    CaseworkState& st = out.state;
    std::vector<Arc>& arcs = out.arcs;
    const int d_a = (mod(t - s, 4) == 1) ? (s + 1) / 2 : (s + 3) / 2;
    const int d_b = (s + 1) / 2 + (s + 3) / 2 - d_a;
    st.d_a = d_a;
    st.d_b = d_b;
    for (int d = d_b; d <= t / 2 - 1; d += 2) st.i_set.insert(d);
    for (int d = d_a; d <= t / 2 - 2; d += 2) st.j_set.insert(d);

    if (a <= (t - s - 1) / 2) {  // Subcase 1.1
        st.case_id = "digons/1.1";
        const int c = (a - 1) / 2;
        st.c = c;
        st.t_set.insert(t / 2);
        for (int d = t / 2 - 2; d >= t / 2 - 2 * c; d -= 2) pm(st.t_set, d);
        for (int i = -c; i <= c; ++i) arcs.push_back(mk(i, t / 2 - i, t));
        for (int d : st.i_set) push_digon(arcs, -cl2(d), fl2(d), t);
        for (int d : st.j_set)
            if (!st.t_set.count(d)) push_digon(arcs, t / 2 - cl2(d - 1), t / 2 + fl2(d + 1), t);
        return out;
    }

    // Subcase 1.2
    st.case_id = "digons/1.2";
    const int c = (t - s - 1) / 4;
    const int b = a - (2 * c + 1);
    st.c = c;
    st.b = b;
    for (int i = -c; i <= c; ++i) arcs.push_back(mk(i, t / 2 - i, t));
    int singles = b / 2;
    for (int d : st.i_set) {
        if (singles > 0) {
            --singles;
            arcs.push_back(mk(-cl2(d), fl2(d), t));              // P_d in B_d
            arcs.push_back(mk(t / 2 + fl2(d), t / 2 - cl2(d), t));  // P'_d in E_d
        } else {
            push_digon(arcs, -cl2(d), fl2(d), t);
        }
    }
    return out;
}

OrthogonalSubdigraph digons_case2(int s, int t, int a) {
    OrthogonalSubdigraph out;
    CaseworkState& st = out.state;
    std::vector<Arc>& arcs = out.arcs;
    const int d_a = (mod(t - s, 4) == 2) ? s / 2 : (s + 2) / 2;
    const int d_b = s / 2 + (s + 2) / 2 - d_a;
    st.d_a = d_a;
    st.d_b = d_b;
    for (int d = d_b; d <= t / 2 - 2; d += 2) st.i_set.insert(d);
    for (int d = d_a; d <= t / 2 - 1; d += 2) st.j_set.insert(d);

    if (a <= (t - s + 2) / 2) {  // Subcases 2.1 / 2.2
        st.case_id = (a == 0) ? "digons/2.2" : "digons/2.1";
        const int c = a / 2;
        st.c = c;
        for (int d = t / 2 - 1; d >= t / 2 - (2 * c - 1); d -= 2) pm(st.t_set, d);
        for (int i = -c; i <= c - 1; ++i) arcs.push_back(mk(i, t / 2 - i - 1, t));
        for (int d : st.i_set) push_digon(arcs, -cl2(d), fl2(d), t);
        for (int d : st.j_set)
            if (!st.t_set.count(d)) push_digon(arcs, t / 2 - cl2(d + 1), t / 2 + fl2(d - 1), t);
        return out;
    }

    // Subcase 2.3
    st.case_id = "digons/2.3";
    const int c = (t - s + 2) / 4;
    const int b = a - 2 * c;
    st.c = c;
    st.b = b;
    for (int i = -c; i <= c - 1; ++i) arcs.push_back(mk(i, t / 2 - i - 1, t));
    int singles = b / 2;
    for (int d : st.i_set) {
        if (singles > 0) {
            --singles;
            arcs.push_back(mk(-cl2(d), fl2(d), t));
            arcs.push_back(mk(t / 2 + fl2(d), t / 2 - cl2(d), t));
        } else {
            push_digon(arcs, -cl2(d), fl2(d), t);
        }
    }
    return out;
}

// Directed Hamilton cycle from a single coprime difference.
TwoFactor diff_cycle(int t, int d) {
    Cycle c;
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

// Walks a difference sequence from y_0 and returns the arcs.
std::vector<Arc> walk_diffs(int t, const std::vector<int>& diffs) {
    std::vector<Arc> arcs;
    int v = 0;
    for (int d : diffs) {
        int w = mod(v + d, t);
        arcs.push_back({v, w});
        v = w;
    }
    return arcs;
}

void gate_gadget(const SpecialGadget& g, const std::string& who) {
    std::set<int> all;
    for (int d : g.d.residues) all.insert(d);
    for (int d : g.s_set.residues) all.insert(d);
    if (static_cast<int>(all.size()) != g.t - 1 ||
        all.size() != g.d.residues.size() + g.s_set.residues.size())
        throw OpError(OpError::Code::ConditionFailed, who + ": D and S do not split Z*_t");
    CertificateReport rep =
        verify_arc_partition(g.ct_factors, g.t, {g.t}, circulant_digraph(g.t, g.d));
    if (!rep.ok)
        throw OpError(OpError::Code::ConditionFailed,
                      who + " Ct-factor check failed: " + rep.failures.front().second);
    rep = verify_orthogonal(g.h, g.t, g.s_set, g.shape);
    if (!rep.ok)
        throw OpError(OpError::Code::ConditionFailed,
                      who + " orthogonality check failed: " + rep.failures.front().second);
}

}  // namespace

DirectedPath walk_P(const std::set<int>& r, int k, int t) {
    const int h = t / 2;
    if (t < 2 || !r.count(h))
        throw OpError(OpError::Code::BadForm, "walk_P: R must contain floor(t/2)");
    std::vector<int> ds;
    for (int d : r) {
        if (d == h) continue;
        int m = std::abs(d);
        if (m == 0 || m >= h || !r.count(-d))
            throw OpError(OpError::Code::BadForm, "walk_P: R is not of the form (*)");
        if (d > 0) ds.push_back(d);
    }
    std::sort(ds.begin(), ds.end());
    const int l = static_cast<int>(ds.size());

    std::vector<int> p(l + 1);
    p[0] = k;
    for (int j = 1; j <= l; ++j) p[j] = p[j - 1] + (j % 2 == 1 ? ds[j - 1] : -ds[j - 1]);
    DirectedPath path;
    for (int j = 0; j <= l; ++j) path.push_back(mod(p[j], t));
    for (int j = l; j >= 0; --j) path.push_back(mod(p[j] + h, t));

    std::set<Vertex> seen(path.begin(), path.end());
    if (seen.size() != path.size())
        throw OpError(OpError::Code::CollisionDetected, "walk_P: repeated vertex");
    return path;
}

OrthogonalSubdigraph orthogonal_paths(const OrthogonalRequest& req) {
    const int s = req.s, t = req.t, a = req.a;
    if (s < 2 || s >= t || (t % 2 == 0 && s == 3))
        throw OpError(OpError::Code::HypothesisViolated, "orthogonal_paths: bad (s,t)");
    if (a < 0 || a > s / 3 || a > 2 * (t / 2) - s || (a - s) % 2 != 0)
        throw OpError(OpError::Code::HypothesisViolated, "orthogonal_paths: bad a");

    std::set<int> s_all = paths_s_set(s, t);
    OrthogonalSubdigraph out;
    if (t % 2 == 0 && s % 2 == 0)
        out = paths_case1(s, t, a, s_all);
    else if (t % 2 == 0)
        out = paths_case2(s, t, a, s_all);
    else if (s % 2 == 1)
        out = paths_case3(s, t, a, s_all);
    else
        out = paths_case4(s, t, a, s_all);

    out.s_set = to_conn(t, s_all);
    out.shape = path_shape(a, t - s - a);
    gate(out, t, "orthogonal_paths");
    return out;
}

OrthogonalSubdigraph orthogonal_digons(const OrthogonalRequest& req) {
    const int s = req.s, t = req.t, a = req.a;
    if (t % 2 != 0 || s < 2 || s >= t)
        throw OpError(OpError::Code::HypothesisViolated, "orthogonal_digons: bad (s,t)");
    if (a < 0 || a > s / 3 || a > t - s || (a - s) % 2 != 0)
        throw OpError(OpError::Code::HypothesisViolated, "orthogonal_digons: bad a");

    std::set<int> s_all = digon_s_set(s, t);
    OrthogonalSubdigraph out =
        (s % 2 == 1) ? digons_case1(s, t, a) : digons_case2(s, t, a);
    out.s_set = to_conn(t, s_all);
    out.shape = digon_shape(a, (t - s - a) / 2);
    gate(out, t, "orthogonal_digons");
    return out;
}

SpecialGadget special_3_t(int t) {
    if (t < 4 || t % 2 != 0)
        throw OpError(OpError::Code::HypothesisViolated, "special_3_t: t must be even, >= 4");
    SpecialGadget g;
    g.t = t;
    g.shape = {{false, 1}, {false, t - 4}};

    if (t == 4) {
        g.d = make_connection_set(4, {1, -1});
        g.ct_factors = {diff_cycle(4, 1), diff_cycle(4, 3)};
        g.s_set = make_connection_set(4, {2});
        g.h = {{0, 2}};
        g.shape = {{false, 1}, {false, 0}};
    } else if (t == 6) {
        g.d = make_connection_set(6, {1, -1});
        g.ct_factors = {diff_cycle(6, 1), diff_cycle(6, 5)};
        g.s_set = make_connection_set(6, {2, -2, 3});
        g.h = {{3, 5}, {1, 4}, {4, 2}};
    } else if (t % 4 == 0) {
        g.d = make_connection_set(t, {-1, t / 2 - 1});
        g.ct_factors = {diff_cycle(t, t - 1), diff_cycle(t, t / 2 - 1)};
        std::set<int> sset;
        sset.insert(1);
        for (int d = 2; d <= t / 2 - 2; ++d) pm(sset, d);
        sset.insert(-(t / 2 - 1));
        sset.insert(t / 2);
        g.s_set = to_conn(t, sset);
        std::vector<int> diffs;
        for (int m = 2; m <= t / 2 - 2; ++m) diffs.push_back(m % 2 == 0 ? m : -m);
        diffs.push_back(-(t / 2 - 1));
        for (int m = t / 2 - 2; m >= 2; --m) diffs.push_back(m % 2 == 0 ? -m : m);
        diffs.push_back(t / 2);
        g.h = walk_diffs(t, diffs);
        g.h.push_back({mod(t / 4 + 1, t), mod(t / 4 + 2, t)});
    } else {
        g.d = make_connection_set(t, {t / 2 - 2, -(t / 2 - 2)});
        g.ct_factors = {diff_cycle(t, t / 2 - 2), diff_cycle(t, t - (t / 2 - 2))};
        std::set<int> sset;
        for (int d = 1; d <= t / 2 - 1; ++d)
            if (d != t / 2 - 2) pm(sset, d);
        sset.insert(t / 2);
        g.s_set = to_conn(t, sset);
        std::vector<int> diffs;
        for (int m = 2; m <= t / 2 - 3; ++m) diffs.push_back(m % 2 == 0 ? m : -m);
        diffs.push_back(-(t / 2 - 1));
        diffs.push_back(-1);
        for (int m = t / 2 - 3; m >= 2; --m) diffs.push_back(m % 2 == 0 ? -m : m);
        diffs.push_back(1);
        diffs.push_back(t / 2);
        g.h = walk_diffs(t, diffs);
        g.h.push_back({mod(-(t - 6) / 4, t), mod((t + 2) / 4, t)});
    }
    gate_gadget(g, "special_3_t");
    return g;
}

SpecialGadget special_22_t(int t) {
    if (t < 8 || t % 2 != 0)
        throw OpError(OpError::Code::HypothesisViolated, "special_22_t: t must be even, >= 8");
    SpecialGadget g;
    g.t = t;
    g.shape = {{false, t - 4}};

    std::vector<int> diffs;
    if (t % 4 == 0) {
        g.d = make_connection_set(t, {-1, t / 2 - 1, -(t / 2 - 1)});
        g.ct_factors = {diff_cycle(t, t - 1), diff_cycle(t, t / 2 - 1),
                        diff_cycle(t, t - (t / 2 - 1))};
        std::set<int> sset;
        sset.insert(1);
        for (int d = 2; d <= t / 2 - 2; ++d) pm(sset, d);
        sset.insert(t / 2);
        g.s_set = to_conn(t, sset);
        for (int m = 2; m <= t / 2 - 2; ++m) diffs.push_back(m % 2 == 0 ? m : -m);
        diffs.push_back(t / 2);
        for (int m = t / 2 - 2; m >= 2; --m) diffs.push_back(m % 2 == 0 ? -m : m);
        diffs.push_back(1);
    } else {
        g.d = make_connection_set(t, {-1, t / 2 - 2, -(t / 2 - 2)});
        g.ct_factors = {diff_cycle(t, t - 1), diff_cycle(t, t / 2 - 2),
                        diff_cycle(t, t - (t / 2 - 2))};
        std::set<int> sset;
        sset.insert(1);
        for (int d = 2; d <= t / 2 - 1; ++d)
            if (d != t / 2 - 2) pm(sset, d);
        sset.insert(t / 2);
        g.s_set = to_conn(t, sset);
        for (int m = 2; m <= t / 2 - 3; ++m) diffs.push_back(m % 2 == 0 ? m : -m);
        diffs.push_back(-(t / 2 - 1));
        diffs.push_back(t / 2);
        diffs.push_back(t / 2 - 1);
        for (int m = t / 2 - 3; m >= 2; --m) diffs.push_back(m % 2 == 0 ? -m : m);
        diffs.push_back(1);
    }
    g.h = walk_diffs(t, diffs);
    gate_gadget(g, "special_22_t");
    return g;
}

}  // namespace opstar
