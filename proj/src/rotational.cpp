#include "opstar/rotational.hpp"

#include <map>
#include <sstream>

namespace opstar {

BaseQDifference base_q_difference(const Arc& a, int n, int q) {
    if (q < 1 || (n - 1) % q != 0)
        throw OpError(OpError::Code::BadModulus, "q must divide n-1");
    BaseQDifference bd;
    if (a.tail == kInfinity && a.head == kInfinity)
        throw OpError(OpError::Code::BadInstance, "loop at u_inf");
    if (a.head == kInfinity) {
        bd.kind = BaseQDifference::Kind::PlusInf;
        bd.r = mod(a.tail, q);
    } else if (a.tail == kInfinity) {
        bd.kind = BaseQDifference::Kind::MinusInf;
        bd.r = mod(a.head, q);
    } else {
        bd.kind = BaseQDifference::Kind::Finite;
        bd.d = mod(a.head - a.tail, n - 1);
        bd.r = mod(a.tail, q);
        if (bd.d == 0) throw OpError(OpError::Code::BadInstance, "zero difference (loop)");
    }
    return bd;
}

namespace {

std::string diff_str(const BaseQDifference& b) {
    std::ostringstream os;
    switch (b.kind) {
        case BaseQDifference::Kind::Finite: os << b.d; break;
        case BaseQDifference::Kind::PlusInf: os << "inf"; break;
        case BaseQDifference::Kind::MinusInf: os << "-inf"; break;
    }
    os << "_" << b.r;
    return os.str();
}

}  // namespace

CertificateReport validate_starter_set(const StarterSet& ss) {
    CertificateReport rep;
    const int n = ss.n, q = ss.q;
    if (q < 1 || (n - 1) % q != 0) {
        rep.fail(FailureKind::WrongShape, "q does not divide n-1");
        return rep;
    }
    if (static_cast<int>(ss.starters.size()) != q) {
        rep.fail(FailureKind::WrongFactorCount, "need exactly q starters");
        return rep;
    }
    // Each starter must be a (type)-factor on {u_0..u_{n-2}, u_inf}.
    for (size_t j = 0; j < ss.starters.size(); ++j) {
        TwoFactor norm = normalize_infinity(ss.starters[j], n);
        CertificateReport fr = verify_two_factor(norm, n, ss.type);
        for (auto& [k, msg] : fr.failures)
            rep.fail(k, "starter " + std::to_string(j) + ": " + msg);
    }
    if (!rep.ok) return rep;
    // Jointly: exactly one arc of each base-q difference.
    std::map<BaseQDifference, int> count;
    for (const TwoFactor& f : ss.starters)
        for (const Arc& a : arcs_of(f)) ++count[base_q_difference(a, n, q)];
    auto check = [&](const BaseQDifference& b) {
        auto it = count.find(b);
        if (it == count.end())
            rep.fail(FailureKind::MissingArc, "base-q difference " + diff_str(b) + " missing");
        else if (it->second != 1)
            rep.fail(FailureKind::DuplicateArc, "base-q difference " + diff_str(b) + " used " +
                                                    std::to_string(it->second) + " times");
    };
    for (int r = 0; r < q; ++r) {
        for (int d = 1; d < n - 1; ++d)
            check({BaseQDifference::Kind::Finite, d, r});
        check({BaseQDifference::Kind::PlusInf, 0, r});
        check({BaseQDifference::Kind::MinusInf, 0, r});
    }
    return rep;
}

Decomposition expand_starters(const StarterSet& ss) {
    CertificateReport rep = validate_starter_set(ss);
    if (!rep.ok) {
        std::string why = rep.failures.empty() ? "invalid starter" : rep.failures.front().second;
        throw OpError(OpError::Code::BadStarter, "BadStarter: " + why);
    }
    const int n = ss.n, q = ss.q;
    Decomposition dec;
    dec.n = n;
    for (int i = 0; i < (n - 1) / q; ++i)
        for (int j = 0; j < q; ++j)
            dec.factors.push_back(normalize_infinity(rotate(ss.starters[j], q * i, n - 1), n));
    return dec;
}

}  // namespace opstar
