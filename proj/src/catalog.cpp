#include "opstar/catalog.hpp"

#include <map>

namespace opstar {

namespace {

constexpr int I = kInfinity;  // u_inf in starter data

TwoFactor factor(int n, std::vector<Cycle> cycles) {
    TwoFactor f;
    f.n = n;
    f.cycles = std::move(cycles);
    return f;
}

CatalogEntry starter_entry(CycleType type, int n, int q, std::vector<std::vector<Cycle>> starters) {
    StarterSet ss;
    ss.n = n;
    ss.q = q;
    ss.type = canonical_type(type);
    for (auto& cycles : starters) ss.starters.push_back(factor(n, std::move(cycles)));
    return CatalogEntry{ss.type, std::move(ss)};
}

CatalogEntry explicit_entry(CycleType type, int n, std::vector<std::vector<Cycle>> factors) {
    Decomposition dec;
    dec.n = n;
    for (auto& cycles : factors)
        dec.factors.push_back(normalize_infinity(factor(n, std::move(cycles)), n));
    return CatalogEntry{canonical_type(type), std::move(dec)};
}

std::map<CycleType, CatalogEntry> build_catalog() {
    std::map<CycleType, CatalogEntry> cat;
    auto add = [&cat](CatalogEntry e) { cat.emplace(e.type, std::move(e)); };

    // ---- Lemma 3.3: single starters (q = 1) ----
    add(starter_entry({4, 5}, 9, 1, {{{0, 1, 5, 3}, {2, 4, 7, 6, I}}}));
    add(starter_entry({2, 2, 2, 4}, 10, 1, {{{0, I}, {1, 3}, {5, 6}, {2, 7, 4, 8}}}));
    add(starter_entry({2, 4, 6}, 12, 1, {{{0, I}, {3, 7, 9, 8}, {1, 2, 5, 10, 6, 4}}}));
    add(starter_entry({2, 3, 3}, 8, 1, {{{0, I}, {1, 2, 4}, {6, 5, 3}}}));
    add(starter_entry({2, 2, 3, 3}, 10, 1, {{{0, I}, {2, 7}, {1, 3, 4}, {5, 8, 6}}}));
    add(starter_entry({2, 2, 2, 3, 3}, 12, 1,
                      {{{0, I}, {1, 4}, {5, 6}, {3, 10, 8}, {2, 7, 9}}}));
    add(starter_entry({2, 2, 2, 2, 3, 3}, 14, 1,
                      {{{0, I}, {6, 7}, {1, 5}, {2, 12}, {3, 10, 8}, {4, 9, 11}}}));
    add(starter_entry({2, 2, 2, 2, 2, 3, 3}, 16, 1,
                      {{{0, I}, {4, 8}, {7, 12}, {3, 6}, {9, 11}, {1, 10, 2}, {5, 13, 14}}}));
    add(starter_entry({2, 2, 6}, 10, 1, {{{0, I}, {1, 6}, {2, 3, 5, 8, 7, 4}}}));
    add(starter_entry({2, 2, 2, 6}, 12, 1, {{{0, I}, {1, 6}, {7, 10}, {2, 3, 5, 9, 8, 4}}}));
    add(starter_entry({2, 2, 2, 2, 6}, 14, 1,
                      {{{0, I}, {1, 6}, {3, 9}, {12, 2}, {4, 5, 7, 11, 10, 8}}}));

    // ---- Lemma 3.3: OP*(4,6), three starters (q = 3) ----
    add(starter_entry({4, 6}, 10, 3,
                      {{{1, 5, 8, 6}, {0, 2, 4, 3, I, 7}},
                       {{2, 7, 3, 6}, {0, 8, 5, 4, 1, I}},
                       {{0, 7, 1, 8}, {2, 6, 3, 4, 5, I}}}));

    // ---- Lemma 3.3: OP*(4,8), explicit solution without symmetry ----
    add(explicit_entry({4, 8}, 12,
                       {{{3, 10, 4, I}, {0, 2, 9, 5, 1, 7, 6, 8}},
                        {{1, 4, 7, 3}, {0, I, 5, 9, 2, 10, 8, 6}},
                        {{0, 7, 5, 3}, {1, 2, I, 9, 10, 6, 4, 8}},
                        {{3, 8, 4, 6}, {0, 5, 10, 2, 1, 9, I, 7}},
                        {{0, 3, I, 1}, {2, 6, 9, 8, 7, 10, 5, 4}},
                        {{0, 10, 3, 9}, {1, 5, 8, I, 6, 7, 2, 4}},
                        {{0, 8, 10, I}, {1, 3, 4, 5, 6, 2, 7, 9}},
                        {{3, 5, 7, 8}, {0, 9, 4, 10, 1, 6, I, 2}},
                        {{4, 9, 7, I}, {0, 1, 8, 5, 2, 3, 6, 10}},
                        {{2, 5, I, 8}, {0, 6, 1, 10, 9, 3, 7, 4}},
                        {{1, I, 10, 7}, {0, 4, 3, 2, 8, 9, 6, 5}}}));

    // ---- Appendix A.1: single starters ----
    add(starter_entry({2, 3, 4}, 9, 1, {{{1, 7}, {0, 4, I}, {2, 3, 6, 5}}}));
    add(starter_entry({2, 3, 5}, 10, 1, {{{0, I}, {2, 3, 5}, {1, 6, 4, 8, 7}}}));
    add(starter_entry({2, 4, 4}, 10, 1, {{{0, I}, {1, 7, 5, 6}, {2, 4, 3, 8}}}));
    add(starter_entry({2, 4, 5}, 11, 1, {{{1, 2}, {3, I, 8, 6}, {0, 4, 7, 9, 5}}}));
    add(starter_entry({3, 3, 5}, 11, 1, {{{0, I, 5}, {3, 4, 6}, {1, 9, 2, 8, 7}}}));
    add(starter_entry({2, 2, 3, 4}, 11, 1, {{{1, 9}, {2, 8}, {0, I, 5}, {3, 4, 7, 6}}}));
    add(starter_entry({2, 3, 3, 3}, 11, 1, {{{3, 7}, {0, I, 5}, {1, 2, 4}, {6, 9, 8}}}));
    add(starter_entry({2, 5, 5}, 12, 1, {{{0, I}, {1, 8, 2, 4, 3}, {5, 9, 6, 7, 10}}}));
    add(starter_entry({2, 2, 3, 5}, 12, 1,
                      {{{0, I}, {5, 6}, {2, 7, 4}, {1, 8, 10, 3, 9}}}));
    add(starter_entry({2, 3, 3, 4}, 12, 1,
                      {{{0, I}, {1, 5, 2}, {4, 10, 8}, {3, 6, 7, 9}}}));
    add(starter_entry({2, 5, 6}, 13, 1,
                      {{{3, 6}, {0, 7, 5, 11, 1}, {2, 10, I, 4, 8, 9}}}));
    add(starter_entry({2, 2, 3, 6}, 13, 1,
                      {{{5, 7}, {10, 11}, {1, 4, 8}, {0, I, 6, 2, 9, 3}}}));
    add(starter_entry({2, 2, 4, 5}, 13, 1,
                      {{{0, 11}, {1, 5}, {2, 7, 10, 4}, {3, I, 9, 6, 8}}}));
    add(starter_entry({2, 3, 3, 5}, 13, 1,
                      {{{2, 4}, {0, 1, 7}, {3, 10, 6}, {5, 9, 8, 11, I}}}));
    add(starter_entry({2, 3, 4, 4}, 13, 1,
                      {{{6, 9}, {1, 8, 2}, {0, 10, 3, 4}, {5, 7, 11, I}}}));
    add(starter_entry({2, 2, 2, 3, 4}, 13, 1,
                      {{{1, 10}, {4, 11}, {5, 6}, {3, 7, 9}, {0, 8, I, 2}}}));
    add(starter_entry({2, 2, 3, 3, 3}, 13, 1,
                      {{{0, 5}, {4, 6}, {1, 10, 2}, {3, 9, I}, {7, 8, 11}}}));

    // ---- Appendix A.2: OP*(3,3,4), three starters (q = 3) ----
    add(starter_entry({3, 3, 4}, 10, 3,
                      {{{0, 5, 2}, {1, I, 3}, {4, 6, 8, 7}},
                       {{0, 3, 4}, {5, 6, I}, {1, 8, 2, 7}},
                       {{2, 4, 3}, {7, 8, I}, {0, 6, 1, 5}}}));

    // ---- Appendix A.3: explicit solutions without symmetry ----
    add(explicit_entry({3, 3, 6}, 12,
                       {{{3, I, 10}, {4, 6, 7}, {0, 8, 9, 2, 5, 1}},
                        {{1, 2, 10}, {3, 6, 8}, {0, 4, 7, 9, I, 5}},
                        {{1, 10, 4}, {7, I, 8}, {0, 6, 2, 9, 5, 3}},
                        {{0, 10, 9}, {7, 8, I}, {1, 5, 4, 2, 6, 3}},
                        {{1, 6, I}, {5, 9, 7}, {0, 3, 2, 8, 4, 10}},
                        {{4, 5, I}, {3, 10, 7}, {0, 2, 1, 9, 8, 6}},
                        {{2, 7, 10}, {4, 9, 6}, {0, 1, I, 3, 5, 8}},
                        {{2, 3, 7}, {5, 10, 8}, {0, I, 6, 9, 1, 4}},
                        {{3, 9, 4}, {5, 6, 10}, {0, 7, 1, 8, 2, I}},
                        {{1, 3, 8}, {2, 4, I}, {0, 9, 10, 6, 5, 7}},
                        {{0, 5, 2}, {1, 7, 6}, {3, 4, 8, 10, I, 9}}}));
    add(explicit_entry({3, 4, 5}, 12,
                       {{{9, 10, I}, {3, 7, 4, 5}, {0, 6, 8, 1, 2}},
                        {{7, 9, I}, {0, 10, 3, 8}, {1, 4, 6, 5, 2}},
                        {{2, 7, 10}, {1, I, 4, 9}, {0, 8, 6, 3, 5}},
                        {{1, 9, 4}, {2, 10, 8, 7}, {0, 5, 6, I, 3}},
                        {{0, 2, I}, {5, 9, 8, 10}, {1, 6, 4, 7, 3}},
                        {{5, 10, 9}, {2, 3, 4, 8}, {0, I, 6, 1, 7}},
                        {{2, 8, 4}, {0, 3, 9, 6}, {1, 5, 7, I, 10}},
                        {{2, 9, 3}, {1, 8, 5, I}, {0, 7, 6, 10, 4}},
                        {{3, I, 8}, {2, 4, 10, 6}, {0, 9, 7, 5, 1}},
                        {{1, 10, 7}, {2, 5, 8, I}, {0, 4, 3, 6, 9}},
                        {{4, I, 5}, {0, 1, 3, 10}, {2, 6, 7, 8, 9}}}));
    return cat;
}

const std::map<CycleType, CatalogEntry>& catalog() {
    static const std::map<CycleType, CatalogEntry> cat = build_catalog();
    return cat;
}

}  // namespace

std::optional<CatalogEntry> catalog_lookup(const CycleType& type) {
    auto it = catalog().find(canonical_type(type));
    if (it == catalog().end()) return std::nullopt;
    return it->second;
}

std::vector<CycleType> catalog_types() {
    std::vector<CycleType> types;
    for (auto& [t, e] : catalog()) types.push_back(t);
    return types;
}

Decomposition catalog_expand(const CatalogEntry& e) {
    if (std::holds_alternative<StarterSet>(e.data))
        return expand_starters(std::get<StarterSet>(e.data));
    return std::get<Decomposition>(e.data);
}

}  // namespace opstar
