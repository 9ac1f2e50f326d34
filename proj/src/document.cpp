#include "opstar/document.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace opstar {

namespace {

using nlohmann::json;

Cycle rotate_to_min(const Cycle& c) {
    auto it = std::min_element(c.begin(), c.end());
    Cycle out(it, c.end());
    out.insert(out.end(), c.begin(), it);
    return out;
}

TwoFactor canonical_factor(const TwoFactor& f) {
    TwoFactor out;
    out.n = f.n;
    for (const Cycle& c : f.cycles) out.cycles.push_back(rotate_to_min(c));
    std::sort(out.cycles.begin(), out.cycles.end(),
              [](const Cycle& a, const Cycle& b) { return a.front() < b.front(); });
    return out;
}

}  // namespace

SolutionDocument make_document(const SolveOutcome& outcome) {
    if (outcome.status != SolveOutcome::Status::Solved)
        throw OpError(OpError::Code::HypothesisViolated,
                      "only solved outcomes have solution documents");
    SolutionDocument doc;
    doc.n = outcome.dec.n;
    doc.strategy = outcome.trace;
    doc.cycle_type =
        outcome.trace.empty() ? CycleType{} : canonical_type(outcome.trace.front().type);
    for (const TwoFactor& f : outcome.dec.factors) doc.factors.push_back(canonical_factor(f));
    doc.certified = verify_decomposition({doc.factors, doc.n}, doc.cycle_type).ok;
    return doc;
}

Decomposition document_decomposition(const SolutionDocument& doc) {
    return {doc.factors, doc.n};
}

std::string to_json(const SolutionDocument& doc) {
    json j;
    j["format_version"] = doc.version;
    j["n"] = doc.n;
    j["cycle_type"] = doc.cycle_type;
    json strat = json::array();
    for (const TraceStep& st : doc.strategy)
        strat.push_back({{"rule", st.rule}, {"type", st.type}, {"params", st.params}});
    j["strategy"] = strat;
    json factors = json::array();
    for (const TwoFactor& f : doc.factors) {
        json cycles = json::array();
        for (const Cycle& c : f.cycles) cycles.push_back(c);
        factors.push_back(cycles);
    }
    j["factors"] = factors;
    j["certificate"] = {{"verified", doc.certified},
                        {"factor_count", doc.factors.size()},
                        {"arc_count", static_cast<long long>(doc.n) * (doc.n - 1)}};
    return j.dump(2) + "\n";
}

SolutionDocument from_json(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object())
        throw OpError(OpError::Code::BadForm, "not a valid JSON document");
    SolutionDocument doc;
    try {
        doc.version = j.at("format_version").get<int>();
        doc.n = j.at("n").get<int>();
        doc.cycle_type = j.at("cycle_type").get<CycleType>();
        for (const json& st : j.at("strategy"))
            doc.strategy.push_back({st.at("rule").get<std::string>(),
                                    st.at("type").get<CycleType>(),
                                    st.at("params").get<std::vector<long long>>()});
        for (const json& jf : j.at("factors")) {
            TwoFactor f;
            f.n = doc.n;
            for (const json& jc : jf) f.cycles.push_back(jc.get<Cycle>());
            doc.factors.push_back(std::move(f));
        }
        doc.certified = j.at("certificate").at("verified").get<bool>();
    } catch (const json::exception& e) {
        throw OpError(OpError::Code::BadForm, std::string("malformed document: ") + e.what());
    }
    if (doc.version != 1)
        throw OpError(OpError::Code::BadForm, "unsupported document version");
    return doc;
}

std::string to_text(const SolutionDocument& doc) {
    std::ostringstream oss;
    oss << "OP*(";
    for (size_t i = 0; i < doc.cycle_type.size(); ++i)
        oss << (i ? "," : "") << doc.cycle_type[i];
    oss << ") on " << doc.n << " vertices, " << doc.factors.size() << " factors\n";
    if (!doc.strategy.empty()) oss << "strategy: " << to_string(doc.strategy) << "\n";
    for (size_t i = 0; i < doc.factors.size(); ++i) {
        oss << "F_" << i << ": ";
        const TwoFactor& f = doc.factors[i];
        for (size_t c = 0; c < f.cycles.size(); ++c) {
            if (c) oss << " ∪ ";
            for (Vertex v : f.cycles[c]) oss << "u_" << v << ' ';
            oss << "u_" << f.cycles[c].front();
        }
        oss << '\n';
    }
    return oss.str();
}

}  // namespace opstar
