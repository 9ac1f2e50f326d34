#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opstar/document.hpp"

using namespace opstar;

namespace {

SolutionDocument doc_for(const CycleType& type) {
    SolveOutcome o = solve(type);
    REQUIRE(o.status == SolveOutcome::Status::Solved);
    return make_document(o);
}

}  // namespace

TEST_CASE("documents are canonical: min-vertex cycle starts, cycles ordered") {
    SolutionDocument doc = doc_for({2, 3, 4});
    for (const TwoFactor& f : doc.factors) {
        int prev = -1;
        for (const Cycle& c : f.cycles) {
            CHECK(c.front() == *std::min_element(c.begin(), c.end()));
            CHECK(c.front() > prev);
            prev = c.front();
        }
    }
    CHECK(doc.certified);
    CHECK(doc.n == 9);
    CHECK(doc.cycle_type == CycleType{2, 3, 4});
}

TEST_CASE("identical inputs and seed produce byte-identical JSON") {
    SolutionDocument a = doc_for({4, 4});
    SolutionDocument b = doc_for({4, 4});
    CHECK(to_json(a) == to_json(b));
}

TEST_CASE("JSON round-trips losslessly") {
    SolutionDocument doc = doc_for({2, 3, 6});
    const std::string bytes = to_json(doc);
    SolutionDocument back = from_json(bytes);
    CHECK(back.n == doc.n);
    CHECK(back.cycle_type == doc.cycle_type);
    CHECK(back.factors.size() == doc.factors.size());
    for (size_t i = 0; i < doc.factors.size(); ++i)
        CHECK(back.factors[i].cycles == doc.factors[i].cycles);
    CHECK(back.strategy.size() == doc.strategy.size());
    CHECK(to_json(back) == bytes);
    CHECK(verify_decomposition(document_decomposition(back), back.cycle_type).ok);
}

TEST_CASE("malformed documents raise BadForm") {
    for (const char* bad : {"", "{", "[1,2]", "{\"n\": 5}",
                            "{\"format_version\": 2, \"n\": 2, \"cycle_type\": [2], "
                            "\"strategy\": [], \"factors\": [], "
                            "\"certificate\": {\"verified\": true}}"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(from_json(bad), OpError);
        try {
            from_json(bad);
        } catch (const OpError& e) {
            CHECK(e.code == OpError::Code::BadForm);
        }
    }
}

TEST_CASE("non-solved outcomes have no document") {
    SolveOutcome o = solve({3, 3});
    CHECK_THROWS_AS(make_document(o), OpError);
}

TEST_CASE("a tampered document fails verification") {
    SolutionDocument doc = doc_for({2, 3, 4});
    doc.factors[0].cycles[0][0] = doc.factors[0].cycles[0][1];  // duplicate vertex
    CertificateReport rep = verify_decomposition(document_decomposition(doc), doc.cycle_type);
    CHECK(!rep.ok);
}

TEST_CASE("text rendering shows the type, factors, and closed walks") {
    SolutionDocument doc = doc_for({2, 3, 4});
    const std::string text = to_text(doc);
    CHECK(text.find("OP*(2,3,4) on 9 vertices, 8 factors") != std::string::npos);
    CHECK(text.find("F_0:") != std::string::npos);
    CHECK(text.find("F_7:") != std::string::npos);
    CHECK(text.find("∪") != std::string::npos);
    CHECK(text.find("u_0") != std::string::npos);
}
