// Solution documents: a canonical, versioned JSON serialization of solved
// instances (plus a paper-style text rendering).  Canonical form: sorted
// cycle type, factors in strategy order, every cycle rotated to start at its
// minimum vertex, cycles within a factor listed by minimum vertex.
#ifndef OPSTAR_DOCUMENT_HPP
#define OPSTAR_DOCUMENT_HPP

#include <string>

#include "opstar/solver.hpp"

namespace opstar {

struct SolutionDocument {
    int version = 1;
    int n = 0;
    CycleType cycle_type;
    StrategyTrace strategy;
    std::vector<TwoFactor> factors;
    bool certified = false;  // certificate summary: checker verdict at emission
};

// Builds the canonical document for a Solved outcome; re-runs the checker
// and records its verdict.  Throws HypothesisViolated for non-Solved input.
SolutionDocument make_document(const SolveOutcome& outcome);

// Canonical JSON bytes: identical documents serialize identically.
std::string to_json(const SolutionDocument& doc);

// Parses a document; throws OpError(BadForm) on malformed input.
SolutionDocument from_json(const std::string& text);

// Paper-style text: one factor per line, cycles as closed vertex walks
// joined by " u ".
std::string to_text(const SolutionDocument& doc);

Decomposition document_decomposition(const SolutionDocument& doc);

}  // namespace opstar

#endif  // OPSTAR_DOCUMENT_HPP
