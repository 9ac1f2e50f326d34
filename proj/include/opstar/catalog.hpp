// Hard-coded starter catalog: the Lemma 3.3 starters, the Appendix A.1/A.2
// single- and triple-starter solutions, and the explicit full decompositions
// (OP*(4,8), OP*(3,3,6), OP*(3,4,5)).  Stored as structured vertex data; a
// transcription test expands and certifies every entry.
#ifndef OPSTAR_CATALOG_HPP
#define OPSTAR_CATALOG_HPP

#include <optional>
#include <variant>

#include "opstar/rotational.hpp"

namespace opstar {

struct CatalogEntry {
    CycleType type;
    // Either a starter set to expand, or an explicit (already full) solution.
    std::variant<StarterSet, Decomposition> data;
};

// Returns the paper's data for exactly the listed types; nullopt otherwise.
std::optional<CatalogEntry> catalog_lookup(const CycleType& type);

// All catalog types in canonical order (for `catalog --list` and tests).
std::vector<CycleType> catalog_types();

// Expands a catalog entry into a full decomposition (normalized labels).
Decomposition catalog_expand(const CatalogEntry& e);

}  // namespace opstar

#endif  // OPSTAR_CATALOG_HPP
