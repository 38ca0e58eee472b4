#pragma once

#include <string>
#include <vector>

#include "isoring/groebner.hpp"
#include "isoring/lie.hpp"

namespace isoring {

// Worked example pairs with independently known answers. Each entry carries a
// ready-to-run pair descriptor; `catalog_run` recomputes the pair's reports
// and compares them against the expected values recorded here.
struct CatalogEntry {
    std::string name;
    std::string summary;
    GroupPair pair;
};

// The listed catalog, in a fixed order.
const std::vector<CatalogEntry>& catalog_entries();

// Resolve a catalog name to its pair. Besides the listed entries, the alias
// "GG" names the identity pair (the rank-one special unitary group acting on
// a point); it is runnable but kept off the list. Throws input_error on
// unknown names.
GroupPair catalog_pair(const std::string& name);

struct CatalogCheck {
    std::string description;
    bool passed = false;
};

struct CatalogRunResult {
    std::string name;
    bool passed = false;  // conjunction of all checks
    std::vector<CatalogCheck> checks;
};

// Recompute every report for the named entry and compare against its known
// answers. `window` is the exponent window for rank-one fixed-point
// comparisons.
CatalogRunResult catalog_run(const std::string& name, long budget = kDefaultPairBudget,
                             int window = 3);

}  // namespace isoring
