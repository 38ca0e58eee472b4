#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "isoring/cohomology.hpp"
#include "isoring/invariants.hpp"
#include "isoring/ktheory.hpp"
#include "isoring/lie.hpp"

namespace isoring {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Descriptor parsing (JSON in).
//
// Group descriptor: {"name": "SU(3)"} for any named constructor, or
//   {"product": [descriptor, ...]} and
//   {"central_quotient": {"group": descriptor, "sublattice": [[cols]],
//                         "label": "..."}}.
// Pair descriptor: {"ambient": descriptor, "subgroup": descriptor,
//                   "restriction": [[...]],
//                   "flags": {"sigma_pair": bool,
//                             "n_override": [[[rationals]], ...]}}.
// Matrix-group descriptor: {"degree": n, "generators": [[[rationals]], ...]};
// rationals are JSON integers or strings like "2/3".
// All parsers throw input_error on malformed documents.
// ---------------------------------------------------------------------------
CompactGroup parse_group_descriptor(const json& doc);
GroupPair parse_pair_descriptor(const json& doc);
FiniteMatrixGroup parse_matrix_group_descriptor(const json& doc,
                                                long budget = kDefaultPairBudget);

// ---------------------------------------------------------------------------
// Assembled reports (JSON or text out). Text renderers print Poincare series
// factored and truncated to degree 12; JSON field order is fixed, making
// identical invocations byte-identical.
// ---------------------------------------------------------------------------

struct GroupInfo {
    std::string label;
    int rank = 0;
    long weyl_order = 1;
    Pi1Report pi1;
    std::vector<std::string> character_names;
    std::vector<Int> character_dimensions;
    std::vector<int> borel_degrees;  // cohomological degrees 2*d_i
};
GroupInfo group_info(const CompactGroup& g, long budget = kDefaultPairBudget);

json group_info_json(const GroupInfo& info);
std::string group_info_text(const GroupInfo& info);

// K-theory of the isotropy action; `ordinary` is filled for collapse cases
// and marked absent otherwise.
struct KTheoryDocument {
    std::string ambient_label;
    std::string subgroup_label;
    KTheoryReport report;
    bool has_ordinary = false;
    OrdinaryKTheoryReport ordinary;
};
KTheoryDocument ktheory_document(const GroupPair& pair, long budget = kDefaultPairBudget);

json ktheory_json(const KTheoryDocument& doc);
std::string ktheory_text(const KTheoryDocument& doc);

// Refusal document for `--allow-uncovered`: the hypothesis ladder only.
json classification_json(const std::string& ambient_label, const std::string& subgroup_label,
                         const HypothesisReport& hypotheses);
std::string classification_text(const std::string& ambient_label,
                                const std::string& subgroup_label,
                                const HypothesisReport& hypotheses);

// Formality battery plus, when certified formal, the equivariant cohomology.
struct FormalityDocument {
    std::string ambient_label;
    std::string subgroup_label;
    FormalityReport report;
    bool has_equivariant = false;
    EquivariantCohomology equivariant;
};
FormalityDocument formality_document(const GroupPair& pair, long budget = kDefaultPairBudget);

json formality_json(const FormalityDocument& doc);
std::string formality_text(const FormalityDocument& doc);

// Invariant-theory subcommand reports.
json molien_json(const FiniteMatrixGroup& gamma, const MolienData& data);
std::string molien_text(const FiniteMatrixGroup& gamma, const MolienData& data);
json cst_json(const FiniteMatrixGroup& gamma, const CstReport& report);
std::string cst_text(const FiniteMatrixGroup& gamma, const CstReport& report);
json coinvariants_json(const FiniteMatrixGroup& gamma, const CoinvariantReport& report,
                       bool reflection_group);
std::string coinvariants_text(const FiniteMatrixGroup& gamma, const CoinvariantReport& report,
                              bool reflection_group);

}  // namespace isoring
