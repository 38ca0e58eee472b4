#include "isoring/reports.hpp"

#include <sstream>

#include "isoring/rep_ring.hpp"

namespace isoring {

namespace {

constexpr int kSeriesTruncation = 12;

Rat parse_rational(const json& v) {
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
    if (v.is_string()) {
        try {
            Rat q(v.get<std::string>());
            q.canonicalize();
            return q;
        } catch (const std::invalid_argument&) {
            throw input_error("descriptor: cannot parse rational '" + v.get<std::string>() +
                              "'");
        }
    }
    throw input_error("descriptor: rational entries must be integers or 'p/q' strings");
}

Int parse_integer(const json& v) {
    if (v.is_number_integer()) return Int(static_cast<long>(v.get<long long>()));
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw input_error("descriptor: cannot parse integer '" + v.get<std::string>() + "'");
        }
    }
    throw input_error("descriptor: integer entries must be numbers or strings");
}

ZMatrix parse_int_matrix(const json& v, const std::string& what) {
    if (!v.is_array() || v.empty())
        throw input_error("descriptor: " + what + " must be a nonempty array of rows");
    ZMatrix out;
    std::size_t width = 0;
    for (const auto& row : v) {
        if (!row.is_array() || row.empty())
            throw input_error("descriptor: " + what + " rows must be nonempty arrays");
        if (out.empty())
            width = row.size();
        else if (row.size() != width)
            throw input_error("descriptor: " + what + " rows have unequal lengths");
        std::vector<Int> r;
        for (const auto& e : row) r.push_back(parse_integer(e));
        out.push_back(std::move(r));
    }
    return out;
}

QMatrix parse_rat_matrix(const json& v, const std::string& what) {
    if (!v.is_array() || v.empty())
        throw input_error("descriptor: " + what + " must be a nonempty array of rows");
    QMatrix out;
    std::size_t width = 0;
    for (const auto& row : v) {
        if (!row.is_array() || row.empty())
            throw input_error("descriptor: " + what + " rows must be nonempty arrays");
        if (out.empty())
            width = row.size();
        else if (row.size() != width)
            throw input_error("descriptor: " + what + " rows have unequal lengths");
        std::vector<Rat> r;
        for (const auto& e : row) r.push_back(parse_rational(e));
        out.push_back(std::move(r));
    }
    return out;
}

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

json rat_to_json(const Rat& v) {
    if (v.get_den() == 1 && v.get_num().fits_slong_p()) return json(v.get_num().get_si());
    return json(v.get_str());
}

json int_list(const std::vector<Int>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(int_to_json(x));
    return a;
}

json series_json(const PoincareSeries& s) {
    json out;
    out["factored"] = s.to_string();
    json coeffs = json::array();
    for (const auto& c : s.truncate(kSeriesTruncation)) coeffs.push_back(rat_to_json(c));
    out["coefficients_to_degree_12"] = coeffs;
    return out;
}

json verdict_json(const std::optional<bool>& v) {
    if (!v) return json("undecided");
    return json(*v ? "true" : "false");
}

std::string verdict_text(const std::optional<bool>& v) {
    if (!v) return "undecided";
    return *v ? "true" : "false";
}

json presentation_json(const PresentedRing& ring) {
    json out;
    out["variables"] = ring.pres.var_names;
    json degs = json::array();
    for (long d : ring.pres.degrees) degs.push_back(d);
    out["degrees"] = degs;
    json rels = json::array();
    for (const auto& g : ring.pres.gens) rels.push_back(poly_to_string(g, ring.pres.var_names));
    out["relations"] = rels;
    return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += xs[i];
    }
    return out;
}

std::string join_ints(const std::vector<Int>& xs) {
    std::vector<std::string> parts;
    for (const auto& x : xs) parts.push_back(x.get_str());
    return join(parts, ", ");
}

std::string or_none(const std::string& s) { return s.empty() ? "(none)" : s; }

std::string relations_line(const PresentedRing& ring) {
    std::vector<std::string> rels;
    for (const auto& g : ring.pres.gens) rels.push_back(poly_to_string(g, ring.pres.var_names));
    return or_none(join(rels, ", "));
}

std::string optional_dim(const std::optional<long>& v) {
    return v ? std::to_string(*v) : "infinite";
}

}  // namespace

CompactGroup parse_group_descriptor(const json& doc) {
    if (!doc.is_object()) throw input_error("descriptor: group must be a JSON object");
    if (doc.contains("name")) {
        if (!doc["name"].is_string())
            throw input_error("descriptor: group name must be a string");
        return make_named(doc["name"].get<std::string>());
    }
    if (doc.contains("product")) {
        const json& parts = doc["product"];
        if (!parts.is_array() || parts.size() < 2)
            throw input_error("descriptor: product needs at least two factor descriptors");
        CompactGroup g = parse_group_descriptor(parts[0]);
        for (std::size_t i = 1; i < parts.size(); ++i)
            g = make_product(g, parse_group_descriptor(parts[i]));
        return g;
    }
    if (doc.contains("central_quotient")) {
        const json& q = doc["central_quotient"];
        if (!q.is_object() || !q.contains("group") || !q.contains("sublattice"))
            throw input_error(
                "descriptor: central_quotient needs 'group' and 'sublattice' fields");
        CompactGroup base = parse_group_descriptor(q["group"]);
        ZMatrix cols = parse_int_matrix(q["sublattice"], "sublattice");
        std::string label = q.value("label", base.label + "/Z");
        return make_central_quotient(base, cols, label);
    }
    throw input_error(
        "descriptor: group object needs 'name', 'product', or 'central_quotient'");
}

GroupPair parse_pair_descriptor(const json& doc) {
    if (!doc.is_object()) throw input_error("descriptor: pair must be a JSON object");
    for (const char* key : {"ambient", "subgroup", "restriction"})
        if (!doc.contains(key))
            throw input_error(std::string("descriptor: pair is missing '") + key + "'");
    GroupPair pair;
    pair.ambient = parse_group_descriptor(doc["ambient"]);
    pair.subgroup = parse_group_descriptor(doc["subgroup"]);
    pair.restriction = parse_int_matrix(doc["restriction"], "restriction");
    if (doc.contains("flags")) {
        const json& flags = doc["flags"];
        if (!flags.is_object()) throw input_error("descriptor: flags must be an object");
        pair.sigma_pair = flags.value("sigma_pair", false);
        if (flags.contains("n_override")) {
            std::vector<QMatrix> gens;
            if (!flags["n_override"].is_array())
                throw input_error("descriptor: n_override must be an array of matrices");
            for (const auto& m : flags["n_override"])
                gens.push_back(parse_rat_matrix(m, "n_override matrix"));
            pair.n_override = std::move(gens);
        }
    }
    return pair;
}

FiniteMatrixGroup parse_matrix_group_descriptor(const json& doc, long budget) {
    if (!doc.is_object() || !doc.contains("degree") || !doc.contains("generators"))
        throw input_error("descriptor: matrix group needs 'degree' and 'generators'");
    if (!doc["degree"].is_number_integer())
        throw input_error("descriptor: degree must be an integer");
    int degree = doc["degree"].get<int>();
    if (degree <= 0) throw input_error("descriptor: degree must be positive");
    std::vector<QMatrix> gens;
    if (!doc["generators"].is_array())
        throw input_error("descriptor: generators must be an array of matrices");
    for (const auto& m : doc["generators"]) {
        QMatrix g = parse_rat_matrix(m, "generator");
        if (g.size() != static_cast<std::size_t>(degree) ||
            g[0].size() != static_cast<std::size_t>(degree))
            throw input_error("descriptor: generator shape does not match the degree");
        gens.push_back(std::move(g));
    }
    return close_matrix_group(degree, gens, budget);
}

GroupInfo group_info(const CompactGroup& g, long budget) {
    validate_group(g);
    GroupInfo info;
    info.label = g.label;
    info.rank = g.rank;
    info.weyl_order = static_cast<long>(weyl_elements(g, budget).size());
    info.pi1 = pi1_report(g);
    RepRingPresentation ring = representation_ring(g, budget);
    for (std::size_t i = 0; i < ring.gen_names.size(); ++i) {
        info.character_names.push_back(ring.gen_names[i]);
        Rat dim(0);
        for (const auto& [m, c] : ring.gen_chars[i].poly.terms) dim += c;
        info.character_dimensions.push_back(dim.get_num());
    }
    info.borel_degrees = borel_cohomology(g, budget).cohomological_degrees;
    return info;
}

json group_info_json(const GroupInfo& info) {
    json out;
    out["label"] = info.label;
    out["rank"] = info.rank;
    out["weyl_order"] = info.weyl_order;
    json pi1;
    pi1["free_abelian"] = info.pi1.free_abelian;
    pi1["free_rank"] = info.pi1.free_rank;
    pi1["invariant_factors"] = int_list(info.pi1.invariant_factors);
    pi1["torsion_primes"] = int_list(info.pi1.torsion_primes);
    out["fundamental_group"] = pi1;
    json chars = json::array();
    for (std::size_t i = 0; i < info.character_names.size(); ++i) {
        json c;
        c["name"] = info.character_names[i];
        c["dimension"] = int_to_json(info.character_dimensions[i]);
        chars.push_back(c);
    }
    out["characters"] = chars;
    out["classifying_space_degrees"] = info.borel_degrees;
    return out;
}

std::string group_info_text(const GroupInfo& info) {
    std::ostringstream os;
    os << "group " << info.label << "\n";
    os << "  rank: " << info.rank << "\n";
    os << "  weyl order: " << info.weyl_order << "\n";
    if (info.pi1.free_abelian) {
        os << "  fundamental group: free abelian of rank " << info.pi1.free_rank << "\n";
    } else {
        os << "  fundamental group: not free abelian (invariant factors "
           << join_ints(info.pi1.invariant_factors) << "; torsion primes "
           << join_ints(info.pi1.torsion_primes) << ")\n";
    }
    os << "  characters:";
    for (std::size_t i = 0; i < info.character_names.size(); ++i)
        os << (i ? "," : "") << " " << info.character_names[i] << " (dim "
           << info.character_dimensions[i].get_str() << ")";
    os << "\n";
    os << "  classifying-space degrees:";
    for (std::size_t i = 0; i < info.borel_degrees.size(); ++i)
        os << (i ? "," : "") << " " << info.borel_degrees[i];
    os << "\n";
    return os.str();
}

KTheoryDocument ktheory_document(const GroupPair& pair, long budget) {
    KTheoryDocument doc;
    doc.ambient_label = pair.ambient.label;
    doc.subgroup_label = pair.subgroup.label;
    doc.report = assemble_ktheory(pair, budget);
    PairCase kind = doc.report.hypotheses.kind;
    if (kind == PairCase::surjective || kind == PairCase::equal_rank ||
        kind == PairCase::sigma_pair) {
        doc.ordinary = ordinary_ktheory(pair, budget);
        doc.has_ordinary = true;
    }
    return doc;
}

namespace {

json hypotheses_json(const HypothesisReport& h) {
    json out;
    out["case"] = pair_case_name(h.kind);
    out["pi1_free_abelian"] = h.pi1_free_abelian;
    out["pi1_certificate"] = h.pi1_certificate;
    out["reason"] = h.reason;
    out["inverted_primes"] = int_list(h.inverted_primes);
    out["notes"] = h.notes;
    return out;
}

void hypotheses_text(std::ostringstream& os, const HypothesisReport& h) {
    os << "  case: " << pair_case_name(h.kind) << "\n";
    os << "  " << h.pi1_certificate << "\n";
    if (!h.reason.empty()) os << "  reason: " << h.reason << "\n";
    if (!h.inverted_primes.empty())
        os << "  inverted primes: " << join_ints(h.inverted_primes) << "\n";
    for (const auto& note : h.notes) os << "  note: " << note << "\n";
}

}  // namespace

json ktheory_json(const KTheoryDocument& doc) {
    json out;
    out["report"] = "ktheory";
    out["ambient"] = doc.ambient_label;
    out["subgroup"] = doc.subgroup_label;
    out["hypotheses"] = hypotheses_json(doc.report.hypotheses);
    json pres = presentation_json(doc.report.tor0);
    pres["even_generators"] = doc.report.even_names;
    pres["odd_generators"] = doc.report.odd_names;
    pres["exterior_rank"] = doc.report.exterior_rank;
    pres["fiber_dimension"] =
        doc.report.fiber ? json(*doc.report.fiber) : json(nullptr);
    pres["predicted_rank"] =
        doc.report.predicted_rank ? json(*doc.report.predicted_rank) : json(nullptr);
    pres["provenance"] = doc.report.provenance;
    out["presentation"] = pres;
    if (doc.has_ordinary) {
        json ord = presentation_json(doc.ordinary.ring);
        ord["exterior_rank"] = doc.ordinary.exterior_rank;
        ord["base_fiber"] =
            doc.ordinary.base_fiber ? json(*doc.ordinary.base_fiber) : json(nullptr);
        ord["total_rank"] =
            doc.ordinary.total_rank ? json(*doc.ordinary.total_rank) : json(nullptr);
        out["ordinary"] = ord;
    } else {
        out["ordinary"] = nullptr;
    }
    return out;
}

std::string ktheory_text(const KTheoryDocument& doc) {
    std::ostringstream os;
    os << "equivariant K-theory of (" << doc.ambient_label << ", " << doc.subgroup_label
       << ")\n";
    hypotheses_text(os, doc.report.hypotheses);
    os << "  even generators: " << or_none(join(doc.report.even_names, ", ")) << "\n";
    os << "  odd generators: " << or_none(join(doc.report.odd_names, ", ")) << "\n";
    os << "  relations: " << relations_line(doc.report.tor0) << "\n";
    os << "  exterior rank: " << doc.report.exterior_rank << "\n";
    os << "  fiber dimension: " << optional_dim(doc.report.fiber);
    if (doc.report.predicted_rank) os << " (predicted " << *doc.report.predicted_rank << ")";
    os << "\n";
    os << "  provenance: " << doc.report.provenance << "\n";
    if (doc.has_ordinary) {
        os << "  ordinary K-theory: base fiber " << optional_dim(doc.ordinary.base_fiber)
           << ", total rank " << optional_dim(doc.ordinary.total_rank) << "\n";
    }
    return os.str();
}

json classification_json(const std::string& ambient_label, const std::string& subgroup_label,
                         const HypothesisReport& hypotheses) {
    json out;
    out["report"] = "classification";
    out["ambient"] = ambient_label;
    out["subgroup"] = subgroup_label;
    out["hypotheses"] = hypotheses_json(hypotheses);
    return out;
}

std::string classification_text(const std::string& ambient_label,
                                const std::string& subgroup_label,
                                const HypothesisReport& hypotheses) {
    std::ostringstream os;
    os << "classification of (" << ambient_label << ", " << subgroup_label << ")\n";
    hypotheses_text(os, hypotheses);
    return os.str();
}

FormalityDocument formality_document(const GroupPair& pair, long budget) {
    FormalityDocument doc;
    doc.ambient_label = pair.ambient.label;
    doc.subgroup_label = pair.subgroup.label;
    doc.report = st_battery(pair, budget);
    if (doc.report.isotropy_formal && *doc.report.isotropy_formal) {
        doc.equivariant = equivariant_cohomology(pair, budget);
        doc.has_equivariant = true;
    }
    return doc;
}

namespace {

json condition_json(const StCondition& c) {
    json out;
    out["verdict"] = verdict_json(c.verdict);
    out["certificate"] = c.certificate;
    return out;
}

}  // namespace

json formality_json(const FormalityDocument& doc) {
    json out;
    out["report"] = "formality";
    out["ambient"] = doc.ambient_label;
    out["subgroup"] = doc.subgroup_label;
    out["rank_difference"] = doc.report.rank_difference;
    json normalizer;
    normalizer["order"] = doc.report.normalizer_order;
    normalizer["source"] = doc.report.normalizer_source;
    out["normalizer"] = normalizer;
    json conditions;
    conditions["dimension_formula"] = condition_json(doc.report.dimension_formula);
    conditions["quotient_and_image"] = condition_json(doc.report.quotient_and_image);
    conditions["indecomposable_action"] = condition_json(doc.report.indecomposable_action);
    conditions["tangent_action"] = condition_json(doc.report.tangent_action);
    out["conditions"] = conditions;
    out["isotropy_formal"] = verdict_json(doc.report.isotropy_formal);
    out["complete_intersection"] = verdict_json(doc.report.ci_flag);
    out["total_dimension"] =
        doc.report.total_dimension ? json(*doc.report.total_dimension) : json(nullptr);
    if (doc.has_equivariant) {
        json eq = presentation_json(doc.equivariant.ring);
        eq["first_copy"] = doc.equivariant.first_names;
        eq["second_copy"] = doc.equivariant.second_names;
        eq["exterior_degrees"] = doc.equivariant.exterior_degrees;
        eq["series"] = series_json(doc.equivariant.series);
        eq["redundancy_verified"] = doc.equivariant.redundancy_verified;
        out["equivariant_cohomology"] = eq;
    } else {
        out["equivariant_cohomology"] = nullptr;
    }
    return out;
}

std::string formality_text(const FormalityDocument& doc) {
    std::ostringstream os;
    os << "isotropy formality of (" << doc.ambient_label << ", " << doc.subgroup_label
       << ")\n";
    os << "  rank difference: " << doc.report.rank_difference << "\n";
    os << "  normalizer component group: order " << doc.report.normalizer_order << " ("
       << doc.report.normalizer_source << ")\n";
    auto line = [&os](const char* name, const StCondition& c) {
        os << "  " << name << ": " << verdict_text(c.verdict);
        if (!c.certificate.empty()) os << " -- " << c.certificate;
        os << "\n";
    };
    line("dimension formula", doc.report.dimension_formula);
    line("quotient and image", doc.report.quotient_and_image);
    line("indecomposable action", doc.report.indecomposable_action);
    line("tangent action", doc.report.tangent_action);
    os << "  isotropy formal: " << verdict_text(doc.report.isotropy_formal) << "\n";
    os << "  complete intersection: " << verdict_text(doc.report.ci_flag) << "\n";
    if (doc.report.total_dimension)
        os << "  total dimension: " << *doc.report.total_dimension << "\n";
    if (doc.has_equivariant) {
        os << "  equivariant cohomology:\n";
        os << "    even generators: "
           << join(doc.equivariant.first_names, ", ") << " | "
           << join(doc.equivariant.second_names, ", ") << "\n";
        os << "    relations: " << relations_line(doc.equivariant.ring) << "\n";
        os << "    exterior degrees:";
        if (doc.equivariant.exterior_degrees.empty()) os << " (none)";
        for (std::size_t i = 0; i < doc.equivariant.exterior_degrees.size(); ++i)
            os << (i ? "," : "") << " " << doc.equivariant.exterior_degrees[i];
        os << "\n";
        os << "    series: "
           << doc.equivariant.series.render_with_truncation(kSeriesTruncation) << "\n";
        os << "    redundancy verified: "
           << (doc.equivariant.redundancy_verified ? "yes" : "no") << "\n";
    }
    return os.str();
}

json molien_json(const FiniteMatrixGroup& gamma, const MolienData& data) {
    json out;
    out["report"] = "molien";
    out["degree"] = gamma.degree;
    out["order"] = gamma.order();
    out["series"] = series_json(data.series);
    out["polynomial_invariants"] = data.polynomial_flag;
    out["degrees"] = data.degrees;
    return out;
}

std::string molien_text(const FiniteMatrixGroup& gamma, const MolienData& data) {
    std::ostringstream os;
    os << "molien series of a degree-" << gamma.degree << " group of order " << gamma.order()
       << "\n";
    os << "  series: " << data.series.render_with_truncation(kSeriesTruncation) << "\n";
    os << "  polynomial invariant ring: " << (data.polynomial_flag ? "yes" : "no") << "\n";
    if (data.polynomial_flag) {
        os << "  invariant degrees:";
        for (std::size_t i = 0; i < data.degrees.size(); ++i)
            os << (i ? "," : "") << " " << data.degrees[i];
        os << "\n";
    }
    return os.str();
}

json cst_json(const FiniteMatrixGroup& gamma, const CstReport& report) {
    json out;
    out["report"] = "cst";
    out["degree"] = gamma.degree;
    out["order"] = gamma.order();
    out["reflection_group"] = report.reflection_group;
    out["molien_polynomial"] = report.molien_polynomial;
    out["coinvariants_equal_order"] = report.coinvariants_equal_order;
    out["verdict"] = report.verdict;
    out["degrees"] = report.degrees;
    return out;
}

std::string cst_text(const FiniteMatrixGroup& gamma, const CstReport& report) {
    std::ostringstream os;
    os << "polynomiality verdict for a degree-" << gamma.degree << " group of order "
       << gamma.order() << "\n";
    os << "  reflection group: " << (report.reflection_group ? "true" : "false") << "\n";
    os << "  molien series polynomial: " << (report.molien_polynomial ? "true" : "false")
       << "\n";
    os << "  coinvariants equal order: "
       << (report.coinvariants_equal_order ? "true" : "false") << "\n";
    os << "  verdict: " << (report.verdict ? "polynomial invariants" : "not polynomial")
       << "\n";
    if (report.verdict) {
        os << "  invariant degrees:";
        for (std::size_t i = 0; i < report.degrees.size(); ++i)
            os << (i ? "," : "") << " " << report.degrees[i];
        os << "\n";
    }
    return os.str();
}

json coinvariants_json(const FiniteMatrixGroup& gamma, const CoinvariantReport& report,
                       bool reflection_group) {
    json out;
    out["report"] = "coinvariants";
    out["degree"] = gamma.degree;
    out["order"] = gamma.order();
    out["dimension"] = report.dimension;
    out["exact"] = report.exact;
    out["degree_bound"] = report.degree_bound;
    out["trichotomy"] = report.trichotomy;
    out["reflection_group"] = reflection_group;
    return out;
}

std::string coinvariants_text(const FiniteMatrixGroup& gamma, const CoinvariantReport& report,
                              bool reflection_group) {
    std::ostringstream os;
    os << "coinvariant algebra of a degree-" << gamma.degree << " group of order "
       << gamma.order() << "\n";
    os << "  dimension: " << report.dimension << (report.exact ? "" : " (lower bound)")
       << "\n";
    os << "  group order: " << gamma.order() << " (" << report.trichotomy << ")\n";
    os << "  reflection group: " << (reflection_group ? "true" : "false") << "\n";
    return os.str();
}

}  // namespace isoring
