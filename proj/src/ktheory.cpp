#include "isoring/ktheory.hpp"

#include <algorithm>
#include <set>

namespace isoring {

namespace {

Rat character_dimension(const Character& c) {
    Rat total(0);
    for (const auto& [m, coeff] : c.poly.terms) total += coeff;
    return total;
}

ExactPoly single_variable(int nvars, int index) {
    Monomial m(nvars, 0);
    m[index] = 1;
    return ExactPoly::monomial(m, Rat(1));
}

// Inject an m-variable polynomial into a 2m-variable ring at the given offset.
ExactPoly inject(const ExactPoly& p, int total, int offset) {
    ZMatrix map(total, std::vector<Int>(p.nvars, 0));
    for (int i = 0; i < p.nvars; ++i) map[offset + i][i] = 1;
    return p.apply_lattice_map(map);
}

ExactPoly derivative(const ExactPoly& p, int var) {
    ExactPoly out(p.nvars);
    for (const auto& [m, c] : p.terms) {
        if (m[var] <= 0) continue;
        Monomial n = m;
        n[var] -= 1;
        out.add_term(n, c * Rat(m[var]));
    }
    return out;
}

void merge_primes(std::vector<Int>& into, const std::vector<Int>& extra) {
    for (const auto& p : extra)
        if (std::find(into.begin(), into.end(), p) == into.end()) into.push_back(p);
    std::sort(into.begin(), into.end());
}

std::string collapse_note() {
    return "spectral collapse and edge injectivity follow from the structural case";
}

std::vector<Int> apply_int_matrix(const ZMatrix& w, const std::vector<Int>& v) {
    std::vector<Int> out(w.size(), Int(0));
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t k = 0; k < v.size(); ++k) out[i] += w[i][k] * v[k];
    return out;
}

}  // namespace

std::string pair_case_name(PairCase c) {
    switch (c) {
        case PairCase::surjective: return "surjective";
        case PairCase::equal_rank: return "equal_rank";
        case PairCase::sigma_pair: return "sigma_pair";
        case PairCase::image_polynomial_free: return "image_polynomial_free";
        case PairCase::not_covered: return "not_covered";
    }
    return "not_covered";
}

HypothesisReport classify_pair(const GroupPair& pair, long budget) {
    PairValidation val = validate_pair(pair);
    if (!val.valid) throw input_error("invalid pair: " + val.failure);

    HypothesisReport rep;
    Pi1Report pi1 = pi1_report(pair.ambient);
    rep.pi1_free_abelian = pi1.free_abelian;
    {
        std::string cert = "fundamental group of " + pair.ambient.label + ": free rank " +
                           std::to_string(pi1.free_rank);
        if (!pi1.invariant_factors.empty()) {
            cert += ", finite invariant factors";
            for (const auto& f : pi1.invariant_factors) cert += " " + f.get_str();
        }
        rep.pi1_certificate = cert;
    }
    if (!pi1.free_abelian) {
        rep.kind = PairCase::not_covered;
        std::string factors;
        for (const auto& f : pi1.invariant_factors) factors += (factors.empty() ? "" : ", ") + f.get_str();
        rep.reason = "the fundamental group of " + pair.ambient.label +
                     " has torsion (invariant factors " + factors +
                     "), so the doubled-coefficient sequence need not converge";
        return rep;
    }

    RepRingPresentation ambient = representation_ring(pair.ambient, budget);
    RepRingPresentation subgroup = representation_ring(pair.subgroup, budget);

    SurjectivityReport sur = is_restriction_surjective(pair, ambient, subgroup, budget);
    if (sur.surjective) {
        rep.kind = PairCase::surjective;
        rep.inverted_primes = sur.inverted_primes;
        rep.notes.push_back("restriction is surjective with preimage certificates for every subgroup generator");
        if (!sur.inverted_primes.empty())
            rep.notes.push_back("surjectivity holds after inverting the recorded primes");
        rep.notes.push_back(collapse_note());
        return rep;
    }
    rep.notes.push_back("restriction is not surjective: no preimage for " + sur.failing_generator);

    if (pair.subgroup.rank == pair.ambient.rank) {
        rep.kind = PairCase::equal_rank;
        rep.notes.push_back("subgroup has full rank; the doubled product needs no exterior factor");
        rep.notes.push_back(collapse_note());
        return rep;
    }

    if (pair.sigma_pair) {
        rep.kind = PairCase::sigma_pair;
        rep.notes.push_back("declared fixed-point pair of a finite-order automorphism (input flag)");
        if (pi1.free_rank != 0)
            rep.notes.push_back("ambient group is not simply connected: conclusion holds rationally");
        rep.notes.push_back(collapse_note());
        return rep;
    }

    // General case: is the image of the restriction a polynomial ring over
    // which the subgroup ring is a finite (hence free) module?
    RestrictionMap res = restriction_map(pair, ambient, subgroup, budget);
    merge_primes(rep.inverted_primes, res.inverted_primes);

    std::vector<ExactPoly> images = res.images;
    std::vector<std::string> image_names = ambient.gen_names;
    // Drop images expressible in the remaining ones (later generators first).
    for (int j = static_cast<int>(images.size()) - 1; j >= 0; --j) {
        if (images.size() <= 1) break;
        std::vector<ExactPoly> others;
        std::vector<std::string> tags;
        for (std::size_t k = 0; k < images.size(); ++k)
            if (static_cast<int>(k) != j) {
                others.push_back(images[k]);
                tags.push_back("g" + std::to_string(k + 1));
            }
        RingMapImage probe = ring_map_image(subgroup.relations, others, tags, budget);
        if (probe.membership(images[j])) {
            images.erase(images.begin() + j);
            image_names.erase(image_names.begin() + j);
        }
    }
    std::vector<std::string> tags;
    for (std::size_t k = 0; k < images.size(); ++k) tags.push_back("g" + std::to_string(k + 1));
    RingMapImage machine = ring_map_image(subgroup.relations, images, tags, budget);

    std::string basis_note = "independent restricted generators:";
    for (const auto& n : image_names) basis_note += " " + n;
    rep.notes.push_back(basis_note);

    if (machine.image_pres.gens.empty()) {
        // The image is the free polynomial ring on the surviving images. The
        // subgroup ring is finite over it when the elimination basis is monic
        // in every subgroup variable; finite over a regular base makes a
        // regular module ring free.
        int n_target = machine.n_target;
        std::vector<std::string> missing;
        for (int v = 0; v < n_target; ++v) {
            bool monic = false;
            for (const auto& g : machine.elim_gb.basis) {
                Monomial lm = g.leading_monomial(machine.elim_gb.order);
                bool pure = lm[v] > 0;
                for (int i = 0; pure && i < static_cast<int>(lm.size()); ++i)
                    if (i != v && lm[i] != 0) pure = false;
                if (pure) {
                    monic = true;
                    break;
                }
            }
            if (!monic) missing.push_back(subgroup.relations.var_names[v]);
        }
        if (missing.empty()) {
            rep.kind = PairCase::image_polynomial_free;
            rep.notes.push_back(
                "image is a polynomial ring and the subgroup ring is module-finite over it "
                "(monic elimination relations in every subgroup generator), hence free");
            rep.notes.push_back(collapse_note());
            return rep;
        }
        rep.kind = PairCase::not_covered;
        std::string names;
        for (const auto& n : missing) names += (names.empty() ? "" : ", ") + n;
        rep.reason = "could not certify the subgroup ring as a finite module over the image of "
                     "the restriction (no monic elimination relation for " + names + ")";
        return rep;
    }

    PresentedRing image_ring = PresentedRing::make(machine.image_pres, budget);
    PresentedRing subgroup_ring_q = PresentedRing::make(subgroup.relations, budget);
    int dim_image = krull_dimension(image_ring);
    int dim_sub = krull_dimension(subgroup_ring_q);
    if (dim_image != dim_sub) {
        rep.kind = PairCase::not_covered;
        rep.reason = "the subgroup ring has dimension " + std::to_string(dim_sub) +
                     " but the image of the restriction has dimension " + std::to_string(dim_image) +
                     ", so it is not even a finite module over the image";
        return rep;
    }
    if (machine.image_pres.gens.size() == 1) {
        // Hypersurface image: a singular point certifies the image is not
        // regular, and a free finite extension would descend regularity.
        const ExactPoly& f = machine.image_pres.gens[0];
        IdealPresentation jac;
        jac.var_names = machine.tag_names;
        jac.degrees.assign(machine.n_tags, 1);
        jac.order = MonomialOrder::make_grevlex(machine.n_tags);
        jac.gens.push_back(f);
        for (int v = 0; v < machine.n_tags; ++v) {
            ExactPoly d = derivative(f, v);
            if (!d.terms.empty()) jac.gens.push_back(d);
        }
        PresentedRing jring = PresentedRing::make(jac, budget);
        ExactPoly one = ExactPoly::constant(machine.n_tags, Rat(1));
        if (!jring.reduce(one).terms.empty()) {
            rep.kind = PairCase::not_covered;
            rep.reason = "the image of the restriction is a singular hypersurface (" +
                         poly_to_string(f, machine.tag_names) +
                         " with vanishing partials at a common point), so the subgroup ring "
                         "could not possibly be free over the image";
            rep.notes.push_back("a free finite extension would force the image to be regular");
            return rep;
        }
    }
    rep.kind = PairCase::not_covered;
    rep.reason = "the image of the restriction is not presented as a polynomial ring and no "
                 "failure certificate applies; refusing rather than guessing";
    return rep;
}

Tor0Data tor0_presentation(const GroupPair& pair, long budget) {
    PairValidation val = validate_pair(pair);
    if (!val.valid) throw input_error("invalid pair: " + val.failure);

    Tor0Data t;
    t.ambient_ring = representation_ring(pair.ambient, budget);
    t.subgroup_ring = representation_ring(pair.subgroup, budget);
    t.restriction = restriction_map(pair, t.ambient_ring, t.subgroup_ring, budget);

    int m = static_cast<int>(t.subgroup_ring.gen_names.size());
    IdealPresentation pres;
    for (const auto& n : t.subgroup_ring.gen_names) pres.var_names.push_back(n);
    for (const auto& n : t.subgroup_ring.gen_names) pres.var_names.push_back(n + "p");
    pres.degrees.assign(2 * m, 1);
    pres.order = MonomialOrder::make_grevlex(2 * m);
    for (const auto& rel : t.subgroup_ring.relations.gens) {
        pres.gens.push_back(inject(rel, 2 * m, 0));
        pres.gens.push_back(inject(rel, 2 * m, m));
    }
    for (const auto& img : t.restriction.images) {
        ExactPoly diff = inject(img, 2 * m, 0) - inject(img, 2 * m, m);
        if (!diff.terms.empty()) pres.gens.push_back(std::move(diff));
    }

    t.ring = PresentedRing::make(std::move(pres), budget);
    t.first_names.assign(t.ring.pres.var_names.begin(), t.ring.pres.var_names.begin() + m);
    t.second_names.assign(t.ring.pres.var_names.begin() + m, t.ring.pres.var_names.end());
    for (const auto& c : t.subgroup_ring.gen_chars)
        t.augmentations.push_back(character_dimension(c));
    return t;
}

std::optional<long> tor0_fiber_dimension(const Tor0Data& t, int copy, long budget) {
    if (copy != 0 && copy != 1) throw input_error("copy index must be 0 or 1");
    int m = static_cast<int>(t.first_names.size());
    std::vector<std::pair<ExactPoly, Rat>> subs;
    for (int i = 0; i < m; ++i)
        subs.push_back({single_variable(2 * m, copy * m + i), t.augmentations[i]});
    return fiber_dimension(t.ring, subs, budget);
}

IotaData iota_map(const GroupPair& pair, long budget) {
    if (!pair.subgroup.is_torus())
        throw input_error("fixed-point restriction requires a torus subgroup");
    if (pair.subgroup.rank != pair.ambient.rank)
        throw input_error("fixed-point restriction requires a maximal torus (equal rank)");
    QMatrix r = z_to_q(pair.restriction);
    auto rinv = q_inverse(r);
    if (!rinv) throw input_error("restriction matrix is singular");

    IotaData data;
    data.torus_rank = pair.subgroup.rank;
    for (const auto& w : weyl_elements(pair.ambient, budget)) {
        QMatrix conj = q_mul(q_mul(r, z_to_q(w)), *rinv);
        auto wz = q_to_z(conj);
        if (!wz)
            throw input_error("Weyl action does not preserve the subgroup lattice: "
                              "the embedding is not a maximal torus");
        data.weyl_order.push_back(*wz);
    }
    ZMatrix id = z_identity(data.torus_rank);
    auto it = std::find(data.weyl_order.begin(), data.weyl_order.end(), id);
    if (it == data.weyl_order.end()) throw std::logic_error("Weyl enumeration missing identity");
    std::rotate(data.weyl_order.begin(), it, it + 1);
    return data;
}

ExactPoly iota_component(const IotaData& iota, std::size_t w_index, const ExactPoly& doubled) {
    int r = iota.torus_rank;
    if (doubled.nvars != 2 * r)
        throw input_error("doubled Laurent polynomial must have twice the torus rank");
    const ZMatrix& w = iota.weyl_order.at(w_index);
    ExactPoly out(r);
    for (const auto& [e, c] : doubled.terms) {
        std::vector<Int> second(r);
        for (int i = 0; i < r; ++i) second[i] = e[r + i];
        std::vector<Int> moved = apply_int_matrix(w, second);
        Monomial m(r);
        for (int i = 0; i < r; ++i) {
            Int total = Int(e[i]) + moved[i];
            if (!total.fits_sint_p()) throw budget_error("exponent overflow in fixed-point image");
            m[i] = static_cast<int>(total.get_si());
        }
        out.add_term(m, c);
    }
    return out;
}

IotaComparisonReport iota_image_comparison(const GroupPair& pair, int window) {
    if (window < 1) throw input_error("window too small to decide: need at least 1");
    if (!pair.subgroup.is_torus() || pair.subgroup.rank != pair.ambient.rank ||
        pair.ambient.rank != 1)
        throw input_error(
            "image comparison is implemented for rank-one ambient groups with maximal torus");
    if (pair.ambient.simple_roots.empty())
        throw input_error("ambient group must have a root for the two-cell decomposition");

    std::vector<Int> root = restrict_weight(pair, pair.ambient.simple_roots[0]);
    Int d = abs(root[0]);
    if (d == 0) throw input_error("root restricts to zero: not a maximal torus embedding");

    IotaComparisonReport rep;
    rep.window = window;
    rep.equator_order = d;

    // Image monomials of the edge map within the window: a (x) b restricts to
    // the exponent pair (a+b, a-b) at the two fixed points.
    std::set<std::pair<long, long>> hit;
    for (long a = -window; a <= window; ++a)
        for (long b = -window; b <= window; ++b) hit.insert({a + b, a - b});

    // Sweep small exponents first, positive before negative, so the first
    // witness found is the minimal one (for the order-1 equator: the pair
    // (1, t), trivial at one fixed point and weight one at the other).
    std::vector<long> sweep = {0};
    for (long k = 1; k <= window; ++k) {
        sweep.push_back(k);
        sweep.push_back(-k);
    }
    rep.lambda_covers_iota = true;
    for (long size = 0; size <= 2 * window; ++size) {
        for (long m : sweep) {
            for (long n : sweep) {
                if (std::abs(m) + std::abs(n) != size) continue;
                if (Int(m - n) % d != 0) continue;  // not glued into the fixed-point image
                if (hit.count({m, n})) continue;
                rep.lambda_covers_iota = false;
                rep.witness = std::make_pair(Int(m), Int(n));
                if ((m + n) % 2 == 0)
                    throw std::logic_error("even-sum exponent pair escaped the window sweep");
                rep.certificate =
                    "the pair has equal augmentation and agrees on the equator stabilizer, so "
                    "it restricts from the sphere; every edge-map monomial has even exponent "
                    "sum, but the witness pair has odd sum " + std::to_string(m + n) +
                    ", and the parity functional kills the whole edge image independent of "
                    "the window";
                return rep;
            }
        }
    }
    rep.certificate = "all equal-augmentation pairs in the window lift through the edge map";
    return rep;
}

KTheoryReport assemble_ktheory(const GroupPair& pair, long budget) {
    KTheoryReport rep;
    rep.hypotheses = classify_pair(pair, budget);
    if (rep.hypotheses.kind == PairCase::not_covered)
        throw uncovered_error("pair is not covered: " + rep.hypotheses.reason);

    rep.exterior_rank = pair.ambient.rank - pair.subgroup.rank;
    for (int j = 1; j <= rep.exterior_rank; ++j) rep.odd_names.push_back("z" + std::to_string(j));
    rep.inverted_primes = rep.hypotheses.inverted_primes;

    if (rep.hypotheses.kind == PairCase::surjective) {
        RepRingPresentation ambient = representation_ring(pair.ambient, budget);
        RepRingPresentation subgroup = representation_ring(pair.subgroup, budget);
        RestrictionMap res = restriction_map(pair, ambient, subgroup, budget);
        rep.tor0 = PresentedRing::make(subgroup.relations, budget);
        rep.even_names = subgroup.gen_names;
        std::vector<std::pair<ExactPoly, Rat>> subs;
        for (std::size_t j = 0; j < res.images.size(); ++j)
            subs.push_back({res.images[j], character_dimension(ambient.gen_chars[j])});
        rep.fiber = fiber_dimension(rep.tor0, subs, budget);
        rep.predicted_rank = 1;
        rep.provenance = "surjective restriction: the doubled product collapses onto the subgroup ring";
    } else {
        Tor0Data t = tor0_presentation(pair, budget);
        rep.tor0 = t.ring;
        rep.even_names = t.first_names;
        rep.even_names.insert(rep.even_names.end(), t.second_names.begin(), t.second_names.end());
        auto f0 = tor0_fiber_dimension(t, 0, budget);
        auto f1 = tor0_fiber_dimension(t, 1, budget);
        if (f0 != f1) throw std::logic_error("one-sided fibers of the doubled product disagree");
        rep.fiber = f0;
        if (rep.hypotheses.kind == PairCase::equal_rank) {
            long wg = static_cast<long>(weyl_elements(pair.ambient).size());
            long wh = static_cast<long>(weyl_elements(pair.subgroup).size());
            rep.predicted_rank = wg / wh;
            rep.provenance = "equal-rank pair: doubled presentation of the subgroup ring";
        } else if (rep.hypotheses.kind == PairCase::sigma_pair) {
            rep.provenance =
                "declared fixed-point pair: doubled presentation with exterior factor";
        } else {
            rep.provenance =
                "polynomial image with finite-module certificate: doubled presentation with "
                "exterior factor";
        }
    }
    if (rep.predicted_rank && rep.fiber && *rep.predicted_rank != *rep.fiber)
        throw std::logic_error("freeness certificate mismatch: fiber " +
                               std::to_string(*rep.fiber) + " vs predicted rank " +
                               std::to_string(*rep.predicted_rank));
    return rep;
}

OrdinaryKTheoryReport ordinary_ktheory(const GroupPair& pair, long budget) {
    HypothesisReport hyp = classify_pair(pair, budget);
    if (hyp.kind != PairCase::surjective && hyp.kind != PairCase::equal_rank &&
        hyp.kind != PairCase::sigma_pair) {
        std::string why = hyp.kind == PairCase::not_covered
                              ? hyp.reason
                              : "case " + pair_case_name(hyp.kind) + " carries no collapse certificate";
        throw uncovered_error("ordinary K-theory needs a structural collapse case: " + why);
    }

    RepRingPresentation ambient = representation_ring(pair.ambient, budget);
    RepRingPresentation subgroup = representation_ring(pair.subgroup, budget);
    RestrictionMap res = restriction_map(pair, ambient, subgroup, budget);

    OrdinaryKTheoryReport rep;
    rep.exterior_rank = pair.ambient.rank - pair.subgroup.rank;
    for (int j = 1; j <= rep.exterior_rank; ++j) rep.odd_names.push_back("z" + std::to_string(j));

    IdealPresentation pres = subgroup.relations;
    int m = pres.nvars();
    for (std::size_t j = 0; j < res.images.size(); ++j) {
        Rat aug = character_dimension(ambient.gen_chars[j]);
        ExactPoly rel = res.images[j] - ExactPoly::constant(m, aug);
        if (!rel.terms.empty()) pres.gens.push_back(std::move(rel));
    }
    rep.ring = PresentedRing::make(std::move(pres), budget);
    rep.base_fiber = vector_space_dimension(rep.ring);
    if (rep.base_fiber) rep.total_rank = *rep.base_fiber * (1L << rep.exterior_rank);
    return rep;
}

TorFormalityReport formality_criterion_tor(const GroupPair& pair, long budget) {
    HypothesisReport hyp = classify_pair(pair, budget);
    if (hyp.kind == PairCase::not_covered)
        throw uncovered_error("pair is not covered: " + hyp.reason);

    Tor0Data t = tor0_presentation(pair, budget);
    TorFormalityReport rep;
    rep.exterior_rank = pair.ambient.rank - pair.subgroup.rank;

    int m = static_cast<int>(t.first_names.size());
    IdealPresentation pres = t.ring.pres;
    for (int i = 0; i < m; ++i)
        pres.gens.push_back(single_variable(2 * m, i) -
                            ExactPoly::constant(2 * m, t.augmentations[i]));
    rep.weak_quotient = PresentedRing::make(std::move(pres), budget);
    rep.quotient_fiber = vector_space_dimension(rep.weak_quotient);
    if (rep.quotient_fiber) rep.total_rank = *rep.quotient_fiber * (1L << rep.exterior_rank);

    rep.degree_zero_surjective = true;
    for (int i = 0; i < m; ++i)
        rep.witnesses.push_back("second-copy generator " + t.second_names[i] +
                                " maps onto the class of " + t.first_names[i]);
    return rep;
}

}  // namespace isoring
