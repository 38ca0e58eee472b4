#include "isoring/groebner.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace isoring {

void IdealPresentation::add_saturation_relations() {
    for (auto [i, j] : sat_pairs) {
        Monomial m(nvars(), 0);
        m[i] = 1;
        m[j] += 1;
        ExactPoly rel = ExactPoly::monomial(m, Rat(1)) - ExactPoly::constant(nvars(), Rat(1));
        if (std::find(gens.begin(), gens.end(), rel) == gens.end()) gens.push_back(rel);
    }
}

std::string IdealPresentation::render(const std::string& sep) const {
    std::ostringstream out;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) out << sep;
        out << poly_to_string(gens[i], var_names);
    }
    return out.str();
}

namespace {

struct SPair {
    int i, j;
    Monomial lcm;
    long sugar;
    long lcm_deg;
};

long poly_sugar(const ExactPoly& p, const std::vector<long>& w) { return p.weighted_degree(w); }

// One full reduction of p by basis; counts divisor applications into `steps`.
ExactPoly reduce_full(const ExactPoly& p, const std::vector<ExactPoly>& basis,
                      const std::vector<Monomial>& lts, const MonomialOrder& ord, long& steps,
                      long budget) {
    ExactPoly rem(p.nvars);
    ExactPoly cur = p;
    while (!cur.is_zero()) {
        Monomial lm = cur.leading_monomial(ord);
        Rat lc = cur.terms.at(lm);
        bool reduced = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (basis[k].is_zero()) continue;
            if (mono_divides(lts[k], lm)) {
                Monomial q = mono_div(lm, lts[k]);
                Rat f = lc / basis[k].terms.at(lts[k]);
                ExactPoly sub = basis[k].scaled(f);
                // cur -= f * q * basis[k]
                for (const auto& [m, c] : sub.terms) cur.add_term(mono_mul(q, m), -c);
                if (++steps > budget)
                    throw budget_error("groebner: pair-reduction budget exhausted after " +
                                       std::to_string(steps - 1) + " steps");
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.add_term(lm, lc);
            cur.terms.erase(lm);
        }
    }
    return rem;
}

std::string canonical_serialization(const IdealPresentation& pres) {
    std::ostringstream out;
    out << pres.nvars() << "|";
    out << static_cast<int>(pres.order.kind) << "," << pres.order.block << ";";
    for (long w : pres.order.weights) out << w << ",";
    out << "|";
    std::vector<std::string> gen_strs;
    std::vector<std::string> canonical_names;
    for (int i = 0; i < pres.nvars(); ++i) canonical_names.push_back("v" + std::to_string(i));
    for (const auto& g : pres.gens) gen_strs.push_back(poly_to_string(g, canonical_names));
    std::sort(gen_strs.begin(), gen_strs.end());
    for (const auto& s : gen_strs) out << s << ";";
    return out.str();
}

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::atomic<bool> g_cache_enabled{true};

std::vector<std::string> canonical_names_for(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    return names;
}

bool load_cached_basis(const std::string& path, int nvars, std::vector<ExactPoly>& out) {
    std::ifstream in(path);
    if (!in) return false;
    std::string line;
    auto names = canonical_names_for(nvars);
    std::vector<ExactPoly> basis;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            basis.push_back(poly_from_string(line, names));
        } catch (const std::exception&) {
            return false;
        }
    }
    out = std::move(basis);
    return true;
}

void store_cached_basis(const std::string& path, int nvars, const std::vector<ExactPoly>& basis) {
    std::string tmp = path + ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp);
        if (!out) return;
        auto names = canonical_names_for(nvars);
        for (const auto& g : basis) out << poly_to_string(g, names) << "\n";
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

std::string groebner_cache_dir() {
    const char* dir = std::getenv("ISORING_CACHE_DIR");
    if (dir) return std::string(dir);  // empty value disables caching
    const char* xdg = std::getenv("XDG_CACHE_HOME");
    if (xdg && *xdg) return std::string(xdg) + "/isoring";
    const char* home = std::getenv("HOME");
    if (home && *home) return std::string(home) + "/.cache/isoring";
    return std::string();
}

void set_groebner_cache_enabled(bool on) { g_cache_enabled.store(on); }

GroebnerResult groebner_basis(const IdealPresentation& pres, long budget, bool use_cache) {
    for (const auto& g : pres.gens)
        if (g.has_negative_exponent())
            throw input_error("groebner: generators must have nonnegative exponents");

    GroebnerResult result;
    result.order = pres.order;

    std::string cache_path;
    if (use_cache && g_cache_enabled.load()) {
        std::string dir = groebner_cache_dir();
        if (!dir.empty()) {
            std::error_code ec;
            std::filesystem::create_directories(dir, ec);
            uint64_t h = fnv1a(canonical_serialization(pres));
            char buf[32];
            std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
            cache_path = dir + "/" + buf + ".gb";
            std::vector<ExactPoly> cached;
            if (load_cached_basis(cache_path, pres.nvars(), cached)) {
                result.basis = std::move(cached);
                result.stats.from_cache = true;
                result.stats.basis_size = static_cast<long>(result.basis.size());
                return result;
            }
        }
    }

    const MonomialOrder& ord = pres.order;
    std::vector<long> w = ord.weights;
    std::vector<ExactPoly> basis;
    std::vector<Monomial> lts;
    std::vector<long> sugars;
    long steps = 0;

    auto add_poly = [&](const ExactPoly& p, long sugar) {
        ExactPoly q = p.make_monic(ord);
        basis.push_back(q);
        lts.push_back(q.leading_monomial(ord));
        sugars.push_back(sugar);
    };

    for (const auto& g : pres.gens)
        if (!g.is_zero()) add_poly(g, poly_sugar(g, w));

    // Deterministic initial order (ascending leading monomial, then term count).
    {
        std::vector<size_t> idx(basis.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
            if (lts[a] != lts[b]) return ord.greater(lts[b], lts[a]);
            return basis[a].terms.size() < basis[b].terms.size();
        });
        std::vector<ExactPoly> b2;
        std::vector<Monomial> l2;
        std::vector<long> s2;
        for (size_t i : idx) {
            b2.push_back(basis[i]);
            l2.push_back(lts[i]);
            s2.push_back(sugars[i]);
        }
        basis = std::move(b2);
        lts = std::move(l2);
        sugars = std::move(s2);
    }

    auto make_pair = [&](int i, int j) {
        SPair sp;
        sp.i = i;
        sp.j = j;
        sp.lcm = mono_lcm(lts[i], lts[j]);
        sp.lcm_deg = mono_degree(sp.lcm, w);
        long si = sugars[i] + mono_degree(mono_div(sp.lcm, lts[i]), w);
        long sj = sugars[j] + mono_degree(mono_div(sp.lcm, lts[j]), w);
        sp.sugar = std::max(si, sj);
        return sp;
    };

    auto pair_less = [](const SPair& a, const SPair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        if (a.lcm_deg != b.lcm_deg) return a.lcm_deg < b.lcm_deg;
        if (a.lcm != b.lcm) return a.lcm < b.lcm;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<SPair> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            pairs.push_back(make_pair(static_cast<int>(i), static_cast<int>(j)));

    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
        SPair sp = *it;
        pairs.erase(it);

        // Buchberger's coprimality criterion.
        if (mono_coprime(lts[sp.i], lts[sp.j])) continue;
        // Chain criterion: if some k with lt_k | lcm and both (i,k),(j,k) gone.
        bool skip = false;
        for (size_t k = 0; k < basis.size() && !skip; ++k) {
            if (static_cast<int>(k) == sp.i || static_cast<int>(k) == sp.j) continue;
            if (basis[k].is_zero()) continue;
            if (!mono_divides(lts[k], sp.lcm)) continue;
            bool pending_ik = false, pending_jk = false;
            for (const auto& p : pairs) {
                int a = std::min<int>(sp.i, static_cast<int>(k));
                int b = std::max<int>(sp.i, static_cast<int>(k));
                if (p.i == a && p.j == b) pending_ik = true;
                a = std::min<int>(sp.j, static_cast<int>(k));
                b = std::max<int>(sp.j, static_cast<int>(k));
                if (p.i == a && p.j == b) pending_jk = true;
            }
            if (!pending_ik && !pending_jk) skip = true;
        }
        if (skip) continue;

        // S-polynomial.
        Monomial qi = mono_div(sp.lcm, lts[sp.i]);
        Monomial qj = mono_div(sp.lcm, lts[sp.j]);
        ExactPoly s(basis[sp.i].nvars);
        for (const auto& [m, c] : basis[sp.i].terms) s.add_term(mono_mul(qi, m), c);
        for (const auto& [m, c] : basis[sp.j].terms) s.add_term(mono_mul(qj, m), -c);
        if (s.is_zero()) continue;
        ExactPoly r = reduce_full(s, basis, lts, ord, steps, budget);
        if (r.is_zero()) continue;
        long sug = std::max(sp.sugar, poly_sugar(r, w));
        add_poly(r, sug);
        int newi = static_cast<int>(basis.size()) - 1;
        for (int i = 0; i < newi; ++i)
            if (!basis[i].is_zero()) pairs.push_back(make_pair(i, newi));
    }

    // Minimalize: drop elements whose lt is divisible by a different lt, or
    // duplicated by an earlier one.
    std::vector<ExactPoly> minimal;
    std::vector<Monomial> min_lts;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (!mono_divides(lts[j], lts[i])) continue;
            if (lts[j] != lts[i] || j < i) redundant = true;
        }
        if (!redundant) {
            minimal.push_back(basis[i]);
            min_lts.push_back(lts[i]);
        }
    }
    // Tail-reduce each element against the others (reduced basis).
    std::vector<ExactPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<ExactPoly> others;
        std::vector<Monomial> other_lts;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) {
                others.push_back(minimal[j]);
                other_lts.push_back(min_lts[j]);
            }
        long tail_steps = 0;
        ExactPoly r = reduce_full(minimal[i], others, other_lts, ord, tail_steps,
                                  std::max<long>(budget, 1000000));
        if (!r.is_zero()) reduced.push_back(r.make_monic(ord));
    }
    // Deterministic output order: ascending leading monomial.
    std::sort(reduced.begin(), reduced.end(), [&](const ExactPoly& a, const ExactPoly& b) {
        const Monomial& la = a.leading_monomial(ord);
        const Monomial& lb = b.leading_monomial(ord);
        if (la != lb) return ord.greater(lb, la);
        return a.terms.size() < b.terms.size();
    });
    result.basis = reduced;
    result.stats.pair_reductions = steps;
    result.stats.basis_size = static_cast<long>(reduced.size());

    if (!cache_path.empty()) store_cached_basis(cache_path, pres.nvars(), result.basis);
    return result;
}

ExactPoly normal_form(const ExactPoly& p, const std::vector<ExactPoly>& basis,
                      const MonomialOrder& ord) {
    std::vector<Monomial> lts;
    for (const auto& b : basis) lts.push_back(b.leading_monomial(ord));
    long steps = 0;
    return reduce_full(p, basis, lts, ord, steps, std::numeric_limits<long>::max());
}

PresentedRing PresentedRing::make(IdealPresentation p, long budget, bool use_cache) {
    PresentedRing r;
    r.pres = std::move(p);
    r.gb = groebner_basis(r.pres, budget, use_cache);
    return r;
}

namespace {

// Numerator of the Hilbert series of a monomial ideal (weighted degrees).
UniPoly monomial_ideal_numerator(std::vector<Monomial> gens, const std::vector<long>& w) {
    // Minimalize.
    std::vector<Monomial> min;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool red = false;
        for (size_t j = 0; j < gens.size() && !red; ++j)
            if (i != j && mono_divides(gens[j], gens[i]) &&
                !(gens[i] == gens[j] && j > i))
                red = true;
        if (!red) min.push_back(gens[i]);
    }
    std::sort(min.begin(), min.end());
    min.erase(std::unique(min.begin(), min.end()), min.end());
    if (min.empty()) return UniPoly::constant(1);
    if (min.size() == 1)
        return UniPoly::one_minus_power(static_cast<int>(mono_degree(min[0], w)));
    // Splitting recursion: N(I + (m)) = N(I) - t^|m| N(I : m).
    Monomial m = min.back();
    std::vector<Monomial> rest(min.begin(), min.end() - 1);
    std::vector<Monomial> colon;
    for (const auto& g : rest) {
        Monomial q(g.size());
        for (size_t i = 0; i < g.size(); ++i) q[i] = std::max(g[i] - m[i], 0);
        colon.push_back(q);
    }
    UniPoly n_rest = monomial_ideal_numerator(rest, w);
    UniPoly n_colon = monomial_ideal_numerator(colon, w);
    UniPoly shift;
    shift.c.assign(static_cast<size_t>(mono_degree(m, w)) + 1, Rat(0));
    shift.c.back() = 1;
    return n_rest - shift * n_colon;
}

}  // namespace

PoincareSeries hilbert_series(const PresentedRing& ring) {
    const auto& pres = ring.pres;
    if (pres.degrees.empty()) throw ungraded_error("hilbert_series: no grading supplied");
    for (long d : pres.degrees)
        if (d <= 0) throw ungraded_error("hilbert_series: degrees must be positive");
    for (const auto& g : pres.gens)
        if (!g.is_homogeneous(pres.degrees))
            throw ungraded_error("hilbert_series: inhomogeneous generator: " +
                                 poly_to_string(g, pres.var_names));
    std::vector<Monomial> lts;
    for (const auto& b : ring.gb.basis) lts.push_back(b.leading_monomial(ring.gb.order));
    UniPoly num = monomial_ideal_numerator(lts, pres.degrees);
    PoincareSeries s;
    s.num = num;
    for (long d : pres.degrees) s.den.push_back(static_cast<int>(d));
    std::sort(s.den.begin(), s.den.end());
    return s;
}

int krull_dimension(const PresentedRing& ring) {
    int n = ring.pres.nvars();
    std::vector<Monomial> lts;
    for (const auto& b : ring.gb.basis) {
        lts.push_back(b.leading_monomial(ring.gb.order));
        // A constant in the basis means the ideal is the unit ideal.
        if (lts.back() == Monomial(n, 0)) return -1;
    }
    // Max size of S subset of vars such that no lt is supported inside S.
    int best = 0;
    std::function<void(int, std::vector<bool>&, int)> rec = [&](int v, std::vector<bool>& in,
                                                                int count) {
        best = std::max(best, count);
        for (int i = v; i < n; ++i) {
            in[i] = true;
            bool ok = true;
            for (const auto& m : lts) {
                bool inside = true;
                for (int j = 0; j < n; ++j)
                    if (m[j] > 0 && !in[j]) {
                        inside = false;
                        break;
                    }
                if (inside) {
                    ok = false;
                    break;
                }
            }
            if (ok) rec(i + 1, in, count + 1);
            in[i] = false;
        }
    };
    std::vector<bool> in(n, false);
    rec(0, in, 0);
    return best;
}

std::vector<Monomial> standard_monomials(const PresentedRing& ring, long cap) {
    int n = ring.pres.nvars();
    std::vector<Monomial> lts;
    for (const auto& b : ring.gb.basis) lts.push_back(b.leading_monomial(ring.gb.order));
    for (const auto& m : lts)
        if (m == Monomial(n, 0)) return {};  // unit ideal
    std::vector<Monomial> out;
    // BFS from the origin; standard monomials are downward closed.
    std::set<Monomial> seen;
    std::vector<Monomial> frontier{Monomial(n, 0)};
    seen.insert(frontier[0]);
    auto divisible = [&](const Monomial& m) {
        for (const auto& l : lts)
            if (mono_divides(l, m)) return true;
        return false;
    };
    while (!frontier.empty()) {
        std::vector<Monomial> next;
        for (const auto& m : frontier) {
            out.push_back(m);
            if (static_cast<long>(out.size()) > cap)
                throw budget_error("standard_monomials: cap exceeded");
            for (int i = 0; i < n; ++i) {
                Monomial m2 = m;
                m2[i] += 1;
                if (seen.count(m2) || divisible(m2)) continue;
                seen.insert(m2);
                next.push_back(m2);
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<long> vector_space_dimension(const PresentedRing& ring) {
    if (krull_dimension(ring) > 0) return std::nullopt;
    if (krull_dimension(ring) < 0) return 0;  // unit ideal
    return static_cast<long>(standard_monomials(ring, 100000000L).size());
}

RegularSequenceReport is_regular_sequence(const PresentedRing& ring,
                                          const std::vector<ExactPoly>& elements) {
    RegularSequenceReport rep;
    const auto& pres = ring.pres;
    PoincareSeries base = hilbert_series(ring);
    PoincareSeries predicted = base;
    for (const auto& f : elements) {
        if (f.is_zero()) {
            // A zero element is never regular (unless the ring is zero).
            rep.regular = false;
            rep.predicted = predicted;
            rep.actual = base;
            return rep;
        }
        if (!f.is_homogeneous(pres.degrees))
            throw ungraded_error("is_regular_sequence: inhomogeneous element");
        PoincareSeries factor = PoincareSeries::polynomial(
            UniPoly::constant(1) - [&] {
                UniPoly u;
                u.c.assign(f.weighted_degree(pres.degrees) + 1, Rat(0));
                u.c[f.weighted_degree(pres.degrees)] = 1;
                return u;
            }());
        predicted = predicted * factor;
    }
    IdealPresentation quo = pres;
    for (const auto& f : elements) quo.gens.push_back(f);
    PresentedRing qring = PresentedRing::make(quo);
    rep.actual = hilbert_series(qring);
    rep.predicted = predicted;
    rep.regular = rep.actual.equals(rep.predicted);
    return rep;
}

RingMapImage ring_map_image(const IdealPresentation& target, const std::vector<ExactPoly>& images,
                            const std::vector<std::string>& tag_names, long budget) {
    int nt = target.nvars();
    int nx = static_cast<int>(images.size());
    if (static_cast<int>(tag_names.size()) != nx)
        throw input_error("ring_map_image: tag name count mismatch");

    IdealPresentation amb;
    amb.var_names = target.var_names;
    amb.var_names.insert(amb.var_names.end(), tag_names.begin(), tag_names.end());
    validate_var_names(amb.var_names);
    amb.order = MonomialOrder::make_elim(nt + nx, nt);
    amb.degrees.assign(nt + nx, 1);

    auto lift = [&](const ExactPoly& p) {
        ExactPoly q(nt + nx);
        for (const auto& [m, c] : p.terms) {
            Monomial m2 = m;
            m2.resize(nt + nx, 0);
            q.terms[m2] = c;
        }
        return q;
    };
    for (const auto& g : target.gens) amb.gens.push_back(lift(g));
    for (int j = 0; j < nx; ++j) {
        if (images[j].nvars != nt) throw input_error("ring_map_image: image in wrong ring");
        if (images[j].has_negative_exponent())
            throw input_error("ring_map_image: images must be saturated polynomials");
        ExactPoly rel = ExactPoly::variable(nt + nx, nt + j) - lift(images[j]);
        amb.gens.push_back(rel);
    }

    RingMapImage out;
    out.n_target = nt;
    out.n_tags = nx;
    out.tag_names = tag_names;
    out.elim_gb = groebner_basis(amb, budget);

    out.image_pres.var_names = tag_names;
    out.image_pres.degrees.assign(nx, 1);
    for (int j = 0; j < nx; ++j) {
        if (!target.degrees.empty() && images[j].is_homogeneous(target.degrees)) {
            long d = images[j].weighted_degree(target.degrees);
            if (d > 0) out.image_pres.degrees[j] = d;
        }
    }
    out.image_pres.order = MonomialOrder::make_grevlex(nx);
    for (const auto& g : out.elim_gb.basis) {
        bool pure_tags = true;
        for (const auto& [m, c] : g.terms)
            for (int i = 0; i < nt; ++i)
                if (m[i] != 0) {
                    pure_tags = false;
                    break;
                }
        if (!pure_tags) continue;
        ExactPoly h(nx);
        for (const auto& [m, c] : g.terms)
            h.terms[Monomial(m.begin() + nt, m.end())] = c;
        out.image_pres.gens.push_back(h);
    }
    return out;
}

std::optional<ExactPoly> RingMapImage::membership(const ExactPoly& p) const {
    if (p.nvars != n_target) throw input_error("membership: wrong ring");
    ExactPoly q(n_target + n_tags);
    for (const auto& [m, c] : p.terms) {
        Monomial m2 = m;
        m2.resize(n_target + n_tags, 0);
        q.terms[m2] = c;
    }
    ExactPoly nf = normal_form(q, elim_gb.basis, elim_gb.order);
    for (const auto& [m, c] : nf.terms)
        for (int i = 0; i < n_target; ++i)
            if (m[i] != 0) return std::nullopt;
    ExactPoly h(n_tags);
    for (const auto& [m, c] : nf.terms) h.terms[Monomial(m.begin() + n_target, m.end())] = c;
    return h;
}

std::optional<long> fiber_dimension(const PresentedRing& ring,
                                    const std::vector<std::pair<ExactPoly, Rat>>& subst,
                                    long budget) {
    IdealPresentation quo = ring.pres;
    // A grevlex order is enough here; drop elimination structure if present.
    quo.order = MonomialOrder::make_grevlex(quo.nvars());
    for (const auto& [p, v] : subst)
        quo.gens.push_back(p - ExactPoly::constant(quo.nvars(), v));
    PresentedRing q = PresentedRing::make(std::move(quo), budget);
    return vector_space_dimension(q);
}

bool is_valid_augmentation(const IdealPresentation& pres, const std::vector<Rat>& values) {
    if (static_cast<int>(values.size()) != pres.nvars()) return false;
    for (const auto& g : pres.gens)
        if (g.evaluate(values) != 0) return false;
    return true;
}

ExactPoly laurent_to_saturated(const ExactPoly& p) {
    int n = p.nvars;
    ExactPoly r(2 * n);
    for (const auto& [m, c] : p.terms) {
        Monomial m2(2 * n, 0);
        for (int i = 0; i < n; ++i) {
            if (m[i] >= 0)
                m2[i] = m[i];
            else
                m2[n + i] = -m[i];
        }
        r.add_term(m2, c);
    }
    return r;
}

ExactPoly saturated_to_laurent(const ExactPoly& p) {
    if (p.nvars % 2 != 0) throw input_error("saturated_to_laurent: odd variable count");
    int n = p.nvars / 2;
    ExactPoly r(n);
    for (const auto& [m, c] : p.terms) {
        Monomial m2(n, 0);
        for (int i = 0; i < n; ++i) m2[i] = m[i] - m[n + i];
        r.add_term(m2, c);
    }
    return r;
}

}  // namespace isoring
