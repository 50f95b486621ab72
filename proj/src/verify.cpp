#include "skm/verify.hpp"

#include <chrono>
#include <sstream>

#include "skm/grobner.hpp"
#include "skm/homology.hpp"
#include "skm/io.hpp"
#include "skm/koszul.hpp"
#include "skm/resonance.hpp"

namespace skm {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string label(const SimplicialComplex& delta)
{
    std::string s = "n=" + std::to_string(delta.n()) + " facets ";
    if (delta.is_void())
        return s + "(void)";
    for (Mask f : delta.facets())
        s += format_set(f);
    return s;
}

template <class T>
std::string list_string(const std::vector<T>& v)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < v.size(); ++k)
        os << (k ? "," : "") << v[k];
    os << "]";
    return os.str();
}

std::string masks_string(const std::vector<Mask>& v)
{
    std::string s;
    for (Mask m : v)
        s += format_set(m);
    return s.empty() ? "(none)" : s;
}

Mask set_of(int n, std::initializer_list<int> vertices) { return from_vertices(n, std::vector<int>(vertices)); }

/// Runs body for one case; exceptions become failures carrying their message.
template <class Fn>
void run_case(VerificationReport& report, const std::string& id, Fn&& body)
{
    try {
        body();
    } catch (const std::exception& e) {
        report.add(id, false, std::string("exception: ") + e.what());
    }
}

} // namespace

// ---- reports ----------------------------------------------------------------

std::string to_string(CaseStatus s)
{
    switch (s) {
    case CaseStatus::Pass:
        return "pass";
    case CaseStatus::Fail:
        return "fail";
    case CaseStatus::SkippedHypothesis:
        return "skipped-hypothesis";
    }
    return "?";
}

std::size_t VerificationReport::count(CaseStatus s) const
{
    std::size_t c = 0;
    for (const auto& r : cases)
        if (r.status == s)
            ++c;
    return c;
}

void VerificationReport::add(std::string id, bool passed, std::string details)
{
    cases.push_back({std::move(id), passed ? CaseStatus::Pass : CaseStatus::Fail, std::move(details)});
}

void VerificationReport::skip(std::string id, std::string details)
{
    cases.push_back({std::move(id), CaseStatus::SkippedHypothesis, std::move(details)});
}

void VerificationReport::merge(const VerificationReport& other)
{
    for (const auto& c : other.cases)
        cases.push_back({other.suite + "/" + c.id, c.status, c.details});
    seconds += other.seconds;
}

nlohmann::json VerificationReport::to_json() const
{
    nlohmann::json list = nlohmann::json::array();
    for (const auto& c : cases)
        list.push_back({{"id", c.id}, {"status", skm::to_string(c.status)}, {"details", c.details}});
    return {{"suite", suite},
            {"cases", list},
            {"passed", count(CaseStatus::Pass)},
            {"failed", count(CaseStatus::Fail)},
            {"skipped", count(CaseStatus::SkippedHypothesis)},
            {"wall_seconds", seconds}};
}

std::string VerificationReport::to_text() const
{
    std::ostringstream os;
    for (const auto& c : cases) {
        os << to_string(c.status) << "  " << c.id;
        if (!c.details.empty())
            os << "  -- " << c.details;
        os << "\n";
    }
    os << suite << ": " << count(CaseStatus::Pass) << " passed, " << count(CaseStatus::Fail) << " failed, "
       << count(CaseStatus::SkippedHypothesis) << " skipped (" << seconds << " s)\n";
    return os.str();
}

// ---- random complexes -------------------------------------------------------

SimplicialComplex random_complex(std::mt19937_64& rng, int n)
{
    std::uniform_int_distribution<int> top_dist(0, n);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int top = top_dist(rng);
    std::vector<Mask> chosen;
    for (int k = 1; k <= top; ++k) {
        const double p = 0.15 + 0.6 * unit(rng);
        for (Mask s : subsets_of_size(n, k))
            if (unit(rng) < p)
                chosen.push_back(s);
    }
    if (chosen.empty() && unit(rng) < 0.7)
        chosen.push_back(0); // {∅} rather than the void complex most of the time
    return SimplicialComplex::from_masks(n, std::move(chosen));
}

SimplicialComplex random_skeleton_complete(std::mt19937_64& rng, int n, int d)
{
    if (d < 0 || d >= n + 1)
        throw InputError("random_skeleton_complete: need 0 <= d <= n");
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Mask> chosen = subsets_of_size(n, d);
    const auto top = subsets_of_size(n, d + 1);
    const double p = 0.2 + 0.6 * unit(rng);
    bool any = false;
    for (Mask s : top)
        if (unit(rng) < p) {
            chosen.push_back(s);
            any = true;
        }
    if (!any) {
        std::uniform_int_distribution<std::size_t> pick(0, top.size() - 1);
        chosen.push_back(top[pick(rng)]);
    }
    return SimplicialComplex::from_masks(n, std::move(chosen));
}

std::vector<SimplicialComplex> random_corpus(const CorpusOptions& options)
{
    if (options.max_n < 1 || options.max_n > kDefaultSubsetGuard)
        throw InputError("corpus max_n out of range");
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> n_dist(1, options.max_n);
    std::vector<SimplicialComplex> out;
    for (std::size_t k = 0; k < options.count; ++k) {
        const int n = n_dist(rng);
        if (k % 4 == 3 && n >= 2) {
            std::uniform_int_distribution<int> d_dist(1, n - 1);
            out.push_back(random_skeleton_complete(rng, n, d_dist(rng)));
        } else {
            out.push_back(random_complex(rng, n));
        }
    }
    return out;
}

SimplicialComplex two_edges() { return SimplicialComplex::from_facets(4, {{1, 2}, {3, 4}}); }

SimplicialComplex tetrahedron_minus_face()
{
    return SimplicialComplex::from_facets(4, {{1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
}

// ---- worked examples --------------------------------------------------------

VerificationReport verify_fitting_path4()
{
    const auto start = Clock::now();
    VerificationReport r;
    r.suite = "fitting-path4";
    const int n = 4;
    const SimplicialComplex path = SimplicialComplex::path(4);
    auto x = [&](int j) { return Polynomial::variable(n, j - 1); };
    auto principal = [&](const Polynomial& p) { return PolynomialIdeal(n, {p}); };

    run_case(r, "presentation", [&] {
        const auto p = presentation_matrix(path);
        const bool shape = p.rows == std::vector<Mask>{set_of(n, {1, 3}), set_of(n, {1, 4}), set_of(n, {2, 4})} &&
                           p.cols.size() == 4;
        r.add("presentation", shape, "rows " + masks_string(p.rows) + ", cols " + masks_string(p.cols));
    });

    run_case(r, "annihilator", [&] {
        const auto ann = annihilator(path, 1);
        const bool combinatorial = ann.generators() == std::vector<Mask>{set_of(n, {2, 3})};
        const PolynomialIdeal ann_poly = monomial_ideal(n, {indicator(n, set_of(n, {2, 3}))});
        const PolynomialIdeal expected = ideal_intersect(principal(x(2)), principal(x(3)));
        const bool certified = ideal_equal(ann_poly, expected);
        std::string gb;
        for (const auto& g : expected.groebner_basis())
            gb += g.to_string() + " ";
        r.add("annihilator", combinatorial && certified,
              "Ann(W_1) generators " + masks_string(ann.generators()) + "; GB of (x2)∩(x3): " + gb);
    });

    run_case(r, "fitting-ideal", [&] {
        const auto p = presentation_matrix(path);
        const PolynomialIdeal fitt = fitting_ideal(to_polynomial_matrix(p), n, 0);
        const PolynomialIdeal maximal_like(n, {x(1), x(2).pow(2), x(3).pow(2), x(4)});
        const PolynomialIdeal expected =
            ideal_intersect(ideal_intersect(principal(x(2)), principal(x(3))), maximal_like);
        std::string gb;
        for (const auto& g : fitt.groebner_basis())
            gb += g.to_string() + " ";
        r.add("fitting-ideal", ideal_equal(fitt, expected),
              "GB of Fitt_0: " + gb + "equals GB of (x2)∩(x3)∩(x1,x2^2,x3^2,x4)");

        const PolynomialIdeal ann_poly = monomial_ideal(n, {indicator(n, set_of(n, {2, 3}))});
        const RadicalReport rad = is_radical_vs(fitt, ann_poly);
        std::string exps;
        for (const auto& e : rad.nilpotency)
            exps += e ? std::to_string(*e) + " " : "none ";
        r.add("fitting-non-reduced", rad.non_reduced(),
              std::string("Fitt_0 ⊆ Ann: ") + (rad.contained ? "yes" : "no") + ", equal: " + (rad.equal ? "yes" : "no") +
                  ", power of x2x3 in Fitt_0: " + exps);
        const RadicalReport ann_self = is_radical_vs(ann_poly, ann_poly);
        r.add("annihilator-reduced", ann_self.equal && !ann_self.non_reduced(), "Ann compared with itself");
    });
    r.seconds = seconds_since(start);
    return r;
}

VerificationReport verify_cycle_family(int from_n, int to_n, int jobs)
{
    const auto start = Clock::now();
    VerificationReport r;
    r.suite = "cycles";
    for (int n = from_n; n <= to_n; ++n) {
        const std::string id = "C" + std::to_string(n);
        run_case(r, id, [&] {
            const auto t0 = Clock::now();
            const SimplicialComplex c = SimplicialComplex::cycle(n);
            const BettiTable table = betti_table(build_W(c, 1, jobs), jobs);
            const auto reg = table.regularity();
            const int pdim = table.projective_dimension();
            const bool ok = reg && *reg == n - 2 && pdim == n - 2 && *reg - 2 == n - 4;
            std::ostringstream os;
            os << "pdim " << pdim << " (expect " << n - 2 << "), reg unshifted "
               << (reg ? std::to_string(*reg) : "-inf") << " (expect " << n - 2 << "), reg shifted by 2 "
               << (reg ? std::to_string(*reg - 2) : "-inf") << " (expect " << n - 4 << "), "
               << seconds_since(t0) << " s";
            r.add(id, ok, os.str());
        });
    }
    r.seconds = seconds_since(start);
    return r;
}

VerificationReport verify_two_edges()
{
    const auto start = Clock::now();
    VerificationReport r;
    r.suite = "two-edges";
    const SimplicialComplex delta = two_edges();
    const int n = 4;
    run_case(r, "jump", [&] {
        const auto r1 = jump_resonance(delta, 1), r2 = jump_resonance(delta, 2);
        r.add("jump-R1-whole", r1.is_whole(), "R^1 = " + r1.describe());
        r.add("jump-R2", r2.components() == std::vector<Mask>{set_of(n, {1, 2}), set_of(n, {3, 4})},
              "R^2 = " + r2.describe());
        const auto s2 = support_resonance(delta, 2);
        r.add("support-R2-empty", s2.is_empty(), "R~_2 = " + s2.describe());
        r.add("support-differs-from-jump", !(s2 == r2), "R~_2 != R^2");
        const auto s1 = support_resonance(delta, 1);
        r.add("support-R1-whole", s1.is_whole() && s1 == r1, "R~_1 = " + s1.describe());
    });
    run_case(r, "propagation", [&] {
        const auto p = propagation_check(delta);
        r.add("propagation-fails", !p.holds && p.first_failure == 1,
              p.holds ? "propagates" : "R^" + std::to_string(p.first_failure) + " not inside the next");
        r.add("not-cohen-macaulay", !cm_propagation_check(delta));
    });
    run_case(r, "union", [&] {
        const auto u = union_consistency_check(delta, 2);
        if (u.hypothesis_met)
            r.add("union-i2", false, "nonvanishing hypothesis unexpectedly met");
        else
            r.skip("union-i2", "W_2 = 0, hypothesis not met; no assertion");
    });
    run_case(r, "hochster", [&] {
        Vector a(4);
        a[0] = 1;
        a[1] = 1;
        const auto dims = delta_a_cohomology(delta, a);
        const auto h = hochster_check(delta, set_of(n, {1, 2}));
        bool via_edge = false;
        for (const auto& t : h.terms)
            via_edge = via_edge || (t.i == 2 && t.sigma == set_of(n, {3, 4}) && t.contribution == 1);
        r.add("delta-a-H2", dims[2] == 1 && via_edge, "dims " + list_string(dims));
        r.add("link-irrelevant", link(delta, set_of(n, {1, 2}), set_of(n, {3, 4})).is_irrelevant() &&
                                     link(delta, set_of(n, {1, 2}), set_of(n, {3})).is_irrelevant());
    });
    run_case(r, "fixed-degree", [&] {
        const auto f = fixed_degree_resonance_check(delta);
        r.add("fixed-degree", f.d == 1 && f.support_d1.is_empty() && !f.jump_d1.is_empty(),
              "R~_2 = " + f.support_d1.describe() + ", R^2 = " + f.jump_d1.describe());
    });
    r.seconds = seconds_since(start);
    return r;
}

VerificationReport verify_tetrahedron_minus_face()
{
    const auto start = Clock::now();
    VerificationReport r;
    r.suite = "tetrahedron-minus-face";
    const SimplicialComplex delta = tetrahedron_minus_face();
    const int n = 4;
    const Mask base = set_of(n, {1, 2, 3});
    run_case(r, "resonance", [&] {
        const auto s2 = support_resonance(delta, 2), j2 = jump_resonance(delta, 2);
        r.add("support-R2", s2.components() == std::vector<Mask>{base}, "R~_2 = " + s2.describe());
        r.add("jump-R2", j2.components() == std::vector<Mask>{base}, "R^2 = " + j2.describe());
        const auto f = fixed_degree_resonance_check(delta);
        r.add("fixed-degree-items", f.ok() && f.d == 2,
              "d = " + std::to_string(f.d) + ", R~_3 = " + f.support_d1.describe() + ", R^3 = " + f.jump_d1.describe());
        r.add("support-R3-empty", f.support_d1.is_empty());
    });
    run_case(r, "hochster-breakdown", [&] {
        const auto h = hochster_check(delta, base);
        std::string terms;
        bool empty_face_term = false;
        std::size_t vertex4_term = 0;
        for (const auto& t : h.terms) {
            if (t.i != 2)
                continue;
            terms += format_set(t.sigma) + ":" + std::to_string(t.contribution) + " ";
            if (t.sigma == 0)
                empty_face_term = t.contribution == 1;
            if (t.sigma == set_of(n, {4}))
                vertex4_term = t.contribution;
        }
        const bool link_is_triangle =
            link(delta, base, set_of(n, {4})) == SimplicialComplex::from_facets(4, {{1, 2}, {1, 3}, {2, 3}});
        r.add("hochster-i2", h.sums[2] >= 1 && empty_face_term,
              "i=2 terms " + terms + "; term at {4} is " + std::to_string(vertex4_term) +
                  (link_is_triangle ? " (its link is the triangle boundary)" : ""));
    });
    run_case(r, "structure", [&] {
        r.add("skeleton-degree", skeleton_complete_degree(delta) == 2);
        r.add("restriction-triangle", restriction(delta, base) ==
                                          SimplicialComplex::from_facets(4, {{1, 2}, {1, 3}, {2, 3}}));
        r.add("top-strand-free", top_strand_has_no_boundaries(delta, 2));
    });
    r.seconds = seconds_since(start);
    return r;
}

VerificationReport verify_chen()
{
    const auto start = Clock::now();
    VerificationReport r;
    r.suite = "chen";
    run_case(r, "C4", [&] {
        const int max_degree = 10;
        const auto c = chen_ranks(SimplicialComplex::cycle(4), max_degree);
        bool ok = c.hilbert.size() == static_cast<std::size_t>(max_degree) + 1;
        for (int a = 0; ok && a <= max_degree; ++a)
            ok = c.hilbert[a] == 2 * (a + 1);
        r.add("C4-hilbert", ok, "W_Γ: " + list_string(c.hilbert));
        r.add("C4-Q", c.q_coefficients == std::vector<std::int64_t>{0, 0, 2, 0, 0},
              "Q coefficients " + list_string(c.q_coefficients));
        const auto brute = strand_hilbert_function(SimplicialComplex::cycle(4), 1, max_degree + 2);
        r.add("C4-brute-force", std::vector<std::int64_t>(brute.begin() + 2, brute.end()) == c.hilbert,
              "strand dimensions " + list_string(brute));
    });
    for (int n = 2; n <= 6; ++n) {
        const std::string id = "K" + std::to_string(n);
        run_case(r, id, [&] {
            const auto c = chen_ranks(SimplicialComplex::complete_graph(n), 8);
            bool zero = true;
            for (auto v : c.hilbert)
                zero = zero && v == 0;
            for (auto v : c.q_coefficients)
                zero = zero && v == 0;
            r.add(id, zero, "hilbert " + list_string(c.hilbert) + ", Q " + list_string(c.q_coefficients));
        });
    }
    r.seconds = seconds_since(start);
    return r;
}

VerificationReport verify_worked_examples()
{
    const auto start = Clock::now();
    VerificationReport r;
    r.suite = "worked-examples";
    const SimplicialComplex c4 = SimplicialComplex::cycle(4);
    const SimplicialComplex path = SimplicialComplex::path(4);

    run_case(r, "construction", [&] {
        const auto te = two_edges();
        r.add("two-edges-faces", te.face_count() == 7 && te.contains(set_of(4, {1, 2})) && !te.contains(set_of(4, {1, 3})));
        r.add("void", SimplicialComplex::from_facets(3, {}).is_void());
        r.add("dedup", SimplicialComplex::from_facets(4, {{1, 2}, {1, 2}}) == SimplicialComplex::from_facets(4, {{1, 2}}));
        r.add("restriction-C4", restriction(c4, set_of(4, {1, 3})) == SimplicialComplex::from_facets(4, {{1}, {3}}));
        r.add("link-empty-face", link(path, set_of(4, {1, 2, 3}), 0) == restriction(path, set_of(4, {1, 2, 3})));
    });
    run_case(r, "skeleta", [&] {
        r.add("graph-degree", skeleton_complete_degree(path) == 1);
        r.add("K4-triangles-degree", skeleton_complete_degree(tetrahedron_minus_face()) == 2);
        r.add("two-edges-degree", skeleton_complete_degree(two_edges()) == 1);
        r.add("path-missing-edges",
              missing_faces(path, 1) == std::vector<Mask>{set_of(4, {1, 3}), set_of(4, {1, 4}), set_of(4, {2, 4})});
        r.add("path-flag-completion", flag_completion(path) == path);
        r.add("simplex-no-missing", missing_faces(SimplicialComplex::simplex(4), 2).empty());
    });
    run_case(r, "homology", [&] {
        const auto two_points = reduced_homology(SimplicialComplex::from_facets(2, {{1}, {2}}));
        const auto triangle = reduced_homology(SimplicialComplex::cycle(3));
        r.add("two-points", two_points(0) == 1);
        r.add("three-cycle", triangle(1) == 1 && triangle(0) == 0);
        r.add("irrelevant", reduced_homology(SimplicialComplex::irrelevant(3))(-1) == 1);
        const auto c4h = all_subset_homology(c4, 1);
        std::vector<Mask> nz;
        for (std::size_t b = 0; b < c4h.size(); ++b)
            if (c4h[b])
                nz.push_back(b);
        r.add("C4-subsets", nz == std::vector<Mask>{set_of(4, {1, 3}), set_of(4, {2, 4})}, masks_string(nz));
        const auto ph = all_subset_homology(path, 1);
        nz.clear();
        for (std::size_t b = 0; b < ph.size(); ++b)
            if (ph[b])
                nz.push_back(b);
        std::vector<Mask> expected{set_of(4, {1, 3}), set_of(4, {1, 4}), set_of(4, {2, 4}), set_of(4, {1, 2, 4}),
                                   set_of(4, {1, 3, 4})};
        std::sort(expected.begin(), expected.end());
        r.add("path-subsets", nz == expected, masks_string(nz));
    });
    run_case(r, "koszul", [&] {
        const auto w = build_W(c4, 1);
        r.add("C4-module-support", w.nonzero_degrees() == std::vector<Mask>{set_of(4, {1, 3}), set_of(4, {2, 4})});
        const auto single = specialize_single(hilbert_series_combinatorial(c4, 1), 4);
        r.add("C4-single", single == std::vector<std::int64_t>{0, 0, 2, 4, 6}, list_string(single));
        const auto psingle = specialize_single(hilbert_series_combinatorial(path, 1), 3);
        r.add("path-single", psingle == std::vector<std::int64_t>{0, 0, 3, 8}, list_string(psingle));
        const auto coker = cokernel_hilbert_function(presentation_matrix(path), 6);
        r.add("path-presentation", coker == specialize_single(hilbert_series_combinatorial(path, 1), 6),
              list_string(coker));
        const auto pm = pair_module_hilbert(3, 1, {}, 4);
        r.add("pair-module-free", pm == std::vector<std::int64_t>{0, 0, 3, 8, 15}, list_string(pm));
        r.add("simplex-zero", build_W(SimplicialComplex::simplex(4), 2).is_zero() &&
                                  betti_table(build_W(SimplicialComplex::simplex(4), 2)).is_zero());
    });
    run_case(r, "resonance", [&] {
        const auto s = support_resonance(path, 1);
        r.add("path-support", s.components() == std::vector<Mask>{set_of(4, {1, 2, 4}), set_of(4, {1, 3, 4})},
              s.describe());
        const auto c4ann = annihilator(c4, 1);
        r.add("C4-annihilator", c4ann == SquareFreeMonomialIdeal::from_components(4, {set_of(4, {1, 3}), set_of(4, {2, 4})}),
              masks_string(c4ann.generators()));
        r.add("simplex-annihilator-unit", annihilator(SimplicialComplex::simplex(3), 1).is_unit());
        r.add("path-union", union_consistency_check(path, 1).equal);
        r.add("C4-union", union_consistency_check(c4, 1).equal);
        r.add("jump-zero-origin", jump_resonance(path, 0).is_origin());
        r.add("sphere-cm", cm_propagation_check(SimplicialComplex::simplex_boundary(4)) &&
                               propagation_check(SimplicialComplex::simplex_boundary(4)).holds);
        r.add("simplex-cm", cohen_macaulay_check(SimplicialComplex::simplex(3)));
        const auto k4 = fixed_degree_resonance_check(SimplicialComplex::complete_graph(4));
        r.add("K4-fixed-degree", k4.ok(), "R~_2 = " + k4.support_d1.describe());
        const auto zero = delta_a_cohomology(two_edges(), Vector(4));
        r.add("delta-zero", zero == std::vector<std::size_t>{1, 4, 2, 0, 0}, list_string(zero));
    });
    r.seconds = seconds_since(start);
    return r;
}

// ---- corpus suites ----------------------------------------------------------

VerificationReport verify_duality_suite(const std::vector<SimplicialComplex>& corpus)
{
    const auto start = Clock::now();
    VerificationReport r;
    r.suite = "duality";
    std::size_t checked = 0;
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        const auto& delta = corpus[k];
        const std::string id = "complex-" + std::to_string(k);
        run_case(r, id, [&] {
            const int n = delta.n();
            std::string bad;
            std::size_t here = 0;
            for (int i = 1; i <= n && bad.empty(); ++i)
                for (std::size_t b = 0; b < (std::size_t{1} << n); ++b) {
                    const auto d = verify_duality(delta, i, SquareFreeDegree(n, b));
                    ++here;
                    if (!d.agree()) {
                        bad = d.describe();
                        break;
                    }
                }
            checked += here;
            r.add(id, bad.empty(), label(delta) + (bad.empty() ? ", " + std::to_string(here) + " pieces" : ": " + bad));
        });
    }
    r.seconds = seconds_since(start);
    r.add("summary", true, std::to_string(checked) + " (i, b) pieces compared three ways");
    return r;
}

VerificationReport verify_hilbert_suite(const std::vector<SimplicialComplex>& corpus)
{
    const auto start = Clock::now();
    VerificationReport r;
    r.suite = "hilbert";
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        const auto& delta = corpus[k];
        const std::string id = "complex-" + std::to_string(k);
        run_case(r, id, [&] {
            const int n = delta.n();
            const int max_degree = 2 * n;
            const auto brute = strand_hilbert_functions(delta, max_degree);
            std::string bad;
            for (int i = 0; i <= n && bad.empty(); ++i) {
                const auto comb = hilbert_series_combinatorial(delta, i);
                const auto from_module = hilbert_series_from_module(build_W(delta, i));
                if (!(comb == from_module))
                    bad = "i=" + std::to_string(i) + ": combinatorial and module series differ";
                else if (specialize_single(comb, max_degree) != brute[i])
                    bad = "i=" + std::to_string(i) + ": single grading " + list_string(specialize_single(comb, max_degree)) +
                          " vs strands " + list_string(brute[i]);
            }
            r.add(id, bad.empty(), label(delta) + (bad.empty() ? "" : ": " + bad));
        });
    }
    r.seconds = seconds_since(start);
    return r;
}

VerificationReport verify_hochster_suite(const std::vector<SimplicialComplex>& corpus, std::uint64_t seed)
{
    const auto start = Clock::now();
    VerificationReport r;
    r.suite = "hochster";
    std::mt19937_64 rng(seed ^ 0x5eedULL);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        const auto& delta = corpus[k];
        const int n = delta.n();
        if (n > 6)
            continue;
        const std::string id = "complex-" + std::to_string(k);
        run_case(r, id, [&] {
            for (std::size_t v = 0; v < (std::size_t{1} << n); ++v)
                hochster_check(delta, v);
            // An arbitrary rational vector against the indicator of its support.
            for (int trial = 0; trial < 4; ++trial) {
                Vector a(static_cast<std::size_t>(n)), ind(static_cast<std::size_t>(n));
                for (int j = 0; j < n; ++j) {
                    int p = num(rng);
                    if (trial == 0 && p == 0)
                        p = 1;
                    a[j] = Rational(p, den(rng));
                    a[j].canonicalize();
                    ind[j] = p != 0 ? 1 : 0;
                }
                if (delta_a_cohomology(delta, a) != delta_a_cohomology(delta, ind))
                    throw OracleError("cohomology of a differs from that of its support indicator");
            }
            r.add(id, true, label(delta) + ", " + std::to_string(std::size_t{1} << n) + " supports");
        });
    }
    r.seconds = seconds_since(start);
    return r;
}

VerificationReport verify_squarefree_suite(const std::vector<SimplicialComplex>& corpus, int jobs)
{
    const auto start = Clock::now();
    VerificationReport r;
    r.suite = "squarefree";
    std::size_t violations = 0;
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        const auto& delta = corpus[k];
        const std::string id = "complex-" + std::to_string(k);
        run_case(r, id, [&] {
            const int n = delta.n();
            std::string bad;
            for (int i = 1; i <= n && bad.empty(); ++i) {
                const SquareFreeModule w = build_W(delta, i, jobs); // checks commuting squares
                if (w.first_commutativity_violation()) {
                    bad = "i=" + std::to_string(i) + ": off-support squares do not commute";
                    break;
                }
                for (Mask b : w.nonzero_degrees()) {
                    for (int j = 0; j < n && bad.empty(); ++j)
                        if ((b >> j & 1) && !on_support_multiplication_is_iso(delta, i, w, b, j))
                            bad = "i=" + std::to_string(i) + ": x_" + std::to_string(j + 1) + " not an isomorphism at " +
                                  format_set(b);
                }
                if (!bad.empty())
                    break;
                // Tor of the module vanishes at multidegrees with an entry 2.
                if (!w.is_zero()) {
                    for (std::size_t b = 0; b < (std::size_t{1} << n) && bad.empty(); ++b)
                        for (int j = 0; j < n; ++j) {
                            if (!(b >> j & 1))
                                continue;
                            Exponents a = indicator(n, b);
                            ++a[j];
                            for (std::size_t t : module_tor_dimensions(w, a))
                                if (t != 0)
                                    bad = "i=" + std::to_string(i) + ": Tor nonzero at a non-square-free degree";
                            if (!bad.empty())
                                break;
                        }
                }
                if (!bad.empty())
                    break;
                if (!(module_support(w) == support_resonance(delta, i)))
                    bad = "i=" + std::to_string(i) + ": module support differs from homology support";
                else if (!(annihilator(delta, i) == annihilator_of_module(w)))
                    bad = "i=" + std::to_string(i) + ": annihilator differs from brute force";
            }
            if (!bad.empty())
                ++violations;
            r.add(id, bad.empty(), label(delta) + (bad.empty() ? "" : ": " + bad));
        });
    }
    r.seconds = seconds_since(start);
    r.add("summary", violations == 0, std::to_string(violations) + " violations");
    return r;
}

VerificationReport verify_bounds_suite(const std::vector<SimplicialComplex>& corpus, int jobs)
{
    const auto start = Clock::now();
    VerificationReport r;
    r.suite = "bounds";
    std::size_t sharp_cases = 0;
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        const auto& delta = corpus[k];
        const std::string id = "complex-" + std::to_string(k);
        run_case(r, id, [&] {
            const int n = delta.n();
            std::string bad;
            for (int i = 1; i <= n && bad.empty(); ++i) {
                const BoundsReport b = regularity_bounds_check(delta, i, jobs);
                if (b.sharp_bound_applies)
                    ++sharp_cases;
                if (!b.ok()) {
                    std::ostringstream os;
                    os << "i=" << i << " reg " << (b.regularity ? std::to_string(*b.regularity) : "-inf") << " pdim "
                       << b.pdim << (b.regularity_within_n ? "" : " [reg > n]")
                       << (b.pdim_within_bound ? "" : " [pdim > n-i-1]")
                       << (b.generator_degree_floor ? "" : " [generator below degree i+1]")
                       << (b.sharp_bound_holds ? "" : " [reg W_d > n-2]");
                    bad = os.str();
                }
            }
            if (bad.empty() && !delta.is_void()) {
                if (const auto d = skeleton_complete_degree(delta)) {
                    for (int i = 1; i <= n; ++i) {
                        if (i == *d || i == *d + 1)
                            continue;
                        if (!hilbert_series_combinatorial(delta, i).is_zero() || !build_W(delta, i, jobs).is_zero()) {
                            bad = "W_" + std::to_string(i) + " nonzero with d=" + std::to_string(*d);
                            break;
                        }
                    }
                }
            }
            r.add(id, bad.empty(), label(delta) + (bad.empty() ? "" : ": " + bad));
        });
    }
    r.add("sharp-bound-coverage", sharp_cases > 0, std::to_string(sharp_cases) + " cases with reg W_d <= n-2 applicable");
    r.seconds = seconds_since(start);
    return r;
}

VerificationReport verify_pair_module_suite(const std::vector<SimplicialComplex>& corpus)
{
    const auto start = Clock::now();
    VerificationReport r;
    r.suite = "pair-module";
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        const auto& delta = corpus[k];
        if (delta.is_void() || delta.n() > 6)
            continue;
        const auto d = skeleton_complete_degree(delta);
        if (!d || *d < 1)
            continue;
        const std::string id = "complex-" + std::to_string(k);
        run_case(r, id, [&] {
            const int max_degree = *d + 4;
            const auto combinatorial = specialize_single(hilbert_series_combinatorial(delta, *d), max_degree);
            const auto presented = cokernel_hilbert_function(presentation_matrix(delta), max_degree);
            const auto pair = pair_module_hilbert(delta.n(), *d, face_subspace(delta, *d), max_degree);
            const bool top = top_strand_has_no_boundaries(delta, *d);
            const bool ok = combinatorial == presented && presented == pair && top;
            r.add(id, ok,
                  label(delta) + ", d=" + std::to_string(*d) + ": " + list_string(combinatorial) +
                      (ok ? "" : " vs presentation " + list_string(presented) + " vs pair module " + list_string(pair) +
                                     (top ? "" : " [incoming strand map into position d+1 nonzero]")));
        });
    }
    r.seconds = seconds_since(start);
    return r;
}

// ---- dispatch ---------------------------------------------------------------

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"examples", "fitting-path4", "duality",     "hilbert", "hochster",
                                                "squarefree", "bounds",       "chen",        "pair-module", "all"};
    return names;
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& options)
{
    const auto corpus = [&] { return random_corpus(options.corpus); };
    if (name == "examples") {
        VerificationReport r;
        r.suite = "examples";
        r.merge(verify_fitting_path4());
        r.merge(verify_cycle_family(4, 9, options.jobs));
        r.merge(verify_two_edges());
        r.merge(verify_tetrahedron_minus_face());
        r.merge(verify_chen());
        r.merge(verify_worked_examples());
        return r;
    }
    if (name == "fitting-path4")
        return verify_fitting_path4();
    if (name == "duality")
        return verify_duality_suite(corpus());
    if (name == "hilbert")
        return verify_hilbert_suite(corpus());
    if (name == "hochster")
        return verify_hochster_suite(corpus(), options.corpus.seed);
    if (name == "squarefree")
        return verify_squarefree_suite(corpus(), options.jobs);
    if (name == "bounds") {
        VerificationReport r = verify_bounds_suite(corpus(), options.jobs);
        const auto cycles = verify_cycle_family(4, 9, options.jobs);
        for (const auto& c : cycles.cases)
            r.cases.push_back({"cycles/" + c.id, c.status, c.details});
        r.seconds += cycles.seconds;
        return r;
    }
    if (name == "chen")
        return verify_chen();
    if (name == "pair-module")
        return verify_pair_module_suite(corpus());
    if (name == "all") {
        VerificationReport r;
        r.suite = "all";
        for (const auto& n : suite_names())
            if (n != "all")
                r.merge(run_suite(n, options));
        return r;
    }
    throw InputError("unknown suite \"" + name + "\"");
}

} // namespace skm
