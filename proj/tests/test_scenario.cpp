#include <doctest.h>

#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "hodgechase/scenario.hpp"

using namespace hodgechase;

namespace {

ChaseError::Kind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const ChaseError& e) {
        return e.kind;
    }
    throw std::runtime_error("expected a ChaseError");
}

CurveData elliptic(const std::string& label) { return CurveData::smooth(label, 1); }

}  // namespace

TEST_CASE("resolution chase: one simple elliptic singularity on a blown-up K3") {
    ResolvedPiece p{profiles::k3_blowup(), {elliptic("E")}, {}};
    const BigradedDims h2 = evaluate_piece(p);
    CHECK(h2 == BigradedDims{{{2, 0}, 1}, {{0, 2}, 1}, {{1, 0}, 1}, {{0, 1}, 1}});
    CHECK(hodge_type_of(h2) == HodgeType{0, 1});
}

TEST_CASE("resolution chase: a cycle contributes weight zero instead") {
    ResolvedPiece p{profiles::k3_blowup(), {CurveData::cycle_of_rationals(2)}, {}};
    const BigradedDims h2 = evaluate_piece(p);
    CHECK(h2 == BigradedDims{{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, 1}});
    CHECK(hodge_type_of(h2) == HodgeType{1, 0});

    SUBCASE("the cycle length never matters") {
        for (long length : {1L, 3L, 7L}) {
            ResolvedPiece q{profiles::k3_blowup(), {CurveData::cycle_of_rationals(length)}, {}};
            CHECK(evaluate_piece(q) == h2);
        }
    }
}

TEST_CASE("resolution chase: two singularities on a rational resolution") {
    ResolvedPiece p{profiles::rational(), {elliptic("E1"), elliptic("E2")}, {}};
    CHECK(hodge_type_of(evaluate_piece(p)) == HodgeType{0, 2});

    ResolvedPiece mixed{profiles::rational(),
                        {elliptic("E"), CurveData::cycle_of_rationals(2)}, {}};
    CHECK(hodge_type_of(evaluate_piece(mixed)) == HodgeType{1, 1});
}

TEST_CASE("a resolution with H^1 must annotate the first map") {
    ResolvedPiece bare{profiles::ruled_over_elliptic(),
                       {elliptic("E1"), elliptic("E2"), elliptic("E3")}, {}};
    CHECK(kind_of([&] { resolution_sequence(bare); }) == ChaseError::Kind::Underdetermined);

    ResolvedPiece annotated = bare;
    annotated.overrides = {RankAnnotation::all(1, RankRule::Injective)};
    const BigradedDims h2 = evaluate_piece(annotated);
    CHECK(h2 == BigradedDims::weight_one(2));
    CHECK(hodge_type_of(h2) == HodgeType{0, 2});
}

TEST_CASE("a resolved piece without exceptional curves is invalid") {
    ResolvedPiece p{profiles::k3_blowup(), {}, {}};
    CHECK(kind_of([&] { resolution_sequence(p); }) == ChaseError::Kind::InvalidProblem);
}

TEST_CASE("default annotations document the truncation conventions") {
    ResolvedPiece p{profiles::k3_blowup(), {elliptic("E")}, {}};
    const ExactSequenceProblem res = resolution_sequence(p);
    REQUIRE(res.annotations.size() == 1);
    CHECK(res.annotations[0] == RankAnnotation::all(4, RankRule::Surjective));

    NonNormalScenario nn;
    nn.pieces.push_back(SmoothPiece{profiles::k3()});
    nn.d = CurveData::smooth("D", 0);
    nn.dbar = CurveData::smooth("Dbar", 1);
    const ExactSequenceProblem norm = normalization_sequence(nn);
    REQUIRE(norm.annotations.size() == 1);
    CHECK(norm.annotations[0] == RankAnnotation::all(1, RankRule::Injective));

    SUBCASE("an explicit annotation on the same map suppresses the default") {
        nn.overrides = {RankAnnotation::at(1, PQ{1, 0}, 0L), RankAnnotation::at(1, PQ{0, 1}, 0L)};
        const ExactSequenceProblem overridden = normalization_sequence(nn);
        CHECK(overridden.annotations.size() == 2);
    }
}

TEST_CASE("a normalization piece with H^1 must annotate the first map") {
    NonNormalScenario nn;
    nn.pieces.push_back(SmoothPiece{profiles::ruled_over_elliptic()});
    nn.d = CurveData::smooth("D", 0);
    nn.dbar = CurveData::smooth("Dbar", 1);
    CHECK(kind_of([&] { normalization_sequence(nn); }) == ChaseError::Kind::Underdetermined);

    nn.overrides = {RankAnnotation::all(1, RankRule::Injective)};
    Scenario s;
    s.id = "ruled-test";
    s.kind = nn;
    CHECK(evaluate_unchecked(s).type == HodgeType{0, 0});
}

TEST_CASE("a resolved piece with unresolved H^1 cannot enter a normalization") {
    NonNormalScenario nn;
    nn.pieces.push_back(ResolvedPiece{profiles::ruled_over_elliptic(),
                                      {elliptic("E1")},
                                      {RankAnnotation::all(1, RankRule::Injective)}});
    nn.d = CurveData::smooth("D", 0);
    nn.dbar = CurveData::smooth("Dbar", 1);
    CHECK(kind_of([&] { normalization_sequence(nn); }) == ChaseError::Kind::Underdetermined);
}

TEST_CASE("catalog structure: unique ids, resolvable chains, declared expectations") {
    const Catalog& cat = builtin_catalog();
    CHECK(cat.scenarios.size() == 46);
    CHECK(cat.chains.size() == 13);

    std::set<std::string> ids;
    for (const auto& s : cat.scenarios) {
        CHECK(ids.insert(s.id).second);
        CHECK(s.expected.has_value());
        CHECK_FALSE(s.citation.empty());
    }
    for (const auto& chain : cat.chains) {
        CHECK(chain.scenario_ids.size() >= 2);
        for (const auto& id : chain.scenario_ids)
            CHECK(cat.find(id) != nullptr);
    }
    CHECK(cat.find("no-such-scenario") == nullptr);
    CHECK_THROWS_AS(cat.at("no-such-scenario"), Error);
}

TEST_CASE("catalog: every scenario evaluates to its declared type") {
    for (const auto& s : builtin_catalog().scenarios) {
        CAPTURE(s.id);
        REQUIRE(s.expected.has_value());
        CHECK(evaluate_unchecked(s).type == *s.expected);
        CHECK_NOTHROW(evaluate(s));
    }
}

TEST_CASE("catalog: stratum types recorded independently") {
    const std::map<std::string, HodgeType> expected = {
        {"stratum-n1", {0, 1}},  {"stratum-n2", {0, 1}},   {"stratum-n22", {0, 2}},
        {"stratum-n12", {0, 2}}, {"stratum-n11r", {0, 2}}, {"stratum-n11e", {0, 2}},
        {"stratum-n111", {0, 2}}, {"stratum-n112", {0, 2}},
    };
    const Catalog& cat = builtin_catalog();
    for (const auto& [id, type] : expected) {
        CAPTURE(id);
        CHECK(evaluate_unchecked(cat.at(id)).type == type);
    }
}

TEST_CASE("catalog: the plane family walks through all six types") {
    const std::map<std::string, HodgeType> expected = {
        {"planes-generic", {0, 0}},      {"planes-one-elliptic", {0, 1}},
        {"planes-one-cusp", {1, 0}},     {"planes-two-elliptic", {0, 2}},
        {"planes-elliptic-cusp", {1, 1}}, {"planes-two-cusps", {2, 0}},
    };
    const Catalog& cat = builtin_catalog();
    std::set<HodgeType> seen;
    for (const auto& [id, type] : expected) {
        CAPTURE(id);
        const Scenario& s = cat.at(id);
        CHECK(s.normal());
        CHECK(evaluate_unchecked(s).type == type);
        seen.insert(type);
    }
    CHECK(seen.size() == 6);
}

TEST_CASE("generic covers: all five degree rows from the degrees alone") {
    struct Row {
        long deg_d;
        long chi_xbar;
        long chi_dbar;
        long chi_d;
        long branch;
        CoverGenus dbar;
        HodgeType type;
    };
    const std::vector<Row> rows = {
        {1, 2, 0, 1, 4, CoverGenus{{1}}, {0, 1}},   {2, 1, -1, 1, 6, CoverGenus{{2}}, {0, 2}},
        {3, 1, -1, 1, 6, CoverGenus{{2}}, {0, 2}},  {4, 1, -2, 0, 4, CoverGenus{{3}}, {0, 2}},
        {5, 2, -2, -1, 0, CoverGenus{{2, 2}}, {0, 2}},
    };
    for (const auto& row : rows) {
        CAPTURE(row.deg_d);
        const Scenario s = build_nonnormal_cover(row.deg_d);
        REQUIRE(s.numerics.has_value());
        REQUIRE(s.cover.has_value());
        CHECK(s.numerics->chi_xbar == row.chi_xbar);
        CHECK(s.numerics->chi_dbar == row.chi_dbar);
        CHECK(s.numerics->chi_d == row.chi_d);
        CHECK(s.numerics->log_canonical_square == Rational(1));
        CHECK(check_triple(*s.numerics).passed());
        CHECK(s.cover->deg_g == 10 - 2 * row.deg_d);
        CHECK(s.cover->branch_points_used == row.branch);
        CHECK(s.cover->dbar_genus == row.dbar);
        CHECK(s.cover->vertex_on_d == (row.deg_d % 2 != 0));
        CHECK(evaluate_unchecked(s).type == row.type);
    }
    CHECK_THROWS_AS(build_nonnormal_cover(0), Error);
    CHECK_THROWS_AS(build_nonnormal_cover(6), Error);
}

TEST_CASE("the split cover has two pieces and an unramified split conductor cover") {
    const Scenario s = build_nonnormal_cover(5);
    const auto& nn = std::get<NonNormalScenario>(s.kind);
    REQUIRE(nn.pieces.size() == 2);
    CHECK(nn.dbar.component_count() == 2);
    CHECK(nn.dbar.connected_components() == 2);
    CHECK(s.cover->branch_points_used == 0);
    CHECK(s.cover->dbar_genus.split());
}

TEST_CASE("catalog: declared gluing triples all check out") {
    long with_numerics = 0;
    for (const auto& s : builtin_catalog().scenarios) {
        if (!s.numerics)
            continue;
        ++with_numerics;
        CAPTURE(s.id);
        CHECK(check_triple(*s.numerics).passed());
    }
    CHECK(with_numerics >= 13);
}

TEST_CASE("catalog-wide diamond invariants") {
    for (const auto& s : builtin_catalog().scenarios) {
        CAPTURE(s.id);
        const Evaluation ev = evaluate_unchecked(s);
        CHECK_NOTHROW(ev.h2_edge.validate());
        CHECK(ev.h2_edge.at(1, 1) == 0);
        for (const auto& [pq, dim] : ev.h2_edge.entries())
            CHECK((pq.p <= 2 && pq.q <= 2));
        // One weight filtration: whatever leaves the pure part lands in the
        // lower-weight slots, so the geometric genus drops in lockstep.
        CHECK(ev.h2_edge.at(2, 0) == 2 - ev.type.r - ev.type.s);
        CHECK(ev.h2_edge.at(2, 0) == ev.h2_edge.at(0, 2));
        CHECK(ev.h2_edge.at(1, 0) == ev.type.s);
        CHECK(ev.h2_edge.at(0, 0) == ev.type.r);
    }
}

TEST_CASE("every chase in the catalog telescopes to alternating sum zero") {
    for (const auto& s : builtin_catalog().scenarios) {
        CAPTURE(s.id);
        for (const auto& problem : scenario_problems(s)) {
            const BigradedDims solved = solve(problem);
            const std::size_t u = problem.unknown_index();
            std::set<PQ> slots;
            for (const auto& t : problem.terms)
                if (t.known())
                    for (const auto& [pq, d] : t.dims->entries())
                        slots.insert(pq);
            for (const auto& [pq, d] : solved.entries())
                slots.insert(pq);
            for (const PQ& pq : slots) {
                long alt = 0;
                long sign = 1;
                for (std::size_t i = 0; i < problem.terms.size(); ++i) {
                    const long dim = problem.terms[i].known()
                                         ? problem.terms[i].dims->at(pq.p, pq.q)
                                         : solved.at(pq.p, pq.q);
                    alt += sign * dim;
                    sign = -sign;
                    (void)u;
                }
                CHECK(alt == 0);
            }
        }
    }
}

TEST_CASE("round trip: blanking any known term of any catalog chase recovers it") {
    for (const auto& s : builtin_catalog().scenarios) {
        CAPTURE(s.id);
        for (const auto& problem : scenario_problems(s)) {
            const BigradedDims solved = solve(problem);
            const std::size_t u = problem.unknown_index();
            for (std::size_t blank = 0; blank < problem.terms.size(); ++blank) {
                if (!problem.terms[blank].known())
                    continue;
                ExactSequenceProblem q = problem;
                const BigradedDims original = *q.terms[blank].dims;
                q.terms[blank].dims.reset();
                q.terms[u].dims = solved;
                CHECK(solve(q) == original);
            }
        }
    }
}

TEST_CASE("nested resolutions feed the normalization sequence") {
    const Scenario& s = builtin_catalog().at("cover-d1-quadruple");
    CHECK(scenario_problems(s).size() == 2);
    CHECK(evaluate_unchecked(s).type == HodgeType{0, 2});
}

TEST_CASE("expectation mismatches are reported, not silently dropped") {
    Scenario s = builtin_catalog().at("planes-generic");
    s.expected = HodgeType{0, 1};
    CHECK_THROWS_AS(evaluate(s), ExpectationMismatch);
}

TEST_CASE("the h^{1,1} bound is enforced when declared") {
    Scenario generic = builtin_catalog().at("planes-generic");
    REQUIRE(generic.h11 == 29);
    CHECK_NOTHROW(evaluate(generic));

    Scenario tight = builtin_catalog().at("planes-two-cusps");
    tight.h11 = 1;  // <2,0> needs r + 2s = 2
    CHECK_THROWS_AS(evaluate(tight), ExpectationMismatch);
    tight.h11 = 2;
    CHECK_NOTHROW(evaluate(tight));
}

TEST_CASE("chains: every catalog chain is monotone in the polarized order") {
    const Catalog& cat = builtin_catalog();
    for (const auto& chain : cat.chains) {
        CAPTURE(chain.id);
        const ChainReport report = verify_chain(cat, chain);
        CHECK(report.monotone);
        CHECK(report.failure.empty());
        CHECK(report.steps.size() == chain.scenario_ids.size());
    }
}

TEST_CASE("a backwards chain is flagged with the offending pair") {
    const Catalog& cat = builtin_catalog();
    const DegenerationChain bad{"bad", {"planes-one-cusp", "planes-one-elliptic"}};
    const ChainReport report = verify_chain(cat, bad);
    CHECK_FALSE(report.monotone);
    CHECK(report.failure.find("planes-one-cusp") != std::string::npos);
    CHECK(report.failure.find("planes-one-elliptic") != std::string::npos);
}

TEST_CASE("realization: the full catalog covers all types and all cover edges") {
    const RealizationReport all = realization_report(builtin_catalog());
    CHECK(all.passed());
    CHECK(all.realized.size() == 6);
    CHECK(all.covered_edges.size() == 6);

    const RealizationReport normal = realization_report(builtin_catalog(), true);
    CHECK(normal.passed());
    CHECK(normal.realized.size() == 6);
    CHECK(normal.covered_edges.size() == 6);
}

TEST_CASE("realization: dropping a type or an edge is detected") {
    const Catalog& full = builtin_catalog();
    Catalog small;
    for (const char* id : {"planes-generic", "planes-one-elliptic", "planes-one-cusp",
                           "planes-elliptic-cusp"})
        small.scenarios.push_back(full.at(id));
    small.chains.push_back(DegenerationChain{
        "partial", {"planes-generic", "planes-one-elliptic", "planes-one-cusp",
                    "planes-elliptic-cusp"}});

    const RealizationReport rep = realization_report(small);
    CHECK_FALSE(rep.passed());
    CHECK(rep.missing == std::vector<HodgeType>{{0, 2}, {2, 0}});
    const std::vector<std::pair<HodgeType, HodgeType>> expected_missing = {
        {{0, 1}, {0, 2}}, {{0, 2}, {1, 1}}, {{1, 1}, {2, 0}}};
    CHECK(rep.missing_edges == expected_missing);
}

TEST_CASE("non-monotone chains do not count towards edge coverage") {
    const Catalog& full = builtin_catalog();
    Catalog flawed;
    for (const char* id : {"planes-generic", "planes-one-elliptic"})
        flawed.scenarios.push_back(full.at(id));
    flawed.chains.push_back(
        DegenerationChain{"backwards", {"planes-one-elliptic", "planes-generic"}});
    const RealizationReport rep = realization_report(flawed);
    CHECK(rep.covered_edges.empty());
}
