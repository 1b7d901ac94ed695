#include "hodgechase/scenario.hpp"

#include <set>

#include "hodgechase/errors.hpp"

namespace hodgechase {

const Scenario* Catalog::find(const std::string& id) const {
    for (const auto& s : scenarios)
        if (s.id == id)
            return &s;
    return nullptr;
}

const Scenario& Catalog::at(const std::string& id) const {
    if (const Scenario* s = find(id))
        return *s;
    throw Error("no scenario with id '" + id + "' in the catalog");
}

namespace {

bool annotated_on_map(const std::vector<RankAnnotation>& anns, std::size_t map,
                      std::optional<PQ> pq = std::nullopt) {
    for (const auto& a : anns)
        if (a.map_index == map && (!pq || !a.component || *a.component == *pq))
            return true;
    return false;
}

}  // namespace

BigradedDims piece_h1(const NormalizationPiece& p) {
    if (const auto* smooth = std::get_if<SmoothPiece>(&p))
        return smooth->profile.h1;
    const auto& resolved = std::get<ResolvedPiece>(p);
    if (!resolved.resolution.h1.empty())
        throw ChaseError(ChaseError::Kind::Underdetermined,
                         "H^1 of the surface resolved by '" + resolved.resolution.name +
                             "' is not computed; only pieces whose resolution has H^1 = 0 may "
                             "enter a normalization term");
    return {};
}

ExactSequenceProblem resolution_sequence(const ResolvedPiece& p) {
    p.resolution.validate();
    if (p.exceptional.empty())
        throw ChaseError(ChaseError::Kind::InvalidProblem,
                         "a resolved piece needs at least one exceptional curve");
    BigradedDims exc_h1;
    for (const auto& e : p.exceptional)
        exc_h1 += curve_h1(e);

    // The left truncation would silently claim that H^1 of the resolution
    // injects into the exceptional classes; that claim must be explicit.
    for (const auto& [pq, dim] : p.resolution.h1.entries())
        if (!annotated_on_map(p.overrides, 1, pq))
            throw ChaseError(ChaseError::Kind::Underdetermined,
                             "resolution '" + p.resolution.name + "' has H^1 != 0 at " +
                                 to_string(pq) +
                                 "; annotate its restriction to the exceptional curves");

    ExactSequenceProblem problem;
    problem.terms.push_back(SequenceTerm::make_known(p.resolution.h1, "H1(resolution)"));
    problem.terms.push_back(SequenceTerm::make_known(exc_h1, "H1(exceptional)"));
    problem.terms.push_back(SequenceTerm::make_unknown("H2(contracted surface)"));
    problem.terms.push_back(SequenceTerm::make_known(p.resolution.h2_edge, "H2(resolution)"));
    problem.terms.push_back(SequenceTerm::make_known({}, "H2(exceptional)"));
    problem.annotations = p.overrides;
    // Restriction to the exceptional classes is onto: their intersection
    // matrix is negative definite.
    if (!annotated_on_map(problem.annotations, 4))
        problem.annotations.push_back(RankAnnotation::all(4, RankRule::Surjective));
    return problem;
}

BigradedDims evaluate_piece(const NormalizationPiece& p) {
    if (const auto* smooth = std::get_if<SmoothPiece>(&p)) {
        smooth->profile.validate();
        return smooth->profile.h2_edge;
    }
    return solve(resolution_sequence(std::get<ResolvedPiece>(p)));
}

ExactSequenceProblem normalization_sequence(const NonNormalScenario& s) {
    if (s.pieces.empty())
        throw ChaseError(ChaseError::Kind::InvalidProblem,
                         "a normalization needs at least one piece");
    BigradedDims xbar_h1;
    BigradedDims xbar_h2;
    for (const auto& piece : s.pieces) {
        xbar_h1 += piece_h1(piece);
        xbar_h2 += evaluate_piece(piece);
    }
    // Injectivity of the first map beyond the conductor pullback is not a
    // default fact; a normalization with H^1 must declare it.
    for (const auto& [pq, dim] : xbar_h1.entries())
        if (!annotated_on_map(s.overrides, 1, pq))
            throw ChaseError(ChaseError::Kind::Underdetermined,
                             "the normalization has H^1 != 0 at " + to_string(pq) +
                                 "; annotate the first map of the normalization sequence");

    ExactSequenceProblem problem;
    problem.terms.push_back(
        SequenceTerm::make_known(xbar_h1 + curve_h1(s.d), "H1(Xbar)+H1(D)"));
    problem.terms.push_back(SequenceTerm::make_known(curve_h1(s.dbar), "H1(Dbar)"));
    problem.terms.push_back(SequenceTerm::make_unknown("H2(X)"));
    problem.terms.push_back(SequenceTerm::make_known(xbar_h2, "H2(Xbar)+H2(D)"));
    problem.terms.push_back(SequenceTerm::make_known({}, "H2(Dbar)"));
    problem.annotations = s.overrides;
    // Pullback along the conductor double cover is injective on H^1.
    if (!annotated_on_map(problem.annotations, 1))
        problem.annotations.push_back(RankAnnotation::all(1, RankRule::Injective));
    return problem;
}

std::vector<ExactSequenceProblem> scenario_problems(const Scenario& s) {
    std::vector<ExactSequenceProblem> problems;
    auto add_piece = [&problems](const NormalizationPiece& piece) {
        if (const auto* r = std::get_if<ResolvedPiece>(&piece))
            problems.push_back(resolution_sequence(*r));
    };
    if (const auto* normal = std::get_if<NormalScenario>(&s.kind)) {
        add_piece(normal->piece);
    } else {
        const auto& nn = std::get<NonNormalScenario>(s.kind);
        for (const auto& piece : nn.pieces)
            add_piece(piece);
        problems.push_back(normalization_sequence(nn));
    }
    return problems;
}

Evaluation evaluate_unchecked(const Scenario& s) {
    BigradedDims h2;
    if (const auto* normal = std::get_if<NormalScenario>(&s.kind))
        h2 = evaluate_piece(normal->piece);
    else
        h2 = solve(normalization_sequence(std::get<NonNormalScenario>(s.kind)));
    return Evaluation{h2, hodge_type_of(h2)};
}

Evaluation evaluate(const Scenario& s) {
    const Evaluation ev = evaluate_unchecked(s);
    if (s.expected && !(ev.type == *s.expected))
        throw ExpectationMismatch("scenario '" + s.id + "': computed " + to_string(ev.type) +
                                  " but expected " + to_string(*s.expected));
    if (s.h11 && ev.type.r + 2 * ev.type.s > *s.h11)
        throw ExpectationMismatch("scenario '" + s.id + "': type " + to_string(ev.type) +
                                  " violates r + 2s <= h^{1,1} = " + std::to_string(*s.h11));
    return ev;
}

Scenario build_nonnormal_cover(long deg_d) {
    if (deg_d < 1 || deg_d > 5)
        throw Error("doubled branch degree must be in 1..5, got " + std::to_string(deg_d));
    const long deg_g = 10 - 2 * deg_d;
    const long g_d = wps_curve_genus(deg_d);
    const Rational branch = intersection_count(deg_g, deg_d);
    const long branch_points = branch.as_integer();
    const bool split = deg_g == 0;
    const CoverGenus dbar_genus = riemann_hurwitz_double(
        g_d, branch_points, split ? std::optional(CoverTopology::Split) : std::nullopt);

    NonNormalScenario nn;
    if (split) {
        nn.pieces.push_back(SmoothPiece{profiles::weighted_plane_112()});
        nn.pieces.push_back(SmoothPiece{profiles::weighted_plane_112()});
    } else {
        const long k = deg_g / 2 - 4;
        nn.pieces.push_back(
            SmoothPiece{k == 0 ? profiles::k3() : profiles::del_pezzo(k * k)});
    }
    nn.d = CurveData::smooth("D", g_d);
    if (split) {
        nn.dbar.components.push_back({"Dbar1", dbar_genus.genera[0]});
        nn.dbar.components.push_back({"Dbar2", dbar_genus.genera[1]});
    } else {
        nn.dbar = CurveData::smooth("Dbar", dbar_genus.genera[0]);
    }

    long chi_xbar = 0;
    for (const auto& piece : nn.pieces)
        chi_xbar += std::get<SmoothPiece>(piece).profile.chi;

    Scenario s;
    s.id = "cover-d" + std::to_string(deg_d);
    s.kind = nn;
    s.citation = "generic non-normal double cover of the quadric cone with branch divisor "
                 "B0 + 2D, deg D = " +
                 std::to_string(deg_d);
    s.numerics = TripleNumerics{chi_xbar, dbar_genus.chi(), 1 - g_d, true, true,
                                log_canonical_square(deg_g, deg_d)};
    s.cover = CoverData{deg_d,  deg_g,         g_d, branch, deg_d % 2 != 0,
                        branch_points, dbar_genus};
    return s;
}

ChainReport verify_chain(const Catalog& cat, const DegenerationChain& chain) {
    ChainReport report;
    report.chain_id = chain.id;
    for (const auto& id : chain.scenario_ids)
        report.steps.push_back({id, evaluate_unchecked(cat.at(id)).type});
    for (std::size_t i = 0; i + 1 < report.steps.size(); ++i) {
        const auto& a = report.steps[i];
        const auto& b = report.steps[i + 1];
        if (!polarized_leq(a.type, b.type)) {
            report.monotone = false;
            report.failure = "chain '" + chain.id + "' is not monotone: " + to_string(a.type) +
                             " (" + a.scenario_id + ") -> " + to_string(b.type) + " (" +
                             b.scenario_id + ")";
            break;
        }
    }
    return report;
}

RealizationReport realization_report(const Catalog& cat, bool normal_only) {
    RealizationReport rep;
    std::set<HodgeType> realized;
    for (const auto& s : cat.scenarios) {
        if (normal_only && !s.normal())
            continue;
        realized.insert(evaluate_unchecked(s).type);
    }
    const HodgePoset poset = build_poset();
    for (const auto& t : poset.elements)
        (realized.count(t) ? rep.realized : rep.missing).push_back(t);

    std::set<std::pair<HodgeType, HodgeType>> covered;
    for (const auto& chain : cat.chains) {
        bool eligible = true;
        if (normal_only)
            for (const auto& id : chain.scenario_ids)
                if (!cat.at(id).normal())
                    eligible = false;
        if (!eligible)
            continue;
        const ChainReport cr = verify_chain(cat, chain);
        if (!cr.monotone)
            continue;
        for (std::size_t i = 0; i + 1 < cr.steps.size(); ++i)
            covered.insert({cr.steps[i].type, cr.steps[i + 1].type});
    }
    for (const auto& e : poset.covers)
        (covered.count(e) ? rep.covered_edges : rep.missing_edges).push_back(e);
    return rep;
}

}  // namespace hodgechase
