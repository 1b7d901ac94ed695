#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hodgechase/curve.hpp"
#include "hodgechase/exact_chase.hpp"
#include "hodgechase/hodge.hpp"
#include "hodgechase/profiles.hpp"
#include "hodgechase/wps.hpp"

namespace hodgechase {

/// One component of a normalization. Smooth means the underlying normal
/// surface has at worst rational singularities, so its edge cohomology is the
/// profile's; Resolved means it carries worse singularities and its H^2 must
/// be chased through the resolution sequence
///   0 -> H^1(Y) -> sum H^1(E_i) -> H^2(X) -> H^2(Y) -> sum H^2(E_i)
/// with Y the resolution and E_i the exceptional curves.
struct SmoothPiece {
    SurfaceProfile profile;
    friend bool operator==(const SmoothPiece&, const SmoothPiece&) = default;
};

struct ResolvedPiece {
    SurfaceProfile resolution;
    std::vector<CurveData> exceptional;
    std::vector<RankAnnotation> overrides;

    friend bool operator==(const ResolvedPiece&, const ResolvedPiece&) = default;
};

using NormalizationPiece = std::variant<SmoothPiece, ResolvedPiece>;

/// Numeric record of a non-normal double cover of P(1,1,2), kept alongside
/// the scenario for reporting. branch_on_d is the intersection number
/// B0 . D; when D passes through the vertex the count of apparent special
/// points on D is one higher, but only the intersection with B0 ramifies the
/// conductor double cover.
struct CoverData {
    long deg_d = 0;
    long deg_g = 0;
    long g_d = 0;
    Rational branch_on_d = 0;
    bool vertex_on_d = false;
    long branch_points_used = 0;
    CoverGenus dbar_genus;

    friend bool operator==(const CoverData&, const CoverData&) = default;
};

struct NormalScenario {
    NormalizationPiece piece;

    friend bool operator==(const NormalScenario&, const NormalScenario&) = default;
};

/// A non-normal surface described by its normalization pieces and conductor
/// curves: D in the surface itself, Dbar its preimage upstairs.
struct NonNormalScenario {
    std::vector<NormalizationPiece> pieces;
    CurveData d;
    CurveData dbar;
    std::vector<RankAnnotation> overrides;

    friend bool operator==(const NonNormalScenario&, const NonNormalScenario&) = default;
};

struct Scenario {
    std::string id;
    std::variant<NormalScenario, NonNormalScenario> kind;
    std::optional<HodgeType> expected;
    std::string citation;
    std::optional<TripleNumerics> numerics;
    std::optional<CoverData> cover;
    std::optional<long> h11;

    bool normal() const { return std::holds_alternative<NormalScenario>(kind); }

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

struct DegenerationChain {
    std::string id;
    std::vector<std::string> scenario_ids;

    friend bool operator==(const DegenerationChain&, const DegenerationChain&) = default;
};

struct Catalog {
    std::vector<Scenario> scenarios;
    std::vector<DegenerationChain> chains;

    const Scenario* find(const std::string& id) const;
    const Scenario& at(const std::string& id) const;
};

/// The built-in catalog: every worked example and degeneration family, with
/// expected Hodge types and the chains realizing the degeneration diagram.
const Catalog& builtin_catalog();

/// H^1 edge dimensions of the normal surface underlying a piece. For a
/// Resolved piece this is only known to vanish when the resolution's H^1
/// vanishes (H^1 of the contracted surface injects into it); a nonvanishing
/// resolution H^1 is refused rather than guessed.
BigradedDims piece_h1(const NormalizationPiece& p);

/// Assembles the resolution sequence with unknown H^2 of the contracted
/// surface. A nonzero resolution H^1 slot must be covered by an explicit
/// override on the first map; the implicit zero at the left end would
/// otherwise silently assert injectivity into the exceptional classes.
ExactSequenceProblem resolution_sequence(const ResolvedPiece& p);

/// H^2 edge components of the normal surface underlying the piece.
BigradedDims evaluate_piece(const NormalizationPiece& p);

/// Assembles the normalization sequence
///   0 -> H^1(Xbar) + H^1(D) -> H^1(Dbar) -> H^2(X) -> H^2(Xbar) + H^2(D)
///        -> H^2(Dbar)
/// with unknown H^2(X). The left truncation encodes the default rule that
/// the conductor pullback is injective on H^1; scenarios with H^1 on the
/// normalization side must annotate the first map explicitly.
ExactSequenceProblem normalization_sequence(const NonNormalScenario& s);

/// All chase problems a scenario gives rise to, resolution sequences first.
/// Smooth normal scenarios need no chase and return an empty list.
std::vector<ExactSequenceProblem> scenario_problems(const Scenario& s);

struct Evaluation {
    BigradedDims h2_edge;
    HodgeType type;
};

/// Computes the Hodge type of the scenario's surface without consulting its
/// declared expectations.
Evaluation evaluate_unchecked(const Scenario& s);

/// Computes the Hodge type of the scenario's surface. Throws
/// ExpectationMismatch when a declared expected type disagrees with the
/// computation, or when a declared h^{1,1} violates r + 2s <= h^{1,1}.
Evaluation evaluate(const Scenario& s);

/// The generic non-normal double cover of P(1,1,2) with doubled branch
/// degree deg_d in 1..5: derives the conductor genera, the normalization
/// profile, and the gluing numerics from the degrees alone.
Scenario build_nonnormal_cover(long deg_d);

struct ChainStep {
    std::string scenario_id;
    HodgeType type;
};

struct ChainReport {
    std::string chain_id;
    std::vector<ChainStep> steps;
    bool monotone = true;
    std::string failure;
};

/// Evaluates the chain's scenarios in order and checks the types never
/// decrease in the polarized order.
ChainReport verify_chain(const Catalog& cat, const DegenerationChain& chain);

struct RealizationReport {
    std::vector<HodgeType> realized;
    std::vector<HodgeType> missing;
    std::vector<std::pair<HodgeType, HodgeType>> covered_edges;
    std::vector<std::pair<HodgeType, HodgeType>> missing_edges;

    bool passed() const { return missing.empty() && missing_edges.empty(); }
};

/// Checks that the catalog (optionally restricted to normal scenarios)
/// realizes all six Hodge types and that every cover edge of the poset is
/// realized by a consecutive pair of some chain.
RealizationReport realization_report(const Catalog& cat, bool normal_only = false);

}  // namespace hodgechase
