#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hodgechase/bigraded.hpp"

namespace hodgechase {

/// One term of an exact sequence: either known dimensions or the single
/// unknown the chase solves for.
struct SequenceTerm {
    std::optional<BigradedDims> dims;  // nullopt = unknown
    std::string label;

    bool known() const { return dims.has_value(); }

    static SequenceTerm make_known(BigradedDims d, std::string label = "") {
        return SequenceTerm{std::move(d), std::move(label)};
    }
    static SequenceTerm make_unknown(std::string label) {
        return SequenceTerm{std::nullopt, std::move(label)};
    }
};

/// Declared rank facts. A rule tag resolves against the adjacent known
/// dimensions: Injective -> dim of the source slot, Surjective -> dim of the
/// target slot, Zero -> 0.
enum class RankRule { Injective, Surjective, Zero };

using RankSpec = std::variant<long, RankRule>;

/// Pins the rank of one map of the sequence, on one (p,q) slot or on all of
/// them. Map k is the map from term k-1 into term k; k = 0 is the implicit
/// zero map into the first term, k = #terms the implicit map out of the last.
struct RankAnnotation {
    std::size_t map_index = 0;
    std::optional<PQ> component;  // nullopt = all components
    RankSpec rank = 0L;

    friend bool operator==(const RankAnnotation&, const RankAnnotation&) = default;

    static RankAnnotation all(std::size_t map, RankSpec r) {
        return RankAnnotation{map, std::nullopt, r};
    }
    static RankAnnotation at(std::size_t map, PQ pq, RankSpec r) {
        return RankAnnotation{map, pq, r};
    }
};

std::string to_string(const RankSpec& r);

/// A strict exact sequence of mixed Hodge structures with exactly one unknown
/// term, implicitly padded with zeros at both ends. Strictness of MHS
/// morphisms makes the sequence exact slot by slot, so the chase runs
/// independently on every (p,q).
struct ExactSequenceProblem {
    std::vector<SequenceTerm> terms;
    std::vector<RankAnnotation> annotations;

    std::size_t unknown_index() const;  // throws InvalidProblem unless exactly one
    void validate() const;
};

/// Per-slot rank assignment for all maps of a solved problem; map k's rank on
/// slot pq is ranks[pq][k], with the two outer zero maps included.
struct ChaseSolution {
    BigradedDims unknown;
    std::vector<PQ> components;                       // slots the chase visited
    std::vector<std::pair<PQ, std::vector<long>>> ranks;
};

/// Solves for the unknown term by propagating ranks from the zero-padded ends
/// through rank(f_k) = dim(T_k) - rank(f_{k-1}), seeded by the annotations.
/// Throws ChaseError{Inconsistent} when propagation turns negative or
/// contradicts an annotation, ChaseError{Underdetermined} when a rank next to
/// the unknown cannot be pinned down.
ChaseSolution solve_detailed(const ExactSequenceProblem& problem);

BigradedDims solve(const ExactSequenceProblem& problem);

}  // namespace hodgechase
