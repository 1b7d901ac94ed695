#include "hodgechase/exact_chase.hpp"

#include <algorithm>
#include <set>

namespace hodgechase {

std::string to_string(const RankSpec& r) {
    if (std::holds_alternative<long>(r))
        return std::to_string(std::get<long>(r));
    switch (std::get<RankRule>(r)) {
        case RankRule::Injective: return "injective";
        case RankRule::Surjective: return "surjective";
        case RankRule::Zero: return "zero";
    }
    return "?";
}

std::size_t ExactSequenceProblem::unknown_index() const {
    std::size_t idx = terms.size();
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (!terms[i].known()) {
            if (idx != terms.size())
                throw ChaseError(ChaseError::Kind::InvalidProblem,
                                 "more than one unknown term in the sequence");
            idx = i;
        }
    }
    if (idx == terms.size())
        throw ChaseError(ChaseError::Kind::InvalidProblem, "no unknown term in the sequence");
    return idx;
}

void ExactSequenceProblem::validate() const {
    (void)unknown_index();
    for (const auto& t : terms)
        if (t.known())
            t.dims->validate();
    for (const auto& a : annotations)
        if (a.map_index > terms.size())
            throw ChaseError(ChaseError::Kind::InvalidProblem,
                             "annotation map index " + std::to_string(a.map_index) +
                                 " out of bounds (sequence has " + std::to_string(terms.size()) +
                                 " terms)");
}

namespace {

// Rank bookkeeping for one (p,q) slot. ranks[k] is the rank of map k; the
// outer maps k = 0 and k = n are the zero paddings.
class SlotChase {
  public:
    SlotChase(const ExactSequenceProblem& problem, PQ pq)
        : problem_(problem), pq_(pq), n_(problem.terms.size()) {
        dims_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i)
            if (problem.terms[i].known())
                dims_[i] = problem.terms[i].dims->at(pq.p, pq.q);
        ranks_.assign(n_ + 1, std::nullopt);
        set_rank(0, 0);
        set_rank(n_, 0);
    }

    void seed_annotations() {
        for (const auto& a : problem_.annotations) {
            if (a.component && !(*a.component == pq_))
                continue;
            std::optional<long> value;
            if (std::holds_alternative<long>(a.rank)) {
                value = std::get<long>(a.rank);
            } else {
                switch (std::get<RankRule>(a.rank)) {
                    case RankRule::Zero:
                        value = 0;
                        break;
                    case RankRule::Injective:
                        // Source of map k is term k-1; the outer zero map is
                        // trivially injective.
                        if (a.map_index == 0)
                            value = 0;
                        else if (dims_[a.map_index - 1])
                            value = *dims_[a.map_index - 1];
                        break;
                    case RankRule::Surjective:
                        if (a.map_index == n_)
                            value = 0;
                        else if (dims_[a.map_index])
                            value = *dims_[a.map_index];
                        break;
                }
                // A rule tag on a map whose relevant side is the unknown term
                // cannot be resolved; propagation has to settle it instead.
            }
            if (value)
                set_rank(a.map_index, *value);
        }
    }

    void propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < n_; ++i) {
                if (!dims_[i])
                    continue;
                const long d = *dims_[i];
                // Exactness at term i: rank(f_i) + rank(f_{i+1}) = dim(T_i).
                if (ranks_[i] && !ranks_[i + 1]) {
                    set_rank(i + 1, d - *ranks_[i]);
                    changed = true;
                } else if (ranks_[i + 1] && !ranks_[i]) {
                    set_rank(i, d - *ranks_[i + 1]);
                    changed = true;
                } else if (ranks_[i] && ranks_[i + 1] && *ranks_[i] + *ranks_[i + 1] != d) {
                    fail_inconsistent(i);
                }
            }
        }
    }

    long solve_unknown(std::size_t u) const {
        if (!ranks_[u] || !ranks_[u + 1])
            throw ChaseError(ChaseError::Kind::Underdetermined,
                             "rank of a map adjacent to '" + problem_.terms[u].label +
                                 "' on slot " + to_string(pq_) +
                                 " cannot be propagated; annotate it");
        return *ranks_[u] + *ranks_[u + 1];
    }

    std::vector<long> rank_row(std::size_t u, long solved) const {
        // With the unknown filled in, every remaining rank follows; recompute
        // left to right for the report.
        std::vector<long> row(n_ + 1, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            const long d = dims_[i] ? *dims_[i] : (i == u ? solved : 0);
            row[i + 1] = d - row[i];
        }
        return row;
    }

  private:
    void set_rank(std::size_t k, long value) {
        if (value < 0)
            throw ChaseError(ChaseError::Kind::Inconsistent,
                             "negative rank " + std::to_string(value) + " for map " +
                                 std::to_string(k) + " on slot " + to_string(pq_) +
                                 "; the data cannot come from an exact sequence");
        if (ranks_[k] && *ranks_[k] != value)
            throw ChaseError(ChaseError::Kind::Inconsistent,
                             "conflicting ranks for map " + std::to_string(k) + " on slot " +
                                 to_string(pq_) + ": " + std::to_string(*ranks_[k]) + " vs " +
                                 std::to_string(value));
        ranks_[k] = value;
    }

    [[noreturn]] void fail_inconsistent(std::size_t i) const {
        throw ChaseError(ChaseError::Kind::Inconsistent,
                         "exactness fails at term " + std::to_string(i) + " ('" +
                             problem_.terms[i].label + "') on slot " + to_string(pq_));
    }

    const ExactSequenceProblem& problem_;
    PQ pq_;
    std::size_t n_;
    std::vector<std::optional<long>> dims_;
    std::vector<std::optional<long>> ranks_;
};

}  // namespace

ChaseSolution solve_detailed(const ExactSequenceProblem& problem) {
    problem.validate();
    const std::size_t u = problem.unknown_index();

    std::set<PQ> slots;
    for (const auto& t : problem.terms)
        if (t.known())
            for (const auto& [pq, d] : t.dims->entries())
                slots.insert(pq);
    for (const auto& a : problem.annotations)
        if (a.component)
            slots.insert(*a.component);

    ChaseSolution solution;
    for (const PQ& pq : slots) {
        SlotChase chase(problem, pq);
        chase.seed_annotations();
        chase.propagate();
        const long dim = chase.solve_unknown(u);
        solution.unknown.set(pq.p, pq.q, dim);
        solution.components.push_back(pq);
        solution.ranks.emplace_back(pq, chase.rank_row(u, dim));
    }
    solution.unknown.validate();
    return solution;
}

BigradedDims solve(const ExactSequenceProblem& problem) {
    return solve_detailed(problem).unknown;
}

}  // namespace hodgechase
