#pragma once

#include "hodgechase/curve.hpp"
#include "hodgechase/exact_chase.hpp"

namespace hodgechase::testing {

/// Mayer-Vietoris sequence of a nodal curve against its normalization, with
/// H^1 of the curve as the unknown. Built from component, node and genus
/// counts only, so it cross-checks curve_h1 without sharing code with it.
inline ExactSequenceProblem curve_h1_problem(const CurveData& c) {
    const long cc = c.connected_components();
    const long comps = c.component_count();
    const long nodes = c.node_count();
    ExactSequenceProblem p;
    p.terms.push_back(SequenceTerm::make_known(BigradedDims::weight_zero(cc), "H0(C)"));
    p.terms.push_back(SequenceTerm::make_known(BigradedDims::weight_zero(comps + nodes),
                                               "H0(normalization)+H0(nodes)"));
    p.terms.push_back(
        SequenceTerm::make_known(BigradedDims::weight_zero(2 * nodes), "H0(node preimages)"));
    p.terms.push_back(SequenceTerm::make_unknown("H1(C)"));
    p.terms.push_back(SequenceTerm::make_known(BigradedDims::weight_one(c.total_genus()),
                                               "H1(normalization)"));
    return p;
}

}  // namespace hodgechase::testing
