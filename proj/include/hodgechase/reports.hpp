#pragma once

#include <string>
#include <vector>

#include "hodgechase/scenario.hpp"

namespace hodgechase {

/// 3x3 grid of the H^2 edge dimensions, rows p = 2..0 top to bottom, columns
/// q = 0..2 left to right; the untracked (1,1) slot prints as '?'.
std::string format_diamond(const BigradedDims& h2);

std::string format_poset(const HodgePoset& poset);
std::string poset_dot(const HodgePoset& poset);

/// One row of the generic-cover table: Hodge type, the two branch degrees,
/// the normalization, and the conductor genera.
struct Table2Row {
    HodgeType type;
    long deg_d = 0;
    long deg_g = 0;
    std::string xbar;
    std::string dbar_genus;
    long g_d = 0;

    std::string str() const;
    friend bool operator==(const Table2Row&, const Table2Row&) = default;
};

/// Rows computed from the degree data alone, in the catalog's row order.
std::vector<Table2Row> computed_table2();
/// The same rows as independently recorded constants.
std::vector<Table2Row> expected_table2();
std::string format_table2(const std::vector<Table2Row>& rows);

struct RunReport {
    std::string text;
    bool ok = true;
};

/// Full report of one scenario: inputs, gluing-triple check, solved H^2
/// diamond, Hodge type, expectation check. Chase failures propagate as
/// ChaseError.
RunReport run_report(const Scenario& s);

struct VerifySummary {
    long passed = 0;
    long failed = 0;
    std::vector<std::string> failures;
    std::string text;
};

/// Checks everything the catalog claims: every scenario against its expected
/// type, bound and gluing triple, every chain for monotonicity, realization
/// of all types and cover edges (overall and by normal scenarios alone), and
/// the generic-cover table against its recorded rows.
VerifySummary verify_all(const Catalog& cat);

std::string format_chain(const ChainReport& report);
/// The degeneration transitions realized by the catalog's chains, as a DOT
/// digraph over the type poset.
std::string chains_dot(const Catalog& cat);
std::string format_catalog(const Catalog& cat);

}  // namespace hodgechase
