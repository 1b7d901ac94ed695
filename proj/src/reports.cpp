#include "hodgechase/reports.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hodgechase {

namespace {

std::string piece_name(const NormalizationPiece& p) {
    if (const auto* smooth = std::get_if<SmoothPiece>(&p))
        return smooth->profile.name;
    return std::get<ResolvedPiece>(p).resolution.name + " (resolution)";
}

std::string xbar_name(const std::vector<NormalizationPiece>& pieces) {
    if (pieces.size() == 2 && piece_name(pieces[0]) == piece_name(pieces[1]))
        return "two copies of " + piece_name(pieces[0]);
    std::string out;
    for (const auto& p : pieces) {
        if (!out.empty())
            out += " + ";
        out += piece_name(p);
    }
    return out;
}

std::string curve_summary(const CurveData& c) {
    std::ostringstream os;
    os << "genus " << c.total_genus() << ", " << c.node_count() << " node(s), "
       << c.component_count() << " component(s)";
    return os.str();
}

}  // namespace

std::string format_diamond(const BigradedDims& h2) {
    std::ostringstream os;
    for (int p = 2; p >= 0; --p) {
        os << " ";
        for (int q = 0; q <= 2; ++q) {
            os << " ";
            if (p == 1 && q == 1)
                os << "?";
            else
                os << h2.at(p, q);
        }
        os << "\n";
    }
    return os.str();
}

std::string format_poset(const HodgePoset& poset) {
    std::ostringstream os;
    os << "elements:";
    for (const auto& t : poset.elements)
        os << " " << to_string(t);
    os << "\ncovers:\n";
    for (const auto& [a, b] : poset.covers)
        os << "  " << to_string(a) << " -> " << to_string(b) << "\n";
    return os.str();
}

std::string poset_dot(const HodgePoset& poset) {
    std::ostringstream os;
    os << "digraph hodge_poset {\n  rankdir=BT;\n";
    for (const auto& t : poset.elements)
        os << "  \"" << dot_name(t) << "\";\n";
    for (const auto& [a, b] : poset.covers)
        os << "  \"" << dot_name(a) << "\" -> \"" << dot_name(b) << "\";\n";
    os << "}\n";
    return os.str();
}

std::string Table2Row::str() const {
    std::ostringstream os;
    os << to_string(type) << " | " << deg_d << " | " << deg_g << " | " << xbar << " | "
       << dbar_genus << " | " << g_d;
    return os.str();
}

std::vector<Table2Row> computed_table2() {
    std::vector<Table2Row> rows;
    for (long deg_d : {2L, 4L, 1L, 3L, 5L}) {
        const Scenario s = build_nonnormal_cover(deg_d);
        const auto& nn = std::get<NonNormalScenario>(s.kind);
        Table2Row row;
        row.type = evaluate_unchecked(s).type;
        row.deg_d = s.cover->deg_d;
        row.deg_g = s.cover->deg_g;
        row.xbar = xbar_name(nn.pieces);
        row.dbar_genus = s.cover->dbar_genus.display();
        row.g_d = s.cover->g_d;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Table2Row> expected_table2() {
    return {
        {{0, 2}, 2, 6, "del Pezzo of degree 1", "2", 0},
        {{0, 2}, 4, 2, "P^2", "3", 1},
        {{0, 1}, 1, 8, "K3", "1", 0},
        {{0, 2}, 3, 4, "del Pezzo of degree 4", "2", 0},
        {{0, 2}, 5, 0, "two copies of P(1,1,2)", "2+2", 2},
    };
}

std::string format_table2(const std::vector<Table2Row>& rows) {
    std::ostringstream os;
    os << "type | deg D | deg G | Xbar | g(Dbar) | g(D)\n";
    for (const auto& row : rows)
        os << row.str() << "\n";
    return os.str();
}

RunReport run_report(const Scenario& s) {
    RunReport report;
    std::ostringstream os;
    os << "scenario: " << s.id << "\n";
    if (!s.citation.empty())
        os << "origin: " << s.citation << "\n";

    if (const auto* normal = std::get_if<NormalScenario>(&s.kind)) {
        os << "kind: normal\n";
        os << "surface: " << piece_name(normal->piece) << "\n";
        if (const auto* resolved = std::get_if<ResolvedPiece>(&normal->piece)) {
            for (const auto& c : resolved->exceptional)
                os << "exceptional curve: " << curve_summary(c) << "\n";
        }
    } else {
        const auto& nn = std::get<NonNormalScenario>(s.kind);
        os << "kind: non-normal\n";
        os << "normalization: " << xbar_name(nn.pieces) << "\n";
        for (const auto& p : nn.pieces) {
            if (const auto* resolved = std::get_if<ResolvedPiece>(&p))
                for (const auto& c : resolved->exceptional)
                    os << "exceptional curve: " << curve_summary(c) << "\n";
        }
        os << "double curve D: " << curve_summary(nn.d) << "\n";
        os << "conductor cover Dbar: " << curve_summary(nn.dbar) << "\n";
    }

    if (s.cover) {
        os << "cover: deg D = " << s.cover->deg_d << ", deg G = " << s.cover->deg_g
           << ", B0.D = " << s.cover->branch_on_d.str()
           << ", ramification points = " << s.cover->branch_points_used;
        if (s.cover->vertex_on_d)
            os << " (D passes through the vertex: " << (s.cover->branch_on_d + 1).str()
               << " apparent special points)";
        os << ", g(Dbar) = " << s.cover->dbar_genus.display() << "\n";
    }
    if (s.numerics) {
        os << "triple: chi(Xbar) = " << s.numerics->chi_xbar
           << ", chi(Dbar) = " << s.numerics->chi_dbar << ", chi(D) = " << s.numerics->chi_d
           << ", (K+D)^2 = " << s.numerics->log_canonical_square.str() << "\n";
        const TripleReport triple = check_triple(*s.numerics);
        for (const auto& cond : triple.conditions) {
            os << "  " << cond.name << ": " << (cond.passed ? "ok" : "FAIL") << "\n";
            if (!cond.passed)
                report.ok = false;
        }
    }

    const Evaluation eval = evaluate_unchecked(s);
    os << "H^2 diamond:\n" << format_diamond(eval.h2_edge);
    os << "type: " << to_string(eval.type) << "\n";
    if (s.expected) {
        if (*s.expected == eval.type) {
            os << "expected: " << to_string(*s.expected) << " ok\n";
        } else {
            os << "expected: " << to_string(*s.expected) << " MISMATCH\n";
            report.ok = false;
        }
    }
    if (s.h11) {
        const bool bound = eval.type.r + 2 * eval.type.s <= *s.h11;
        os << "h^{1,1} = " << *s.h11 << ", bound r + 2s <= h^{1,1}: " << (bound ? "ok" : "FAIL")
           << "\n";
        if (!bound)
            report.ok = false;
    }
    report.text = os.str();
    return report;
}

VerifySummary verify_all(const Catalog& cat) {
    VerifySummary summary;
    std::ostringstream os;
    auto record = [&](bool ok, const std::string& line) {
        (ok ? summary.passed : summary.failed) += 1;
        if (!ok)
            summary.failures.push_back(line);
        os << line << "\n";
    };

    for (const auto& s : cat.scenarios) {
        try {
            const Evaluation eval = evaluate(s);
            std::string line = "ok scenario " + s.id + " " + to_string(eval.type);
            if (s.numerics) {
                const TripleReport triple = check_triple(*s.numerics);
                if (!triple.passed()) {
                    std::string failed;
                    for (const auto& name : triple.failed_names())
                        failed += (failed.empty() ? "" : ", ") + name;
                    record(false, "FAIL scenario " + s.id + ": " + failed);
                    continue;
                }
                line += " triple-ok";
            }
            record(true, line);
        } catch (const Error& e) {
            record(false, "FAIL scenario " + s.id + ": " + e.what());
        }
    }

    for (const auto& chain : cat.chains) {
        const ChainReport report = verify_chain(cat, chain);
        if (report.monotone) {
            std::string line = "ok chain " + chain.id;
            for (const auto& step : report.steps)
                line += " " + to_string(step.type);
            record(true, line);
        } else {
            record(false, "FAIL " + report.failure);
        }
    }

    for (bool normal_only : {false, true}) {
        const RealizationReport rep = realization_report(cat, normal_only);
        const std::string label = normal_only ? "normal" : "all";
        if (rep.passed()) {
            record(true, "ok realization " + label + " types=" +
                             std::to_string(rep.realized.size()) + "/6 edges=" +
                             std::to_string(rep.covered_edges.size()) + "/6");
        } else {
            std::string line = "FAIL realization " + label + ":";
            for (const auto& t : rep.missing)
                line += " missing " + to_string(t);
            for (const auto& [a, b] : rep.missing_edges)
                line += " uncovered " + to_string(a) + "->" + to_string(b);
            record(false, line);
        }
    }

    const auto computed = computed_table2();
    const auto expected = expected_table2();
    bool table_ok = computed == expected;
    if (table_ok) {
        record(true, "ok table rows=" + std::to_string(expected.size()) + "/" +
                         std::to_string(expected.size()));
    } else {
        std::string line = "FAIL table:";
        for (std::size_t i = 0; i < expected.size(); ++i)
            if (i >= computed.size() || !(computed[i] == expected[i]))
                line += " row deg D=" + std::to_string(expected[i].deg_d) + " computed '" +
                        (i < computed.size() ? computed[i].str() : "<missing>") +
                        "' recorded '" + expected[i].str() + "'";
        record(false, line);
    }

    os << "passed=" << summary.passed << " failed=" << summary.failed << "\n";
    summary.text = os.str();
    return summary;
}

std::string format_chain(const ChainReport& report) {
    std::ostringstream os;
    os << "chain " << report.chain_id
       << (report.monotone ? " (monotone)" : " (NOT monotone)") << "\n";
    for (const auto& step : report.steps)
        os << "  " << step.scenario_id << ": " << to_string(step.type) << "\n";
    if (!report.monotone)
        os << "  " << report.failure << "\n";
    return os.str();
}

std::string chains_dot(const Catalog& cat) {
    std::set<std::pair<HodgeType, HodgeType>> transitions;
    for (const auto& chain : cat.chains) {
        const ChainReport report = verify_chain(cat, chain);
        for (std::size_t i = 0; i + 1 < report.steps.size(); ++i) {
            const HodgeType a = report.steps[i].type;
            const HodgeType b = report.steps[i + 1].type;
            if (!(a == b))
                transitions.insert({a, b});
        }
    }
    std::ostringstream os;
    os << "digraph degeneration_chains {\n  rankdir=BT;\n";
    for (const auto& t : build_poset().elements)
        os << "  \"" << dot_name(t) << "\";\n";
    for (const auto& [a, b] : transitions)
        os << "  \"" << dot_name(a) << "\" -> \"" << dot_name(b) << "\";\n";
    os << "}\n";
    return os.str();
}

std::string format_catalog(const Catalog& cat) {
    std::ostringstream os;
    os << "scenarios (" << cat.scenarios.size() << "):\n";
    for (const auto& s : cat.scenarios) {
        os << "  " << s.id << ": " << to_string(evaluate_unchecked(s).type) << " ("
           << (s.normal() ? "normal" : "non-normal") << ")\n";
    }
    os << "chains (" << cat.chains.size() << "):\n";
    for (const auto& c : cat.chains)
        os << "  " << c.id << " (" << c.scenario_ids.size() << " steps)\n";
    return os.str();
}

}  // namespace hodgechase
