#include "hodgechase/curve.hpp"

#include <map>
#include <numeric>
#include <set>

#include "hodgechase/errors.hpp"

namespace hodgechase {

void CurveData::validate() const {
    std::set<std::string> labels;
    for (const auto& c : components) {
        if (c.genus < 0)
            throw Error("negative genus on component '" + c.label + "'");
        if (!labels.insert(c.label).second)
            throw Error("duplicate component label '" + c.label + "'");
    }
    for (const auto& [a, b] : nodes)
        for (const std::string* end : {&a, &b})
            if (!labels.count(*end))
                throw Error("node endpoint '" + *end + "' is not a component label");
}

long CurveData::total_genus() const {
    long g = 0;
    for (const auto& c : components)
        g += c.genus;
    return g;
}

long CurveData::connected_components() const {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < components.size(); ++i)
        index[components[i].label] = i;
    std::vector<std::size_t> parent(components.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&parent](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [a, b] : nodes)
        parent[find(index.at(a))] = find(index.at(b));
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < components.size(); ++i)
        roots.insert(find(i));
    return static_cast<long>(roots.size());
}

CurveData CurveData::smooth(std::string label, long genus) {
    return CurveData{{{std::move(label), genus}}, {}};
}

CurveData CurveData::irreducible_nodal(std::string label, long genus, long self_nodes) {
    CurveData c{{{label, genus}}, {}};
    for (long i = 0; i < self_nodes; ++i)
        c.nodes.emplace_back(label, label);
    return c;
}

CurveData CurveData::cycle_of_rationals(long length) {
    if (length < 1)
        throw Error("a cycle needs at least one component");
    CurveData c;
    for (long i = 0; i < length; ++i)
        c.components.push_back({"R" + std::to_string(i + 1), 0});
    if (length == 1) {
        c.nodes.emplace_back("R1", "R1");
    } else {
        for (long i = 0; i < length; ++i)
            c.nodes.emplace_back("R" + std::to_string(i + 1),
                                 "R" + std::to_string((i + 1) % length + 1));
    }
    return c;
}

BigradedDims curve_h1(const CurveData& c) {
    c.validate();
    BigradedDims h = BigradedDims::weight_one(c.total_genus());
    h.add(0, 0, c.node_count() - c.component_count() + c.connected_components());
    return h;
}

BigradedDims curve_h0(const CurveData& c) {
    c.validate();
    return BigradedDims::weight_zero(c.connected_components());
}

long CoverGenus::total() const {
    long t = 0;
    for (long g : genera)
        t += g;
    return t;
}

long CoverGenus::chi() const {
    long t = 0;
    for (long g : genera)
        t += 1 - g;
    return t;
}

std::string CoverGenus::display() const {
    std::string s;
    for (std::size_t i = 0; i < genera.size(); ++i) {
        if (i)
            s += "+";
        s += std::to_string(genera[i]);
    }
    return s;
}

CoverGenus riemann_hurwitz_double(long g_base, long branch_points,
                                  std::optional<CoverTopology> topology) {
    if (g_base < 0)
        throw Error("negative base genus");
    if (branch_points < 0)
        throw Error("negative branch point count");
    if (branch_points % 2 != 0)
        throw OddBranchCount("a double cover of a curve has an even number of branch points, got " +
                             std::to_string(branch_points));
    if (branch_points == 0) {
        if (!topology)
            throw SplitCoverAmbiguity(
                "branch-free double cover of a genus " + std::to_string(g_base) +
                " curve: declare the cover Split or Connected");
        if (*topology == CoverTopology::Split)
            return CoverGenus{{g_base, g_base}};
        if (g_base == 0)
            throw Error("a rational curve has no connected unramified double cover");
        return CoverGenus{{2 * g_base - 1}};
    }
    if (topology && *topology == CoverTopology::Split)
        throw Error("a split double cover cannot have branch points");
    // 2g - 2 = 2(2 g_base - 2) + branch_points
    return CoverGenus{{2 * g_base - 1 + branch_points / 2}};
}

long wps_curve_genus(long m) {
    if (m < 1)
        throw NonIntegerGenus("weighted degree must be at least 1, got " + std::to_string(m));
    Rational double_genus = Rational(m * (m - 4), 2);
    if (m % 2 != 0)
        double_genus = double_genus - Rational(1, 2);  // the curve passes through the vertex
    const Rational g = (double_genus + Rational(2)) / Rational(2);
    if (!g.is_integer() || g.num() < 0)
        throw NonIntegerGenus("degree " + std::to_string(m) + " yields genus " + g.str() +
                              ", not a quasi-smooth curve on P(1,1,2)");
    return g.as_integer();
}

Rational intersection_count(long deg_a, long deg_b) {
    if (deg_a < 0 || deg_b < 0)
        throw Error("negative curve degree");
    return Rational(deg_a * deg_b, 2);
}

long chi_smooth_curves(const std::vector<long>& genera) {
    long t = 0;
    for (long g : genera)
        t += 1 - g;
    return t;
}

}  // namespace hodgechase
