#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hodgechase/bigraded.hpp"
#include "hodgechase/rational.hpp"

namespace hodgechase {

/// A nodal curve given by its irreducible components and dual-graph edges.
/// Each node is an unordered pair of component labels; a loop (both branches
/// on the same component) is a self-node of an irreducible curve. Genera are
/// geometric, i.e. genera of the normalizations.
struct CurveComponent {
    std::string label;
    long genus = 0;

    friend bool operator==(const CurveComponent&, const CurveComponent&) = default;
};

struct CurveData {
    std::vector<CurveComponent> components;
    std::vector<std::pair<std::string, std::string>> nodes;

    void validate() const;
    long total_genus() const;
    long node_count() const { return static_cast<long>(nodes.size()); }
    long component_count() const { return static_cast<long>(components.size()); }
    long connected_components() const;

    friend bool operator==(const CurveData&, const CurveData&) = default;

    static CurveData smooth(std::string label, long genus);
    static CurveData irreducible_nodal(std::string label, long genus, long self_nodes);
    static CurveData cycle_of_rationals(long length);
};

/// H^1 of the nodal curve: the normalization genus in each of the weight-one
/// slots (1,0), (0,1), plus the first Betti number of the dual graph in
/// weight zero.
BigradedDims curve_h1(const CurveData& c);

/// H^0: one weight-zero class per connected component.
BigradedDims curve_h0(const CurveData& c);

enum class CoverTopology { Connected, Split };

/// Genus record of a double cover, one entry per connected component of the
/// covering curve.
struct CoverGenus {
    std::vector<long> genera;

    long total() const;
    bool split() const { return genera.size() > 1; }
    long chi() const;             // chi(O) = sum of (1 - g_i)
    std::string display() const;  // "2" or "2+2"

    friend bool operator==(const CoverGenus&, const CoverGenus&) = default;
};

/// Genus of a double cover of a smooth curve of genus g_base with the given
/// number of simple branch points. A branch-free cover is ambiguous and the
/// caller must declare it Split (two copies of the base) or Connected
/// (unramified of genus 2*g_base - 1).
CoverGenus riemann_hurwitz_double(long g_base, long branch_points,
                                  std::optional<CoverTopology> topology = std::nullopt);

/// Genus of a quasi-smooth curve of weighted degree m on P(1,1,2). Odd-degree
/// curves pass through the cone vertex, which shifts the adjunction count by
/// one half.
long wps_curve_genus(long m);

/// Weighted intersection number a*b/2 of curves of degrees a, b on P(1,1,2).
/// Half-integer values signal vertex-passing configurations.
Rational intersection_count(long deg_a, long deg_b);

/// chi(O) of a disjoint union of smooth curves of the given genera.
long chi_smooth_curves(const std::vector<long>& genera);

}  // namespace hodgechase
