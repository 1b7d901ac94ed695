#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hodgechase/bigraded.hpp"

namespace hodgechase {

/// The Hodge type <r,s> of a degenerate surface of general type with p_g = 2:
/// r is the weight-zero dimension of H^2 and s the dimension of its (1,0)
/// slot. Valid types satisfy r,s >= 0 and r+s <= 2; the further bound
/// r + 2s <= h^{1,1} is checked only where h^{1,1} is actually known.
struct HodgeType {
    int r = 0;
    int s = 0;
    friend bool operator==(const HodgeType&, const HodgeType&) = default;
    friend auto operator<=>(const HodgeType&, const HodgeType&) = default;
};

/// Throws unless r,s >= 0 and r+s <= 2.
HodgeType make_hodge_type(int r, int s);

bool valid_hodge_type(int r, int s);

/// "<r,s>" with angle brackets, for reports.
std::string to_string(const HodgeType& t);

/// "(r,s)", the node name used in DOT output.
std::string dot_name(const HodgeType& t);

/// Reads the Hodge type off the edge components of an H^2 diamond:
/// r = dim(0,0), s = dim(1,0). The input must be symmetric, supported on
/// {0,1,2}x{0,1,2}, and satisfy dim(0,0)+dim(1,0) <= 2; otherwise this is not
/// the diamond of a degenerate I-surface and an error is thrown.
HodgeType hodge_type_of(const BigradedDims& h2);

/// The polarized partial order: <r,s> <= <t,u> iff r <= t and r+s <= t+u.
/// Larger means more degenerate.
bool polarized_leq(const HodgeType& a, const HodgeType& b);

/// The six valid types with their cover relations (the degeneration diagram).
struct HodgePoset {
    std::vector<HodgeType> elements;                           // sorted (r,s)
    std::vector<std::pair<HodgeType, HodgeType>> covers;       // a -> b, b covers a
    bool leq(const HodgeType& a, const HodgeType& b) const;    // via transitive closure
};

HodgePoset build_poset();

}  // namespace hodgechase
