#pragma once

#include <string>

#include "hodgechase/bigraded.hpp"

namespace hodgechase {

/// Classical invariants of a smooth (or mildly singular, rational-only)
/// projective surface, reduced to what the dimension chases consume: the edge
/// components of H^1 and H^2 and chi(O). These are data, not computations.
struct SurfaceProfile {
    std::string name;
    BigradedDims h1;
    BigradedDims h2_edge;  // components with pq = 0 only; (1,1) is never tracked
    bool h2_pure = true;   // true when h2_edge is supported in weight 2 only
    long chi = 1;

    void validate() const;

    friend bool operator==(const SurfaceProfile&, const SurfaceProfile&) = default;
};

namespace profiles {

SurfaceProfile k3();
SurfaceProfile k3_blowup();
SurfaceProfile enriques_blowup();
SurfaceProfile rational();
SurfaceProfile projective_plane();
SurfaceProfile del_pezzo(long degree);
SurfaceProfile weighted_plane_112();
SurfaceProfile minimal_elliptic_chi2();
SurfaceProfile ruled_over_elliptic();
SurfaceProfile general_type_pg2();

}  // namespace profiles

}  // namespace hodgechase
