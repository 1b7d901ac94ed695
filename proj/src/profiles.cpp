#include "hodgechase/profiles.hpp"

#include "hodgechase/errors.hpp"

namespace hodgechase {

void SurfaceProfile::validate() const {
    h1.validate();
    h2_edge.validate();
    for (const auto& [pq, d] : h1.entries())
        if (pq.p > 1 || pq.q > 1)
            throw Error("profile '" + name + "': H^1 entry outside weight <= 1 slots");
    for (const auto& [pq, d] : h2_edge.entries()) {
        if (pq.p > 2 || pq.q > 2 || (pq.p != 0 && pq.q != 0))
            throw Error("profile '" + name + "': H^2 edge entry off the pq = 0 edge");
        if (h2_pure && pq.p + pq.q != 2)
            throw Error("profile '" + name + "': pure H^2 cannot have weight " +
                        std::to_string(pq.p + pq.q) + " edge classes");
    }
    if (chi < 0)
        throw Error("profile '" + name + "': negative chi(O)");
}

namespace profiles {

namespace {
SurfaceProfile make(std::string name, BigradedDims h1, BigradedDims h2_edge, long chi) {
    SurfaceProfile p{std::move(name), std::move(h1), std::move(h2_edge), true, chi};
    p.validate();
    return p;
}
}  // namespace

SurfaceProfile k3() {
    return make("K3", {}, {{{2, 0}, 1}, {{0, 2}, 1}}, 2);
}

SurfaceProfile k3_blowup() {
    return make("blow-up of a K3 surface", {}, {{{2, 0}, 1}, {{0, 2}, 1}}, 2);
}

SurfaceProfile enriques_blowup() {
    return make("blow-up of an Enriques surface", {}, {}, 1);
}

SurfaceProfile rational() {
    return make("rational surface", {}, {}, 1);
}

SurfaceProfile projective_plane() {
    return make("P^2", {}, {}, 1);
}

SurfaceProfile del_pezzo(long degree) {
    if (degree < 1 || degree > 9)
        throw Error("del Pezzo degree out of range 1..9");
    if (degree == 9)
        return projective_plane();
    return make("del Pezzo of degree " + std::to_string(degree), {}, {}, 1);
}

SurfaceProfile weighted_plane_112() {
    return make("P(1,1,2)", {}, {}, 1);
}

SurfaceProfile minimal_elliptic_chi2() {
    return make("minimal elliptic surface with chi = 2", {}, {{{2, 0}, 1}, {{0, 2}, 1}}, 2);
}

SurfaceProfile ruled_over_elliptic() {
    return make("ruled surface over an elliptic curve", {{{1, 0}, 1}, {{0, 1}, 1}}, {}, 0);
}

SurfaceProfile general_type_pg2() {
    return make("minimal surface of general type with p_g = 2", {},
                {{{2, 0}, 2}, {{0, 2}, 2}}, 3);
}

}  // namespace profiles

}  // namespace hodgechase
