#pragma once

#include <string>
#include <vector>

#include "hodgechase/rational.hpp"

namespace hodgechase {

/// A weighted projective plane P(a,b,c).
struct WeightedPlane {
    long a = 1;
    long b = 1;
    long c = 1;

    void validate() const;
    std::string name() const;  // "P(1,1,2)"
};

/// Self-intersection of O(1): 1/(a*b*c).
Rational o1_square(const WeightedPlane& p);

/// (K+D)^2 for the double cover of P(1,1,2) branched over a curve of degree
/// deg_g plus twice a curve of degree deg_d, with total degree 10 (a quintic
/// section of the cone). The pullback doubles intersection numbers, K is the
/// pullback of O(deg_g/2 - 4) and D the pullback of O(deg_d).
Rational log_canonical_square(long deg_g, long deg_d);

/// chi(O_D) = 3 - chi(O_Xbar) + chi(O_Dbar), the gluing constraint tying a
/// normalization triple to chi(O_X) = 3.
bool chi_condition(long chi_xbar, long chi_dbar, long chi_d);

/// The numeric inputs of a normalization triple check. The two flags are
/// declared by the scenario author; deciding them needs actual equations.
struct TripleNumerics {
    long chi_xbar = 0;
    long chi_dbar = 0;
    long chi_d = 0;
    bool lc_flag = true;
    bool diff_invariant_flag = true;
    Rational log_canonical_square = 1;

    friend bool operator==(const TripleNumerics&, const TripleNumerics&) = default;
};

struct ConditionResult {
    std::string name;
    bool passed = false;
};

struct TripleReport {
    std::vector<ConditionResult> conditions;
    bool passed() const;
    std::vector<std::string> failed_names() const;
};

/// Checks the four conditions a stable gluing triple must satisfy: the pair
/// (Xbar, Dbar) is log canonical, (K+D)^2 = 1, the gluing involution
/// preserves the different, and the chi identity above.
TripleReport check_triple(const TripleNumerics& t);

}  // namespace hodgechase
