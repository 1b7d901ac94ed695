#include "hodgechase/wps.hpp"

#include "hodgechase/errors.hpp"

namespace hodgechase {

void WeightedPlane::validate() const {
    if (a < 1 || b < 1 || c < 1)
        throw Error("weighted plane weights must be positive");
}

std::string WeightedPlane::name() const {
    return "P(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

Rational o1_square(const WeightedPlane& p) {
    p.validate();
    return Rational(1, p.a * p.b * p.c);
}

Rational log_canonical_square(long deg_g, long deg_d) {
    if (deg_g < 0 || deg_d < 0)
        throw Error("negative branch degree");
    if (deg_g % 2 != 0)
        throw OddReducedDegree("the reduced branch degree must be even, got " +
                               std::to_string(deg_g));
    if (deg_g + 2 * deg_d != 10)
        throw DegreeMismatch("branch degrees must satisfy deg_g + 2*deg_d = 10, got " +
                             std::to_string(deg_g) + " + 2*" + std::to_string(deg_d));
    const long k = deg_g / 2 + deg_d - 4;
    return Rational(2) * Rational(k * k) * o1_square(WeightedPlane{1, 1, 2});
}

bool chi_condition(long chi_xbar, long chi_dbar, long chi_d) {
    return chi_d == 3 - chi_xbar + chi_dbar;
}

bool TripleReport::passed() const {
    for (const auto& c : conditions)
        if (!c.passed)
            return false;
    return true;
}

std::vector<std::string> TripleReport::failed_names() const {
    std::vector<std::string> names;
    for (const auto& c : conditions)
        if (!c.passed)
            names.push_back(c.name);
    return names;
}

TripleReport check_triple(const TripleNumerics& t) {
    TripleReport r;
    r.conditions.push_back({"stable pair condition", t.lc_flag});
    r.conditions.push_back({"K^2-condition", t.log_canonical_square == Rational(1)});
    r.conditions.push_back({"glueing condition", t.diff_invariant_flag});
    r.conditions.push_back({"χ-condition", chi_condition(t.chi_xbar, t.chi_dbar, t.chi_d)});
    return r;
}

}  // namespace hodgechase
