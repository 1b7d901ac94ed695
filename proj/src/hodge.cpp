#include "hodgechase/hodge.hpp"

#include <algorithm>

namespace hodgechase {

bool valid_hodge_type(int r, int s) {
    return r >= 0 && s >= 0 && r + s <= 2;
}

HodgeType make_hodge_type(int r, int s) {
    if (!valid_hodge_type(r, s))
        throw Error("invalid Hodge type <" + std::to_string(r) + "," + std::to_string(s) + ">");
    return HodgeType{r, s};
}

std::string to_string(const HodgeType& t) {
    return "⟨" + std::to_string(t.r) + "," + std::to_string(t.s) + "⟩";
}

std::string dot_name(const HodgeType& t) {
    return "(" + std::to_string(t.r) + "," + std::to_string(t.s) + ")";
}

HodgeType hodge_type_of(const BigradedDims& h2) {
    h2.validate();
    for (const auto& [pq, d] : h2.entries())
        if (pq.p > 2 || pq.q > 2)
            throw Error("entry " + to_string(pq) + " out of the H^2 surface range");
    const long r = h2.at(0, 0);
    const long s = h2.at(1, 0);
    if (r + s > 2)
        throw Error("not an I-surface diamond: dim(0,0)+dim(1,0) = " + std::to_string(r + s) +
                    " exceeds 2");
    return HodgeType{static_cast<int>(r), static_cast<int>(s)};
}

bool polarized_leq(const HodgeType& a, const HodgeType& b) {
    return a.r <= b.r && a.r + a.s <= b.r + b.s;
}

bool HodgePoset::leq(const HodgeType& a, const HodgeType& b) const {
    if (a == b)
        return true;
    // Walk the cover DAG; six nodes, so no need for anything clever.
    for (const auto& [lo, hi] : covers)
        if (lo == a && leq(hi, b))
            return true;
    return false;
}

HodgePoset build_poset() {
    HodgePoset poset;
    for (int r = 0; r <= 2; ++r)
        for (int s = 0; s <= 2; ++s)
            if (valid_hodge_type(r, s))
                poset.elements.push_back(HodgeType{r, s});
    std::sort(poset.elements.begin(), poset.elements.end());

    auto strictly_less = [](const HodgeType& a, const HodgeType& b) {
        return !(a == b) && polarized_leq(a, b);
    };
    for (const auto& a : poset.elements) {
        for (const auto& b : poset.elements) {
            if (!strictly_less(a, b))
                continue;
            bool is_cover = true;
            for (const auto& c : poset.elements)
                if (strictly_less(a, c) && strictly_less(c, b)) {
                    is_cover = false;
                    break;
                }
            if (is_cover)
                poset.covers.emplace_back(a, b);
        }
    }
    return poset;
}

}  // namespace hodgechase
