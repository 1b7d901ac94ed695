#include "hodgechase/branch.hpp"

#include "hodgechase/errors.hpp"

namespace hodgechase {

namespace {

SingularityClass elliptic_gorenstein(long degree, SingularityClass::Exceptional kind,
                                     long cycle_length) {
    SingularityClass s;
    s.name = SingularityClass::Name::EllipticGorenstein;
    s.degree = degree;
    s.exceptional = kind;
    s.effect = SingularityClass::EffectKind::ExceptionalCurve;
    s.exceptional_curve = kind == SingularityClass::Exceptional::SmoothElliptic
                              ? CurveData::smooth("E", 1)
                              : CurveData::cycle_of_rationals(cycle_length);
    return s;
}

SingularityClass classify_isolated(const IsolatedBranchPoint& p, long cycle_length) {
    using Kind = IsolatedBranchPoint::Kind;
    using Exc = SingularityClass::Exceptional;
    switch (p.kind) {
        case Kind::DoublePoint:
        case Kind::NegligibleTriple:
            return SingularityClass{};  // canonical, no effect
        case Kind::OrdinaryQuadruple:
            return elliptic_gorenstein(2, Exc::SmoothElliptic, cycle_length);
        case Kind::DegenerateQuadruple:
            return elliptic_gorenstein(2, Exc::CycleOfRationals, cycle_length);
        case Kind::TriplePlusInfNearTriple:
            return elliptic_gorenstein(1, p.ordinary ? Exc::SmoothElliptic : Exc::CycleOfRationals,
                                       cycle_length);
    }
    throw InvalidConfig("unknown isolated branch point kind");
}

SingularityClass classify_nonreduced(const NonReducedBranchPoint& p) {
    using DPoint = NonReducedBranchPoint::DPoint;
    using Contact = B0Contact::Kind;
    SingularityClass s;
    if (p.d_point == DPoint::Node) {
        if (p.contact.kind != Contact::None)
            throw InvalidConfig("a node of the doubled curve cannot lie on the reduced branch");
        s.name = SingularityClass::Name::DegenerateCuspNodePair;
        s.effect = SingularityClass::EffectKind::DoubleLocusNode;
        return s;
    }
    switch (p.contact.kind) {
        case Contact::None:
            s.name = SingularityClass::Name::NormalCrossing;
            return s;
        case Contact::Transverse:
            s.name = SingularityClass::Name::PinchPoint;
            return s;
        case Contact::Tangent:
            if (p.contact.tangency < 0)
                throw InvalidConfig("negative tangency order");
            s.name = SingularityClass::Name::T2qInf;
            s.q = p.contact.tangency + 3;
            s.effect = SingularityClass::EffectKind::DoubleLocusNode;
            return s;
    }
    throw InvalidConfig("unknown contact kind");
}

}  // namespace

std::string SingularityClass::str() const {
    switch (name) {
        case Name::Canonical:
            return "canonical";
        case Name::EllipticGorenstein:
            return "elliptic Gorenstein of degree " + std::to_string(degree) +
                   (exceptional == Exceptional::SmoothElliptic ? " (smooth elliptic curve)"
                                                               : " (cycle of rational curves)");
        case Name::NormalCrossing:
            return "normal crossing";
        case Name::PinchPoint:
            return "pinch point";
        case Name::T2qInf:
            return "T_{2," + std::to_string(q) + ",inf}";
        case Name::DegenerateCuspNodePair:
            return "degenerate cusp over a node (z^2 = u^2 v^2)";
    }
    return "?";
}

SingularityClass classify(const LocalBranchConfig& cfg, long cycle_length) {
    if (cycle_length < 1)
        throw InvalidConfig("cycle length must be at least 1");
    if (const auto* iso = std::get_if<IsolatedBranchPoint>(&cfg))
        return classify_isolated(*iso, cycle_length);
    return classify_nonreduced(std::get<NonReducedBranchPoint>(cfg));
}

MhsEffectSummary mhs_effect_summary(const std::vector<LocalBranchConfig>& configs,
                                    long cycle_length) {
    MhsEffectSummary summary;
    for (const auto& cfg : configs) {
        const SingularityClass s = classify(cfg, cycle_length);
        switch (s.effect) {
            case SingularityClass::EffectKind::NoEffect:
                break;
            case SingularityClass::EffectKind::ExceptionalCurve:
                summary.exceptional.push_back(*s.exceptional_curve);
                break;
            case SingularityClass::EffectKind::DoubleLocusNode:
                ++summary.double_locus_nodes;
                break;
        }
    }
    return summary;
}

}  // namespace hodgechase
