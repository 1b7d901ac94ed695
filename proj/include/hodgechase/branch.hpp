#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hodgechase/curve.hpp"

namespace hodgechase {

/// An isolated singular point of the reduced branch curve on the cone.
struct IsolatedBranchPoint {
    enum class Kind {
        DoublePoint,
        NegligibleTriple,
        OrdinaryQuadruple,
        DegenerateQuadruple,
        TriplePlusInfNearTriple,
    };
    Kind kind = Kind::DoublePoint;
    bool ordinary = true;  // relevant for TriplePlusInfNearTriple only

    friend bool operator==(const IsolatedBranchPoint&, const IsolatedBranchPoint&) = default;
};

/// A point of the doubled part D of a non-reduced branch divisor. The contact
/// with the reduced part B0 is encoded by the extra local intersection beyond
/// transverse: Tangent{n} means (D,B0)_p = 2 with B0 smooth for n = 0 and
/// with an A_n point for n >= 1.
struct B0Contact {
    enum class Kind { None, Transverse, Tangent };
    Kind kind = Kind::None;
    long tangency = 0;

    friend bool operator==(const B0Contact&, const B0Contact&) = default;
};

struct NonReducedBranchPoint {
    enum class DPoint { SmoothPoint, Node };
    DPoint d_point = DPoint::SmoothPoint;
    B0Contact contact;

    friend bool operator==(const NonReducedBranchPoint&, const NonReducedBranchPoint&) = default;
};

using LocalBranchConfig = std::variant<IsolatedBranchPoint, NonReducedBranchPoint>;

/// The slc singularity the double cover acquires over a branch point,
/// together with what it contributes to the Hodge-type computation: nothing,
/// an exceptional curve in the resolution, or a node of the double locus.
struct SingularityClass {
    enum class Name {
        Canonical,
        EllipticGorenstein,
        NormalCrossing,
        PinchPoint,
        T2qInf,
        DegenerateCuspNodePair,
    };
    enum class Exceptional { SmoothElliptic, CycleOfRationals };
    enum class EffectKind { NoEffect, ExceptionalCurve, DoubleLocusNode };

    Name name = Name::Canonical;
    long degree = 0;  // elliptic Gorenstein degree, 1 or 2
    long q = 0;       // the q of T_{2,q,infinity}
    std::optional<Exceptional> exceptional;
    EffectKind effect = EffectKind::NoEffect;
    std::optional<CurveData> exceptional_curve;

    std::string str() const;
};

/// Maps a local branch configuration to its singularity class. Cycles of
/// rational curves are emitted with the given length; only their weight-zero
/// contribution (always one) matters downstream.
SingularityClass classify(const LocalBranchConfig& cfg, long cycle_length = 2);

struct MhsEffectSummary {
    std::vector<CurveData> exceptional;
    long double_locus_nodes = 0;
};

/// Aggregates the Hodge-relevant effects of a list of branch configurations;
/// configurations classified NoEffect are dropped.
MhsEffectSummary mhs_effect_summary(const std::vector<LocalBranchConfig>& configs,
                                    long cycle_length = 2);

}  // namespace hodgechase
