#include "gfh/error.hpp"

namespace gfh {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::EvenPrime: return "EvenPrime";
        case Errc::TooSmall: return "TooSmall";
        case Errc::TooLarge: return "TooLarge";
        case Errc::BadExponent: return "BadExponent";
        case Errc::NotInvertible: return "NotInvertible";
        case Errc::BoundExceeded: return "BoundExceeded";
        case Errc::SumCongruence: return "SumCongruence";
        case Errc::SCongruence: return "SCongruence";
        case Errc::NotSurjective: return "NotSurjective";
        case Errc::NeedsRotation: return "NeedsRotation";
        case Errc::NotFixed: return "NotFixed";
        case Errc::AllDivisible: return "AllDivisible";
        case Errc::NotUnit: return "NotUnit";
        case Errc::HypothesisFailed: return "HypothesisFailed";
        case Errc::NoCoprimePair: return "NoCoprimePair";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace gfh
