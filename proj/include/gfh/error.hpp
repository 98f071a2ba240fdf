#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gfh {

enum class Errc {
    NotPrime,
    EvenPrime,
    TooSmall,
    TooLarge,
    BadExponent,
    NotInvertible,
    BoundExceeded,
    SumCongruence,
    SCongruence,
    NotSurjective,
    NeedsRotation,
    NotFixed,
    AllDivisible,
    NotUnit,
    HypothesisFailed,
    NoCoprimePair,
    InvalidArgument,
    Internal,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace gfh
