#pragma once

#include <stdexcept>
#include <string>

namespace recdist {

// Base for everything thrown by this library. what() always starts with the
// concrete error name so CLI callers can match on it.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define RECDIST_DEFINE_ERROR(NAME)                                        \
    struct NAME : Error {                                                  \
        explicit NAME(const std::string& msg) : Error(#NAME ": " + msg) {} \
    }

RECDIST_DEFINE_ERROR(EmptySpec);
RECDIST_DEFINE_ERROR(NonPositiveEntry);
RECDIST_DEFINE_ERROR(LengthMismatch);
RECDIST_DEFINE_ERROR(SequenceTooShort);
RECDIST_DEFINE_ERROR(ToleranceTooSmall);
RECDIST_DEFINE_ERROR(DegreeTooLarge);
RECDIST_DEFINE_ERROR(RNotGreaterThanOne);
RECDIST_DEFINE_ERROR(XEqualsOne);
RECDIST_DEFINE_ERROR(OrientationMismatch);
RECDIST_DEFINE_ERROR(IndexOutOfRange);
RECDIST_DEFINE_ERROR(MomentOrderOutOfRange);

#undef RECDIST_DEFINE_ERROR

} // namespace recdist
