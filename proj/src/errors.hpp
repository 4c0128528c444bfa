#pragma once

#include <stdexcept>
#include <string>

namespace monopath {

/* All domain failures derive from Error so the C boundary can catch one type.
   The distinction matters for tests and for retry logic in the realization
   pipeline: schedule-exhaustion errors (PositioningFailure, CutFailure,
   PencilFailure) map to a dedicated exit code. */
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct InvalidLabel : Error { using Error::Error; };
struct NotSimple : Error { using Error::Error; };
struct StructureViolation : Error { using Error::Error; };
struct NonGenericCut : Error { using Error::Error; };
struct PointAtInfinity : Error { using Error::Error; };
struct RealizationBug : Error { using Error::Error; };
struct CombinatorialMismatch : Error { using Error::Error; };

struct ScheduleExhausted : Error { using Error::Error; };
struct PositioningFailure : ScheduleExhausted { using ScheduleExhausted::ScheduleExhausted; };
struct CutFailure : ScheduleExhausted { using ScheduleExhausted::ScheduleExhausted; };
struct PencilFailure : ScheduleExhausted { using ScheduleExhausted::ScheduleExhausted; };

} // namespace monopath
