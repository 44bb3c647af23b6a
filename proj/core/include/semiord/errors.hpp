#pragma once

#include <stdexcept>
#include <string>

namespace semiord {

struct CycleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IndexError : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct ArityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotIntervalOrder : std::domain_error {
  using std::domain_error::domain_error;
};
struct NotSemiorder : std::domain_error {
  using std::domain_error::domain_error;
};
struct WindowTooLarge : std::length_error {
  using std::length_error::length_error;
};
struct UnsupportedCarrier : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidKey : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NonPositiveAlpha : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidSegment : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The two "theorem broke" sentinels.  Either one firing means a defect in
// this library, never a property of the input.
struct CriteriaDisagreement : std::logic_error {
  using std::logic_error::logic_error;
};
struct InfeasibleSystem : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace semiord
