#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ehf {

/// Bad caller input: invalid vertex index, malformed certificate, parameter
/// out of the supported range.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed graph6 input. Messages name the byte offset of the offending
/// character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// A search exceeded its step budget. Distinct from a negative answer: the
/// harness records these as skips, never as passes or failures.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Step budget for the exhaustive searches. A value of 0 means unlimited.
struct StepBudget {
    std::uint64_t limit = 100'000'000;
};

/// Invocation-local step counter; throws once the budget is exhausted.
class StepCounter {
public:
    explicit StepCounter(StepBudget budget, const char* what)
        : limit_(budget.limit), what_(what) {}

    void tick() {
        if (limit_ != 0 && ++used_ > limit_)
            throw ResourceError(std::string(what_) + ": step budget of " +
                                std::to_string(limit_) + " exhausted");
    }

    std::uint64_t used() const { return used_; }

private:
    std::uint64_t used_ = 0;
    std::uint64_t limit_;
    const char* what_;
};

}  // namespace ehf
