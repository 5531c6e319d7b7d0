#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dilates {

// An operation's hypothesis does not hold for the given input (rank
// requirements, reducedness and the like). Distinct from invalid_argument,
// which covers malformed parameters.
class HypothesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Point-file syntax error; line is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line_no)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
    std::size_t line;
};

// An enumeration would exceed the configured work budget. required holds the
// exact number of subsets the run would have to visit.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& msg, std::string required_count)
        : std::runtime_error(msg), required(std::move(required_count)) {}
    std::string required;
};

// A computed value contradicts a proven bound. Carries the offending input
// serialized as JSON so the case can be reproduced.
class TheoremViolation : public std::runtime_error {
public:
    TheoremViolation(const std::string& msg, std::string witness)
        : std::runtime_error(msg), witness_json(std::move(witness)) {}
    std::string witness_json;
};

}  // namespace dilates
