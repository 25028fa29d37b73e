#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace umbra {

class Error : public std::exception {
public:
    explicit Error(std::string message) : message_(std::move(message)) { rebuild(); }
    const char* what() const noexcept override { return full_.c_str(); }
    const std::string& message() const { return message_; }
    virtual const char* kind() const noexcept { return "Error"; }

    // Source offset inside an expression, set when the error is raised during expression evaluation.
    const std::optional<std::size_t>& offset() const { return offset_; }
    void set_offset(std::size_t off) {
        offset_ = off;
        rebuild();
    }

private:
    void rebuild();
    std::string message_;
    std::optional<std::size_t> offset_;
    std::string full_;
};

#define UMBRA_ERROR(Name)                                    \
    class Name : public Error {                              \
    public:                                                  \
        using Error::Error;                                  \
        const char* kind() const noexcept override { return #Name; } \
    };

UMBRA_ERROR(OrderError)
UMBRA_ERROR(NotInvertible)
UMBRA_ERROR(ConstantTermError)
UMBRA_ERROR(TruncationError)
UMBRA_ERROR(DivisionOrderError)
UMBRA_ERROR(NotDelta)
UMBRA_ERROR(NotAppell)
UMBRA_ERROR(NotUnitary)
UMBRA_ERROR(SingularTriangle)
UMBRA_ERROR(IndexError)
UMBRA_ERROR(UnknownFamily)
// Two independent routes for the same quantity disagreed.
UMBRA_ERROR(ConsistencyError)

#undef UMBRA_ERROR

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, std::vector<std::string> expected, std::string found);
    const char* kind() const noexcept override { return "SyntaxError"; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::vector<std::string> expected_;
};

}  // namespace umbra
