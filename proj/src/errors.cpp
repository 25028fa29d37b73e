#include "umbra/errors.hpp"

namespace umbra {

void Error::rebuild() {
    full_ = message_;
    if (offset_) full_ += " (at offset " + std::to_string(*offset_) + ")";
}

namespace {
std::string describe(const std::vector<std::string>& expected, const std::string& found) {
    std::string s = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) s += i + 1 == expected.size() ? " or " : ", ";
        s += expected[i];
    }
    return s + ", found " + found;
}
}  // namespace

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected, std::string found)
    : Error(describe(expected, found)), expected_(std::move(expected)) {
    set_offset(offset);
}

}  // namespace umbra
