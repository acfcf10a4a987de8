#pragma once

#include <stdexcept>
#include <string>

namespace vtc {

// Thrown when an argument is within the mathematical domain of an operation
// but beyond the size this toolkit is willing to enumerate (e.g. asking for
// a full 2^n scan with n too large). The message names the cheaper route
// when one exists.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace vtc
