#ifndef PLR_ERRORS_HPP
#define PLR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace plr {

/// Thrown when a brute-force enumeration would exceed its configured size guard.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace plr

#endif
