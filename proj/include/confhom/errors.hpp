#ifndef CONFHOM_ERRORS_HPP
#define CONFHOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace confhom {

// Unmet hypothesis of the engine or of a verified theorem. CLI exit 2.
struct hypothesis_error : std::runtime_error {
    explicit hypothesis_error(const std::string& what) : std::runtime_error(what) {}
};

// Verification window too small to test anything. CLI exit 2.
struct window_error : std::runtime_error {
    explicit window_error(const std::string& what) : std::runtime_error(what) {}
};

// Basis size over the configured cap. CLI exit 3.
struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace confhom

#endif
