#pragma once

#include <stdexcept>
#include <string>

namespace leaper {

/// An internal construction invariant failed. Always indicates a bug or an
/// unsupported input that slipped past validation, never bad user data.
class ConstructionError : public std::logic_error {
public:
    explicit ConstructionError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace leaper
