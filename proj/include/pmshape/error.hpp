#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pmshape {

/// Failure categories; the CLI maps each one to its own diagnostic.
enum class ErrorKind {
    InvalidArgument,
    DegenerateShape,     ///< all landmarks coincide, scale undefined
    IllConditioned,      ///< root recovery residual above tolerance
    AllMomentsZero,      ///< no moment above threshold, orientation undefined
    DegenerateSpectrum,  ///< nonzero moments exist but no coprime pair does
    ZeroResultant,       ///< angular mean of cancelling angles
    ZeroMass,            ///< image with no intensity
    AxisUndefined,       ///< PCA baseline on an isotropic shape
    Parse,               ///< malformed landmark or PGM file
    Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace pmshape
