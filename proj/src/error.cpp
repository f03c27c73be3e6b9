#include <pmshape/error.hpp>

namespace pmshape {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "invalid argument";
        case ErrorKind::DegenerateShape: return "degenerate shape";
        case ErrorKind::IllConditioned: return "ill-conditioned reconstruction";
        case ErrorKind::AllMomentsZero: return "all moments zero";
        case ErrorKind::DegenerateSpectrum: return "degenerate moment spectrum";
        case ErrorKind::ZeroResultant: return "zero resultant";
        case ErrorKind::ZeroMass: return "zero mass";
        case ErrorKind::AxisUndefined: return "principal axis undefined";
        case ErrorKind::Parse: return "parse error";
        case ErrorKind::Internal: return "internal error";
    }
    return "unknown error";
}

}  // namespace pmshape
