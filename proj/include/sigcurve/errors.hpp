#pragma once

#include <stdexcept>
#include <string>

namespace sigcurve {

/// Base class for all math-domain errors. `name()` is the stable identifier
/// used by the CLI exit-code contract and by tests.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define SIGCURVE_ERROR_TYPE(NAME)                                     \
    class NAME : public Error {                                       \
    public:                                                           \
        explicit NAME(const std::string& message)                     \
            : Error(#NAME, message) {}                                \
    }

SIGCURVE_ERROR_TYPE(DegenerateCurve);
SIGCURVE_ERROR_TYPE(InsufficientResolution);
SIGCURVE_ERROR_TYPE(EmptySet);
SIGCURVE_ERROR_TYPE(NonConvexArc);
SIGCURVE_ERROR_TYPE(KindMismatch);
SIGCURVE_ERROR_TYPE(NoCommonDomain);
SIGCURVE_ERROR_TYPE(OpenCurve);
SIGCURVE_ERROR_TYPE(NotGraphLike);
SIGCURVE_ERROR_TYPE(VanishingF);
SIGCURVE_ERROR_TYPE(DeltaTooLarge);
SIGCURVE_ERROR_TYPE(NotMonotone);
SIGCURVE_ERROR_TYPE(VertexObstruction);
SIGCURVE_ERROR_TYPE(ForbiddenPoint);
SIGCURVE_ERROR_TYPE(NotAVertex);
SIGCURVE_ERROR_TYPE(FrameSingular);
SIGCURVE_ERROR_TYPE(ConstantCurvature);
SIGCURVE_ERROR_TYPE(SignatureNotSimple);
SIGCURVE_ERROR_TYPE(VertexPresent);
SIGCURVE_ERROR_TYPE(InvalidInput);

#undef SIGCURVE_ERROR_TYPE

}  // namespace sigcurve
