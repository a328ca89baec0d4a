#ifndef DENSITYLAB_ERRORS_HPP
#define DENSITYLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace densitylab {

/// A configuration touched (or a stencil crossed) a Coulomb singularity.
struct SingularityError : std::domain_error {
    explicit SingularityError(const std::string& what) : std::domain_error(what) {}
};

/// A numerical procedure failed to deliver a trustworthy value
/// (non-convergent tail, overflow guard, zero-weight start, ...).
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// |psi| fell below the node floor where a ratio was required.
struct NodeError : NumericError {
    explicit NodeError(const std::string& what) : NumericError(what) {}
};

} // namespace densitylab

#endif
