#pragma once

#include <stdexcept>
#include <string>

namespace loopflow {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define LOOPFLOW_ERROR_TYPE(Name)                                      \
    struct Name : Error {                                              \
        explicit Name(const std::string& what = #Name) : Error(what) {} \
    }

LOOPFLOW_ERROR_TYPE(DegenerateCurve);
LOOPFLOW_ERROR_TYPE(SelfIntersecting);
LOOPFLOW_ERROR_TYPE(NotClosed);
LOOPFLOW_ERROR_TYPE(TubeSelfOverlap);
LOOPFLOW_ERROR_TYPE(OutsideTubeNeighborhood);
LOOPFLOW_ERROR_TYPE(SingularEvaluation);
LOOPFLOW_ERROR_TYPE(NotOnSurface);
LOOPFLOW_ERROR_TYPE(InvalidRadius);
LOOPFLOW_ERROR_TYPE(CompatibilityViolation);
LOOPFLOW_ERROR_TYPE(SolverFailure);
LOOPFLOW_ERROR_TYPE(SupportTooClose);
LOOPFLOW_ERROR_TYPE(InvalidTimestep);
LOOPFLOW_ERROR_TYPE(ConfigError);
LOOPFLOW_ERROR_TYPE(IOFailure);

#undef LOOPFLOW_ERROR_TYPE

}  // namespace loopflow
