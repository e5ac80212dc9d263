/**
 * Exception types shared by all stresslab modules.
 */
#ifndef STRESSLAB_ERRORS_HPP
#define STRESSLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stresslab {

class StresslabError : public std::runtime_error
{
    public:
        explicit StresslabError(const std::string& what) : std::runtime_error(what) {}
};

#define STRESSLAB_ERROR(Name)                                              \
    class Name : public StresslabError                                     \
    {                                                                      \
        public:                                                            \
            explicit Name(const std::string& what)                         \
                : StresslabError(std::string(#Name) + ": " + what) {}      \
    };

STRESSLAB_ERROR(FactorizationIncomplete)
STRESSLAB_ERROR(DimensionMismatch)
STRESSLAB_ERROR(NotHomogeneous)
STRESSLAB_ERROR(NotSubset)
STRESSLAB_ERROR(FaceNotNested)
STRESSLAB_ERROR(FaceNotFound)
STRESSLAB_ERROR(DuplicateOrNestedFacet)
STRESSLAB_ERROR(VertexCollision)
STRESSLAB_ERROR(InvalidParameters)
STRESSLAB_ERROR(RetriesExhausted)
STRESSLAB_ERROR(DegenerateProjection)
STRESSLAB_ERROR(BasisNotDistinguished)
STRESSLAB_ERROR(DescentStalled)
STRESSLAB_ERROR(NonOrientable)
STRESSLAB_ERROR(SingularFacetMatrix)
STRESSLAB_ERROR(NotInjectiveAtLowDegrees)
STRESSLAB_ERROR(NotAHomologySphere)
STRESSLAB_ERROR(GenericityNotAchieved)
STRESSLAB_ERROR(PreconditionViolated)
STRESSLAB_ERROR(ParseError)

#undef STRESSLAB_ERROR

}   // namespace stresslab

#endif
