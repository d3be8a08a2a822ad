#pragma once

#include <stdexcept>
#include <string>

namespace gconj {

/// Base class of every error raised by the library. `kind()` is the stable
/// name used in JSON reports and CLI diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define GCONJ_DEFINE_ERROR(Name)                                    \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(#Name, what) {}  \
  }

// simplicial_core
GCONJ_DEFINE_ERROR(PurityError);
GCONJ_DEFINE_ERROR(DominatedFacet);
GCONJ_DEFINE_ERROR(VertexRange);
GCONJ_DEFINE_ERROR(RangeError);
GCONJ_DEFINE_ERROR(NotAFace);
GCONJ_DEFINE_ERROR(ParamError);
GCONJ_DEFINE_ERROR(ParseError);

// enumeration / homology
GCONJ_DEFINE_ERROR(LengthError);
GCONJ_DEFINE_ERROR(NotAManifold);
GCONJ_DEFINE_ERROR(NotAManifoldWithBoundary);
GCONJ_DEFINE_ERROR(NotABall);
GCONJ_DEFINE_ERROR(NotNormalPseudomanifold);

// face_ring
GCONJ_DEFINE_ERROR(LsopFailure);
GCONJ_DEFINE_ERROR(CapExceeded);

// moves
GCONJ_DEFINE_ERROR(InvalidMove);
GCONJ_DEFINE_ERROR(LinkConditionViolated);
GCONJ_DEFINE_ERROR(DegenerateContraction);
GCONJ_DEFINE_ERROR(NotAFacet);

#undef GCONJ_DEFINE_ERROR

}  // namespace gconj
