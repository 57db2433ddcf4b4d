#pragma once

#include <stdexcept>
#include <string>

namespace cvxlab {

// Base of all recoverable domain errors. The CLI maps these to exit code 2
// and emits the `code()` string in its machine-readable error report.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define CVXLAB_ERROR(Name)                                 \
  class Name : public DomainError {                        \
   public:                                                 \
    explicit Name(const std::string& what = #Name)         \
        : DomainError(#Name, what) {}                      \
  }

CVXLAB_ERROR(EmptyPolyhedron);
CVXLAB_ERROR(UnboundedInput);
CVXLAB_ERROR(DegenerateBody);
CVXLAB_ERROR(EmptyLevelSet);
CVXLAB_ERROR(NonConvexMin);
CVXLAB_ERROR(ImproperInput);
CVXLAB_ERROR(NotGeometric);
CVXLAB_ERROR(NotEven);
CVXLAB_ERROR(NotIntegrable);
CVXLAB_ERROR(NotCentered);
CVXLAB_ERROR(IllPositioned);
CVXLAB_ERROR(DimensionMismatch);
CVXLAB_ERROR(TooManyParameters);
CVXLAB_ERROR(UnsupportedDimension);
CVXLAB_ERROR(SchemaError);

#undef CVXLAB_ERROR

}  // namespace cvxlab
