#ifndef NILBASIS_ERRORS_HPP
#define NILBASIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nb {

/// Base for all library errors. `code()` is a stable machine-readable tag.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

#define NB_DEFINE_ERROR(Name)                                        \
  class Name : public Error {                                        \
  public:                                                            \
    explicit Name(const std::string& what) : Error(#Name, what) {}   \
  }

NB_DEFINE_ERROR(JacobiFail);
NB_DEFINE_ERROR(NotNilpotent);
NB_DEFINE_ERROR(SingularMatrix);
NB_DEFINE_ERROR(NotStrongMalcev);
NB_DEFINE_ERROR(DegreeOverflow);
NB_DEFINE_ERROR(CenterMismatch);
NB_DEFINE_ERROR(DegenerateForm);
NB_DEFINE_ERROR(NotSubalgebra);
NB_DEFINE_ERROR(NotPolarizingIdeal);
NB_DEFINE_ERROR(NoChRBasis);
NB_DEFINE_ERROR(CenterNotOneDim);
NB_DEFINE_ERROR(GradationViolation);
NB_DEFINE_ERROR(BasisNotThroughIdeal);
NB_DEFINE_ERROR(IrrationalScaling);
NB_DEFINE_ERROR(CovolumeMismatch);
NB_DEFINE_ERROR(QuadratureNotConverged);
NB_DEFINE_ERROR(OracleUnavailable);
NB_DEFINE_ERROR(InputError);

#undef NB_DEFINE_ERROR

}  // namespace nb

#endif
