#ifndef PENCIL_ERRORS_HPP
#define PENCIL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pencil {

/// Base of every error raised by the library. The `kind()` string is the
/// stable name surfaced in reports.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string &what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string &kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

#define PENCIL_DEFINE_ERROR(Name)                                              \
  class Name : public Error {                                                  \
  public:                                                                      \
    explicit Name(const std::string &what) : Error(#Name, what) {}             \
  }

PENCIL_DEFINE_ERROR(TooManyPoints);
PENCIL_DEFINE_ERROR(CapExceeded);
PENCIL_DEFINE_ERROR(BadIndex);
PENCIL_DEFINE_ERROR(NotDivisible);
PENCIL_DEFINE_ERROR(EmptyModel);
PENCIL_DEFINE_ERROR(NotTransitive);
PENCIL_DEFINE_ERROR(NotHomogeneous);
PENCIL_DEFINE_ERROR(MixedTermNonzero);
PENCIL_DEFINE_ERROR(NotDescendable);
PENCIL_DEFINE_ERROR(InternalNonRational);
PENCIL_DEFINE_ERROR(DegenerateFiber);
PENCIL_DEFINE_ERROR(SampleZero);
PENCIL_DEFINE_ERROR(BadInput);
PENCIL_DEFINE_ERROR(ParseError);
PENCIL_DEFINE_ERROR(UsageError);

#undef PENCIL_DEFINE_ERROR

} // namespace pencil

#endif // PENCIL_ERRORS_HPP
