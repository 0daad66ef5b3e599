#pragma once

#include <stdexcept>
#include <string>

namespace ellvb {

/// Base of every error the library raises. `name()` is the stable identifier
/// the CLI prints, e.g. "NotInvertibleInRing".
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

#define ELLVB_DEFINE_ERROR(Type)                                   \
  class Type : public Error {                                      \
   public:                                                         \
    explicit Type(const std::string& what) : Error(#Type, what) {} \
  };

ELLVB_DEFINE_ERROR(DomainError)
ELLVB_DEFINE_ERROR(SizeMismatch)
ELLVB_DEFINE_ERROR(TorusMismatch)
ELLVB_DEFINE_ERROR(ShapeError)
ELLVB_DEFINE_ERROR(InvalidTorus)
ELLVB_DEFINE_ERROR(NotInvertibleInRing)
ELLVB_DEFINE_ERROR(NotNilpotent)
ELLVB_DEFINE_ERROR(DetVanishesOnCstar)
ELLVB_DEFINE_ERROR(ParseError)

#undef ELLVB_DEFINE_ERROR

}  // namespace ellvb
