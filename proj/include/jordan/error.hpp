#pragma once

#include <stdexcept>
#include <string>

namespace jordan {

// Base of every domain error. name() is the stable identifier printed by the
// CLI; what() carries the human readable detail.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& detail)
      : std::runtime_error(detail), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define JORDAN_DEFINE_ERROR(Type)                                     \
  class Type : public Error {                                         \
   public:                                                            \
    explicit Type(const std::string& detail) : Error(#Type, detail) {} \
  }

JORDAN_DEFINE_ERROR(ParseError);
JORDAN_DEFINE_ERROR(DivisionByZero);
JORDAN_DEFINE_ERROR(DimensionMismatch);
JORDAN_DEFINE_ERROR(NonSquare);
JORDAN_DEFINE_ERROR(Singular);
JORDAN_DEFINE_ERROR(OutOfRange);
JORDAN_DEFINE_ERROR(Overflow);
JORDAN_DEFINE_ERROR(InvalidRewriteSystem);
JORDAN_DEFINE_ERROR(InvalidPartition);
JORDAN_DEFINE_ERROR(SizeMismatch);
JORDAN_DEFINE_ERROR(RelationViolated);
JORDAN_DEFINE_ERROR(InvariantViolated);
JORDAN_DEFINE_ERROR(NotFullBlockJordanCoordinates);
JORDAN_DEFINE_ERROR(RepeatedBlockSizes);
JORDAN_DEFINE_ERROR(SpectrumMismatch);
JORDAN_DEFINE_ERROR(IrrationalEigenvalues);
JORDAN_DEFINE_ERROR(IoError);

#undef JORDAN_DEFINE_ERROR

}  // namespace jordan
