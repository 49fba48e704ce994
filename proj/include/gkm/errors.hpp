#pragma once

#include <stdexcept>
#include <string>

namespace gkm {

/// Base of every exception raised by the library.
class Error : public std::runtime_error
{
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define GKM_DECLARE_ERROR(Name)                                              \
    class Name : public Error                                                \
    {                                                                        \
      public:                                                                \
        explicit Name(const std::string& what = #Name) : Error(what) {}      \
    }

GKM_DECLARE_ERROR(ZeroVector);
GKM_DECLARE_ERROR(NotPrimitive);
GKM_DECLARE_ERROR(DimMismatch);
GKM_DECLARE_ERROR(ArithmeticOverflow);
GKM_DECLARE_ERROR(ZeroWeight);
GKM_DECLARE_ERROR(NotDivisible);
GKM_DECLARE_ERROR(PoleAtPoint);
GKM_DECLARE_ERROR(NotGeneric);
GKM_DECLARE_ERROR(TruncationOverflow);
GKM_DECLARE_ERROR(InternalDivisionFailure);
GKM_DECLARE_ERROR(CycleError);
GKM_DECLARE_ERROR(NotRegular);
GKM_DECLARE_ERROR(WrongWallCount);
GKM_DECLARE_ERROR(ZeroNotRegular);
GKM_DECLARE_ERROR(InvalidAction);
GKM_DECLARE_ERROR(InvalidClass);
GKM_DECLARE_ERROR(ParseError);

#undef GKM_DECLARE_ERROR

} // namespace gkm
