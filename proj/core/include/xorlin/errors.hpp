/*!
  \file errors.hpp
  \brief Exception types thrown by xorlin

  Range violations on indices and integers use std::out_of_range.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace xorlin
{

/*! \brief A family parameter (k, r, width) is outside the supported range. */
class parameter_error : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/*! \brief Operand shapes do not agree (matrix/vector lengths, input counts). */
class dimension_error : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/*! \brief An operation's documented precondition does not hold. */
class precondition_error : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/*! \brief The requested work exceeds a fixed enumeration budget. */
class budget_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace xorlin
