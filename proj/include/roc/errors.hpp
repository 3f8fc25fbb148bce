#pragma once

#include <stdexcept>
#include <string>

namespace roc
{

/*! \brief Raised when an argument violates an operation's contract. */
class input_error : public std::runtime_error
{
public:
  explicit input_error( const std::string& what ) : std::runtime_error( what ) {}
};

/*! \brief Raised when a test set pins down zero or more than one candidate function. */
class uniqueness_error : public input_error
{
public:
  explicit uniqueness_error( const std::string& what ) : input_error( what ) {}
};

} // namespace roc
