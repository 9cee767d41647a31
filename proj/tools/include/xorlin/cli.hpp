#pragma once

#include <ostream>
#include <span>
#include <string>

namespace xorlin::cli
{

/*! \brief Runs one command line (without the program name).

  Returns 0 on success, 1 when a check fails and 2 on a usage error.
*/
int run( std::span<std::string const> args, std::ostream& out, std::ostream& err );

} // namespace xorlin::cli
