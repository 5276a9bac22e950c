/**
 * @file cli.hpp
 * @brief Command dispatch behind the invder binary.
 *
 * Every command writes exactly one JSON document to the output stream. Exit
 * status: 0 all checks pass, 1 a mathematical check fails (details in the
 * document or on the error stream), 2 unusable input or arguments.
 */
#pragma once

#include <iosfwd>

namespace invder {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace invder
