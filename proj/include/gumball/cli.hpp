#ifndef GUMBALL_CLI_HPP
#define GUMBALL_CLI_HPP

#include <string>
#include <vector>

namespace gumball::cli {

// Exit codes: 0 every verdict confirms the claim under test, 1 a violation
// or counterexample was found (and reported), 2 inconclusive or resource
// limited, 3 usage or domain error.
int run(int argc, const char* const* argv);

// Same dispatch with the report captured instead of printed; for tests.
int run_for_test(const std::vector<std::string>& args, std::string* captured_output);

}  // namespace gumball::cli

#endif
