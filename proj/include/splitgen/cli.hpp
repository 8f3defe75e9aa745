#ifndef SPLITGEN_CLI_HPP
#define SPLITGEN_CLI_HPP

namespace splitgen {

/// Full command-line front end. Exit status: 0 when the requested check
/// passed (or the command only produces output), 1 when a check came back
/// false, 2 on errors.
int run_cli(int argc, char** argv);

}  // namespace splitgen

#endif
