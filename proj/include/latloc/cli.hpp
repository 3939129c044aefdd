#pragma once
// In-process command-line entry point, so tests can drive the CLI without
// spawning a process.  `args` excludes the program name.  Primary payloads
// (edge lists, reports) go to `out`; when a command prints an edge list on
// `out`, its report moves to `err` so shell pipelines stay clean.  Error
// reports always go to `err`.  Returns the exit code: 0 for an affirmative
// verdict, 1 for a false/obstructed verdict, 2 for errors.

#include <iosfwd>
#include <string>
#include <vector>

namespace latloc {

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace latloc
