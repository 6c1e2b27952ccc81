#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace koszul {

// The command-line driver:
//   check FILE [--max-weight W] [--max-arity R] [--records OUT]
//   dual FILE [--mode kdual|shriek] [-o OUT]
//   dims FILE --max-arity R [--max-weight W] [--records OUT]
//   bar FILE --max-weight W --max-arity R [--field Q|F<p>] [--max-cell-dim N] [--records OUT]
//   nf FILE --expr "<poly>"
//   shuffles M N I
// FILE is a path or builtin:<name>.  Exit code 0 on success (PBW / diagonal
// homology), 1 when the property fails, 2 on usage or parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace koszul
