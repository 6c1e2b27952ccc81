#pragma once

#include <string>
#include <vector>

#include "koszul/presentation.hpp"

namespace koszul {

// Built-in presentations: assoc-ns, assoc, com, lie, poisson, perm, prelie,
// tot-assoc-3, part-assoc-3, m-dend(m) for m >= 2.  Throws
// std::invalid_argument on unknown names.
QuadraticPresentation builtin(const std::string& name);

std::vector<std::string> builtin_names();

// Reads a presentation from a file path, or from the corpus when the
// argument has the form "builtin:<name>".
QuadraticPresentation load_presentation(const std::string& path_or_uri);

}  // namespace koszul
