#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "cohid/dgku.hpp"

namespace cohid::app {

/// A dg K[u]-module named on the command line.
struct ResolvedModule {
    DgKuModule module;
    /// False when the cohomology tail was not declared by the source and bars near the
    /// truncation degree may be artifacts.
    bool declared_tail = true;
};

/// Resolves pt, cp:n:j, m:j, x_a:a, loop[:d1,d2,...] and @file.json (a model when it has
/// "generators", a dg K[u]-module when it has "dims").
ResolvedModule resolve(const std::string& ref, const Field& f, std::optional<int> trunc);

/// Entry point of the cohid executable; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cohid::app
