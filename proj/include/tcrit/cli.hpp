#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tcrit/criteria.hpp"

namespace tcrit {

enum ExitCode : int {
  kExitPass = 0,
  kExitFail = 1,
  kExitUsage = 2,
  kExitIo = 3,
  kExitNotApplicable = 4,
};

/// A complex to run criteria on, optionally with vertex-link gaps supplied
/// instead of computed (used for examples whose links are only known
/// spectrally).
struct Workload {
  std::string name;
  SimplicialComplex complex;
  std::optional<GapTable> vertex_gaps;
};

/// Built-in workloads: "octahedron", "triangle", "heawood-cone", "lyons".
std::optional<Workload> builtin_workload(const std::string& name);

/// Vertex-link gaps of the Lyons GAB: bipartite link, 3-gon with s = 5 and
/// 6-gon with s = t = 5, on vertices 0, 1, 2 of one triangle.
Workload lyons_workload();

int exit_code_for(Errc code);

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tcrit
