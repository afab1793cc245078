#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "blocklie/lie.hpp"
#include "blocklie/linalg.hpp"
#include "blocklie/verma.hpp"

namespace blocklie::kernels {

// Data-parallel kernels over independent straightening jobs. Each *_parallel
// routine has a *_serial twin with identical output; the serial versions are the
// reference used by the tests and the benchmark baseline.

/// A word g_1 ... g_n applied right to left to a vector.
struct ActionTask {
  std::vector<BasisSymbol> word;
  ModuleVector vector;
};

std::vector<ModuleVector> act_batch_serial(const HighestWeight& weight, std::span<const ActionTask> tasks);
std::vector<ModuleVector> act_batch_parallel(const HighestWeight& weight, std::span<const ActionTask> tasks);

/// Linear map v -> (act(probe_p, v))_p restricted to a basis, as an exact matrix.
/// Rows are (probe index, target monomial) pairs in sorted order; columns follow `columns`.
struct ProbeMatrix {
  std::vector<PBWMonomial> columns;
  std::vector<BasisSymbol> probes;
  std::vector<std::pair<std::size_t, PBWMonomial>> rows;
  linalg::Matrix<Scalar> entries;
};

ProbeMatrix probe_matrix_serial(const HighestWeight& weight, const std::vector<PBWMonomial>& columns,
                                const std::vector<BasisSymbol>& probes);
ProbeMatrix probe_matrix_parallel(const HighestWeight& weight, const std::vector<PBWMonomial>& columns,
                                  const std::vector<BasisSymbol>& probes);

/// Number of OpenMP threads the parallel kernels will use.
int max_threads();

}  // namespace blocklie::kernels
