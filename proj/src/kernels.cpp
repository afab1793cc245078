#include "blocklie/kernels.hpp"

#include <exception>
#include <map>

#include <omp.h>

namespace blocklie::kernels {

namespace {

// Exceptions may not leave an OpenMP region; keep the first one and rethrow after.
class ErrorSlot {
 public:
  void capture() {
#pragma omp critical(blocklie_error_slot)
    if (!error_) error_ = std::current_exception();
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

ProbeMatrix gather(const std::vector<PBWMonomial>& columns, const std::vector<BasisSymbol>& probes,
                   const std::vector<ModuleVector>& images) {
  ProbeMatrix out{columns, probes, {}, {}};
  const std::size_t n_probes = probes.size();

  std::map<std::pair<std::size_t, PBWMonomial>, std::size_t> row_index;
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t p = 0; p < n_probes; ++p)
      for (const auto& [m, coeff] : images[c * n_probes + p].terms()) row_index.try_emplace({p, m}, 0);

  std::size_t next = 0;
  for (auto& [key, idx] : row_index) {
    idx = next++;
    out.rows.push_back(key);
  }
  out.entries.assign(out.rows.size(), std::vector<Scalar>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t p = 0; p < n_probes; ++p)
      for (const auto& [m, coeff] : images[c * n_probes + p].terms()) out.entries[row_index.at({p, m})][c] = coeff;
  return out;
}

}  // namespace

int max_threads() { return omp_get_max_threads(); }

std::vector<ModuleVector> act_batch_serial(const HighestWeight& weight, std::span<const ActionTask> tasks) {
  std::vector<ModuleVector> out(tasks.size());
  Straightener engine(weight);
  for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = engine.apply_word(tasks[i].word, tasks[i].vector);
  return out;
}

std::vector<ModuleVector> act_batch_parallel(const HighestWeight& weight, std::span<const ActionTask> tasks) {
  std::vector<ModuleVector> out(tasks.size());
  const auto n = static_cast<std::ptrdiff_t>(tasks.size());
  ErrorSlot errors;
#pragma omp parallel
  {
    Straightener engine(weight);
#pragma omp for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      try {
        out[static_cast<std::size_t>(i)] = engine.apply_word(tasks[i].word, tasks[i].vector);
      } catch (...) {
        errors.capture();
      }
    }
  }
  errors.rethrow();
  return out;
}

ProbeMatrix probe_matrix_serial(const HighestWeight& weight, const std::vector<PBWMonomial>& columns,
                                const std::vector<BasisSymbol>& probes) {
  std::vector<ModuleVector> images(columns.size() * probes.size());
  Straightener engine(weight);
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t p = 0; p < probes.size(); ++p) images[c * probes.size() + p] = engine.act(probes[p], columns[c]);
  return gather(columns, probes, images);
}

ProbeMatrix probe_matrix_parallel(const HighestWeight& weight, const std::vector<PBWMonomial>& columns,
                                  const std::vector<BasisSymbol>& probes) {
  const std::size_t n_probes = probes.size();
  std::vector<ModuleVector> images(columns.size() * n_probes);
  const auto n = static_cast<std::ptrdiff_t>(images.size());
  ErrorSlot errors;
#pragma omp parallel
  {
    Straightener engine(weight);
#pragma omp for schedule(dynamic, 8)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      const auto idx = static_cast<std::size_t>(k);
      try {
        images[idx] = engine.act(probes[idx % n_probes], columns[idx / n_probes]);
      } catch (...) {
        errors.capture();
      }
    }
  }
  errors.rethrow();
  return gather(columns, probes, images);
}

}  // namespace blocklie::kernels
