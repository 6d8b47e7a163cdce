#include "oddsratio/simulation.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cinttypes>
#include <cstdio>
#include <thread>

#include "oddsratio/errors.hpp"

namespace oddsratio {

namespace {

/// Replications per scheduling block. Fixed: the partition is part of the
/// algorithm, not a tuning knob, so results are identical for any worker
/// count.
constexpr std::uint64_t kBlockSize = 1024;

constexpr double kContinuityDelta = 0.5;

std::uint8_t method_bit(Method m) {
  return static_cast<std::uint8_t>(1u << static_cast<unsigned>(m));
}

}  // namespace

MethodSet MethodSet::all() {
  MethodSet s;
  for (Method m : kAllMethods) {
    s.insert(m);
  }
  return s;
}

MethodSet& MethodSet::insert(Method m) {
  bits_ |= method_bit(m);
  return *this;
}

bool MethodSet::contains(Method m) const {
  return (bits_ & method_bit(m)) != 0;
}

std::size_t MethodSet::size() const {
  std::size_t n = 0;
  for (Method m : kAllMethods) {
    n += contains(m) ? 1 : 0;
  }
  return n;
}

std::vector<Method> MethodSet::ordered() const {
  std::vector<Method> out;
  out.reserve(size());
  for (Method m : kAllMethods) {
    if (contains(m)) {
      out.push_back(m);
    }
  }
  return out;
}

void validate_settings(const SimulationSettings& s) {
  if (s.mc_count < 1) {
    throw InvalidSettings("settings: mc_count must be at least 1");
  }
  if (s.pbs_count < 2) {
    throw InvalidSettings("settings: pbs_count must be at least 2");
  }
  if (!(s.alpha > 0.0 && s.alpha < 1.0)) {
    throw InvalidSettings("settings: alpha must lie in (0, 1)");
  }
  if (s.methods.empty()) {
    throw InvalidSettings("settings: at least one method is required");
  }
}

std::string ReplicationLog::csv() const {
  std::string out{kHeader};
  out.push_back('\n');
  for (const std::string& chunk : chunks_) {
    out += chunk;
  }
  return out;
}

std::vector<EstimateWithCI> run_single_replication(
    const StudyDesign& design, const SimulationSettings& settings,
    std::uint64_t replication_index, std::uint64_t* uniforms_used) {
  RandomStream stream(settings.seed, replication_index);
  const ContingencyTable raw = generate_table(design, stream);
  const ContingencyTable table = apply_continuity(raw, kContinuityDelta);

  std::vector<EstimateWithCI> estimates;
  estimates.reserve(settings.methods.size());
  for (Method m : settings.methods.ordered()) {
    switch (m) {
      case Method::standard:
        estimates.push_back(standard_estimate(table, settings.alpha));
        break;
      case Method::pctl_boot:
        estimates.push_back(percentile_bootstrap_estimate(
            table, settings.alpha, settings.pbs_count, stream));
        break;
      case Method::pctl_calc:
        estimates.push_back(percentile_calc_estimate(table, settings.alpha));
        break;
      case Method::barendregt:
        estimates.push_back(barendregt_estimate(table, settings.alpha));
        break;
    }
  }
  if (uniforms_used != nullptr) {
    *uniforms_used = stream.uniforms_used();
  }
  return estimates;
}

class SimulationRunner {
 public:
  SimulationRunner(const StudyDesign& design,
                   const SimulationSettings& settings, ReplicationLog* log)
      : design_(design),
        settings_(settings),
        or_true_(true_or(design)),
        block_count_((settings.mc_count + kBlockSize - 1) / kBlockSize),
        block_accumulators_(block_count_),
        log_(log) {
    if (log_ != nullptr) {
      log_->chunks_.assign(block_count_, {});
    }
  }

  SimulationReport run(unsigned thread_count) {
    unsigned workers = thread_count;
    if (workers == 0) {
      workers = std::thread::hardware_concurrency();
      if (workers == 0) {
        workers = 1;
      }
    }
    if (static_cast<std::uint64_t>(workers) > block_count_) {
      workers = static_cast<unsigned>(block_count_);
    }

    if (workers <= 1) {
      for (std::uint64_t b = 0; b < block_count_; ++b) {
        run_block(b);
      }
    } else {
      next_block_.store(0);
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([this] { work(); });
      }
      for (std::thread& t : pool) {
        t.join();
      }
    }

    // Fold block results in index order: the reduction tree is fixed, so
    // the totals do not depend on which worker ran which block.
    const std::vector<Method> methods = settings_.methods.ordered();
    std::vector<MethodAccumulator> totals(methods.size());
    for (const auto& block : block_accumulators_) {
      for (std::size_t i = 0; i < methods.size(); ++i) {
        totals[i].merge(block[i]);
      }
    }

    SimulationReport report;
    report.design = design_;
    report.settings = settings_;
    report.or_true = or_true_;
    report.theoretical_power = theoretical_power(design_, settings_.alpha);
    report.summaries.reserve(methods.size());
    for (std::size_t i = 0; i < methods.size(); ++i) {
      report.summaries.push_back(finalize(methods[i], totals[i]));
    }
    return report;
  }

 private:
  void work() {
    for (;;) {
      const std::uint64_t b = next_block_.fetch_add(1);
      if (b >= block_count_) {
        return;
      }
      run_block(b);
    }
  }

  void run_block(std::uint64_t block_index) {
    const std::uint64_t first = block_index * kBlockSize;
    const std::uint64_t last =
        std::min(first + kBlockSize, settings_.mc_count);
    auto& accumulators = block_accumulators_[block_index];
    std::string* chunk =
        (log_ != nullptr) ? &log_->chunks_[block_index] : nullptr;
    for (std::uint64_t rep = first; rep < last; ++rep) {
      const std::vector<EstimateWithCI> estimates =
          run_single_replication(design_, settings_, rep);
      for (std::size_t i = 0; i < estimates.size(); ++i) {
        accumulators[i].record(estimates[i], or_true_);
        if (chunk != nullptr) {
          append_row(*chunk, rep, estimates[i]);
        }
      }
    }
  }

  void append_row(std::string& chunk, std::uint64_t rep,
                  const EstimateWithCI& e) const {
    char buffer[160];
    const int miss_high = e.upper < or_true_ ? 1 : 0;
    const int miss_low = e.lower > or_true_ ? 1 : 0;
    const int reject = (e.lower > 1.0 || e.upper < 1.0) ? 1 : 0;
    std::snprintf(buffer, sizeof buffer,
                  "%" PRIu64 ",%s,%.17g,%.17g,%.17g,%d,%d,%d\n", rep,
                  std::string(method_name(e.method)).c_str(), e.point, e.lower,
                  e.upper, miss_high, miss_low, reject);
    chunk += buffer;
  }

  const StudyDesign design_;
  const SimulationSettings settings_;
  const double or_true_;
  const std::uint64_t block_count_;
  std::vector<std::array<MethodAccumulator, kAllMethods.size()>>
      block_accumulators_;
  ReplicationLog* log_;
  std::atomic<std::uint64_t> next_block_{0};
};

SimulationReport run_simulation(const StudyDesign& design,
                                const SimulationSettings& settings,
                                unsigned thread_count, ReplicationLog* log) {
  validate_design(design);
  validate_settings(settings);
  SimulationRunner runner(design, settings, log);
  return runner.run(thread_count);
}

}  // namespace oddsratio
