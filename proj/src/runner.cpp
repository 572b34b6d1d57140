#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "qcs/errors.hpp"
#include "qcs/harness.hpp"
#include "qcs/pbp.hpp"
#include "qcs/projectors.hpp"
#include "qcs/quantizer.hpp"
#include "qcs/rng.hpp"

namespace qcs {

namespace {

Signal draw_signal(const SetTag& set, Rng& rng) {
  switch (set.kind) {
    case SetKind::Sparse: return gen_sparse(set.n, set.k, rng);
    case SetKind::Compressible: return gen_compressible(set.n, set.k, rng);
    case SetKind::LowRank: return gen_lowrank(set.n1, set.n2, set.r, rng);
  }
  throw std::logic_error("draw_signal: bad set kind");
}

}  // namespace

std::vector<TrialRecord> run_experiment(const ExperimentConfig& cfg, int threads) {
  if (cfg.experiment == ExperimentKind::Diagnose)
    throw ConfigError("experiment 'diagnose' runs through the diagnose subcommand");
  const size_t n_m = cfg.m_values.size();
  const size_t n_d = cfg.delta_list.size();
  const size_t n_t = static_cast<size_t>(cfg.trials);
  const size_t total = n_m * n_d * n_t;

  // child seed per cell; a collision would silently correlate trials, so the
  // run refuses to start on one
  std::vector<std::uint64_t> seeds(total);
  {
    std::set<std::uint64_t> seen;
    size_t idx = 0;
    for (size_t mi = 0; mi < n_m; ++mi)
      for (size_t di = 0; di < n_d; ++di)
        for (size_t ti = 0; ti < n_t; ++ti, ++idx) {
          seeds[idx] = derive_seed(cfg.base_seed,
                                   {static_cast<std::uint64_t>(cfg.m_values[mi]),
                                    static_cast<std::uint64_t>(di),
                                    static_cast<std::uint64_t>(ti)});
          if (!seen.insert(seeds[idx]).second)
            throw ConfigError("seed collision between trial cells; change base_seed");
        }
  }

  const std::string experiment_id = to_string(cfg.experiment);
  const std::string set_name = to_string(cfg.set.kind);
  const std::string sensing_name = to_string(cfg.sensing);
  const Projector proj = projector_for(cfg.set);

  std::vector<TrialRecord> records(total);
  std::atomic<size_t> next{0};
  std::mutex err_mu;
  std::exception_ptr first_error;

  auto worker = [&]() {
    for (;;) {
      const size_t idx = next.fetch_add(1);
      if (idx >= total) return;
      {
        std::lock_guard<std::mutex> lock(err_mu);
        if (first_error) return;
      }
      try {
        const size_t mi = idx / (n_d * n_t);
        const size_t di = (idx / n_t) % n_d;
        const size_t ti = idx % n_t;
        const int m = cfg.m_values[mi];
        const double delta = cfg.delta_list[di];
        const std::uint64_t child = seeds[idx];

        const SensingOperator op =
            make_operator(cfg.sensing, m, cfg.set.n, derive_seed(child, {1}));
        Rng sig_rng(derive_seed(child, {2}));
        const Signal x = draw_signal(cfg.set, sig_rng);
        const QuantizerConfig qc{delta,
                                 cfg.dithered ? Dithering::Uniform : Dithering::None};
        const Measurements ms = sense(op, x.values, qc, derive_seed(child, {3}));
        const Reconstruction rec = pbp_reconstruct(op, ms, proj);
        const double err = (x.values - rec.estimate).norm();
        if (!std::isfinite(err))
          throw NumericalError("non-finite reconstruction error (m=" +
                               std::to_string(m) + ", delta=" + format_g9(delta) +
                               ", trial=" + std::to_string(ti) + ")");

        TrialRecord& row = records[idx];
        row.experiment_id = experiment_id;
        row.set = set_name;
        row.sensing = sensing_name;
        row.n = cfg.set.n;
        row.k_or_r = cfg.set.k_or_r();
        row.m = m;
        row.delta = delta;
        row.dithered = cfg.dithered;
        row.trial_index = static_cast<int>(ti);
        row.seed = child;
        row.error = err;
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  const int nthreads = std::max(1, threads);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(nthreads));
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return records;
}

}  // namespace qcs
