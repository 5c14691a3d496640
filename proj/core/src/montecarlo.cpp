#include "plcsec/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include <boost/math/distributions/normal.hpp>

namespace plcsec {

void McConfig::validate() const {
  if (samples < 10'000) throw ConfigError("at least 10000 samples are required", "monte_carlo.samples");
  if (workers < 1) throw ConfigError("at least one worker is required", "monte_carlo.workers");
  if (!(confidence > 0.5 && confidence < 1.0))
    throw ConfigError("must lie in (0.5, 1)", "monte_carlo.confidence");
}

double normal_critical_value(double confidence) {
  return boost::math::quantile(boost::math::normal_distribution<double>(), 0.5 + 0.5 * confidence);
}

namespace {

// Running mean / second central moment, mergeable (Chan et al.).
struct Moments {
  double count = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    count += 1.0;
    const double delta = x - mean;
    mean += delta / count;
    m2 += delta * (x - mean);
  }

  static Moments merge(const Moments& a, const Moments& b) {
    if (a.count == 0.0) return b;
    if (b.count == 0.0) return a;
    Moments out;
    out.count = a.count + b.count;
    const double delta = b.mean - a.mean;
    out.mean = a.mean + delta * (b.count / out.count);
    out.m2 = a.m2 + b.m2 + delta * delta * (a.count * b.count / out.count);
    return out;
  }
};

// Pairwise reduction in block order: same tree for any worker count.
Moments reduce_pairwise(std::span<const Moments> parts) {
  if (parts.empty()) return {};
  if (parts.size() == 1) return parts[0];
  const std::size_t mid = parts.size() / 2;
  return Moments::merge(reduce_pairwise(parts.first(mid)), reduce_pairwise(parts.subspan(mid)));
}

struct Trial {
  double gain_a;
  double gain_best;
  double gain_e;
  NoiseState dest_state;
  NoiseState eav_state;
};

RandomStream block_stream(std::uint64_t seed, std::uint64_t block) { return RandomStream(seed).substream(block); }

class TrialSampler {
 public:
  TrialSampler(const SystemConfig& cfg, std::uint64_t seed, std::uint64_t block)
      : links_(resolve_links(cfg.topology)),
        n_(cfg.topology.n_destinations),
        dest_noise_(cfg.dest_noise),
        eav_noise_(cfg.eav_noise),
        source_(role_stream(block_stream(seed, block), StreamRole::source_link)),
        dest_(role_stream(block_stream(seed, block), StreamRole::destination_links)),
        eav_(role_stream(block_stream(seed, block), StreamRole::eavesdropper_link)),
        dest_state_(role_stream(block_stream(seed, block), StreamRole::destination_noise)),
        eav_state_(role_stream(block_stream(seed, block), StreamRole::eavesdropper_noise)) {}

  Trial next() {
    // The source stream is consumed even without a pinhole so that PH and
    // No-PH runs stay aligned draw for draw.
    const double shared = sample_gain(links_.shared.value_or(LinkParams{}), source_);
    Trial t{};
    t.gain_a = links_.shared ? shared : 1.0;
    t.gain_best = 0.0;
    for (int i = 0; i < n_; ++i) t.gain_best = std::max(t.gain_best, sample_gain(links_.destination, dest_));
    t.gain_e = sample_gain(links_.eavesdropper, eav_);
    t.dest_state = sample_noise_state(dest_noise_, dest_state_);
    t.eav_state = sample_noise_state(eav_noise_, eav_state_);
    return t;
  }

 private:
  ResolvedLinks links_;
  int n_;
  NoiseParams dest_noise_;
  NoiseParams eav_noise_;
  RandomStream source_;
  RandomStream dest_;
  RandomStream eav_;
  RandomStream dest_state_;
  RandomStream eav_state_;
};

template <class Fn>
void run_blocks(std::uint64_t blocks, unsigned workers, Fn&& fn) {
  const unsigned n_threads = static_cast<unsigned>(std::min<std::uint64_t>(workers, blocks));
  if (n_threads <= 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) fn(b);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (unsigned w = 0; w < n_threads; ++w) {
      pool.emplace_back([&] {
        for (std::uint64_t b = next++; b < blocks && !failed; b = next++) {
          try {
            fn(b);
          } catch (...) {
            if (!failed.exchange(true)) error = std::current_exception();
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

std::uint64_t block_count(std::uint64_t samples) { return (samples + kMcBlockSize - 1) / kMcBlockSize; }

std::uint64_t block_length(std::uint64_t samples, std::uint64_t block) {
  return std::min(kMcBlockSize, samples - block * kMcBlockSize);
}

SecrecyResult summarize(const Moments& m, double confidence) {
  const double variance = m.count > 1.0 ? m.m2 / (m.count - 1.0) : 0.0;
  const double half = normal_critical_value(confidence) * std::sqrt(variance / m.count);
  return {m.mean, Method::monte_carlo, half, m.count};
}

[[noreturn]] void throw_trial(std::uint64_t trial, const char* what) {
  throw EvaluationError(std::string(what) + ": non-finite sample at trial " + std::to_string(trial));
}

}  // namespace

std::vector<SecrecyResult> mc_asc_powers(const SystemConfig& cfg,
                                         std::span<const double> transmit_powers,
                                         const McConfig& mc) {
  cfg.validate();
  mc.validate();
  std::vector<AlphaPair> alpha_b, alpha_e;
  for (double p : transmit_powers) {
    alpha_b.push_back(alpha_factors(p, cfg.dest_noise));
    alpha_e.push_back(alpha_factors(p, cfg.eav_noise));
  }
  const std::size_t n_powers = transmit_powers.size();
  const std::uint64_t blocks = block_count(mc.samples);
  std::vector<Moments> partial(blocks * n_powers);

  run_blocks(blocks, mc.workers, [&](std::uint64_t b) {
    TrialSampler sampler(cfg, mc.seed, b);
    Moments* out = &partial[b * n_powers];
    const std::uint64_t len = block_length(mc.samples, b);
    for (std::uint64_t i = 0; i < len; ++i) {
      const Trial t = sampler.next();
      const double snr_b = t.gain_a * t.gain_best;
      const double snr_e = t.gain_a * t.gain_e;
      for (std::size_t p = 0; p < n_powers; ++p) {
        const double c_b = std::log1p(alpha_b[p][t.dest_state] * snr_b);
        const double c_e = std::log1p(alpha_e[p][t.eav_state] * snr_e);
        const double cs = std::max(c_b - c_e, 0.0) / std::numbers::ln2;
        if (!std::isfinite(cs)) throw_trial(b * kMcBlockSize + i, "mc_asc");
        out[p].add(cs);
      }
    }
  });

  std::vector<SecrecyResult> results;
  std::vector<Moments> column(blocks);
  for (std::size_t p = 0; p < n_powers; ++p) {
    for (std::uint64_t b = 0; b < blocks; ++b) column[b] = partial[b * n_powers + p];
    results.push_back(summarize(reduce_pairwise(column), mc.confidence));
  }
  return results;
}

SecrecyResult mc_asc(const SystemConfig& cfg, const McConfig& mc) {
  const double power = cfg.transmit_power;
  return mc_asc_powers(cfg, std::span<const double>(&power, 1), mc).front();
}

namespace {

struct InterceptTest {
  AlphaPair tilde_b;
  AlphaPair tilde_e;

  // P and gamma_a multiply both sides, so compare the P-free quantities.
  bool operator()(const Trial& t) const {
    return tilde_b[t.dest_state] * t.gain_best < tilde_e[t.eav_state] * t.gain_e;
  }
};

}  // namespace

SecrecyResult mc_poi(const SystemConfig& cfg, const McConfig& mc) {
  cfg.validate();
  mc.validate();
  const InterceptTest intercepted{alpha_factors_tilde(cfg.dest_noise), alpha_factors_tilde(cfg.eav_noise)};
  const std::uint64_t blocks = block_count(mc.samples);
  std::vector<Moments> partial(blocks);
  run_blocks(blocks, mc.workers, [&](std::uint64_t b) {
    TrialSampler sampler(cfg, mc.seed, b);
    const std::uint64_t len = block_length(mc.samples, b);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < len; ++i) {
      const Trial t = sampler.next();
      if (!std::isfinite(t.gain_best) || !std::isfinite(t.gain_e)) throw_trial(b * kMcBlockSize + i, "mc_poi");
      hits += intercepted(t) ? 1 : 0;
    }
    const double n = static_cast<double>(len);
    const double mean = static_cast<double>(hits) / n;
    partial[b] = {n, mean, n * mean * (1.0 - mean)};
  });
  return summarize(reduce_pairwise(partial), mc.confidence);
}

std::vector<std::uint8_t> mc_poi_outcomes(const SystemConfig& cfg, const McConfig& mc,
                                          std::uint64_t count) {
  cfg.validate();
  const InterceptTest intercepted{alpha_factors_tilde(cfg.dest_noise), alpha_factors_tilde(cfg.eav_noise)};
  std::vector<std::uint8_t> out;
  out.reserve(count);
  for (std::uint64_t b = 0; out.size() < count; ++b) {
    TrialSampler sampler(cfg, mc.seed, b);
    for (std::uint64_t i = 0; i < kMcBlockSize && out.size() < count; ++i)
      out.push_back(intercepted(sampler.next()) ? 1 : 0);
  }
  return out;
}

}  // namespace plcsec
