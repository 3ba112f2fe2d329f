#include "kernel.hpp"

#include <omp.h>

#include <atomic>
#include <exception>
#include <limits>
#include <mutex>

#include "monotrick/eval.hpp"

namespace monotrick::detail {

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kJobCandidates = 1U << 12;
constexpr std::size_t kJobsPerWorker = 64;

std::uint64_t add_sat(std::uint64_t a, std::uint64_t b) {
  return a > kNone - b ? kNone : a + b;
}

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kNone / a) return kNone;
  return a * b;
}

// Odometer over D(w)^n, last position fastest.
bool advance(std::vector<Individual>& values, std::size_t size) {
  for (std::size_t i = values.size(); i-- > 0;) {
    if (++values[i] < size) return true;
    values[i] = 0;
  }
  return false;
}

bool find_in_model(const Evaluator& ev, const Model& m, bool want, World& world,
                   std::vector<Individual>& values) {
  const std::size_t n = ev.free_variables().size();
  for (World w = 0; w < m.frame.size(); ++w) {
    const std::size_t size = m.domains.members(w).size();
    values.assign(n, 0);
    do {
      if (ev.holds(w, values) == want) {
        world = w;
        return true;
      }
    } while (advance(values, size));
  }
  return false;
}

}  // namespace

ScanResult scan_serial(const SpaceSource& source, const Formula& f, bool want,
                       std::uint64_t max_steps) {
  ScanResult result;
  std::uint64_t offset = 0;
  std::vector<Individual> values;
  for (std::size_t s = 0;; ++s) {
    auto space = source(s);
    if (!space) break;
    for (std::size_t dm = 0; dm < space->domain_maps().size(); ++dm) {
      const std::uint64_t size = space->block_size(dm);
      if (offset >= max_steps) {
        if (size > 0) result.exhausted = true;
        return result;
      }
      auto block = space->block(dm);
      const Evaluator ev(block.model(), f);
      const std::uint64_t eqs = block.equality_count();
      const std::uint64_t vals = block.valuation_count();
      for (std::uint64_t v = 0; v < vals; ++v) {
        const std::uint64_t base = offset + v * eqs;
        if (base >= max_steps) {
          result.exhausted = true;
          return result;
        }
        if (!block.load_valuation(v)) continue;
        for (std::uint64_t e = 0; e < eqs; ++e) {
          if (base + e >= max_steps) {
            result.exhausted = true;
            return result;
          }
          if (!block.load_equality(e)) continue;
          World w = 0;
          if (find_in_model(ev, block.model(), want, w, values)) {
            result.hit = Hit{base + e, space, dm, v, e, w, values};
            return result;
          }
        }
      }
      offset = add_sat(offset, size);
    }
  }
  return result;
}

namespace {

struct Job {
  std::shared_ptr<const ModelSpace> space;
  std::size_t space_index = 0;
  std::size_t domain_map = 0;
  std::uint64_t first = 0;  // valuation codes [first, last)
  std::uint64_t last = 0;
  std::uint64_t offset = 0;  // index of (first, 0)
};

struct WorkerCache {
  std::size_t space_index = std::numeric_limits<std::size_t>::max();
  std::size_t domain_map = 0;
  std::optional<ModelSpace::Block> block;
  std::optional<Evaluator> ev;
};

// Walks the candidate sequence and cuts it into jobs of roughly
// kJobCandidates, never crossing a domain map.
class JobCutter {
 public:
  JobCutter(const SpaceSource& source, std::uint64_t max_steps)
      : source_(source), max_steps_(max_steps) {}

  /// Appends up to n jobs; false once the sequence or the cap is reached.
  bool next(std::size_t n, std::vector<Job>& out) {
    while (out.size() < n) {
      if (!space_) {
        space_ = source_(space_index_);
        if (!space_) return false;
        dm_ = 0;
        val_ = 0;
      }
      if (dm_ == space_->domain_maps().size()) {
        space_.reset();
        ++space_index_;
        continue;
      }
      if (val_ == 0) {
        block_size_ = space_->block_size(dm_);
        if (offset_ >= max_steps_) {
          if (block_size_ > 0) exhausted_ = true;
          return false;
        }
        // valuation_count throws for oversized spaces, as in the serial loop
        auto probe = space_->block(dm_);
        vals_ = probe.valuation_count();
        eqs_ = probe.equality_count();
        chunk_ = std::max<std::uint64_t>(1, kJobCandidates / std::max<std::uint64_t>(eqs_, 1));
      }
      const std::uint64_t base = add_sat(offset_, mul_sat(val_, eqs_));
      if (base >= max_steps_) {
        exhausted_ = true;
        return false;
      }
      const std::uint64_t end = val_ + std::min(chunk_, vals_ - val_);
      if (add_sat(base, mul_sat(end - val_, eqs_)) > max_steps_) exhausted_ = true;
      out.push_back({space_, space_index_, dm_, val_, end, base});
      val_ = end;
      if (val_ == vals_) {
        offset_ = add_sat(offset_, block_size_);
        ++dm_;
        val_ = 0;
      }
    }
    return true;
  }

  bool exhausted() const noexcept { return exhausted_; }

 private:
  const SpaceSource& source_;
  std::uint64_t max_steps_;
  std::shared_ptr<const ModelSpace> space_;
  std::size_t space_index_ = 0;
  std::size_t dm_ = 0;
  std::uint64_t val_ = 0;
  std::uint64_t vals_ = 0;
  std::uint64_t eqs_ = 1;
  std::uint64_t chunk_ = 1;
  std::uint64_t block_size_ = 0;
  std::uint64_t offset_ = 0;
  bool exhausted_ = false;
};

}  // namespace

ScanResult scan_parallel(const SpaceSource& source, const Formula& f, bool want,
                         std::uint64_t max_steps, unsigned workers) {
  if (workers == 0) workers = static_cast<unsigned>(omp_get_max_threads());
  if (workers <= 1) return scan_serial(source, f, want, max_steps);

  ScanResult result;
  JobCutter cutter(source, max_steps);
  std::vector<WorkerCache> caches(workers);
  std::vector<Job> jobs;
  std::atomic<std::uint64_t> best{kNone};
  std::optional<Hit> best_hit;
  std::mutex best_mutex;
  std::exception_ptr failure;
  std::mutex failure_mutex;

  for (;;) {
    jobs.clear();
    const bool more = cutter.next(kJobsPerWorker * workers, jobs);
    const auto count = static_cast<std::int64_t>(jobs.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (std::int64_t j = 0; j < count; ++j) {
      const Job& job = jobs[static_cast<std::size_t>(j)];
      if (job.offset >= best.load(std::memory_order_relaxed)) continue;
      try {
        WorkerCache& cache = caches[static_cast<std::size_t>(omp_get_thread_num())];
        if (cache.space_index != job.space_index || cache.domain_map != job.domain_map ||
            !cache.block) {
          cache.ev.reset();
          cache.block.emplace(job.space->block(job.domain_map));
          cache.ev.emplace(cache.block->model(), f);
          cache.space_index = job.space_index;
          cache.domain_map = job.domain_map;
        }
        ModelSpace::Block& block = *cache.block;
        const std::uint64_t eqs = block.equality_count();
        std::vector<Individual> values;
        for (std::uint64_t v = job.first; v < job.last; ++v) {
          const std::uint64_t base = job.offset + (v - job.first) * eqs;
          if (base >= best.load(std::memory_order_relaxed) || base >= max_steps) break;
          if (!block.load_valuation(v)) continue;
          bool found = false;
          for (std::uint64_t e = 0; e < eqs && base + e < max_steps; ++e) {
            if (!block.load_equality(e)) continue;
            World w = 0;
            if (find_in_model(*cache.ev, block.model(), want, w, values)) {
              const std::uint64_t index = base + e;
              std::lock_guard lock(best_mutex);
              if (index < best.load()) {
                best.store(index);
                best_hit = Hit{index, job.space, job.domain_map, v, e, w, values};
              }
              found = true;
              break;
            }
          }
          if (found) break;
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }

    if (failure) std::rethrow_exception(failure);
    if (best_hit) {
      result.hit = std::move(best_hit);
      return result;
    }
    if (!more) break;
  }
  result.exhausted = cutter.exhausted();
  return result;
}

Witness materialize(const Hit& hit, const Formula& f) {
  auto block = hit.space->block(hit.domain_map);
  block.load_valuation(hit.valuation);
  block.load_equality(hit.equality);
  const Evaluator ev(block.model(), f);
  Witness out{block.model(), hit.world, {}};
  for (std::size_t i = 0; i < hit.values.size(); ++i) {
    out.assignment.emplace(ev.free_variables()[i], hit.values[i]);
  }
  return out;
}

}  // namespace monotrick::detail
