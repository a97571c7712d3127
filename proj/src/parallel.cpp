#include "mincm/parallel.hpp"

namespace mincm {

namespace {
std::atomic<unsigned> g_default_jobs{0};
}

unsigned default_jobs() {
  unsigned jobs = g_default_jobs.load();
  if (jobs != 0) return jobs;
  return std::max(1U, std::thread::hardware_concurrency());
}

void set_default_jobs(unsigned jobs) { g_default_jobs.store(jobs); }

}  // namespace mincm
