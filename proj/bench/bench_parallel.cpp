// Serial reference kernels against their OpenMP counterparts.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include <omp.h>

#include "boolinv/corpus.hpp"
#include "boolinv/engine.hpp"
#include "boolinv/map_analysis.hpp"
#include "boolinv/oracle.hpp"

namespace {

double time_ms(const std::function<void()>& body, int repeats) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const auto stop = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(stop - start).count());
  }
  return best;
}

void row(const char* name, double serial, double parallel, int jobs) {
  std::printf("%-38s %10.2f %10.2f %8.2fx  (jobs=%d)\n", name, serial, parallel, serial / parallel, jobs);
}

}  // namespace

int main(int argc, char** argv) {
  const int jobs = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
  const int repeats = 3;
  std::printf("%-38s %10s %10s %9s\n", "kernel", "serial ms", "omp ms", "speedup");

  boolinv::corpus::Rng rng(7);
  const auto wide = boolinv::corpus::random_sparse_map(rng, 16, 16, 3);
  std::size_t sink = 0;
  row("oracle image, n=16", time_ms([&] { sink += boolinv::oracle::brute_image_serial(wide).size(); }, repeats),
      time_ms([&] { sink += boolinv::oracle::brute_image_parallel(wide, jobs).size(); }, repeats), jobs);

  const auto big = boolinv::corpus::random_injective_map(rng, 20, 20, 3);
  row("oracle streaming image size, n=20",
      time_ms([&] { sink += boolinv::oracle::image_size_streaming(big, 1); }, repeats),
      time_ms([&] { sink += boolinv::oracle::image_size_streaming(big, jobs); }, repeats), jobs);

  const auto clustered = boolinv::corpus::clustered_system(3, 6, 6);
  boolinv::EngineConfig serial{12, 1, true};
  boolinv::EngineConfig parallel{12, jobs, true};
  row("engine, 36 vars in 6 clusters",
      time_ms([&] { sink += boolinv::implicants(clustered, serial).terms.size(); }, repeats),
      time_ms([&] { sink += boolinv::implicants(clustered, parallel).terms.size(); }, repeats), jobs);

  const auto graph = boolinv::build_graph_system(boolinv::corpus::random_injective_map(rng, 13, 13, 3));
  row("engine, graph system of n=13 map",
      time_ms([&] { sink += boolinv::implicants(graph, serial).terms.size(); }, repeats),
      time_ms([&] { sink += boolinv::implicants(graph, parallel).terms.size(); }, repeats), jobs);

  std::printf("(checksum %zu)\n", sink);
  return 0;
}
