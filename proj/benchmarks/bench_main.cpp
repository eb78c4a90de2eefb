#include <benchmark/benchmark.h>

// The distro's libbenchmark_main.a was compiled with a mismatched LTO
// toolchain, so supply the entry point ourselves.
BENCHMARK_MAIN();
