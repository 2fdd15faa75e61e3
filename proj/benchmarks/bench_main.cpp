// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

// Distro builds of benchmark_main ship LTO objects tied to one compiler
// release, so the suite provides its own entry point.

#include <benchmark/benchmark.h>

BENCHMARK_MAIN();
