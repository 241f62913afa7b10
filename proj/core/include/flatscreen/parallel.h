// Copyright 2026 The Flatscreen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLATSCREEN_PARALLEL_H_
#define FLATSCREEN_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace flatscreen {

// Runs fn(0) .. fn(n - 1) on up to `threads` worker threads. Callers write
// results into per-index slots, so output order never depends on
// scheduling. If any call throws, the exception of the lowest failing index
// is rethrown after all workers finish.
void ParallelFor(size_t n, size_t threads, const std::function<void(size_t)> &fn);

}  // namespace flatscreen

#endif  // FLATSCREEN_PARALLEL_H_
