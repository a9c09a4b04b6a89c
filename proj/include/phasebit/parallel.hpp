// Copyright 2026 The phasebit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <type_traits>
#include <vector>

#include "phasebit/error.hpp"
#include "phasebit/phase.hpp"

namespace phasebit {

/// Splits a bounded stream into `workers` substreams, evaluates `fn` on each
/// (concurrently when workers > 1) and returns the per-chunk results in chunk
/// order. Callers reduce the results in that order, so as long as the
/// reduction is exact (integer counts, concatenation) the outcome does not
/// depend on the worker count.
template <class Fn>
auto map_chunks(const PhaseStream& bounded_stream, unsigned workers, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, PhaseStream>> {
    using Result = std::invoke_result_t<Fn&, PhaseStream>;
    if (workers == 0) {
        throw UsageError("map_chunks: worker count must be positive");
    }
    std::vector<Result> results(workers);
    if (workers == 1) {
        results[0] = fn(substream(bounded_stream, 0, 1));
        return results;
    }

    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                try {
                    results[w] = fn(substream(bounded_stream, w, workers));
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& error : errors) {
        if (error) {
            std::rethrow_exception(error);
        }
    }
    return results;
}

/// Sum of an integer-valued per-trial function over a bounded stream.
template <class TrialFn>
std::int64_t sum_over_trials(const PhaseStream& bounded_stream, unsigned workers, TrialFn trial) {
    const auto partial = map_chunks(bounded_stream, workers, [&](PhaseStream chunk) {
        std::int64_t sum = 0;
        while (!chunk.done()) {
            sum += trial(chunk.next());
        }
        return sum;
    });
    std::int64_t total = 0;
    for (std::int64_t s : partial) {
        total += s;
    }
    return total;
}

}  // namespace phasebit
