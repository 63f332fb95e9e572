#pragma once

#include <cstdint>
#include <future>
#include <vector>

namespace fermat {

/// Splits [begin, end) into one chunk per job, evaluates the chunks
/// (concurrently when jobs > 1) and folds the per-chunk results in chunk
/// order. As long as `merge` respects scan order — concatenation, min with
/// first-wins ties, first-hit — the outcome is identical for every job
/// count.
template <typename R, typename PerChunk, typename Merge>
R chunked_reduce(std::int64_t begin, std::int64_t end, int jobs, R init, PerChunk per_chunk,
                 Merge merge)
{
    if (begin >= end) return init;
    if (jobs < 1) jobs = 1;
    const std::int64_t span = end - begin;
    const std::int64_t nchunks = std::min<std::int64_t>(jobs, span);
    if (nchunks == 1) {
        R acc = init;
        merge(acc, per_chunk(begin, end));
        return acc;
    }
    std::vector<std::future<R>> parts;
    parts.reserve(nchunks);
    for (std::int64_t i = 0; i < nchunks; ++i) {
        const std::int64_t lo = begin + span * i / nchunks;
        const std::int64_t hi = begin + span * (i + 1) / nchunks;
        parts.push_back(std::async(std::launch::async, per_chunk, lo, hi));
    }
    R acc = init;
    for (auto& part : parts) merge(acc, part.get());
    return acc;
}

} // namespace fermat
