#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "tilinglab/graph.hpp"

namespace corpus {

/// Random graph from std::mt19937_64, independent of the library's generators.
tilinglab::Graph random_graph(std::size_t n, double p, std::uint64_t seed);

/// `count` graphs with n drawn from [min_n, max_n] and p from {0.2, ..., 0.9}.
std::vector<tilinglab::Graph> random_corpus(std::size_t count, std::size_t min_n, std::size_t max_n,
                                            std::uint64_t seed);

tilinglab::Graph cycle(std::size_t n);
tilinglab::Graph path(std::size_t n);

/// Fresh empty directory under the system temp dir.
std::filesystem::path temp_dir(const std::string& name);

}  // namespace corpus
