#pragma once

#include <vector>

#include "triaf/algebra.hpp"

namespace triaf::testing {

/// Every ordered block list with total dimension <= max_dim.
inline std::vector<Shape> shapes_up_to_dimension(int max_dim)
{
    std::vector<Shape> out;
    std::vector<std::vector<int>> frontier{{}};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto &c : frontier) {
            int used = 0;
            for (int n : c)
                used += n;
            for (int n = 1; used + n <= max_dim; ++n) {
                auto d = c;
                d.push_back(n);
                out.emplace_back(d);
                next.push_back(d);
            }
        }
        frontier = std::move(next);
    }
    return out;
}

} // namespace triaf::testing
