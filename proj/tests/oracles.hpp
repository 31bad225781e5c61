#pragma once

// Brute-force reference computations for the tests. These deliberately avoid
// the library's <=_p tables: ideals are found as unit sets closed under
// left and right multiplication by matrix units.

#include <cstdint>
#include <vector>

#include "triaf/algebra.hpp"

namespace triaf::oracle {

/// Every unit set closed under two-sided multiplication by units.
inline std::vector<std::vector<bool>> ideals_by_multiplication(const Shape &shape)
{
    const auto &units = shape.units();
    std::size_t u = units.size();
    std::vector<std::vector<bool>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << u); ++mask) {
        auto in = [&](const MatrixUnit &e) {
            for (std::size_t k = 0; k < u; ++k)
                if (units[k] == e)
                    return ((mask >> k) & 1U) != 0;
            return false;
        };
        bool closed = true;
        for (std::size_t x = 0; x < u && closed; ++x) {
            if (!((mask >> x) & 1U))
                continue;
            for (const auto &g : units) {
                if (auto l = unit_product(shape, g, units[x]); l && !in(*l))
                    closed = false;
                if (auto r = unit_product(shape, units[x], g); r && !in(*r))
                    closed = false;
            }
        }
        if (closed) {
            std::vector<bool> m(u);
            for (std::size_t k = 0; k < u; ++k)
                m[k] = (mask >> k) & 1U;
            out.push_back(std::move(m));
        }
    }
    return out;
}

/// Join (union) of all multiplication-closed sets that miss unit index x.
inline std::vector<bool> largest_excluding(const Shape &shape, std::size_t x)
{
    std::vector<bool> acc(shape.unit_count(), false);
    for (const auto &m : ideals_by_multiplication(shape))
        if (!m[x])
            for (std::size_t k = 0; k < m.size(); ++k)
                acc[k] = acc[k] || m[k];
    return acc;
}

} // namespace triaf::oracle
