// SPDX-License-Identifier: Apache-2.0
#include "opsim/frame.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace opsim {

FrameConfig::FrameConfig() { pilot_symbol_indices = default_pilot_indices(n_symbols, 4); }

int FrameConfig::bits_per_symbol() const {
    if (modulation != "qpsk")
        throw std::invalid_argument("FrameConfig: unsupported modulation '" + modulation + "'");
    return 2;
}

void FrameConfig::validate() const {
    if (n_subcarriers < 1 || n_symbols < 1)
        throw std::invalid_argument("FrameConfig: N and M must be >= 1");
    if (cp_length < 0) throw std::invalid_argument("FrameConfig: cp_length must be >= 0");
    if (bandwidth <= 0.0) throw std::invalid_argument("FrameConfig: bandwidth must be > 0");
    if (code_rate <= 0.0 || code_rate > 1.0)
        throw std::invalid_argument("FrameConfig: code_rate out of range");
    if (n_iterations < 1) throw std::invalid_argument("FrameConfig: n_iterations must be >= 1");
    bits_per_symbol();
    std::set<int> seen;
    for (int m : pilot_symbol_indices) {
        if (m < 0 || m >= n_symbols)
            throw std::invalid_argument("FrameConfig: pilot symbol index out of range");
        if (!seen.insert(m).second)
            throw std::invalid_argument("FrameConfig: duplicate pilot symbol index");
    }
    if (n_data_symbols() < 1)
        throw std::invalid_argument("FrameConfig: no data symbols left after pilots");
    if (!tx_window.empty() && static_cast<int>(tx_window.size()) != grid_size())
        throw std::invalid_argument("FrameConfig: tx_window length must equal M*N");
}

std::vector<int> default_pilot_indices(int n_symbols, int n_pilot_symbols) {
    if (n_pilot_symbols < 0 || n_pilot_symbols > n_symbols)
        throw std::invalid_argument("default_pilot_indices: J must be in 0..M");
    std::vector<int> idx;
    idx.reserve(n_pilot_symbols);
    const double m_d = static_cast<double>(n_symbols);
    const double j_d = static_cast<double>(n_pilot_symbols);
    for (int i = 0; i < n_pilot_symbols; ++i) {
        idx.push_back(static_cast<int>(std::floor(i * m_d / j_d + m_d / (2.0 * j_d))));
    }
    return idx;
}

cvec PilotPattern::scatter(const cvec& data) const {
    if (data.size() != data_indices.size())
        throw std::invalid_argument("PilotPattern::scatter: data length mismatch");
    cvec full(grid_size());
    for (std::size_t i = 0; i < pilot_indices.size(); ++i)
        full[pilot_indices[i]] = pilot_values[i];
    for (std::size_t i = 0; i < data_indices.size(); ++i) full[data_indices[i]] = data[i];
    return full;
}

void PilotPattern::validate(int n_grid) const {
    if (grid_size() != n_grid)
        throw std::invalid_argument("PilotPattern: pilot+data positions must cover the grid");
    if (pilot_values.size() != pilot_indices.size())
        throw std::invalid_argument("PilotPattern: one value per pilot position required");
    std::vector<char> hit(n_grid, 0);
    for (int i : pilot_indices) {
        if (i < 0 || i >= n_grid || hit[i]) throw std::invalid_argument("PilotPattern: bad pilot index");
        hit[i] = 1;
    }
    for (int i : data_indices) {
        if (i < 0 || i >= n_grid || hit[i]) throw std::invalid_argument("PilotPattern: bad data index");
        hit[i] = 1;
    }
}

PilotPattern default_pilot_pattern(const FrameConfig& config, std::uint64_t pilot_seed) {
    config.validate();
    PilotPattern p;
    std::vector<char> is_pilot_col(config.n_symbols, 0);
    for (int m : config.pilot_symbol_indices) is_pilot_col[m] = 1;

    const int n = config.n_subcarriers;
    for (int m = 0; m < config.n_symbols; ++m) {
        for (int q = 0; q < n; ++q) {
            (is_pilot_col[m] ? p.pilot_indices : p.data_indices).push_back(m * n + q);
        }
    }

    Rng rng(derive_seed(pilot_seed, 0x9117ULL));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    p.pilot_values.reserve(p.pilot_indices.size());
    for (std::size_t i = 0; i < p.pilot_indices.size(); ++i) {
        const double re = rng.bit() ? -inv_sqrt2 : inv_sqrt2;
        const double im = rng.bit() ? -inv_sqrt2 : inv_sqrt2;
        p.pilot_values.emplace_back(re, im);
    }
    p.validate(config.grid_size());
    return p;
}

}  // namespace opsim
