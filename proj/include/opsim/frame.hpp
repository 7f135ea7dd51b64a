// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "opsim/types.hpp"

namespace opsim {

/// Grid dimensions, OFDM numerology and coding parameters for one frame.
///
/// Defaults follow the IEEE 802.11p-style layer used throughout: N=64
/// subcarriers, M=44 OFDM symbols, G=16 cyclic prefix samples, B=10 MHz,
/// f_c=5.9 GHz, QPSK with a rate-1/2 code and J=4 pilot symbol columns.
struct FrameConfig {
    int n_subcarriers = 64;   ///< N, frequency index q in 0..N-1
    int n_symbols = 44;       ///< M, time index m in 0..M-1
    int cp_length = 16;       ///< G, samples
    double bandwidth = 10e6;  ///< B, Hz
    double carrier_freq = 5.9e9;
    std::vector<int> pilot_symbol_indices;  ///< time indices m of pilot columns
    std::string modulation = "qpsk";
    double code_rate = 0.5;
    int n_iterations = 3;
    std::vector<double> tx_window;  ///< per grid point gain; empty = all ones

    FrameConfig();

    int bits_per_symbol() const;  ///< alpha = log2|A|

    double chip_duration() const { return 1.0 / bandwidth; }  ///< T_C
    double symbol_duration() const {                          ///< T_S = T_C (N+G)
        return chip_duration() * (n_subcarriers + cp_length);
    }

    int grid_size() const { return n_subcarriers * n_symbols; }
    int n_pilot_symbols() const { return static_cast<int>(pilot_symbol_indices.size()); }
    int n_data_symbols() const { return n_symbols - n_pilot_symbols(); }  ///< M'
    int n_pilot_points() const { return n_pilot_symbols() * n_subcarriers; }  ///< S_p
    int n_data_points() const { return n_data_symbols() * n_subcarriers; }    ///< S_d

    /// Throws std::invalid_argument on inconsistent settings.
    void validate() const;
};

/// Pilot time indices m = floor(i*M/J + M/(2J)), i = 0..J-1.
std::vector<int> default_pilot_indices(int n_symbols, int n_pilot_symbols);

/// M x N grid of values with the vectorization order used everywhere:
/// element (q, m) sits at flat index m*N + q (columns stacked, frequency
/// runs fastest).
template <typename T>
class GridFrame {
  public:
    GridFrame() : n_subcarriers_(0), n_symbols_(0) {}
    GridFrame(int n_subcarriers, int n_symbols, T fill = T{})
        : n_subcarriers_(n_subcarriers),
          n_symbols_(n_symbols),
          values_(static_cast<std::size_t>(n_subcarriers) * n_symbols, fill) {
        if (n_subcarriers < 1 || n_symbols < 1)
            throw std::invalid_argument("GridFrame: dimensions must be >= 1");
    }

    static GridFrame from_vec(int n_subcarriers, int n_symbols, std::vector<T> flat) {
        GridFrame f(n_subcarriers, n_symbols);
        if (flat.size() != f.values_.size())
            throw std::invalid_argument("GridFrame::from_vec: length mismatch");
        f.values_ = std::move(flat);
        return f;
    }

    int n_subcarriers() const { return n_subcarriers_; }
    int n_symbols() const { return n_symbols_; }
    int size() const { return n_subcarriers_ * n_symbols_; }

    int vec_index(int q, int m) const { return m * n_subcarriers_ + q; }

    T& at(int q, int m) { return values_[vec_index(q, m)]; }
    const T& at(int q, int m) const { return values_[vec_index(q, m)]; }

    /// vec(.): the flat storage *is* the vectorized frame.
    const std::vector<T>& vec() const { return values_; }
    std::vector<T>& vec() { return values_; }
    const T* data() const { return values_.data(); }
    T* data() { return values_.data(); }

  private:
    int n_subcarriers_;
    int n_symbols_;
    std::vector<T> values_;
};

/// Pilot/data multiplexing for one frame. pilot_indices/data_indices are
/// flat grid indices (vec order); together they form a permutation of the
/// grid. Data indices are ascending, so gathering by them lays the data
/// sub-grid out in the same vec order with M' = M-J columns.
struct PilotPattern {
    std::vector<int> pilot_indices;
    std::vector<int> data_indices;
    cvec pilot_values;  ///< unit-modulus, one per pilot position

    int grid_size() const {
        return static_cast<int>(pilot_indices.size() + data_indices.size());
    }
    int n_pilot_points() const { return static_cast<int>(pilot_indices.size()); }
    int n_data_points() const { return static_cast<int>(data_indices.size()); }

    /// P_d^T x: gather the data positions of a full-grid vector.
    template <typename T>
    std::vector<T> gather_data(const std::vector<T>& full) const {
        std::vector<T> out(data_indices.size());
        for (std::size_t i = 0; i < data_indices.size(); ++i) out[i] = full[data_indices[i]];
        return out;
    }

    /// P_p p + P_d d: scatter pilots and data onto the full grid.
    cvec scatter(const cvec& data) const;

    void validate(int grid_size) const;
};

/// Whole-column pilot pattern from the config's pilot symbol indices,
/// pilot values drawn as random QPSK from the given seed.
PilotPattern default_pilot_pattern(const FrameConfig& config, std::uint64_t pilot_seed = 0x5eed);

}  // namespace opsim
