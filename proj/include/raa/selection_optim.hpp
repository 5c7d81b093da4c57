// SPDX-License-Identifier: Apache-2.0
//
// raasim: ray antenna array simulation library
// Copyright (C) 2026 The raasim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "raa/architecture.hpp"

namespace raa {

/// Which combiner ports feed the receive chains. Equivalent to the 0/1
/// selection matrix with exactly one 1 per row and at most one per column,
/// so S S^H is the identity.
class SelectionSet {
  public:
    SelectionSet(int total_ports, int capacity);

    /// Wraps an explicit port list; capacity equals the list size.
    static SelectionSet of(std::vector<int> ports, int total_ports);

    void add(int port);

    int size() const { return static_cast<int>(ports_.size()); }
    int capacity() const { return capacity_; }
    int total_ports() const { return total_ports_; }
    bool empty() const { return ports_.empty(); }
    bool contains(int port) const;
    const std::vector<int> &ports() const { return ports_; }

    /// Materialized |selected| x total_ports 0/1 matrix.
    Eigen::MatrixXd matrix() const;

    /// Selected entries of a port-domain vector (the product S h).
    Eigen::VectorXcd apply(const Eigen::VectorXcd &port_vector) const;

  private:
    int total_ports_ = 0;
    int capacity_ = 0;
    std::vector<int> ports_;
};

/// Transmit SNR and the per-port noise scale. Combining the M elements of a
/// ray (or the M phase-shifted elements of a codeword) multiplies the noise
/// variance by M, so elements_per_ray enters every SNR/SINR denominator.
struct LinkBudget {
    double transmit_snr = 1.0; // P_t / sigma^2, linear
    int elements_per_ray = 1;  // M
    Architecture architecture = Architecture::raa;
};

/// Post-combining SNR with the ratio-combining weights that maximize it:
/// transmit_snr * ||S h||^2 / M.
double snr_single_user(const Eigen::VectorXcd &channel, const SelectionSet &selection,
                       const LinkBudget &budget);

/// The rf_chain_count ports with the largest |h_n|, ties to the lowest index.
/// SNR-optimal for a single user.
SelectionSet select_rays_single_user(const Eigen::VectorXcd &channel, int rf_chain_count);

/// Per-user combiner that maximizes SINR against interference plus noise:
/// C_k^{-1} S h_k with C_k = S (sum_{i != k} h_i h_i^H + (M/transmit_snr) I) S^H.
/// `channels` holds one column per user.
Eigen::VectorXcd mmse_beamformer(const Eigen::MatrixXcd &channels,
                                 const SelectionSet &selection,
                                 const LinkBudget &budget, int user);

/// Signal-to-interference-plus-noise ratio of an arbitrary combiner.
double sinr(const Eigen::VectorXcd &beamformer, int user,
            const Eigen::MatrixXcd &channels, const SelectionSet &selection,
            const LinkBudget &budget);

/// Sum over users of log2(1 + (S h_k)^H C_k^{-1} S h_k), the rate achieved
/// by per-user MMSE combining on the selected ports.
double sum_rate(const SelectionSet &selection, const Eigen::MatrixXcd &channels,
                const LinkBudget &budget);

/// Repeated-evaluation engine behind the greedy and exhaustive searches.
///
/// Precomputes W = H H^H + (M/transmit_snr) I once; a subset's rate then only
/// needs the Cholesky factor of the corresponding submatrix of W. The factor
/// is built row by row, which lets nested subset enumeration reuse the factor
/// of a common prefix via push/pop. rate() and the push/pop path run the same
/// arithmetic in the same order, so equal subsets produce bit-equal rates.
/// Not thread-safe; use one evaluator per thread.
class SumRateEvaluator {
  public:
    SumRateEvaluator(const Eigen::MatrixXcd &channels, const LinkBudget &budget);

    int ports() const { return ports_; }
    int users() const { return users_; }

    /// Sum rate of an arbitrary subset (order-insensitive; indices distinct).
    double rate(std::span<const int> selection);

    void reset() { stack_.clear(); }
    int depth() const { return static_cast<int>(stack_.size()); }
    void push(int port);
    void pop() { stack_.pop_back(); }
    double current_rate() const;

  private:
    int ports_ = 0;
    int users_ = 0;
    Eigen::MatrixXcd channels_; // ports x users
    Eigen::MatrixXcd gram_;     // H H^H + (M / transmit_snr) I
    Eigen::MatrixXcd factor_;   // row-wise Cholesky workspace
    Eigen::MatrixXcd forward_;  // L^{-1} H(selected,:) workspace
    Eigen::MatrixXd q_partial_; // running per-user quadratic forms, by depth
    std::vector<int> stack_;
    std::vector<int> sorted_;
};

struct GreedyResult {
    SelectionSet selection;
    std::vector<double> step_rates; // rate after each added port, non-decreasing
    long long evaluations = 0;      // candidate sum-rate evaluations performed
};

/// One port per step, chosen to maximize the sum rate of the enlarged set;
/// ties go to the lowest index. Performs exactly N + (N-1) + ... +
/// (N - rf_chain_count + 1) candidate evaluations.
GreedyResult greedy_selection(const Eigen::MatrixXcd &channels, int rf_chain_count,
                              const LinkBudget &budget);

struct ExhaustiveResult {
    SelectionSet selection;
    double rate = 0.0;
    long long candidates = 0;
};

class CapExceededError : public std::runtime_error {
  public:
    CapExceededError(long long candidate_count, long long cap);
    long long candidate_count() const { return candidate_count_; }

  private:
    long long candidate_count_ = 0;
};

/// Globally optimal subset by full enumeration in lexicographic order (first
/// maximizer wins). Throws CapExceededError when the candidate count exceeds
/// `candidate_cap`.
ExhaustiveResult exhaustive_selection(const Eigen::MatrixXcd &channels,
                                      int rf_chain_count, const LinkBudget &budget,
                                      long long candidate_cap = 1'000'000);

/// C(n, k), saturating instead of overflowing.
long long binomial_count(int n, int k);

struct SelectionRecord {
    long long trial = 0;
    std::string method;
    std::vector<int> ports;
    double rate = 0.0;
    long long evaluations = 0;
};

/// Columns: trial, method, selected_ports (space-separated), rate, evaluations.
void write_csv(std::ostream &out, std::span<const SelectionRecord> records,
               std::span<const std::string> comment_lines = {});

} // namespace raa
