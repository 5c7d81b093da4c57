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

#include "raa/selection_optim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>

#include "raa/csv.hpp"

namespace raa {

namespace {

void check_budget(const LinkBudget &budget) {
    if (!(budget.transmit_snr > 0.0))
        throw std::invalid_argument("LinkBudget: transmit_snr must be positive");
    if (budget.elements_per_ray < 1)
        throw std::invalid_argument("LinkBudget: elements_per_ray must be >= 1");
}

double noise_over_power(const LinkBudget &budget) {
    return budget.elements_per_ray / budget.transmit_snr;
}

// Interference-plus-noise covariance on the selected ports for one user.
Eigen::MatrixXcd interference_covariance(const Eigen::MatrixXcd &selected_channels,
                                         double noise, int user) {
    const Eigen::Index size = selected_channels.rows();
    Eigen::MatrixXcd covariance =
        noise * Eigen::MatrixXcd::Identity(size, size);
    for (Eigen::Index other = 0; other < selected_channels.cols(); ++other) {
        if (other == user)
            continue;
        covariance.noalias() +=
            selected_channels.col(other) * selected_channels.col(other).adjoint();
    }
    return covariance;
}

} // namespace

SelectionSet::SelectionSet(int total_ports, int capacity)
    : total_ports_(total_ports), capacity_(capacity) {
    if (total_ports < 1)
        throw std::invalid_argument("SelectionSet: total_ports must be >= 1");
    if (capacity < 1 || capacity > total_ports)
        throw std::invalid_argument("SelectionSet: capacity must lie in [1, total_ports]");
    ports_.reserve(capacity);
}

SelectionSet SelectionSet::of(std::vector<int> ports, int total_ports) {
    SelectionSet selection(total_ports, static_cast<int>(ports.size()));
    for (int port : ports)
        selection.add(port);
    return selection;
}

void SelectionSet::add(int port) {
    if (size() >= capacity_)
        throw std::invalid_argument("SelectionSet::add: capacity exhausted");
    if (port < 0 || port >= total_ports_)
        throw std::out_of_range("SelectionSet::add: port " + std::to_string(port) +
                                " outside [0, " + std::to_string(total_ports_) + ")");
    if (contains(port))
        throw std::invalid_argument("SelectionSet::add: port " + std::to_string(port) +
                                    " already selected");
    ports_.push_back(port);
}

bool SelectionSet::contains(int port) const {
    return std::find(ports_.begin(), ports_.end(), port) != ports_.end();
}

Eigen::MatrixXd SelectionSet::matrix() const {
    Eigen::MatrixXd selection = Eigen::MatrixXd::Zero(size(), total_ports_);
    for (int row = 0; row < size(); ++row)
        selection(row, ports_[row]) = 1.0;
    return selection;
}

Eigen::VectorXcd SelectionSet::apply(const Eigen::VectorXcd &port_vector) const {
    if (port_vector.size() != total_ports_)
        throw std::invalid_argument("SelectionSet::apply: vector length mismatch");
    Eigen::VectorXcd selected(size());
    for (int row = 0; row < size(); ++row)
        selected[row] = port_vector[ports_[row]];
    return selected;
}

double snr_single_user(const Eigen::VectorXcd &channel, const SelectionSet &selection,
                       const LinkBudget &budget) {
    check_budget(budget);
    if (selection.empty())
        throw std::invalid_argument("snr_single_user: empty selection");
    if (channel.size() != selection.total_ports())
        throw std::invalid_argument("snr_single_user: channel length mismatch");

    double captured = 0.0;
    for (int port : selection.ports())
        captured += std::norm(channel[port]);
    return budget.transmit_snr * captured / budget.elements_per_ray;
}

SelectionSet select_rays_single_user(const Eigen::VectorXcd &channel, int rf_chain_count) {
    const int total = static_cast<int>(channel.size());
    if (rf_chain_count < 1 || rf_chain_count > total)
        throw std::invalid_argument("select_rays_single_user: rf_chain_count must lie in "
                                    "[1, port count]");

    std::vector<int> order(total);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int left, int right) {
        return std::norm(channel[left]) > std::norm(channel[right]);
    });
    order.resize(rf_chain_count);
    std::sort(order.begin(), order.end());
    return SelectionSet::of(std::move(order), total);
}

Eigen::VectorXcd mmse_beamformer(const Eigen::MatrixXcd &channels,
                                 const SelectionSet &selection,
                                 const LinkBudget &budget, int user) {
    check_budget(budget);
    if (channels.cols() < 1)
        throw std::invalid_argument("mmse_beamformer: no channels");
    if (user < 0 || user >= channels.cols())
        throw std::out_of_range("mmse_beamformer: user index out of range");
    if (channels.rows() != selection.total_ports())
        throw std::invalid_argument("mmse_beamformer: channel length mismatch");
    if (selection.empty())
        throw std::invalid_argument("mmse_beamformer: empty selection");

    const Eigen::MatrixXcd selected = channels(selection.ports(), Eigen::all);
    Eigen::MatrixXcd covariance =
        interference_covariance(selected, noise_over_power(budget), user);
    Eigen::LLT<Eigen::MatrixXcd> factor(covariance);
    // cannot fire for a finite positive transmit SNR, the noise term keeps
    // the covariance positive definite
    if (factor.info() != Eigen::Success)
        throw std::runtime_error("mmse_beamformer: covariance not positive definite");
    return factor.solve(selected.col(user));
}

double sinr(const Eigen::VectorXcd &beamformer, int user,
            const Eigen::MatrixXcd &channels, const SelectionSet &selection,
            const LinkBudget &budget) {
    check_budget(budget);
    if (beamformer.size() != selection.size())
        throw std::invalid_argument("sinr: beamformer length mismatch");
    const double weight_power = beamformer.squaredNorm();
    if (weight_power == 0.0)
        throw std::invalid_argument("sinr: zero beamformer");
    if (user < 0 || user >= channels.cols())
        throw std::out_of_range("sinr: user index out of range");

    const Eigen::MatrixXcd selected = channels(selection.ports(), Eigen::all);
    const double signal =
        budget.transmit_snr * std::norm(beamformer.dot(selected.col(user)));
    double interference = 0.0;
    for (Eigen::Index other = 0; other < channels.cols(); ++other) {
        if (other == user)
            continue;
        interference += std::norm(beamformer.dot(selected.col(other)));
    }
    interference *= budget.transmit_snr;
    // ||f^H S|| equals ||f|| because S S^H = I
    const double noise = budget.elements_per_ray * weight_power;
    return signal / (interference + noise);
}

double sum_rate(const SelectionSet &selection, const Eigen::MatrixXcd &channels,
                const LinkBudget &budget) {
    check_budget(budget);
    if (selection.empty())
        throw std::invalid_argument("sum_rate: empty selection");
    if (channels.rows() != selection.total_ports())
        throw std::invalid_argument("sum_rate: channel length mismatch");

    const Eigen::MatrixXcd selected = channels(selection.ports(), Eigen::all);
    const double noise = noise_over_power(budget);
    double rate = 0.0;
    for (Eigen::Index user = 0; user < channels.cols(); ++user) {
        Eigen::MatrixXcd covariance = interference_covariance(selected, noise,
                                                              static_cast<int>(user));
        Eigen::LLT<Eigen::MatrixXcd> factor(covariance);
        if (factor.info() != Eigen::Success)
            throw std::runtime_error("sum_rate: covariance not positive definite");
        const Eigen::VectorXcd solved = factor.solve(selected.col(user));
        rate += std::log2(1.0 + selected.col(user).dot(solved).real());
    }
    return rate;
}

SumRateEvaluator::SumRateEvaluator(const Eigen::MatrixXcd &channels,
                                   const LinkBudget &budget)
    : ports_(static_cast<int>(channels.rows())),
      users_(static_cast<int>(channels.cols())),
      channels_(channels) {
    check_budget(budget);
    if (ports_ < 1 || users_ < 1)
        throw std::invalid_argument("SumRateEvaluator: channels must be non-empty");

    gram_.noalias() = channels * channels.adjoint();
    gram_.diagonal().array() += noise_over_power(budget);

    factor_.setZero(ports_, ports_);
    forward_.setZero(ports_, users_);
    q_partial_.setZero(ports_ + 1, users_);
    stack_.reserve(ports_);
}

void SumRateEvaluator::push(int port) {
    if (port < 0 || port >= ports_)
        throw std::out_of_range("SumRateEvaluator::push: port out of range");
    const int row = depth();
    if (row >= ports_)
        throw std::invalid_argument("SumRateEvaluator::push: all ports already selected");

    // next row of the Cholesky factor of gram_(selection, selection)
    for (int col = 0; col < row; ++col) {
        std::complex<double> sum = gram_(port, stack_[col]);
        for (int k = 0; k < col; ++k)
            sum -= factor_(row, k) * std::conj(factor_(col, k));
        factor_(row, col) = sum / factor_(col, col).real();
    }
    double diagonal = gram_(port, port).real();
    for (int k = 0; k < row; ++k)
        diagonal -= std::norm(factor_(row, k));
    if (!(diagonal > 0.0))
        throw std::runtime_error("SumRateEvaluator: covariance lost positive definiteness");
    const double root = std::sqrt(diagonal);
    factor_(row, row) = root;

    // extend the forward substitution L^{-1} H(selection,:) and the running
    // quadratic forms q_k = ||L^{-1} h_k||^2
    for (int user = 0; user < users_; ++user) {
        std::complex<double> value = channels_(port, user);
        for (int col = 0; col < row; ++col)
            value -= factor_(row, col) * forward_(col, user);
        value /= root;
        forward_(row, user) = value;
        q_partial_(row + 1, user) = q_partial_(row, user) + std::norm(value);
    }
    stack_.push_back(port);
}

double SumRateEvaluator::current_rate() const {
    const int row = depth();
    double rate = 0.0;
    for (int user = 0; user < users_; ++user) {
        // 1 + SINR_k collapses to 1 / (1 - q_k) for the MMSE combiner
        const double residual = 1.0 - q_partial_(row, user);
        rate += residual > 0.0 ? -std::log2(residual)
                               : std::numeric_limits<double>::infinity();
    }
    return rate;
}

double SumRateEvaluator::rate(std::span<const int> selection) {
    if (selection.empty())
        throw std::invalid_argument("SumRateEvaluator::rate: empty selection");
    sorted_.assign(selection.begin(), selection.end());
    std::sort(sorted_.begin(), sorted_.end());
    if (std::adjacent_find(sorted_.begin(), sorted_.end()) != sorted_.end())
        throw std::invalid_argument("SumRateEvaluator::rate: duplicate port");

    reset();
    for (int port : sorted_)
        push(port);
    const double result = current_rate();
    reset();
    return result;
}

GreedyResult greedy_selection(const Eigen::MatrixXcd &channels, int rf_chain_count,
                              const LinkBudget &budget) {
    const int total = static_cast<int>(channels.rows());
    if (rf_chain_count < 1 || rf_chain_count > total)
        throw std::invalid_argument("greedy_selection: rf_chain_count must lie in "
                                    "[1, port count]");

    SumRateEvaluator evaluator(channels, budget);
    GreedyResult result{SelectionSet(total, rf_chain_count), {}, 0};
    std::vector<char> used(total, 0);
    std::vector<int> chosen;
    std::vector<int> candidate;
    chosen.reserve(rf_chain_count);
    candidate.reserve(rf_chain_count);

    for (int step = 0; step < rf_chain_count; ++step) {
        int best_port = -1;
        double best_rate = -std::numeric_limits<double>::infinity();
        for (int port = 0; port < total; ++port) {
            if (used[port])
                continue;
            candidate = chosen;
            candidate.push_back(port);
            const double rate = evaluator.rate(candidate);
            ++result.evaluations;
            if (rate > best_rate) { // strict: ties fall to the lowest index
                best_rate = rate;
                best_port = port;
            }
        }
        used[best_port] = 1;
        chosen.push_back(best_port);
        result.selection.add(best_port);
        result.step_rates.push_back(best_rate);
    }
    return result;
}

CapExceededError::CapExceededError(long long candidate_count, long long cap)
    : std::runtime_error("exhaustive_selection: " + std::to_string(candidate_count) +
                         " candidate subsets exceed the cap of " + std::to_string(cap)),
      candidate_count_(candidate_count) {}

long long binomial_count(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (result > static_cast<unsigned __int128>(std::numeric_limits<long long>::max()))
            return std::numeric_limits<long long>::max();
    }
    return static_cast<long long>(result);
}

ExhaustiveResult exhaustive_selection(const Eigen::MatrixXcd &channels,
                                      int rf_chain_count, const LinkBudget &budget,
                                      long long candidate_cap) {
    const int total = static_cast<int>(channels.rows());
    if (rf_chain_count < 1 || rf_chain_count > total)
        throw std::invalid_argument("exhaustive_selection: rf_chain_count must lie in "
                                    "[1, port count]");
    const long long candidates = binomial_count(total, rf_chain_count);
    if (candidates > candidate_cap)
        throw CapExceededError(candidates, candidate_cap);

    SumRateEvaluator evaluator(channels, budget);
    std::vector<int> best;
    std::vector<int> current;
    current.reserve(rf_chain_count);
    double best_rate = -std::numeric_limits<double>::infinity();

    // lexicographic depth-first enumeration; the evaluator keeps the factor
    // of the common prefix, so each added port costs O(depth^2 + depth*K)
    auto descend = [&](auto &&self, int next) -> void {
        if (static_cast<int>(current.size()) == rf_chain_count) {
            const double rate = evaluator.current_rate();
            if (rate > best_rate) { // strict: first (lexicographically
                best_rate = rate;   // smallest) maximizer wins
                best = current;
            }
            return;
        }
        const int remaining = rf_chain_count - static_cast<int>(current.size());
        for (int port = next; port <= total - remaining; ++port) {
            evaluator.push(port);
            current.push_back(port);
            self(self, port + 1);
            current.pop_back();
            evaluator.pop();
        }
    };
    descend(descend, 0);

    return {SelectionSet::of(std::move(best), total), best_rate, candidates};
}

void write_csv(std::ostream &out, std::span<const SelectionRecord> records,
               std::span<const std::string> comment_lines) {
    write_comment_header(out, comment_lines);
    out << "trial,method,selected_ports,rate,evaluations\n";
    for (const SelectionRecord &record : records) {
        out << record.trial << ',' << record.method << ',';
        for (std::size_t i = 0; i < record.ports.size(); ++i) {
            if (i > 0)
                out << ' ';
            out << record.ports[i];
        }
        out << ',' << format_number(record.rate) << ',' << record.evaluations << '\n';
    }
}

} // namespace raa
