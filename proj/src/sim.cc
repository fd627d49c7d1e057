// Copyright 2026 The qgkp Authors
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

#include "qgkp/sim.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <stdexcept>
#include <thread>

#include "qgkp/rng.h"

namespace qgkp {

namespace {

constexpr size_t kBatchSize = 1024;

unsigned resolve_workers(unsigned requested) {
    if (requested > 0) {
        return requested;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

}  // namespace

std::string_view outcome_name(OutcomeClass c) {
    switch (c) {
        case OutcomeClass::DegenerateSuccess:
            return "degenerate_success";
        case OutcomeClass::Miscorrection:
            return "miscorrection";
        case OutcomeClass::Failure:
            return "failure";
    }
    return "failure";
}

OutcomeClass TrialOutcome::word_class() const {
    if (x_class == OutcomeClass::Failure || z_class == OutcomeClass::Failure) {
        return OutcomeClass::Failure;
    }
    if (x_class == OutcomeClass::Miscorrection || z_class == OutcomeClass::Miscorrection) {
        return OutcomeClass::Miscorrection;
    }
    return OutcomeClass::DegenerateSuccess;
}

OutcomeClass classify(bool converged,
                      std::span<const uint8_t> estimate,
                      std::span<const uint8_t> truth,
                      const RowReduced &stabilizers) {
    if (!converged) {
        return OutcomeClass::Failure;
    }
    if (estimate.size() != truth.size()) {
        throw std::invalid_argument("classify: estimate and truth lengths differ");
    }
    std::vector<uint8_t> residual(truth.size());
    bool any = false;
    for (size_t k = 0; k < truth.size(); k++) {
        residual[k] = (estimate[k] ^ truth[k]) & 1;
        any |= residual[k] != 0;
    }
    if (!any || in_row_space(stabilizers, residual)) {
        return OutcomeClass::DegenerateSuccess;
    }
    return OutcomeClass::Miscorrection;
}

TrialRunner::TrialRunner(const CssCode &code, ChannelConfig channel, DecoderConfig decoder, bool use_analog)
    : code_(&code),
      channel_(channel),
      use_analog_(use_analog),
      uniform_llr_(0),
      graph_x_errors_(code.hz),
      graph_z_errors_(code.hx),
      decoder_x_(graph_x_errors_, decoder),
      decoder_z_(graph_z_errors_, decoder),
      qubits_(code.n),
      error_x_(code.n),
      error_z_(code.n),
      syndrome_z_(code.hz.rows()),
      syndrome_x_(code.hx.rows()),
      llr_x_(code.n),
      llr_z_(code.n) {
    channel_.validate();
    uniform_llr_ = std::clamp(no_analog_llr(channel_.sigma, channel_.series_truncation), -kLlrCap, kLlrCap);
}

TrialOutcome TrialRunner::run(std::mt19937_64 &rng) {
    for (size_t q = 0; q < code_->n; q++) {
        const GkpQubitOutcome &o = qubits_[q] = sample_qubit(channel_, rng);
        error_x_[q] = o.logical_x;
        error_z_[q] = o.logical_z;
        if (use_analog_) {
            llr_x_[q] = prob_to_llr(o.p_err_x);
            llr_z_[q] = prob_to_llr(o.p_err_z);
        } else {
            llr_x_[q] = uniform_llr_;
            llr_z_[q] = uniform_llr_;
        }
    }
    // Copies keep run_forced free to alias the internal buffers.
    std::vector<uint8_t> ex = error_x_, ez = error_z_;
    std::vector<double> lx = llr_x_, lz = llr_z_;
    return run_forced(ex, ez, lx, lz);
}

TrialOutcome TrialRunner::run_forced(std::span<const uint8_t> error_x,
                                     std::span<const uint8_t> error_z,
                                     std::span<const double> llr_x,
                                     std::span<const double> llr_z) {
    size_t n = code_->n;
    if (error_x.size() != n || error_z.size() != n || llr_x.size() != n || llr_z.size() != n) {
        throw std::invalid_argument("run_forced: vectors must have length n = " + std::to_string(n));
    }
    std::copy(error_x.begin(), error_x.end(), error_x_.begin());
    std::copy(error_z.begin(), error_z.end(), error_z_.begin());
    std::copy(llr_x.begin(), llr_x.end(), llr_x_.begin());
    std::copy(llr_z.begin(), llr_z.end(), llr_z_.begin());

    graph_x_errors_.syndrome(error_x_, syndrome_z_);
    graph_z_errors_.syndrome(error_z_, syndrome_x_);

    TrialOutcome out;
    const DecodeResult &rx = decoder_x_.decode(syndrome_z_, llr_x_);
    out.iterations_x = rx.iterations_used;
    out.x_class = classify(rx.converged, rx.estimate, error_x_, code_->degeneracy_basis_x);
    last_x_ = rx;

    const DecodeResult &rz = decoder_z_.decode(syndrome_x_, llr_z_);
    out.iterations_z = rz.iterations_used;
    out.z_class = classify(rz.converged, rz.estimate, error_z_, code_->degeneracy_basis_z);
    last_z_ = rz;
    return out;
}

TrialOutcome run_trial(const CssCode &code,
                       const ChannelConfig &channel,
                       const DecoderConfig &decoder,
                       bool use_analog,
                       std::mt19937_64 &rng) {
    TrialRunner runner(code, channel, decoder, use_analog);
    return runner.run(rng);
}

void SweepConfig::validate() const {
    if (sigmas.empty()) {
        throw std::invalid_argument("sweep: sigma grid is empty");
    }
    for (double s : sigmas) {
        if (!(s > 0) || !std::isfinite(s)) {
            throw std::invalid_argument("sweep: sigma values must be positive");
        }
    }
    if (stop.max_trials == 0) {
        throw std::invalid_argument("sweep: max_trials must be positive");
    }
    if (series_truncation < 1) {
        throw std::invalid_argument("sweep: series_truncation must be at least 1");
    }
    decoder.validate();
}

double SweepRow::logical_error_rate() const {
    return trials ? static_cast<double>(logical_errors) / static_cast<double>(trials) : 0.0;
}

double SweepRow::failure_fraction() const {
    return trials ? static_cast<double>(failures) / static_cast<double>(trials) : 0.0;
}

double SweepRow::miscorrection_fraction() const {
    return trials ? static_cast<double>(miscorrections) / static_cast<double>(trials) : 0.0;
}

double SweepRow::mean_iterations() const {
    return trials ? static_cast<double>(total_iterations) / (2.0 * static_cast<double>(trials)) : 0.0;
}

SweepResult run_sweep(const CssCode &code, const SweepConfig &cfg) {
    cfg.validate();
    SweepResult result;
    result.config = cfg;
    result.code_n = code.n;
    result.code_k = code.k;
    unsigned workers = resolve_workers(cfg.workers);

    std::vector<std::unique_ptr<TrialRunner>> runners;
    std::vector<TrialOutcome> batch(kBatchSize);

    for (size_t si = 0; si < cfg.sigmas.size(); si++) {
        ChannelConfig channel{cfg.sigmas[si], cfg.seed, cfg.series_truncation};
        runners.clear();
        for (unsigned w = 0; w < workers; w++) {
            runners.push_back(std::make_unique<TrialRunner>(code, channel, cfg.decoder, cfg.use_analog));
        }

        SweepRow row;
        row.sigma = cfg.sigmas[si];
        bool done = false;
        uint64_t next_trial = 0;
        while (!done) {
            uint64_t count = std::min<uint64_t>(kBatchSize, cfg.stop.max_trials - next_trial);
            auto work = [&](unsigned w, std::atomic<uint64_t> &cursor) {
                for (uint64_t k = cursor.fetch_add(1); k < count; k = cursor.fetch_add(1)) {
                    auto rng = stream_rng(cfg.seed, si, next_trial + k);
                    batch[k] = runners[w]->run(rng);
                }
            };
            std::atomic<uint64_t> cursor{0};
            if (workers == 1) {
                work(0, cursor);
            } else {
                std::vector<std::jthread> pool;
                for (unsigned w = 0; w < workers; w++) {
                    pool.emplace_back(work, w, std::ref(cursor));
                }
            }

            for (uint64_t k = 0; k < count; k++) {
                const TrialOutcome &t = batch[k];
                row.trials++;
                row.total_iterations += static_cast<uint64_t>(t.iterations_x + t.iterations_z);
                switch (t.word_class()) {
                    case OutcomeClass::Failure:
                        row.failures++;
                        row.logical_errors++;
                        break;
                    case OutcomeClass::Miscorrection:
                        row.miscorrections++;
                        row.logical_errors++;
                        break;
                    case OutcomeClass::DegenerateSuccess:
                        break;
                }
                bool enough_errors =
                    cfg.stop.min_logical_errors > 0 && row.logical_errors >= cfg.stop.min_logical_errors;
                if (enough_errors || row.trials >= cfg.stop.max_trials) {
                    done = true;
                    break;
                }
            }
            next_trial += count;
        }
        result.rows.push_back(row);
    }
    return result;
}

std::vector<double> parse_sigma_grid(std::string_view text) {
    auto parse_number = [](std::string_view token) {
        std::string s(token);
        char *end = nullptr;
        double v = std::strtod(s.c_str(), &end);
        if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
            throw std::invalid_argument("malformed sigma value: '" + s + "'");
        }
        return v;
    };

    std::vector<double> out;
    if (text.find(':') != std::string_view::npos) {
        std::vector<double> parts;
        size_t pos = 0;
        while (true) {
            size_t next = text.find(':', pos);
            parts.push_back(parse_number(text.substr(pos, next - pos)));
            if (next == std::string_view::npos) {
                break;
            }
            pos = next + 1;
        }
        if (parts.size() != 3) {
            throw std::invalid_argument("sigma grid must be start:stop:step");
        }
        double start = parts[0], stop = parts[1], step = parts[2];
        if (!(step > 0) || stop < start) {
            throw std::invalid_argument("sigma grid needs step > 0 and stop >= start");
        }
        auto count = static_cast<size_t>(std::floor((stop - start) / step + 0.5)) + 1;
        for (size_t i = 0; i < count; i++) {
            // Snap to 1e-12 so that 0.4 + 3 * 0.02 prints as 0.46.
            out.push_back(std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12);
        }
    } else {
        size_t pos = 0;
        while (true) {
            size_t next = text.find(',', pos);
            out.push_back(parse_number(text.substr(pos, next - pos)));
            if (next == std::string_view::npos) {
                break;
            }
            pos = next + 1;
        }
    }
    for (double s : out) {
        if (!(s > 0)) {
            throw std::invalid_argument("sigma values must be positive");
        }
    }
    return out;
}

double css_hamming_rate(double p) {
    if (!(p >= 0 && p <= 0.5)) {
        throw std::domain_error("css_hamming_rate: p must lie in [0, 1/2]");
    }
    auto plogp = [](double x) { return x > 0 ? x * std::log2(x) : 0.0; };
    double h2 = -plogp(p) - plogp(1 - p);
    return 1 - 2 * h2;
}

double css_hamming_sigma(double rate) {
    if (!(rate > 0 && rate < 1)) {
        throw std::domain_error("css_hamming_sigma: rate must lie in (0, 1)");
    }
    // The rate implied by p_of_sigma(s) falls monotonically as s grows.
    auto f = [rate](double s) { return css_hamming_rate(p_of_sigma(s)) - rate; };
    double lo = 0.01, hi = 1.0;
    if (!(f(lo) > 0 && f(hi) < 0)) {
        throw std::domain_error("css_hamming_sigma: no root in (0.01, 1.0)");
    }
    while (hi - lo > 1e-10) {
        double mid = 0.5 * (lo + hi);
        (f(mid) > 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace qgkp
