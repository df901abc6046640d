// SPDX-License-Identifier: Apache-2.0
//
// fadingrelay: capacity bounds for noncoherent fading relay channels
// Copyright (C) 2026 The fadingrelay authors
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

#ifndef FADINGRELAY_SIMLAB_HPP
#define FADINGRELAY_SIMLAB_HPP

#include "fadingrelay/spectral.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace fadingrelay::simlab {

struct SimRun {
    spectral::SpectralModel model = spectral::SpectralModel::white();
    // Power of two, at most 2^20.
    std::int64_t path_length = 1 << 16;
    std::uint64_t seed = 1;
    int realizations = 1;

    void validate() const;
};

enum class SynthesisMethod { CirculantEmbedding, SpectralSynthesis };

struct FadingPath {
    std::vector<std::complex<double>> samples;
    SynthesisMethod method = SynthesisMethod::CirculantEmbedding;
    // Smallest eigenvalue of the circulant embedding, relative to the largest.
    double min_eigenvalue = 0.0;
};

/// Exact sampling through a circulant embedding of size 2N. Throws
/// EmbeddingError carrying the most negative eigenvalue when the embedding
/// is not nonnegative definite, which is the usual outcome for spectra with
/// jumps.
std::vector<std::complex<double>> circulant_embedding_path(const SimRun &run, int realization = 0);

/// Spectral synthesis on an N-point frequency grid with cell-averaged
/// density. The result is exactly N-periodic and has unit variance exactly.
std::vector<std::complex<double>> spectral_synthesis_path(const SimRun &run, int realization = 0);

/// Circulant embedding when it succeeds, spectral synthesis otherwise.
/// Realization r draws from a generator seeded with (run.seed, r).
FadingPath generate_fading_path(const SimRun &run, int realization = 0);

/// Mean squared error of the analytic order-κ predictor applied along
/// run.realizations generated paths. Needs path_length >= 100κ.
double empirical_prediction_error(const SimRun &run, int memory);

/// QPSK kernel mutual information by nested adaptive quadrature, to about
/// 1e-5 nats. Throws QuadratureError when the tolerance is not met.
double qpsk_mi_quadrature(double coherent_gain_var, double residual_var, double amplitude_sq,
                          double extra_noise_var);
double qpsk_mi_quadrature_eta(double eta);

/// Binary path dump: 8-byte magic "FRPATH\0\0", uint32 version (1), uint64
/// length, uint64 seed, then length pairs of float64 (re, im), all little
/// endian.
void write_path_dump(const std::string &file, const std::vector<std::complex<double>> &samples,
                     std::uint64_t seed);
std::vector<std::complex<double>> read_path_dump(const std::string &file, std::uint64_t *seed = nullptr);

} // namespace fadingrelay::simlab

#endif
