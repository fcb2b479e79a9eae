#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pate/dataset.hpp"
#include "pate/matrix.hpp"

namespace pate {

enum class Architecture { kLogistic, kMlp2 };

struct ModelSpec {
  Architecture arch = Architecture::kLogistic;
  int class_count = 2;
  std::vector<std::size_t> hidden = {16, 16};  // mlp2 only
};

// Flat parameter vector plus enough shape information to interpret it.
// Logistic is the binary single-logit form: d weights followed by one bias.
// Mlp2 layout: W1 (h1 x d), b1, W2 (h2 x h1), b2, W3 (C x h2), b3, all
// row-major.
struct ModelParams {
  Architecture arch = Architecture::kLogistic;
  std::vector<std::size_t> dims;  // {d} for logistic, {d, h1, h2} for mlp2
  int class_count = 2;
  std::vector<double> values;

  std::size_t input_dim() const { return dims.empty() ? 0 : dims[0]; }
};

struct TrainConfig {
  double lambda = 0.0;  // weight of lambda * ||theta||^2 in the objective
  double learning_rate = 1e-4;
  std::size_t batch_size = 32;
  std::size_t epochs = 500;
  std::uint64_t init_seed = 0;
  std::uint64_t shuffle_seed = 0;
};

// Optional per-epoch record of the full objective, for convergence checks.
struct TrainTrace {
  std::vector<double> epoch_objective;
};

// h, z(h) and c of the decomposable form z(h) + c*y*h of the logistic loss.
struct Decomposition {
  double h_value = 0.0;
  double z_value = 0.0;
  double c = 1.0;
};

std::size_t param_count(const ModelSpec& spec, std::size_t input_dim);

ModelParams init_params(const ModelSpec& spec, std::size_t input_dim, std::uint64_t seed);

std::vector<double> predict_proba(const ModelParams& p, std::span<const double> x);
int predict_class(const ModelParams& p, std::span<const double> x);
double accuracy(const ModelParams& p, const Dataset& ds);

double loss_hard(const ModelParams& p, std::span<const double> x, int y);
// Weighted per-class loss: sum_c alpha[c] * loss_hard(p, x, c). With a
// one-hot alpha this is bitwise equal to loss_hard (shared code path).
double loss_soft(const ModelParams& p, std::span<const double> x, std::span<const double> alpha);

// Analytic gradient of the per-sample loss w.r.t. the flat parameter vector.
// Writes into grad (overwriting) and returns the loss.
double loss_and_grad(const ModelParams& p, std::span<const double> x,
                     std::span<const double> alpha, std::span<double> grad);

std::vector<double> grad(const ModelParams& p, std::span<const double> x, int y);
std::vector<double> grad(const ModelParams& p, std::span<const double> x,
                         std::span<const double> alpha);

double grad_norm_at(const ModelParams& p, std::span<const double> x, int y);

// Curvature bound of the per-sample logistic loss: 0.25 * ||x||^2 of the
// vector as given. Pass the bias-augmented vector when the bound should
// cover the bias coordinate.
double smoothness_beta(const ModelParams& p, std::span<const double> x);

Decomposition decompose_logistic(const ModelParams& p, std::span<const double> x);

// Mean-form regularized objective: (1/m) sum loss + lambda * ||theta||^2.
double objective(const ModelParams& p, const Matrix& x, const std::vector<int>& labels,
                 double lambda);
double objective(const ModelParams& p, const Matrix& x, const Matrix& alphas, double lambda);

// Mini-batch SGD on the mean-form objective. Bit-deterministic given
// (init_seed, shuffle_seed): fixed epoch budget, seeded shuffle, no early
// stopping. Hard labels are converted to one-hot weights and trained through
// the same path as soft labels.
ModelParams train(const Matrix& x, const std::vector<int>& labels, const ModelSpec& spec,
                  const TrainConfig& cfg, TrainTrace* trace = nullptr);
ModelParams train(const Matrix& x, const Matrix& alphas, const ModelSpec& spec,
                  const TrainConfig& cfg, TrainTrace* trace = nullptr);

Matrix one_hot(const std::vector<int>& labels, int class_count);

void save_params(const ModelParams& p, const std::string& path);
ModelParams load_params(const std::string& path);

std::string architecture_name(Architecture a);
Architecture architecture_from_name(const std::string& name);

}  // namespace pate
