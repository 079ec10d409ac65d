#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "emgdx/types.hpp"

namespace emgdx {

enum class ModelKind : int { Lda = 0, Svm = 1, BaggingTrees = 2 };

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& text);

struct LabeledVector {
  std::array<double, 18> features{};
  Label label = Label::Healthy;
  std::string signal_id;
};

// Per-feature training-set mean/stddev. Features with zero variance get
// stddev 1, which zeroes their standardized contribution.
struct Standardization {
  std::array<double, 18> mean{};
  std::array<double, 18> stddev{};

  std::array<double, 18> apply(const std::array<double, 18>& x) const;
};

struct LdaParams {
  double shrinkage = 0.1;
  std::array<std::array<double, 18>, kNumClasses> class_means{};
  std::vector<double> cov_inv;  // row-major 18×18 inverse of shrunk pooled cov
  std::array<double, kNumClasses> log_priors{};
};

// One-vs-one linear classifier for (pos_class, neg_class); weights act on
// standardized features with the bias folded in as weights[18].
struct SvmPair {
  int pos_class = 0;
  int neg_class = 1;
  std::array<double, 19> weights{};
};

struct SvmParams {
  double c = 1.0;
  std::vector<SvmPair> pairs;
};

struct TreeNode {
  bool is_leaf = true;
  int feature = -1;
  double threshold = 0.0;
  int left = -1;   // goes x[feature] <= threshold
  int right = -1;  // goes x[feature] > threshold
  std::array<int, kNumClasses> counts{};  // training samples reaching the node
};

struct DecisionTree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root

  int leaf_for(const std::array<double, 18>& x) const;
};

struct BaggingParams {
  std::vector<DecisionTree> trees;
};

struct TrainedModel {
  ModelKind kind = ModelKind::Lda;
  Standardization standardization;
  std::uint64_t train_seed = 0;
  std::variant<LdaParams, SvmParams, BaggingParams> params;
};

struct TrainConfig {
  double lda_shrinkage = 0.1;
  double svm_c = 1.0;
  double svm_gap_tolerance = 1e-6;  // relative duality gap stop
  int svm_max_sweeps = 200000;
  int bt_trees = 100;
};

struct EvalReport {
  ModelKind kind = ModelKind::Lda;
  int n_test = 0;
  double accuracy = 0.0;
  std::array<std::array<int, kNumClasses>, kNumClasses> confusion{};  // [true][pred]
  std::array<double, kNumClasses> per_class_recall{};
  double predict_time_ms = 0.0;
};

// Stratified split. Per-class test count = lround(test_fraction · class
// size); the draw is seeded and without replacement. Throws when any class
// has fewer than two members.
std::pair<std::vector<LabeledVector>, std::vector<LabeledVector>> split_dataset(
    const std::vector<LabeledVector>& vectors, double test_fraction,
    std::uint64_t seed);

// Training canonicalizes sample order by signal_id, so shuffling the input
// never changes the result. Throws on an empty class or non-finite features.
TrainedModel train(ModelKind kind, const std::vector<LabeledVector>& train_set,
                   const TrainConfig& config = {}, std::uint64_t seed = 0);

// Deterministic; exact ties always resolve toward the lowest class index.
Label predict(const TrainedModel& model, const std::array<double, 18>& features);

EvalReport evaluate(const TrainedModel& model,
                    const std::vector<LabeledVector>& test_set);

// Hinge-loss primal objective of one trained pair on its standardized
// training data: ½‖w‖² + C Σ max(0, 1 − y·f). Exposed for verification.
double svm_primal_objective(const SvmPair& pair, double c,
                            const std::vector<std::array<double, 19>>& xs,
                            const std::vector<int>& ys);

}  // namespace emgdx
