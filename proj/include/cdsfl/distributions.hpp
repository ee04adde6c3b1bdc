#pragma once

#include <map>
#include <vector>

#include "cdsfl/error.hpp"

namespace cdsfl {

// Probability vector over the label classes. Entries are non-negative and
// sum to 1 within 1e-9; construction validates.
struct LabelDistribution {
  std::vector<double> probs;

  LabelDistribution() = default;
  explicit LabelDistribution(std::vector<double> p);

  static LabelDistribution from_counts(const std::vector<long long>& counts);
  static LabelDistribution uniform(int classes);
  static LabelDistribution one_hot(int classes, int label);

  int classes() const { return static_cast<int>(probs.size()); }
  bool defined() const { return !probs.empty(); }
};

// A client as the clustering layer sees it: sample count plus empirical
// label distribution. A client with zero samples has an undefined
// distribution and carries zero weight in the system EMD.
struct ClientProfile {
  int client_id = 0;
  long long samples = 0;  // n_k
  LabelDistribution dist;
};

// Multicast volume per cluster head, in samples.
using SharingPlan = std::map<int, long long>;

struct Clustering;  // clustering.hpp

// L1 distance between a client's label marginal and the global marginal.
// Range [0, 2].
double emd_to_global(const LabelDistribution& p, const LabelDistribution& g);

// Same metric between two client marginals; symmetric, satisfies the
// triangle inequality.
double pairwise_emd(const LabelDistribution& p, const LabelDistribution& q);

// Size-weighted aggregate of the client distributions.
LabelDistribution global_distribution(const std::vector<ClientProfile>& clients);

// Size-weighted sum of per-client EMDs against g.
double system_emd(const std::vector<ClientProfile>& clients, const LabelDistribution& g);

// Distribution of n_k samples of p_k pooled with n_s samples of p_m.
// Counts are real-valued so fractional proxy volumes can be mixed.
LabelDistribution mix_distribution(double n_k, const LabelDistribution& p_k, double n_s,
                                   const LabelDistribution& p_m);

// Post-sharing sizes: n_k plus the head's shared volume for cluster members,
// n_k unchanged for heads and unclustered clients.
std::vector<long long> effective_sizes(const std::vector<ClientProfile>& clients,
                                       const Clustering& clustering, const SharingPlan& plan);

// System EMD after data sharing. The denominator stays the pre-sharing
// total n, so the weights may sum to more than 1; `normalized` switches the
// denominator to the post-sharing total for sensitivity runs.
double post_sharing_system_emd(const std::vector<ClientProfile>& clients,
                               const Clustering& clustering, const SharingPlan& plan,
                               const LabelDistribution& g, bool normalized = false);

}  // namespace cdsfl
