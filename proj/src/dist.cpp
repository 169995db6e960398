#include "pidfair/dist.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace pidfair {

namespace {

constexpr double kSumTol = 1e-12;
constexpr double kZeroClamp = 1e-12;

double clamp_nonneg(double v) {
  if (v < 0.0) {
    if (v < -kZeroClamp) return v;  // genuine violations surface unchanged
    return 0.0;
  }
  return v;
}

int axis_of(Var v) { return static_cast<int>(v); }

}  // namespace

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw ValidationError("alphabet must have at least one symbol");
  std::sort(symbols_.begin(), symbols_.end());
  if (std::adjacent_find(symbols_.begin(), symbols_.end()) != symbols_.end())
    throw ValidationError("alphabet has duplicate labels");
}

int Alphabet::index(const std::string& label) const {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), label);
  if (it == symbols_.end() || *it != label)
    throw ValidationError("label not in alphabet: " + label);
  return static_cast<int>(it - symbols_.begin());
}

JointDist::JointDist(Alphabet z, Alphabet yhat, Alphabet y, Eigen::ArrayXd probs)
    : alphabets_{std::move(z), std::move(yhat), std::move(y)}, probs_(std::move(probs)) {
  const long n = static_cast<long>(alphabets_[0].size()) * alphabets_[1].size() * alphabets_[2].size();
  if (probs_.size() != n) throw ValidationError("probability tensor shape mismatch");
  if ((probs_ < 0.0).any()) throw ValidationError("negative probability entry");
  if (std::abs(probs_.sum() - 1.0) > kSumTol)
    throw ValidationError("probabilities must sum to 1");
}

JointDist from_samples(const std::vector<SampleRecord>& records, double smoothing) {
  if (records.empty())
    throw EstimationError("cannot infer alphabets from an empty record list");
  std::set<std::string> zs, yhats, ys;
  for (const auto& r : records) {
    if (r.z.empty() || r.yhat.empty() || r.y.empty())
      throw EstimationError("sample record has an empty label");
    zs.insert(r.z);
    yhats.insert(r.yhat);
    ys.insert(r.y);
  }
  auto to_alpha = [](const std::set<std::string>& s) {
    return Alphabet(std::vector<std::string>(s.begin(), s.end()));
  };
  return from_samples(records, smoothing, to_alpha(zs), to_alpha(yhats), to_alpha(ys));
}

JointDist from_samples(const std::vector<SampleRecord>& records, double smoothing,
                       Alphabet z, Alphabet yhat, Alphabet y) {
  if (smoothing < 0.0) throw EstimationError("smoothing must be nonnegative");
  if (records.empty() && smoothing == 0.0)
    throw EstimationError("empty record list requires smoothing > 0");
  const int nz = z.size(), na = yhat.size(), nb = y.size();
  Eigen::ArrayXd counts = Eigen::ArrayXd::Constant(static_cast<long>(nz) * na * nb, smoothing);
  for (const auto& r : records) {
    const int iz = z.index(r.z), ia = yhat.index(r.yhat), ib = y.index(r.y);
    counts[(iz * na + ia) * nb + ib] += 1.0;
  }
  counts /= counts.sum();
  return JointDist(std::move(z), std::move(yhat), std::move(y), std::move(counts));
}

Eigen::VectorXd marginal(const JointDist& dist, Var keep) {
  const int n = dist.size(keep);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  for (int iz = 0; iz < dist.size(Var::Z); ++iz)
    for (int ia = 0; ia < dist.size(Var::Pred); ++ia)
      for (int ib = 0; ib < dist.size(Var::Label); ++ib) {
        const int idx[3] = {iz, ia, ib};
        out[idx[axis_of(keep)]] += dist(iz, ia, ib);
      }
  return out;
}

Eigen::MatrixXd marginal(const JointDist& dist, Var keep_rows, Var keep_cols) {
  if (keep_rows == keep_cols) throw ValidationError("marginal axes must differ");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dist.size(keep_rows), dist.size(keep_cols));
  for (int iz = 0; iz < dist.size(Var::Z); ++iz)
    for (int ia = 0; ia < dist.size(Var::Pred); ++ia)
      for (int ib = 0; ib < dist.size(Var::Label); ++ib) {
        const int idx[3] = {iz, ia, ib};
        out(idx[axis_of(keep_rows)], idx[axis_of(keep_cols)]) += dist(iz, ia, ib);
      }
  return out;
}

double entropy_bits(const Eigen::ArrayXd& p) {
  double h = 0.0;
  for (long i = 0; i < p.size(); ++i) {
    const double pi = p[i];
    if (pi > 0.0) h -= pi * std::log2(pi);
  }
  return clamp_nonneg(h);
}

double entropy_bits(const Eigen::MatrixXd& p) {
  return entropy_bits(Eigen::ArrayXd(p.reshaped().array()));
}

double mutual_information(const JointDist& dist, Var a, Var b) {
  if (a == b) throw ValidationError("mutual_information needs distinct variables");
  const double ha = entropy_bits(Eigen::ArrayXd(marginal(dist, a).array()));
  const double hb = entropy_bits(Eigen::ArrayXd(marginal(dist, b).array()));
  const double hab = entropy_bits(marginal(dist, a, b));
  return clamp_nonneg(ha + hb - hab);
}

double conditional_mutual_information(const JointDist& dist, Var a, Var b, Var given) {
  if (a == b || a == given || b == given)
    throw ValidationError("conditional_mutual_information needs three distinct variables");
  // I(A;B|C) = H(A,C) + H(B,C) - H(A,B,C) - H(C)
  const double hac = entropy_bits(marginal(dist, a, given));
  const double hbc = entropy_bits(marginal(dist, b, given));
  const double habc = entropy_bits(dist.probs());
  const double hc = entropy_bits(Eigen::ArrayXd(marginal(dist, given).array()));
  return clamp_nonneg(hac + hbc - habc - hc);
}

double joint_mutual_information(const JointDist& dist, Var target) {
  Var a, b;
  switch (target) {
    case Var::Z: a = Var::Pred; b = Var::Label; break;
    case Var::Pred: a = Var::Z; b = Var::Label; break;
    default: a = Var::Z; b = Var::Pred; break;
  }
  const double ht = entropy_bits(Eigen::ArrayXd(marginal(dist, target).array()));
  const double hab = entropy_bits(marginal(dist, a, b));
  const double hall = entropy_bits(dist.probs());
  return clamp_nonneg(ht + hab - hall);
}

}  // namespace pidfair
