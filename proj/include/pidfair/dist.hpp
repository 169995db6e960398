#ifndef PIDFAIR_DIST_HPP
#define PIDFAIR_DIST_HPP

#include <Eigen/Dense>

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace pidfair {

// Variable roles of the three axes of a joint distribution.
enum class Var { Z = 0, Pred = 1, Label = 2 };

constexpr const char* var_name(Var v) {
  switch (v) {
    case Var::Z: return "Z";
    case Var::Pred: return "Yhat";
    default: return "Y";
  }
}

struct EstimationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ordered set of distinct symbol labels. Indices are assigned by
// lexicographic sort so reports do not depend on row order.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols);

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& label(int i) const { return symbols_.at(i); }
  const std::vector<std::string>& labels() const { return symbols_; }
  int index(const std::string& label) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> symbols_;
};

struct SampleRecord {
  std::string z;
  std::string yhat;
  std::string y;
};

// Dense joint distribution over (Z, Yhat, Y). Probabilities are stored
// flat in z-major order: index = (z * |Yhat| + yhat) * |Y| + y.
class JointDist {
 public:
  JointDist(Alphabet z, Alphabet yhat, Alphabet y, Eigen::ArrayXd probs);

  const Alphabet& alphabet(Var v) const { return alphabets_[static_cast<int>(v)]; }
  int size(Var v) const { return alphabets_[static_cast<int>(v)].size(); }
  const Eigen::ArrayXd& probs() const { return probs_; }

  double operator()(int z, int yhat, int y) const {
    return probs_[(z * size(Var::Pred) + yhat) * size(Var::Label) + y];
  }
  int flat_index(int z, int yhat, int y) const {
    return (z * size(Var::Pred) + yhat) * size(Var::Label) + y;
  }

 private:
  std::array<Alphabet, 3> alphabets_;
  Eigen::ArrayXd probs_;
};

// Empirical joint with optional additive smoothing. Alphabets are the
// sorted distinct labels seen per column. records may be empty only
// when smoothing > 0 and explicit alphabets are supplied.
JointDist from_samples(const std::vector<SampleRecord>& records, double smoothing = 0.0);
JointDist from_samples(const std::vector<SampleRecord>& records, double smoothing,
                       Alphabet z, Alphabet yhat, Alphabet y);

// Marginals. The one- and two-variable forms cover every use in the
// audit pipeline; axes of the 2-D result follow the argument order.
Eigen::VectorXd marginal(const JointDist& dist, Var keep);
Eigen::MatrixXd marginal(const JointDist& dist, Var keep_rows, Var keep_cols);

// Shannon entropy in bits with the 0 log 0 = 0 convention.
double entropy_bits(const Eigen::ArrayXd& p);
double entropy_bits(const Eigen::MatrixXd& p);

// I(A;B), I(A;B|C), and I(Z; other two) in bits. Values within 1e-12 of
// zero clamp to exactly 0.
double mutual_information(const JointDist& dist, Var a, Var b);
double conditional_mutual_information(const JointDist& dist, Var a, Var b, Var given);
double joint_mutual_information(const JointDist& dist, Var target = Var::Z);

}  // namespace pidfair

#endif
