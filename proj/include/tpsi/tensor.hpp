#pragma once

// Dense complex tensors over (Z_N)^rank with named axes, and pairwise
// contraction over shared labels.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tpsi/fermat.hpp"

namespace tpsi {

class WeightTensor {
 public:
  /// Zero tensor. Labels must be unique.
  WeightTensor(Modulus n, std::vector<std::string> labels);
  WeightTensor(Modulus n, std::vector<std::string> labels, std::vector<complex> data);

  Modulus modulus() const noexcept { return n_; }
  std::size_t rank() const noexcept { return labels_.size(); }
  std::size_t size() const noexcept { return data_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::span<const complex> data() const noexcept { return data_; }
  std::span<complex> data() noexcept { return data_; }

  /// Axis position of `label`; throws plan-error when absent.
  std::size_t axis(std::string_view label) const;
  bool has_label(std::string_view label) const noexcept;

  /// Row-major offset; indices are reduced mod N.
  std::size_t offset(std::span<const int> index) const noexcept;
  complex& operator()(std::span<const int> index) noexcept { return data_[offset(index)]; }
  const complex& operator()(std::span<const int> index) const noexcept { return data_[offset(index)]; }
  complex& at(std::initializer_list<int> index) noexcept { return (*this)({index.begin(), index.size()}); }
  const complex& at(std::initializer_list<int> index) const noexcept {
    return (*this)({index.begin(), index.size()});
  }

  /// Value of a rank-0 tensor.
  complex scalar() const;

  /// Same data under new axis names.
  WeightTensor relabeled(std::vector<std::string> labels) const;

  /// Axes reordered to `order` (a permutation of labels()).
  WeightTensor permuted(const std::vector<std::string>& order) const;

  /// Slice with the named axes fixed; the remaining axes keep their order.
  WeightTensor fixed(std::span<const std::pair<std::string, int>> assignment) const;

  double max_abs() const noexcept;

 private:
  Modulus n_;
  std::vector<std::string> labels_;
  std::vector<complex> data_;
};

/// Sums over every label shared by `a` and `b`. Result axes are the free
/// axes of `a` followed by the free axes of `b`.
WeightTensor contract(const WeightTensor& a, const WeightTensor& b);

/// One pairwise step: operands at positions lhs and rhs of the working list
/// are removed and their contraction is appended.
struct ContractionStep {
  std::size_t lhs;
  std::size_t rhs;
};
using ContractionPlan = std::vector<ContractionStep>;

/// Executes `plan` over `operands`. Every label may occur at most twice
/// across the operands; labels occurring twice are summed. If `output` is
/// non-empty the result is permuted to that axis order.
WeightTensor contract(std::vector<WeightTensor> operands, const ContractionPlan& plan,
                      const std::vector<std::string>& output = {});

struct ContractionCost {
  double pairwise = 0;  // multiply-adds performed by the plan
  double naive = 0;     // N^(number of distinct labels)
};

ContractionCost contraction_cost(const std::vector<std::vector<std::string>>& operand_labels,
                                 const ContractionPlan& plan, int n);

// Binary dump: "TPSI", u32 version, u32 N, u32 rank, rank labels as
// (u32 byte length, UTF-8 bytes), then N^rank entries as little-endian
// (f64 real, f64 imag) pairs in row-major label order.
inline constexpr std::uint32_t kTensorFormatVersion = 1;

void write_tensor(std::ostream& out, const WeightTensor& t);
WeightTensor read_tensor(std::istream& in);

}  // namespace tpsi
