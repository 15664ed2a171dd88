#include "tpsi/tensor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_map>

namespace tpsi {

namespace {

std::size_t ipow(int n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= static_cast<std::size_t>(n);
  return r;
}

void check_unique(const std::vector<std::string>& labels) {
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw Error(ErrorCode::plan_error, "tensor labels must be unique");
}

// Copies `src` into the axis order `order` (positions into src axes).
std::vector<complex> transpose(const WeightTensor& src, const std::vector<std::size_t>& order) {
  const int N = src.modulus();
  const std::size_t rank = src.rank();
  std::vector<std::size_t> src_stride(rank);
  std::size_t s = 1;
  for (std::size_t i = rank; i-- > 0;) {
    src_stride[i] = s;
    s *= static_cast<std::size_t>(N);
  }
  std::vector<std::size_t> stride(rank);
  for (std::size_t i = 0; i < rank; ++i) stride[i] = src_stride[order[i]];

  std::vector<complex> out(src.size());
  std::vector<int> idx(rank, 0);
  std::size_t from = 0;
  const auto data = src.data();
  for (std::size_t to = 0; to < out.size(); ++to) {
    out[to] = data[from];
    for (std::size_t ax = rank; ax-- > 0;) {
      from += stride[ax];
      if (++idx[ax] < N) break;
      from -= stride[ax] * static_cast<std::size_t>(N);
      idx[ax] = 0;
    }
  }
  return out;
}

void put_u32(std::ostream& out, std::uint32_t v) {
  const char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                     static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  out.write(b, 4);
}

void put_f64(std::ostream& out, double d) {
  const auto bits = std::bit_cast<std::uint64_t>(d);
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((bits >> (8 * i)) & 0xff);
  out.write(b, 8);
}

std::uint32_t get_u32(std::istream& in) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) throw Error(ErrorCode::format_error, "truncated header");
  return b[0] | (b[1] << 8) | (b[2] << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

double get_f64(std::istream& in) {
  unsigned char b[8];
  if (!in.read(reinterpret_cast<char*>(b), 8)) throw Error(ErrorCode::format_error, "truncated data");
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return std::bit_cast<double>(bits);
}

}  // namespace

WeightTensor::WeightTensor(Modulus n, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)), data_(ipow(n, labels_.size())) {
  check_unique(labels_);
}

WeightTensor::WeightTensor(Modulus n, std::vector<std::string> labels, std::vector<complex> data)
    : n_(n), labels_(std::move(labels)), data_(std::move(data)) {
  check_unique(labels_);
  if (data_.size() != ipow(n, labels_.size())) {
    throw Error(ErrorCode::plan_error, "data length must be N^rank");
  }
}

std::size_t WeightTensor::axis(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorCode::plan_error, "no axis named " + std::string(label));
  return static_cast<std::size_t>(it - labels_.begin());
}

bool WeightTensor::has_label(std::string_view label) const noexcept {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t WeightTensor::offset(std::span<const int> index) const noexcept {
  std::size_t off = 0;
  for (int i : index) off = off * static_cast<std::size_t>(n_.value()) + static_cast<std::size_t>(n_.reduce(i));
  return off;
}

complex WeightTensor::scalar() const {
  if (rank() != 0) throw Error(ErrorCode::plan_error, "scalar() on a tensor of rank " + std::to_string(rank()));
  return data_[0];
}

WeightTensor WeightTensor::relabeled(std::vector<std::string> labels) const {
  if (labels.size() != labels_.size()) throw Error(ErrorCode::plan_error, "relabel changes rank");
  return {n_, std::move(labels), data_};
}

WeightTensor WeightTensor::permuted(const std::vector<std::string>& order) const {
  if (order.size() != rank()) throw Error(ErrorCode::plan_error, "permutation has the wrong length");
  std::vector<std::size_t> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[i] = axis(order[i]);
  if (order == labels_) return *this;
  return {n_, order, transpose(*this, pos)};
}

WeightTensor WeightTensor::fixed(std::span<const std::pair<std::string, int>> assignment) const {
  std::vector<int> value(rank(), -1);
  for (const auto& [label, v] : assignment) value[axis(label)] = n_.reduce(v);
  std::vector<std::string> free_labels;
  std::vector<std::size_t> free_axes;
  for (std::size_t i = 0; i < rank(); ++i)
    if (value[i] < 0) {
      free_labels.push_back(labels_[i]);
      free_axes.push_back(i);
    }
  WeightTensor out(n_, free_labels);
  std::vector<int> idx(rank());
  std::vector<int> free_idx(free_axes.size(), 0);
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (std::size_t i = 0; i < rank(); ++i) idx[i] = value[i];
    for (std::size_t f = 0; f < free_axes.size(); ++f) idx[free_axes[f]] = free_idx[f];
    out.data_[k] = (*this)(idx);
    for (std::size_t f = free_axes.size(); f-- > 0;) {
      if (++free_idx[f] < n_.value()) break;
      free_idx[f] = 0;
    }
  }
  return out;
}

double WeightTensor::max_abs() const noexcept {
  double m = 0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

WeightTensor contract(const WeightTensor& a, const WeightTensor& b) {
  if (a.modulus() != b.modulus()) throw Error(ErrorCode::plan_error, "contracting tensors with different N");
  const int N = a.modulus();
  std::vector<std::size_t> a_free, a_shared, b_free, b_shared;
  std::vector<std::string> out_labels;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (b.has_label(a.labels()[i])) {
      a_shared.push_back(i);
      b_shared.push_back(b.axis(a.labels()[i]));
    } else {
      a_free.push_back(i);
      out_labels.push_back(a.labels()[i]);
    }
  }
  for (std::size_t j = 0; j < b.rank(); ++j) {
    if (!a.has_label(b.labels()[j])) {
      b_free.push_back(j);
      out_labels.push_back(b.labels()[j]);
    }
  }

  std::vector<std::size_t> a_order = a_free;
  a_order.insert(a_order.end(), a_shared.begin(), a_shared.end());
  std::vector<std::size_t> b_order = b_shared;
  b_order.insert(b_order.end(), b_free.begin(), b_free.end());
  const std::vector<complex> am = transpose(a, a_order);
  const std::vector<complex> bm = transpose(b, b_order);

  const std::size_t rows = ipow(N, a_free.size());
  const std::size_t inner = ipow(N, a_shared.size());
  const std::size_t cols = ipow(N, b_free.size());
  std::vector<complex> out(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    complex* dst = out.data() + r * cols;
    for (std::size_t k = 0; k < inner; ++k) {
      const complex s = am[r * inner + k];
      if (s == 0.0) continue;
      const complex* src = bm.data() + k * cols;
      for (std::size_t c = 0; c < cols; ++c) dst[c] += s * src[c];
    }
  }
  return {a.modulus(), std::move(out_labels), std::move(out)};
}

namespace {

void validate_operands(const std::vector<std::vector<std::string>>& labels) {
  std::unordered_map<std::string, int> count;
  for (const auto& ls : labels)
    for (const auto& l : ls)
      if (++count[l] > 2) throw Error(ErrorCode::plan_error, "label " + l + " occurs more than twice");
}

void check_step(std::size_t size, const ContractionStep& step) {
  if (step.lhs >= size || step.rhs >= size || step.lhs == step.rhs) {
    throw Error(ErrorCode::plan_error, "contraction step refers to an invalid operand");
  }
}

template <typename T>
void remove_pair(std::vector<T>& v, const ContractionStep& step) {
  const auto hi = std::max(step.lhs, step.rhs), lo = std::min(step.lhs, step.rhs);
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(hi));
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(lo));
}

}  // namespace

WeightTensor contract(std::vector<WeightTensor> operands, const ContractionPlan& plan,
                      const std::vector<std::string>& output) {
  if (operands.empty()) throw Error(ErrorCode::plan_error, "nothing to contract");
  std::vector<std::vector<std::string>> labels;
  for (const auto& t : operands) {
    if (t.modulus() != operands.front().modulus()) throw Error(ErrorCode::plan_error, "mixed N");
    labels.push_back(t.labels());
  }
  validate_operands(labels);
  for (const auto& step : plan) {
    check_step(operands.size(), step);
    WeightTensor merged = contract(operands[step.lhs], operands[step.rhs]);
    remove_pair(operands, step);
    operands.push_back(std::move(merged));
  }
  if (operands.size() != 1) throw Error(ErrorCode::plan_error, "plan leaves more than one operand");
  return output.empty() ? std::move(operands.front()) : operands.front().permuted(output);
}

ContractionCost contraction_cost(const std::vector<std::vector<std::string>>& operand_labels,
                                 const ContractionPlan& plan, int n) {
  validate_operands(operand_labels);
  std::set<std::string> all;
  for (const auto& ls : operand_labels) all.insert(ls.begin(), ls.end());
  ContractionCost cost;
  cost.naive = std::pow(static_cast<double>(n), static_cast<double>(all.size()));

  auto working = operand_labels;
  for (const auto& step : plan) {
    check_step(working.size(), step);
    const auto& a = working[step.lhs];
    const auto& b = working[step.rhs];
    std::set<std::string> distinct(a.begin(), a.end());
    distinct.insert(b.begin(), b.end());
    cost.pairwise += std::pow(static_cast<double>(n), static_cast<double>(distinct.size()));
    std::vector<std::string> merged;
    for (const auto& l : a)
      if (std::find(b.begin(), b.end(), l) == b.end()) merged.push_back(l);
    for (const auto& l : b)
      if (std::find(a.begin(), a.end(), l) == a.end()) merged.push_back(l);
    remove_pair(working, step);
    working.push_back(std::move(merged));
  }
  return cost;
}

void write_tensor(std::ostream& out, const WeightTensor& t) {
  out.write("TPSI", 4);
  put_u32(out, kTensorFormatVersion);
  put_u32(out, static_cast<std::uint32_t>(t.modulus().value()));
  put_u32(out, static_cast<std::uint32_t>(t.rank()));
  for (const auto& l : t.labels()) {
    put_u32(out, static_cast<std::uint32_t>(l.size()));
    out.write(l.data(), static_cast<std::streamsize>(l.size()));
  }
  for (const auto& v : t.data()) {
    put_f64(out, v.real());
    put_f64(out, v.imag());
  }
  if (!out) throw Error(ErrorCode::format_error, "write failed");
}

WeightTensor read_tensor(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, "TPSI", 4) != 0) {
    throw Error(ErrorCode::format_error, "bad magic");
  }
  const auto version = get_u32(in);
  if (version != kTensorFormatVersion) {
    throw Error(ErrorCode::format_error, "unsupported version " + std::to_string(version));
  }
  const auto n = static_cast<int>(get_u32(in));
  const auto rank = get_u32(in);
  if (rank > 64) throw Error(ErrorCode::format_error, "implausible rank");
  std::vector<std::string> labels(rank);
  for (auto& l : labels) {
    const auto len = get_u32(in);
    if (len > 4096) throw Error(ErrorCode::format_error, "implausible label length");
    l.resize(len);
    if (!in.read(l.data(), len)) throw Error(ErrorCode::format_error, "truncated label");
  }
  const Modulus mod(n);
  std::vector<complex> data(ipow(n, rank));
  for (auto& v : data) {
    const double re = get_f64(in);
    v = {re, get_f64(in)};
  }
  return {mod, std::move(labels), std::move(data)};
}

}  // namespace tpsi
