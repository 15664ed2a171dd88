#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "tpsi/tensor.hpp"

namespace tpsi::testing {

// Reference contraction: enumerates every assignment of every label and
// accumulates the product of operand entries into the output entry.
inline WeightTensor naive_contract(const std::vector<WeightTensor>& operands,
                                   const std::vector<std::string>& output) {
  const Modulus n = operands.front().modulus();
  const int N = n.value();
  std::vector<std::string> all;
  for (const auto& t : operands)
    for (const auto& l : t.labels())
      if (std::find(all.begin(), all.end(), l) == all.end()) all.push_back(l);
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < all.size(); ++i) pos[all[i]] = i;

  WeightTensor out(n, output);
  std::vector<int> spins(all.size(), 0);
  std::vector<int> idx;
  std::size_t total = 1;
  for (std::size_t i = 0; i < all.size(); ++i) total *= N;
  for (std::size_t k = 0; k < total; ++k) {
    std::size_t rest = k;
    for (std::size_t i = all.size(); i-- > 0;) {
      spins[i] = static_cast<int>(rest % N);
      rest /= N;
    }
    complex prod = 1.0;
    for (const auto& t : operands) {
      idx.clear();
      for (const auto& l : t.labels()) idx.push_back(spins[pos[l]]);
      prod *= t(idx);
    }
    idx.clear();
    for (const auto& l : output) idx.push_back(spins[pos[l]]);
    out(idx) += prod;
  }
  return out;
}

}  // namespace tpsi::testing
