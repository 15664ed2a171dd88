#pragma once

#include <array>
#include <functional>

#include "tpsi/fermat.hpp"
#include "tpsi/geometry.hpp"

namespace tpsi {

/// Corner spins of a cube in the order (a | e, f, g | b, c, d | h).
using IrcSpins = std::array<int, 8>;

/// An Interaction-Round-a-Cube weight W(a|e,f,g|b,c,d|h), evaluated lazily
/// rather than materialized as an N^8 table.
class IrcWeightFn {
 public:
  using Fn = std::function<complex(const IrcSpins&)>;

  IrcWeightFn(Modulus n, Trihedron tri, Fn fn) : n_(n), tri_(tri), fn_(std::move(fn)) {}

  complex operator()(const IrcSpins& s) const { return fn_(s); }
  complex operator()(int a, int e, int f, int g, int b, int c, int d, int h) const {
    return fn_({a, e, f, g, b, c, d, h});
  }

  Modulus modulus() const noexcept { return n_; }
  const Trihedron& trihedron() const noexcept { return tri_; }

 private:
  Modulus n_;
  Trihedron tri_;
  Fn fn_;
};

/// Alternative (BB) labelling: W_B(a|e,f,g|b,c,d|h) = W(a|f,g,e|c,d,b|h),
/// with angles theta^B = (theta3, theta1, theta2).
IrcWeightFn to_bb_convention(const IrcWeightFn& w);

/// Inverse of to_bb_convention.
IrcWeightFn from_bb_convention(const IrcWeightFn& w_bb);

}  // namespace tpsi
