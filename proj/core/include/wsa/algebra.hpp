#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "wsa/instance.hpp"
#include "wsa/scalar.hpp"

namespace wsa {

enum class Kind : int { Current = 0, Ghost = 1 };

// One basis generator: a current J^{e_{row,col}} or a ghost psi_{e_{row,col}}.
struct Gen {
  Kind kind = Kind::Current;
  int row = 0;
  int col = 0;

  auto operator<=>(const Gen&) const = default;
};

// The Lie superalgebra underlying the vertex engine, together with its even
// bilinear form.  Two variants share one interface:
//   Amn   - currents over the non-positive-grade part of gl(ml|nl) plus ghosts
//           over the strictly negative part, paired by the form kappa_{m,n};
//   GlHat - the N x N matrix units E_{i,j} of gl(m|n), paired by the
//           supertrace cocycle with central charge value ctilde (z = 1).
class Algebra {
 public:
  enum class Type { Amn, GlHat };

  Algebra(Instance inst, Type type) : inst_(inst), type_(type) {}

  const Instance& inst() const { return inst_; }
  Type type() const { return type_; }

  // Substitute c = 0 in every form value (used by the homomorphism suites).
  void set_c_zero(bool b) { c_zero_ = b; }
  bool c_zero() const { return c_zero_; }

  // Central charge value of the GlHat cocycle.
  void set_ctilde(const Scalar& s) { ctilde_ = s; }
  const Scalar& ctilde() const { return ctilde_; }

  bool valid(const Gen& g) const;
  int parity(const Gen& g) const;

  // Super bracket [u, v] expanded over matrix-unit rules; integer structure
  // constants.
  std::vector<std::pair<int, Gen>> bracket(const Gen& u, const Gen& v) const;

  // The invariant form pairing u and v (second-order OPE pole coefficient).
  Scalar kappa(const Gen& u, const Gen& v) const;

  // All basis generators of this algebra, in canonical (kind, row, col) order.
  std::vector<Gen> generators() const;

  bool operator==(const Algebra& o) const {
    return inst_.m == o.inst_.m && inst_.n == o.inst_.n && inst_.l == o.inst_.l &&
           type_ == o.type_ && c_zero_ == o.c_zero_ && ctilde_ == o.ctilde_;
  }

 private:
  Instance inst_;
  Type type_;
  bool c_zero_ = false;
  Scalar ctilde_;
};

}  // namespace wsa
