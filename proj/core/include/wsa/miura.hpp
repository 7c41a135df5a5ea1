#pragma once

#include <map>
#include <string>
#include <utility>

#include "wsa/state.hpp"

namespace wsa {

// Polynomial in the formal translation symbol tau with State coefficients,
// keyed by the tau power.  tau obeys [tau, u[-s]] = s u[-s-1], so
// tau^k Y = sum_d C(k,d) (d^d Y) tau^{k-d}.
using TauPoly = std::map<int, State>;

// Component matrix of a Miura image: key (a, b) holds the (a, b) component.
using MEntry = std::map<std::pair<int, int>, TauPoly>;

TauPoly tau_mult(const TauPoly& x, const TauPoly& y);
MEntry mentry_mult(const Algebra& alg, const MEntry& x, const MEntry& y);

// The component matrix of the column determinant of the Miura matrix
// (alpha tau + diagonal currents, -1 on the superdiagonal, currents below).
MEntry miura_cdet(const Algebra& alg);

// Extract all W^{(r)}_{i,j} (r = 1..l, residues i, j) from the column
// determinant; keys are "r,i,j".  Throws if a tau coefficient fails to be
// divisible by the required alpha power or if W^(0) is not the identity.
std::map<std::string, State> extract_W(const Algebra& alg);

// Closed-form generators.  The mutation id "gen-w2-depth2-coeff" deliberately
// corrupts the depth-2 coefficient of W^(2) (for mutation-detection tests).
State W1_closed(const Algebra& alg, int i, int j);
State W2_closed(const Algebra& alg, int i, int j,
                const std::string& mutate = "");

// The odd differential d_0.  The mutation id "d0-drop-ghost-shift" flips the
// sign of the last ghost shift term.
State d0_gen_image(const Algebra& alg, const Gen& g,
                   const std::string& mutate = "");
State d0_apply(const State& v, const std::string& mutate = "");

std::string w_key(int r, int i, int j);

}  // namespace wsa
