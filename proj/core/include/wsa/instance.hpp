#pragma once

#include <stdexcept>

namespace wsa {

// Fixed parameters of one problem instance: the block sizes (m|n) and the
// number of diagonal copies l.  Flat matrix indices run over 1..N*l with
// A = s*N + i, where s in 0..l-1 is the block (copy) index and i in 1..N the
// residue inside a gl(m|n) block.
struct Instance {
  int m = 0;
  int n = 0;
  int l = 1;

  int N() const { return m + n; }

  // Residue parity: 0 for 1..m, 1 for m+1..m+n.
  int p(int i) const {
    if (i < 1 || i > N()) throw std::out_of_range("residue index");
    return i <= m ? 0 : 1;
  }
  // Parity of the matrix unit with residues (i, j).
  int pe(int i, int j) const { return (p(i) + p(j)) & 1; }

  // Node parity used by the Dynkin data: node 0 behaves like node N.
  int p_node(int i) const {
    int k = ((i % N()) + N()) % N();
    return k == 0 ? p(N()) : p(k);
  }

  int dim() const { return N() * l; }
  bool valid_flat(int A) const { return A >= 1 && A <= dim(); }
  int flat(int block, int res) const { return block * N() + res; }
  int block_of(int A) const { return (A - 1) / N(); }
  int res_of(int A) const { return (A - 1) % N() + 1; }

  // Grade of the matrix unit e_{A,B}: column block minus row block.
  int grade(int A, int B) const {
    if (!valid_flat(A) || !valid_flat(B)) throw std::out_of_range("flat index");
    return block_of(B) - block_of(A);
  }

  // Parity of e_{A,B} by residues.
  int parity_flat(int A, int B) const { return pe(res_of(A), res_of(B)); }
};

}  // namespace wsa
