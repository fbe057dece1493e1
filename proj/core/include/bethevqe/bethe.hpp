#pragma once

#include "bethevqe/statevector.hpp"
#include "bethevqe/xxz.hpp"

// Algebraic Bethe ansatz for the periodic XXZ chain.
//
// The textbook construction labels the quantum spaces 1..N from left to
// right, V_1 ⊗ ... ⊗ V_N. In a basis index the leftmost factor is the most
// significant bit, so site k is qubit N-k of the register. With that
// identification a column of a dense operator built here is indexed exactly
// like a Statevector and no explicit bit reversal of amplitudes is needed.

namespace bethevqe {

/// Qubit hosting appendix-convention site `site` (1-based) of an N-site chain.
constexpr int site_to_qubit(int site, int num_sites) { return num_sites - site; }

/// R(v) = [[a,0,0,0],[0,b,c,0],[0,c,b,0],[0,0,0,a]],
/// a = sin(v + i eta/2), b = sin(v - i eta/2), c = i sinh(eta).
/// At v = i eta/2 it reduces to i sinh(eta) times the permutation.
Matrix4c r_matrix(Complex v, double eta);

/// Max-norm of R12(v1 - v2 + i eta/2) R13(v1) R23(v2) - R23(v2) R13(v1) R12(v1 - v2 + i eta/2).
double check_yang_baxter(Complex v1, Complex v2, double eta);

enum class MonodromyBlock { A, B, C, D };

/// T_0(v) = R_{0N}(v) ... R_{01}(v) split over the auxiliary space as
/// [[A, B], [C, D]], each block a 2^N x 2^N operator on the chain.
struct MonodromyBlocks {
  Complex v;
  double eta = 0.0;
  int num_sites = 0;
  ComplexMatrix a, b, c, d;
};

/// Dense blocks. Throws DomainError above kMaxDenseSites.
MonodromyBlocks monodromy(Complex v, double eta, int num_sites);

/// One block applied to a state without forming any matrix: the auxiliary
/// qubit is carried alongside the register through N two-site updates.
Statevector apply_monodromy_block(MonodromyBlock block, Complex v, double eta,
                                  const Statevector& state);

/// t(v) = A(v) + D(v), dense.
ComplexMatrix transfer_matrix(Complex v, double eta, int num_sites);

/// t(v)|state>, matrix free.
Statevector apply_transfer(Complex v, double eta, const Statevector& state);

/// -(i/2) sinh(eta) d/dv log t(v) at v = i eta/2, plus N cosh(eta)/2.
/// The derivative is a central difference with step dv in [1e-6, 1e-3],
/// and log t is expanded around the regular point as t(v0)^{-1} t'(v0).
/// Throws DomainError if t(i eta/2) is numerically singular.
ComplexMatrix hamiltonian_from_transfer(int num_sites, double eta, double dv);

/// Mean diagonal of (a - b): the multiple of identity separating them.
Complex identity_offset(const ComplexMatrix& a, const ComplexMatrix& b);

/// Max-norm of (a - b) after removing identity_offset(a, b).
double traceless_distance(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs(const ComplexMatrix& m);

}  // namespace bethevqe
