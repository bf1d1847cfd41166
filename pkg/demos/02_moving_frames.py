#!/usr/bin/env python3
"""The two frame contexts and the *-Ricci tensor.

A 3-dimensional real hypersurface of a non-flat complex plane carries an
almost contact structure (phi, xi, eta, g) and a shape operator A.  The
engine works in two orthonormal frames with e3 = xi:

* the non-Hopf frame {U, phiU, xi}, where A xi = alpha xi + beta U with
  beta != 0, and
* the Hopf frame {W, phiW, xi}, where A = diag(lambda, nu, alpha).

The *-Ricci tensor has the closed form S* = -[c phi^2 + (phi A)^2] (for
complex dimension 2); the engine also computes it from its defining trace
g(S* X, Y) = (1/2) trace(Z -> phi(R(X, phi Y) Z)) and the two must agree
as canonical matrices.
"""

from starricci import (
    FrameIndex,
    VectorField,
    build_hopf_context,
    build_nonhopf_context,
    covariant_derivative_vf,
    curvature,
    ricci,
    star_ricci_closed,
    star_ricci_trace,
)

print("== non-Hopf frame ==")
ctx = build_nonhopf_context()
print("shape operator columns (A U | A phiU | A xi):")
for i in range(3):
    print("  ", [ctx.A.entry(i, j).to_text() for j in range(3)])

S = star_ricci_closed(ctx)
print("S* xi =", [S.entry(i, 2).to_text() for i in range(3)], " (beta*mu U - beta*delta phiU)")
print("S* U  =", [S.entry(i, 0).to_text() for i in range(3)])
print("trace form agrees with the closed form:", star_ricci_trace(ctx) == S)
print("note S* is NOT symmetric here: entry(0,2) =", S.entry(0, 2),
      "but entry(2,0) =", S.entry(2, 0))

print()
print("== Hopf frame ==")
hopf = build_hopf_context()
Sh = star_ricci_closed(hopf)
print("S* = diag(c + lambda*nu, c + lambda*nu, 0):")
for i in range(3):
    print("  ", [Sh.entry(i, j).to_text() for j in range(3)])
print("trace form agrees:", star_ricci_trace(hopf) == Sh)

print()
print("== connection and curvature ==")
xi = VectorField.basis(FrameIndex.E3)
print("nabla_xi xi in the non-Hopf frame:",
      covariant_derivative_vf(ctx, FrameIndex.E3, xi), " (= beta phiU)")
W = VectorField.basis(FrameIndex.E1)
print("g(R(W, xi) xi, W) in the Hopf frame:",
      curvature(hopf, W, xi, xi).dot(W))
print("Ricci tensor of the Hopf frame (diagonal):",
      [ricci(hopf).entry(i, i).to_text() for i in range(3)])
