#!/usr/bin/env python3
"""Walk through the collapse of three pairwise-entangled spin-1/2 states.

Three distinguishable states a, b, c in C^2 are pushed into disjoint blocks
of C^6, wedged pairwise into a 36-entry antisymmetric tensor, reindexed,
partially traced, and projected onto a single scalar.  The point of the
construction: that scalar is exactly det(b-a, c-a), the antisymmetric wave
function of three undistinguishable fermions.
"""

import numpy as np

from affine_fermions import (
    BASIS_2D,
    affine_det,
    collapse,
    collapse_with_morphism,
    embed,
    lambda_tensor,
    rho_trace_A,
    rho_trace_AC,
    theta,
    tr1,
)

rng = np.random.default_rng(7)
a, b, c = rng.standard_normal((3, 2)) + 1j * rng.standard_normal((3, 2))

print("states")
for name, v in (("a", a), ("b", b), ("c", c)):
    print(f"  {name} = {np.round(v, 3)}")

e = embed(a, b, c)
print("\nembedded into C^6 (disjoint 2-blocks)")
print(f"  a' = {np.round(e.a, 3)}")
print(f"  b' = {np.round(e.b, 3)}")
print(f"  c' = {np.round(e.c, 3)}")

lam = lambda_tensor(a, b, c)
print(f"\nLambda = a'^b' + b'^c' + c'^a' is 6x6, antisymmetric;")
print(f"  max |Lambda + Lambda^T| = {np.abs(lam + lam.T).max():.1e}")

blocks = theta(lam)
print("\nreindexed X' blocks (each keeps zeros in its structural slots):")
for k in range(3):
    print(f"  X'_{k + 1} = {np.round(blocks.x_blocks[k], 3)}")

traced = tr1(blocks)
print(f"\npartial trace (the three pairwise wedges a^b, c^a, b^c):")
print(f"  {np.round(traced, 4)}")

scalar = traced.sum()
direct = affine_det([a, b, c])
print(f"\nsum of the trace = {scalar:.6f}")
print(f"det(b-a, c-a)    = {direct:.6f}")
print(f"difference       = {abs(scalar - direct):.1e}")

sigma = rng.standard_normal((2, 2))
print("\ncovariance under a 2x2 morphism applied to every state:")
print(f"  collapse(sigma a, sigma b, sigma c) = {collapse_with_morphism(a, b, c, sigma):.6f}")
print(f"  det(sigma) * collapse(a, b, c)      = {np.linalg.det(sigma) * collapse(a, b, c):.6f}")

print("\npartial traces of the rank-1 state built from two determinants:")
e0, e1 = BASIS_2D
print(f"  Tr over first slot at (b,c;b,c) generic: {rho_trace_A(a, b, a, b):.4f}")
print("  Tr over first and third slots on basis pairs:")
for x in (e0, e1):
    for y in (e0, e1):
        print(f"    ({x}, {y}) -> {rho_trace_AC(x, y):.1f}")
bb, bp = rng.standard_normal((2, 2))
print(f"  same trace at generic real arguments: {rho_trace_AC(bb, bp):.4f}")
print(f"  closed form 2(b1+b2-1)(b'1+b'2-1):    {2 * (bb[0] + bb[1] - 1) * (bp[0] + bp[1] - 1):.4f}")
