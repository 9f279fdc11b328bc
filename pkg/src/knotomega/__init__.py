"""Knot Floer homology at desk scale, with factor-count surface certificates.

The package computes grid-diagram knot Floer homology and the combinatorial
transverse invariant, exact Laurent-polynomial factor counts over GF(2) and
Q, Alexander polynomials from braids, and pairwise-distinctness certificates
for one-twist rim-surgery families of surfaces in the four-ball.
"""

__version__ = "0.1.0"
