"""Exact computations behind the Fano vanishing counterexamples: weights, G/P, cohomology, fixed schemes, discrepancies."""
