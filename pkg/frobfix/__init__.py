"""Exact verification of symmetric Frobenius structures as homotopy fixed points."""
