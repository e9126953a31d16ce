"""Tropical homology and Poincare duality certification for weighted fans."""
