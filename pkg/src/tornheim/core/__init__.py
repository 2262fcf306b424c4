"""Evaluation routes for the Tornheim double series T(a, b, c)."""
