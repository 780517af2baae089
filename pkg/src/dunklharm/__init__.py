"""Exact planar harmonics and monogenics for type-A Dunkl operators."""
