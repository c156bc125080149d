"""Generalized Fibonacci cubes over hypergraphs."""
