"""Graph engine: construction, serialization, token graphs and exact solvers."""
