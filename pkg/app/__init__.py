"""gamma3 - exact k-token graphs, cubical staircases and a theorem replication suite."""

__version__ = "0.1.0"
