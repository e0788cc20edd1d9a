"""Theorem replication suite, conjecture table and figure export."""
