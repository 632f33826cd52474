"""Settings loading and environment checks."""
