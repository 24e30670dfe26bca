"""HTTP service wrapping the core package; the CLI reuses its handlers."""
