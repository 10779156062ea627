"""CLI package for the theta lifting toolkit."""
