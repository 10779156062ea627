"""Command-line tests for the thetalift CLI."""
