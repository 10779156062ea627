"""Integration tests for verification runs."""
