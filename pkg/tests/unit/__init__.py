"""Unit tests for thetalift modules."""
