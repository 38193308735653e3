"""Tests for schrosym."""
