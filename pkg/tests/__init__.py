"""Test suite with independent brute-force oracles."""
