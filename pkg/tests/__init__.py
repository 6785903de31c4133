"""Test suite for cyclotomic-lc."""
