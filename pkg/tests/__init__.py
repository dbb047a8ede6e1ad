"""Test suite for Zipfred."""
