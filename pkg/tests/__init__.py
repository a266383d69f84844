"""Test suite for outerproj."""
