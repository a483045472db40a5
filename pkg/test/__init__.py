"""Test package for the keylength toolkit."""
