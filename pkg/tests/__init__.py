"""Reasoning Forge test suite."""
