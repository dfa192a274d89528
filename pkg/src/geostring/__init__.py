"""Exact geometric intersection graphs, win-win solvers and hardness gadgets."""

__version__ = "0.1.0"
