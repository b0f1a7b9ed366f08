"""Exact checks tying the quantum gl(1|1) action on tensor space to its
fixed-point localization shadow on Grassmannian bundle spaces."""

__version__ = "0.1.0"
