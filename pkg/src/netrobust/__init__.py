"""Construction and exact robustness analysis of DCell and star-graph networks."""

__version__ = "0.1.0"
