"""
Leonard pairs, the graph Delta and tails.

Exact-arithmetic tooling over Q and GF(p) for deciding which ordered
pairs of primitive idempotents of a Leonard context are Q-polynomial.
"""

__version__ = "1.0.0"
