"""Exact computations in the cubic skein module of the 3-sphere.

Modules: ring (Laurent polynomials), tangle_model (codes), rta (rational
tangle evaluation), pretzel, relations, tangle3 (3-tangle algebra),
colorings (Fox colorings), scans, cli.
"""

__version__ = "0.1.0"
