"""Exact computer algebra for q-deformed algebras at roots of unity.

Subpackages: ``exactnum`` (scalars and jets), ``ncalg`` (PBW normal forms),
``pfa`` (brackets and curvature), ``psmod`` (Poisson modules), ``projgeom``
(quantum projective space), ``bwb`` (Borel-Weil-Bott tables) and ``cli``.
"""

__version__ = "0.1.0"
