"""equialg: exact equivariant algebra.

Cyclic bar complexes of finite-rank algebras, edgewise subdivision,
Adams operations from circle covering maps, p-typical Witt vectors,
Burnside rings, and the tensor-power norm / transfer / Tambara
computations that sit underneath them.  All arithmetic is exact.
"""

__version__ = "0.1.0"

from .rings import ZZ, QQ, Zmod, PolynomialRing, PolyElement, poly_ring
from .homology import AbelianGroupShape, homology_at
from .intmat import smith_normal_form
from .groebner import PresentedRing, groebner_completion
