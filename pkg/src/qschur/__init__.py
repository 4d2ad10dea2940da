"""q-Schur algebras attached to Weyl groups: Hecke algebras, permutation modules, canonical bases."""
from .duality import DualityReport, verify_duality
from .hecke import HeckeAlgebra, HeckeElement
from .laurent import LaurentPoly
from .rootdata import CartanDatum, cartan_datum
from .schur import SchurAlgebra, SchurElement
from .tmodule import TElement, TModule
from .weightsets import WeightSet, XiTriple, close_under_W
from .weylgroup import WeylGroup

__all__ = [
    "CartanDatum",
    "DualityReport",
    "HeckeAlgebra",
    "HeckeElement",
    "LaurentPoly",
    "SchurAlgebra",
    "SchurElement",
    "TElement",
    "TModule",
    "WeightSet",
    "WeylGroup",
    "XiTriple",
    "cartan_datum",
    "close_under_W",
    "verify_duality",
]

__version__ = "0.1.0"
