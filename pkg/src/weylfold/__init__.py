"""weylfold: exact arithmetic for Weyl group convexity, positively folded
galleries and thick Lambda-trees."""

from .errors import BudgetExceeded, FoldConstructionError, InputError, WeylfoldError
from .rootsystem import RootSystem, WeylElement, build_root_system
from .scalars import LexPair

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "FoldConstructionError",
    "InputError",
    "LexPair",
    "RootSystem",
    "WeylElement",
    "WeylfoldError",
    "build_root_system",
    "__version__",
]
