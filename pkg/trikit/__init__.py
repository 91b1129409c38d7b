"""
trikit - Standard representations and planar triangulations
"""

def _check_dependencies():
    """Check for required dependencies"""
    missing = []

    try:
        import numpy
    except ImportError:
        missing.append("numpy")

    try:
        import networkx
    except ImportError:
        missing.append("networkx")

    try:
        import pydantic
    except ImportError:
        missing.append("pydantic")

    if missing:
        deps = " and ".join(missing)
        raise ImportError(
            f"trikit requires {deps} to be installed.\n"
            f"Install with: pip install {' '.join(missing)}"
        )

# Check dependencies on import
_check_dependencies()

# Import main API only after dependency check
from .core.config import get_version
from .core.schema import (
    LinearOrder,
    StandardRepresentation,
    SimpleGraph,
    RotationSystem,
    Triangulation,
    TripleSet,
    FaceSet,
    ValidationReport,
)
from .representation.orders import make_order, validate, require_representation, representation_from_lists
from .representation.sigma import sigma2, sigma3
from .planar.triangulation import validate_triangulation, require_triangulation, faces
from .planar.rotation import recover_rotation
from .construct.realizer import realize
from .construct.embedder import embed

__version__ = get_version()

__all__ = [
    # Main functions
    'make_order',
    'validate',
    'require_representation',
    'representation_from_lists',
    'sigma2',
    'sigma3',
    'validate_triangulation',
    'require_triangulation',
    'recover_rotation',
    'faces',
    'realize',
    'embed',

    # Data structures
    'LinearOrder',
    'StandardRepresentation',
    'SimpleGraph',
    'RotationSystem',
    'Triangulation',
    'TripleSet',
    'FaceSet',
    'ValidationReport',

    # Version
    '__version__'
]
