"""
Core trikit components - data types, configuration and the command pipeline
"""

# Main data structures
from .schema import (
    LinearOrder,
    StandardRepresentation,
    SimpleGraph,
    TripleSet,
    RotationSystem,
    Triangulation,
    FaceSet,
    ValidationReport,

    # Enums
    RepresentationFailure,
    TriangulationFailure,
)

# Configuration
from .config import TrikitConfig, load_trikit_config

# Command pipeline
from .pipeline import check_representation, load_triangulation, roundtrip

__all__ = [
    # Functions
    'check_representation', 'load_triangulation', 'roundtrip', 'load_trikit_config',

    # Data structures
    'LinearOrder', 'StandardRepresentation', 'SimpleGraph', 'TripleSet',
    'RotationSystem', 'Triangulation', 'FaceSet', 'ValidationReport', 'TrikitConfig',

    # Enums
    'RepresentationFailure', 'TriangulationFailure',
]
