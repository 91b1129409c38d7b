"""
Planar triangulations: validation, rotation recovery and contraction towards a1
"""

from .triangulation import trace_faces, validate_triangulation, require_triangulation, neighbor_cycle, faces
from .rotation import recover_rotation, rotation_from_faces, orient_to_outer
from .contraction import select_contractible, contract

__all__ = [
    'trace_faces', 'validate_triangulation', 'require_triangulation', 'neighbor_cycle', 'faces',
    'recover_rotation', 'rotation_from_faces', 'orient_to_outer',
    'select_contractible', 'contract',
]
