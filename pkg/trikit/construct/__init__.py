"""
The two constructions: triangulation to representation, representation to embedding
"""

from .realizer import base_representation, realize, ContractionRecord
from .embedder import embed, faces

__all__ = ['base_representation', 'realize', 'ContractionRecord', 'embed', 'faces']
