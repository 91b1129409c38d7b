"""
Brute-force oracle and test corpus
"""

from .search import search_representation, is_planar_triangulation
from .generator import random_stacked_triangulation, generate_corpus

__all__ = ['search_representation', 'is_planar_triangulation', 'random_stacked_triangulation', 'generate_corpus']
