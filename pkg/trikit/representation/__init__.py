"""
Three linear orders: validation, suppression, sigma2 and sigma3, and the fan checks of a1
"""

from .orders import (
    make_order,
    less,
    validate,
    require_representation,
    representation_from_lists,
    suppress,
    second_max,
    insert_for_contraction,
)
from .sigma import sigma2, sigma2_neighbors, is_sigma2_edge, sigma3, sigma3_predicate, contract_vertex
from .fans import FanReport, PartResult, CommutationReport, fan_of_apex, contraction_commutes

__all__ = [
    'make_order', 'less', 'validate', 'require_representation', 'representation_from_lists',
    'suppress', 'second_max', 'insert_for_contraction',
    'sigma2', 'sigma2_neighbors', 'is_sigma2_edge', 'sigma3', 'sigma3_predicate', 'contract_vertex',
    'FanReport', 'PartResult', 'CommutationReport', 'fan_of_apex', 'contraction_commutes',
]
