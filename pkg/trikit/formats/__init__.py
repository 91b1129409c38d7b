"""
Text, JSON and DOT formats
"""

from .text import GraphFile, parse_orders, parse_graph, parse_triples, parse_report, emit_orders, emit_graph, emit_triangulation, emit_triples
from .dot import emit_dot

__all__ = [
    'GraphFile', 'parse_orders', 'parse_graph', 'parse_triples', 'parse_report',
    'emit_orders', 'emit_graph', 'emit_triangulation', 'emit_triples', 'emit_dot',
]
