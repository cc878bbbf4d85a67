"""Embedded data for torus-monodromy."""

from .registry import CanonicalRow, get_registry, load_registry, raw_rows, row_by_id, row_for_powers

__all__ = ['CanonicalRow', 'get_registry', 'load_registry', 'raw_rows', 'row_by_id', 'row_for_powers']
