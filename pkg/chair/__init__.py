# chair/__init__.py
"""Cohomology of the chair family propagated through its degeneration ledger."""

from .ledger import DeltaEntry, Ledger, LedgerEdge, ModelId, load_ledger
from .propagate import (
    LedgerState,
    NodeState,
    base_state,
    connecting_map,
    one_step_quotient,
    propagate,
    solenoid_base,
    step,
)
from .tables import TABLES, ChairTables, full_tables

__all__ = [
    "ModelId", "LedgerEdge", "DeltaEntry", "Ledger", "load_ledger",
    "NodeState", "LedgerState", "base_state", "connecting_map", "one_step_quotient",
    "solenoid_base", "step", "propagate",
    "ChairTables", "TABLES", "full_tables",
]
