"""Composition tables of qualitative calculi: sampling, enumeration and reasoning."""

from ._qct import (
    BudgetExceeded,
    DomainError,
    ParseError,
    QctError,
    Schema,
    SchemaMismatch,
    Table,
    closure,
    compose,
    diff,
    domain_size,
    enumerate,
    generate,
    indu_filter,
    load_table,
    read_table,
    schema,
)

__all__ = [
    "BudgetExceeded",
    "DomainError",
    "ParseError",
    "QctError",
    "Schema",
    "SchemaMismatch",
    "Table",
    "closure",
    "compose",
    "diff",
    "domain_size",
    "enumerate",
    "generate",
    "indu_filter",
    "load_table",
    "read_table",
    "schema",
]
