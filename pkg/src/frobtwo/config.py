"""Enumeration caps.

Every cap can be overridden per call, through CLI flags, or through the
``FROBTWO_*`` environment variables listed in :data:`ENV_VARS`.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace


@dataclass(frozen=True)
class Caps:
    max_ring_order: int = 4096
    max_matrix_base: int = 4
    max_matrix_size: int = 2
    # |R|^k bound for enumerating a row space
    max_enumeration: int = 2**24
    # search defaults
    search_max_ring_order: int = 16
    search_max_vectors: int = 2**20
    search_max_length: int = 12
    # graphs above this many vertices are not drawn with --dot
    max_dot_vertices: int = 64

    def with_overrides(self, **kwargs) -> "Caps":
        values = {k: v for k, v in kwargs.items() if v is not None}
        return replace(self, **values)


ENV_VARS = {f.name: "FROBTWO_" + f.name.upper() for f in fields(Caps)}


def caps_from_env(environ=None) -> Caps:
    environ = os.environ if environ is None else environ
    overrides = {}
    for name, var in ENV_VARS.items():
        if var in environ:
            overrides[name] = int(environ[var])
    return Caps().with_overrides(**overrides)


DEFAULT_CAPS = Caps()
