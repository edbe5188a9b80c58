"""Built-in rings and example codes."""
from __future__ import annotations

from pathlib import Path

from .codes import LinearCode
from .config import DEFAULT_CAPS, Caps

DATA_DIR = Path(__file__).with_name("data")
CODE_DIR = DATA_DIR / "codes"

GF_ORDERS = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16)


def code_names() -> list[str]:
    return sorted(p.stem for p in CODE_DIR.glob("*.json"))


def code_path(name: str) -> Path:
    return CODE_DIR / f"{name}.json"


def load_corpus_code(name: str, caps: Caps = DEFAULT_CAPS) -> LinearCode:
    return LinearCode.from_json(code_path(name), caps=caps)


def base_ring_specs() -> list[str]:
    """Z_m for m <= 24 and GF(q) for q <= 16."""
    return [f"Z{m}" for m in range(2, 25)] + [f"GF({q})" for q in GF_ORDERS]


def builtin_ring_specs() -> list[str]:
    """The base rings, every product of two of them, and M2(GF(2))."""
    base = base_ring_specs()
    products = [f"{a}x{b}" for i, a in enumerate(base) for b in base[i:]]
    return base + products + ["M2(GF(2))"]


def small_ring_specs(max_order: int) -> list[str]:
    """A spread of Frobenius rings up to ``max_order``: commutative, non-local and noncommutative."""
    from .rings import parse_ring_spec

    candidates = base_ring_specs() + [
        "Z2xZ2", "Z2xZ3", "Z2xZ4", "Z3xZ3", "Z2xGF(4)", "Z4xZ4", "Z2xZ2xZ2",
        "Z2xZ8", "GF(4)xZ4", "Z2xZ2xZ4", "Z2xZ2xZ2xZ2", "M2(GF(2))",
    ]
    out = []
    for spec in candidates:
        if parse_ring_spec(spec).order <= max_order:
            out.append(spec)
    return out
