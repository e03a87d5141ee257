"""Half-up two-decimal display rounding.

Engines compute in binary doubles; everything shown to a user goes
through this module, so the CLI, the HTTP service, and the UI print
identical strings. Rounding is half-up (0.005 rounds away from zero),
not banker's rounding.
"""

from __future__ import annotations

from decimal import ROUND_HALF_UP, Decimal, localcontext


def _quantized(value: float) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = 60
        result = Decimal(str(value)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP)
    if result == 0:
        result = abs(result)  # avoid "-0.00"
    return result


def round2(value: float) -> float:
    """``value`` rounded half-up to 2 decimal places."""
    return float(_quantized(value))


def fmt2(value: float) -> str:
    """Two-decimal display string, e.g. ``12000.0`` -> ``"12000.00"``."""
    return str(_quantized(value))
