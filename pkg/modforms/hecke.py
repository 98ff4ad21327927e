"""Operátor U_j: Σ a(n) q^n ↦ Σ a(jn) q^n."""
from __future__ import annotations
from typing import Optional, Union

from modforms.forms import ModularFormExpansion
from series.truncated import TruncatedSeries
from utils.errors import InsufficientPrecision


def u_operator(f: Union[TruncatedSeries, ModularFormExpansion], j: int,
               precision: Optional[int] = None) -> TruncatedSeries:
    """
    Výběr každého j-tého koeficientu.

    Výstup obsahuje všechna n s jn < prec(f), tedy přesnost (prec(f) − 1)//j + 1.

    Args:
        f: Vstupní řada (u formy se bere její rozvoj)
        j: Kladný krok
        precision: Volitelná menší výstupní přesnost

    Returns:
        Řada f|U_j nad stejným okruhem
    """
    series = f.series if isinstance(f, ModularFormExpansion) else f
    if j < 1:
        raise ValueError(f"U_j vyžaduje j ≥ 1, zadáno {j}.")
    known = (series.precision - 1) // j + 1
    if precision is None:
        precision = known
    if precision > known:
        raise InsufficientPrecision(
            f"f|U_{j} je známá jen do přesnosti {known}, požadováno {precision}."
        )
    return TruncatedSeries(series.ring, tuple(series.coeffs[j * n] for n in range(precision)))
