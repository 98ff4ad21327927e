"""Násobení useknutých koeficientových posloupností.

Školní násobení přeskakuje nulové koeficienty (Eulerovy součiny a derivace η
jsou řídké), Karatsubovo dělení se použije nad nastaveným prahem.
"""
from __future__ import annotations
from typing import Any, List, Sequence


def _nonzero(values: Sequence[Any]) -> List[tuple]:
    return [(i, v) for i, v in enumerate(values) if v]


def schoolbook(a: Sequence[Any], b: Sequence[Any], n: int, zero: Any) -> List[Any]:
    """
    Useknutý součin a·b se zachováním prvních n koeficientů.

    Jako vnější smyčku bere řidší operand.

    Args:
        a, b: Koeficienty (libovolné prvky s +, *)
        n: Počet požadovaných koeficientů
        zero: Nulový prvek okruhu

    Returns:
        Seznam délky n
    """
    out = [zero] * n
    sparse_a = _nonzero(a[:n])
    sparse_b = _nonzero(b[:n])
    if len(sparse_a) > len(sparse_b):
        sparse_a, sparse_b = sparse_b, sparse_a
    for i, x in sparse_a:
        for j, y in sparse_b:
            if i + j >= n:
                break
            out[i + j] = out[i + j] + x * y
    return out


def _add(a: Sequence[Any], b: Sequence[Any], zero: Any) -> List[Any]:
    size = max(len(a), len(b))
    return [(a[i] if i < len(a) else zero) + (b[i] if i < len(b) else zero) for i in range(size)]


def _full_product(a: List[Any], b: List[Any], threshold: int, zero: Any) -> List[Any]:
    """Úplný (neuseknutý) součin, rekurzivní Karatsuba pro stejně dlouhé vstupy."""
    if not a or not b:
        return []
    if min(len(a), len(b)) <= threshold:
        return schoolbook(a, b, len(a) + len(b) - 1, zero)

    n = max(len(a), len(b))
    a = a + [zero] * (n - len(a))
    b = b + [zero] * (n - len(b))
    half = n // 2
    a0, a1 = a[:half], a[half:]
    b0, b1 = b[:half], b[half:]

    # a·b = Y² a1b1 + Y((a0+a1)(b0+b1) − a0b0 − a1b1) + a0b0, kde Y = q^half
    z0 = _full_product(a0, b0, threshold, zero)
    z2 = _full_product(a1, b1, threshold, zero)
    z1 = _full_product(_add(a0, a1, zero), _add(b0, b1, zero), threshold, zero)

    result = [zero] * (2 * n - 1)
    for i, c in enumerate(z1):
        result[i + half] = result[i + half] + c
    for i, c in enumerate(z0):
        result[i] = result[i] + c
        result[i + half] = result[i + half] - c
    for i, c in enumerate(z2):
        result[i + 2 * half] = result[i + 2 * half] + c
        result[i + half] = result[i + half] - c
    return result


def karatsuba(a: Sequence[Any], b: Sequence[Any], n: int, zero: Any, threshold: int) -> List[Any]:
    """
    Useknutý součin rozdělováním na poloviny (Karatsuba).

    Args:
        a, b: Koeficienty operandů
        n: Počet požadovaných koeficientů
        zero: Nulový prvek okruhu
        threshold: Délka, pod kterou se přechází na školní násobení (≥ 1)

    Returns:
        Seznam délky n
    """
    full = _full_product(list(a[:n]), list(b[:n]), max(threshold, 1), zero)
    full = full[:n]
    return full + [zero] * (n - len(full))


def multiply(a: Sequence[Any], b: Sequence[Any], n: int, zero: Any, threshold: int = 0) -> List[Any]:
    """
    Vybere algoritmus podle prahu: 0 znamená vždy školní násobení.

    Řídké operandy (méně než čtvrtina nenulových) jdou vždy školní cestou,
    ta je pro ně rychlejší.
    """
    if threshold <= 0 or n <= threshold:
        return schoolbook(a, b, n, zero)
    dense = min(sum(1 for v in a[:n] if v), sum(1 for v in b[:n] if v))
    if dense * 4 < n:
        return schoolbook(a, b, n, zero)
    return karatsuba(a, b, n, zero, threshold)
