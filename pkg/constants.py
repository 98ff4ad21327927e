"""Globální konstanty výpočetního jádra."""
from __future__ import annotations
from fractions import Fraction

# === Koeficienty β_k u Δ_{2k} v identitě R_k = −C(2k−2,k−2)E_{2k} − β_k Δ_{2k} ===
BETA = {
    6: Fraction(-33108590592, 691),
    8: Fraction(-187167592415232, 3617),
    9: Fraction(-28682634201661440, 43867),
    10: Fraction(-8294726176465158144, 174611),
    11: Fraction(-101475065073734516736, 77683),
    13: Fraction(-1195065734266339700244480, 657931),
}

# k, pro která je S_{2k} = {0} a R_k je čistě Eisensteinova
EISENSTEIN_ONLY_K = frozenset({2, 3, 4, 5, 7})

# k s tabulkovým Δ_{2k}: S_{2k} je jednorozměrný
DELTA_TABLE_K = frozenset(BETA)

# === Výchozí parametry běhů ===
DEFAULT_CONGRUENCE_PRECISION = 50  # N pro kongruence mod ℓ
DEFAULT_EXACT_PRECISION = 200  # N pro přesné identity nad QQ
DEFAULT_PRIMES = (5, 7, 11, 13, 17, 19, 23, 29, 31)
COR12_PRIMES = (5, 7, 11)
COR13_PRIMES = (13, 17)
RAMANUJAN_PRIMES = (5, 7)
DEFAULT_K_RANGE = tuple(range(0, 14))
TRACE_K_RANGE = tuple(range(6, 16))

# Posuny v p(ℓn + a) ≡ 0 (mod ℓ)
COR12_OFFSETS = {5: 4, 7: 5, 11: 6}

# === Stavy verifikací ===
class Status:
    """Výčet možných výsledků kontroly identity."""
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


# === Návratové kódy CLI ===
EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

REPORT_FORMAT = "partcong-report"
REPORT_VERSION = 1
