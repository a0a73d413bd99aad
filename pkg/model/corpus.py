# corpus.py: built-in example groups and spaces
"""
The groups and weighted projective spaces that `orbk verify` checks.

Matrix groups are stored as input-file dicts (the same shape a user would
write), so the verify suite exercises the parser and validators too.
"""

from functools import reduce
from math import gcd
from typing import Dict, List, Tuple

from model.wps import WeightedProjectiveSpace


def _entry(name: str, dimension: int, conductor: int, generators: List[List[List[str]]],
           geometry: str = 'linear') -> Dict:
    return {
        'name': name,
        'kind': 'matrix_group',
        'dimension': dimension,
        'conductor': conductor,
        'geometry': geometry,
        'generators': generators,
    }


def cyclic_sl2(n: int) -> Dict:
    """Z_n = <diag(zeta_n, zeta_n^-1)> in SL(2), the A_(n-1) singularity."""
    return _entry(f"Z{n} in SL(2)", 2, n, [[['z', '0'], ['0', f'z^{n - 1}']]])


def cyclic_line(n: int, name: str = None) -> Dict:
    """Z_n acting on C by zeta_n."""
    return _entry(name or f"C/Z{n}", 1, n, [[['z']]])


def z4_mixed() -> Dict:
    return _entry("Z4 = <diag(i, -1)>", 2, 4, [[['z', '0'], ['0', '-1']]])


def klein_four(geometry: str = 'linear') -> Dict:
    return _entry("Z2+Z2 on C^2", 2, 1, [
        [['-1', '0'], ['0', '1']],
        [['1', '0'], ['0', '-1']],
    ], geometry)


def symmetric_three(geometry: str = 'linear') -> Dict:
    return _entry("S3 on C^3", 3, 1, [
        [['0', '1', '0'], ['1', '0', '0'], ['0', '0', '1']],
        [['0', '0', '1'], ['1', '0', '0'], ['0', '1', '0']],
    ], geometry)


def quaternion(geometry: str = 'linear') -> Dict:
    return _entry("Q8 in SU(2)", 2, 4, [
        [['z', '0'], ['0', '-1*z']],
        [['0', '1'], ['-1', '0']],
    ], geometry)


def sign_pair(geometry: str = 'linear') -> Dict:
    return _entry("Z2 = <-I> in SL(2)", 2, 2, [[['-1', '0'], ['0', '-1']]], geometry)


def trivial(dimension: int = 2) -> Dict:
    rows = [['1' if i == j else '0' for j in range(dimension)] for i in range(dimension)]
    return _entry(f"trivial on C^{dimension}", dimension, 1, [rows])


def matrix_corpus(max_cyclic: int = 12) -> List[Dict]:
    """Linear and point quotients, smallest first."""
    entries = [trivial(), cyclic_line(3, "Z3 in GL(1)"), z4_mixed(), klein_four(), symmetric_three(), quaternion()]
    entries.extend(cyclic_sl2(n) for n in range(2, max_cyclic + 1))
    entries.extend(cyclic_line(n) for n in range(2, 10) if n != 3)
    entries.extend([
        sign_pair('point'), klein_four('point'), symmetric_three('point'), quaternion('point'),
    ])
    return entries


def wps_corpus(max_weight_sum: int = 10) -> List[WeightedProjectiveSpace]:
    """Every P(w) with nondecreasing coprime weights and sum(w) <= max_weight_sum."""
    def extend(prefix: Tuple[int, ...], budget: int):
        if len(prefix) >= 2:
            yield prefix
        start = prefix[-1] if prefix else 1
        for w in range(start, budget + 1):
            yield from extend(prefix + (w,), budget - w)

    return [WeightedProjectiveSpace(weights) for weights in extend((), max_weight_sum)
            if reduce(gcd, weights) == 1]
