"""Determinant identities det(xI - A(a,b,c;m1,m2,m3)) for the six residues of n mod 6.

Each entry transcribes one displayed cubic: its parameters and the
coefficients of x^3, x^2, x, 1 as Laurent polynomials in t, written as
{power: coefficient}. Labels f_i / g_i follow the displays that carry a
name; the rest are numbered "case.index".
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from ..models.types import CasePolyEntry

_ONE = {0: 1}
_ZERO: Dict[int, int] = {}

# (case_id, label, params, (x^2 coeff, x coeff, constant), winner)
_ROWS: List[Tuple[int, str, Tuple[int, ...], Tuple[Dict[int, int], ...], bool]] = [
    # n = 6m
    (1, "f_1", (1, 0, 0, -1, -2, -1), ({1: 2, -1: 1}, {2: 1}, {-1: -1}), True),
    (1, "f_2", (0, 1, 0, -1, -2, -1), ({1: 2, -1: 1}, {2: 1}, {1: -1}), False),
    (1, "f_3", (0, 1, 0, -1, -3, 0), ({1: 2, -1: 1}, {2: 1, 0: -1}, {1: -1}), False),
    (1, "f_4", (1, 0, 0, -2, -2, 0), ({1: 2, -1: 1}, {2: 1, 0: -1}, {1: -1, -1: -1}), False),
    (1, "f_5", (1, 0, 0, -2, -1, -1), ({1: 2, -1: 1}, {2: 1, 0: -1}, {1: -2, -1: -1}), False),
    (1, "f_6", (1, 1, 1, -1, -3, -1), ({1: 1, -1: 3}, {-2: 3}, {-1: -1, -3: 1}), False),
    (1, "f_7", (1, 1, 1, -2, -2, -1), ({1: 1, -1: 3}, {-2: 3}, {1: -1, -1: -1, -3: 1}), False),
    # n = 6m + 1
    (2, "g_1", (1, 0, 1, -1, -2, -1), ({1: 1, -1: 2}, {-2: 1}, {-1: -1}), True),
    (2, "2.2", (1, 0, 1, -2, -1, -1), ({1: 1, -1: 2}, {-2: 1, 0: -1}, {1: -1, -1: -2}), False),
    (2, "2.3", (1, 1, 0, -1, -2, -1), ({1: 1, -1: 2}, {-2: 1}, {1: -1}), False),
    (2, "2.4", (1, 1, 0, -2, -2, 0), ({1: 1, -1: 2}, {-2: 1, 0: -1}, {-1: -1, 1: -1}), False),
    (2, "g_2", (0, 0, 0, -1, -2, 0), ({1: 2}, {2: 1, 0: -2}, {1: -1}), False),
    (2, "2.6", (0, 0, 0, -1, -1, -1), ({1: 2}, {2: 1, 0: -2}, {1: -2}), False),
    # n = 6m + 2
    (3, "g_3", (1, 0, 0, -1, -2, 0), ({1: 1, -1: 1}, {0: -1}, {-1: -1}), True),
    (3, "3.2", (0, 1, 0, -1, -2, 0), ({1: 1, -1: 1}, {0: -1}, {1: -1}), False),
    (3, "3.3", (1, 0, 0, -1, -1, -1), ({1: 1, -1: 1}, {0: -1}, {1: -1, -1: -1}), False),
    (3, "3.4", (1, 1, 1, -1, -2, -1), ({-1: 3}, {-2: 3, 0: -2}, {-1: -2, -3: 1}), False),
    (3, "g_4", (0, 1, 0, 0, -3, 0), ({1: 1, -1: 1}, {0: -2}, _ZERO), False),
    (3, "3.6", (1, 0, 0, -2, -1, 0), ({1: 1, -1: 1}, {0: -2}, {1: -1, -1: -1}), False),
    # n = 6m + 3
    (4, "g_5", (0, 0, 0, 0, -2, 0), ({1: 1}, {0: -2}, _ZERO), True),
    (4, "4.2", (0, 0, 0, -1, -1, 0), ({1: 1}, {0: -2}, {1: -1}), False),
    (4, "g_6", (1, 1, 0, -1, -2, 0), ({-1: 2}, {-2: 1, 0: -2}, {-1: -1}), False),
    (4, "4.4", (1, 0, 1, -1, -1, -1), ({-1: 2}, {-2: 1, 0: -2}, {-1: -2}), False),
    # n = 6m + 4
    (5, "g_7", (0, 1, 0, 0, -2, 0), ({-1: 1}, {0: -2}, _ZERO), True),
    (5, "5.2", (1, 0, 0, -1, -1, 0), ({-1: 1}, {0: -2}, {-1: -1}), False),
    (5, "g_8", (1, 1, 1, 0, -2, -1), ({-1: 3, 1: -1}, {-2: 3, 0: -4}, {1: 1, -1: -3, -3: 1}), False),
    (5, "5.4", (1, 1, 1, -1, -1, -1), ({-1: 3, 1: -1}, {-2: 3, 0: -4}, {-1: -3, -3: 1}), False),
    # n = 6m + 5
    (6, "g_9", (0, 0, 0, 0, -1, 0), (_ZERO, {0: -2}, _ZERO), True),
    (6, "g_10", (1, 1, 0, 0, -2, 0), ({-1: 2, 1: -1}, {-2: 1, 0: -3}, {1: 1, -1: -1}), False),
    (6, "6.3", (1, 0, 1, -1, 0, -1), ({-1: 2, 1: -1}, {-2: 1, 0: -4}, {-1: -3}), False),
    (6, "6.4", (1, 0, 1, 0, -1, -1), ({-1: 2, 1: -1}, {-2: 1, 0: -3}, {1: 1, -1: -2}), False),
    (6, "6.5", (1, 1, 0, -1, -1, 0), ({-1: 2, 1: -1}, {-2: 1, 0: -3}, {-1: -1}), False),
    (6, "6.6", (1, 1, 0, -1, -2, 1), ({-1: 2, 1: -1}, {-2: 1, 0: -4}, {1: 1, -1: -2}), False),
]


def case_table() -> List[CasePolyEntry]:
    """All 33 entries in display order."""
    return [
        CasePolyEntry(
            case_id=case_id,
            label=label,
            params=params,
            closed_form=(_ONE, *coeffs),
            winner=winner,
        )
        for case_id, label, params, coeffs, winner in _ROWS
    ]


def entries_for_case(case_id: int) -> List[CasePolyEntry]:
    return [e for e in case_table() if e.case_id == case_id]


def entry(label: str) -> CasePolyEntry:
    for e in case_table():
        if e.label == label:
            return e
    raise KeyError(label)
