"""Closed-form predictions of dern and adern for strong double brooms.

Each predictor returns a :class:`Prediction` naming the theorem family and the
case branch that fired, so brute-force results can be diffed against theory
branch by branch.
"""

from __future__ import annotations

from dataclasses import dataclass

from edgerecon.broom import BroomSpec
from edgerecon.errors import Unsupported

EXACT = "Exact"
CASE_DERIVED = "CaseDerived"


@dataclass(frozen=True)
class Prediction:
    value: int | None
    exactness: str
    theorem: str
    branch: str
    value_set: tuple[int, ...] | None = None
    preferred: int | None = None

    @property
    def expected(self) -> int:
        return self.value if self.exactness == EXACT else self.preferred

    def accepts(self, observed: int) -> bool:
        """Whether ``observed`` is consistent with the statement of the theorem."""
        if self.exactness == EXACT:
            return observed == self.value
        return observed in self.value_set

    def to_json(self) -> dict:
        out: dict = {}
        if self.exactness == EXACT:
            out["value"] = self.value
        else:
            out["value_set"] = list(self.value_set)
            out["preferred"] = self.preferred
        out.update(exactness=self.exactness, theorem=self.theorem, branch=self.branch)
        return out


def _exact(value: int, theorem: str, branch: str) -> Prediction:
    return Prediction(value, EXACT, theorem, branch)


def _hub_sorted(spec: BroomSpec) -> BroomSpec:
    return spec if spec.n1 <= spec.n2 else spec.swapped()


def _dern_equal_single(n: int, m: int, k: int) -> Prediction:
    th = "dern/equal-n/single-length"
    if n + m >= 6:
        return _exact(1, th, "n+m>=6: one leaf card")
    if k == 3 and (n, m) not in ((1, 2), (1, 3)):
        return _exact(1, th, "n+m<6, (n,m) not (1,2),(1,3), k=3: one hub card")
    return _exact(2, th, "otherwise: leaf card plus a middle or hub card")


def _dern_unequal_single(n1: int, n2: int, m: int, k: int) -> Prediction:
    th = "dern/unequal-n/single-length"
    if k == 3:
        return _exact(1, th, "k=3: one hub card")
    if n1 + m <= 5 and n2 - n1 in (2, 3):
        return _exact(2, th, "n1+m<=5, n2-n1 in {2,3}, k>3")
    if n1 + m <= 5 and n2 - n1 == 1 and n2 + m != 6:
        return _exact(2, th, "n1+m<=5, n2-n1=1, n2+m!=6, k>3")
    return _exact(1, th, "otherwise: one leaf card")


def _dern_equal_multi(n: int, m: int, ks: tuple[int, ...]) -> Prediction:
    th = "dern/equal-n/multi-length"
    if n + m >= 6:
        return _exact(1, th, "n+m>=6: one leaf card")
    if n + m == 5 and ks[0] == 3:
        return _exact(1, th, "n+m=5, k1=3: one hub card on a P3")
    if n + m == 4 and ks[0] == 3 and ks[1] == 4 and n == 2:
        return _exact(1, th, "n+m=4, k1=k2-1=3, n=2: one hub card on a P3")
    return _exact(2, th, "otherwise: leaf card plus a middle card of the longest path")


def _dern_p2(n1: int, n2: int, spec: BroomSpec) -> Prediction:
    th = "dern/with-P2"
    rest = spec.paths[1:]
    if sum(m for m, _ in rest) == 1 and all(k > 3 for _, k in rest) and n1 == 1 and n2 <= 4:
        return _exact(2, th, "one further path, k>3, n1=1, n2<=4: leaf card plus hub card")
    return _exact(1, th, "otherwise: one leaf or hub card")


def _dern_general(n1: int, n2: int, m: int, ks: tuple[int, ...]) -> Prediction:
    th = "dern/unequal-n/multi-length"
    k1, k2 = ks[0], ks[1]
    diff = n2 - n1
    s = n1 + m

    def pred(pref: int, branch: str) -> Prediction:
        return Prediction(None, CASE_DERIVED, th, branch, value_set=(1, 2), preferred=pref)

    if s >= 6 or (s <= 5 and diff >= 4) or (s == 5 and diff == 1):
        return pred(1, "case 1: one leaf card (n2+m-1, L)")
    if (s == 3 and (n2 == k2 - 2 == 2 or n2 == k1 + 1 == 4)) or (
        s == 4 and diff < 4 and (n1, n2) != (2, 4) and k1 == 3
    ):
        return pred(1, "case 2: one hub card (n2+m, K)")
    if (s == 4 and (n1, n2) == (2, 4) and k2 == 4) or (s == 5 and diff in (2, 3) and k1 == 3):
        return pred(1, "case 3: one hub card (n1+m, K)")
    return pred(2, "remaining: leaf card plus middle card")


def dern_formula(spec: BroomSpec) -> Prediction:
    s = _hub_sorted(spec)
    n1, n2, m, ks = s.n1, s.n2, s.m, s.orders
    if ks[0] == 2:
        return _dern_p2(n1, n2, s)
    if s.t == 1:
        if n1 == n2:
            return _dern_equal_single(n1, m, ks[0])
        return _dern_unequal_single(n1, n2, m, ks[0])
    if n1 == n2:
        return _dern_equal_multi(n1, m, ks)
    return _dern_general(n1, n2, m, ks)


def adern_formula(spec: BroomSpec) -> Prediction:
    if spec.n1 != spec.n2 or spec.t != 1:
        raise Unsupported(f"no adern formula for {spec}: only B(n,n,mPk) is covered")
    n, m, k = spec.n1, spec.m, spec.orders[0]
    if m == 2:
        th = "adern/two-paths"
        if n == 1 and k >= 4:
            return _exact(5, th, "n=1, k>=4")
        if (n in (2, 3) and k == 3) or (n >= 3 and k == 4):
            return _exact(2, th, "n in {2,3} and k=3, or n>=3 and k=4")
        if n >= 4 and k == 3:
            return _exact(1, th, "n>=4, k=3")
        return _exact(3, th, "otherwise")
    th = "adern/three-or-more-paths"
    if k >= 5 or (m == 3 and k == 4 and n == 1):
        return _exact(3, th, "k>=5, or m=3, k=4, n=1")
    if (
        (m == 3 and k == 3 and n == 2)
        or (m == 4 and k == 3 and n == 1)
        or (m == 3 and k == 3 and n == 1)
        or (k == 4 and m >= 4)
        or (m == 3 and k == 4 and n >= 2)
    ):
        return _exact(
            2, th, "m=k=n+1=3, m=k+1=n+3=4, m=k=n+2=3, m>=k=4, or m=k-1=3 with n>=2"
        )
    return _exact(1, th, "otherwise")


@dataclass(frozen=True)
class TableRow:
    k: str
    m: str | None
    n: str
    cases: tuple[str, ...]
    value: int


# Upper-bound case bookkeeping for the two adern families, row for row.
_TWO_PATH_ROWS = (
    TableRow("3", None, "1", ("3",), 3),
    TableRow("3", None, "2,3", ("2", "3"), 2),
    TableRow("3", None, ">=4", ("1", "2"), 1),
    TableRow("4", None, "1", ("4", "5.1", "6", "7", "10", "12"), 5),
    TableRow("4", None, "2", ("4", "5.1", "9", "10", "13"), 3),
    TableRow("4", None, ">=3", ("1", "4", "5.1", "8", "10", "13"), 2),
    TableRow("5", None, "1", ("4", "6", "7", "12"), 5),
    TableRow("5", None, "2", ("4", "5.2.1", "9", "13"), 3),
    TableRow("5", None, ">=3", ("1", "4", "5.2.1", "8", "13"), 3),
    TableRow(">=6", None, "1", ("4", "5.2.2", "6", "7", "11", "12"), 5),
    TableRow(">=6", None, "2", ("4", "5.2", "9", "11", "13"), 3),
    TableRow(">=6", None, ">=3", ("1", "4", "5.2", "8", "13"), 3),
)

_MANY_PATH_ROWS = (
    TableRow("3", "3", "1", ("3", "8"), 2),
    TableRow("3", "3", "2", ("2", "6"), 2),
    TableRow("3", "3", ">=3", ("1", "2"), 1),
    TableRow("3", "4", "1", ("2", "6"), 2),
    TableRow("3", "4", ">=2", ("1", "2"), 1),
    TableRow("3", ">=5", ">=1", ("1", "2"), 1),
    TableRow("4", "3", "1", ("3", "4", "7", "8", "9"), 3),
    TableRow("4", "3", "2", ("3", "4", "6", "8", "9"), 2),
    TableRow("4", "3", ">=3", ("1", "4", "8", "9"), 2),
    TableRow("4", "4", "1", ("3", "4", "6", "8", "9"), 2),
    TableRow("4", "4", ">=2", ("1", "4", "8", "9"), 2),
    TableRow("4", ">=5", ">=1", ("1", "4", "8", "9"), 2),
    TableRow(">=5", "3", "1", ("3", "4", "5 (if k>5)", "7", "8", "10"), 3),
    TableRow(">=5", "3", "2", ("3", "4", "5 (if k>5)", "6", "8", "10"), 3),
    TableRow(">=5", "3", ">=3", ("1", "4", "5 (if k>5)", "8", "10"), 3),
    TableRow(">=5", "4", "1", ("3", "4", "5 (if k>5)", "6", "8", "10"), 3),
    TableRow(">=5", "4", ">=2", ("1", "4", "5 (if k>5)", "8", "10"), 3),
    TableRow(">=5", ">=5", ">=1", ("1", "4", "5 (if k>5)", "8", "10"), 3),
)

FAMILIES = {"2pk": _TWO_PATH_ROWS, "mpk": _MANY_PATH_ROWS}


def _matches(label: str, x: int) -> bool:
    if label.startswith(">="):
        return x >= int(label[2:])
    return x in {int(p) for p in label.split(",")}


def proof_table(family: str) -> list[TableRow]:
    """Rows of the upper-bound case table for ``"2pk"`` (m=2) or ``"mpk"`` (m>=3)."""
    try:
        return list(FAMILIES[family])
    except KeyError:
        raise Unsupported(f"no proof table for family {family!r}; use one of {sorted(FAMILIES)}")


def table_row(spec: BroomSpec) -> TableRow:
    """The table row covering ``spec``."""
    if spec.n1 != spec.n2 or spec.t != 1:
        raise Unsupported(f"{spec} is outside B(n,n,mPk)")
    n, m, k = spec.n1, spec.m, spec.orders[0]
    family = "2pk" if m == 2 else "mpk"
    for row in FAMILIES[family]:
        if _matches(row.k, k) and _matches(row.n, n) and (row.m is None or _matches(row.m, m)):
            return row
    raise Unsupported(f"no table row covers {spec}")
