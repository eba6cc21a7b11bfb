"""Sweep of index pairs 2 <= n < m <= M: classification, B_mn and verdicts."""
from __future__ import annotations

import csv
import io
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .errors import DomainError, RangeError
from .trig_core import MinimizeConfig, minimize_B

CSV_HEADER = ["m", "n", "class", "B", "expected", "verdict", "argmin_t", "margin",
              "theorem_covers", "conjecture_predicts"]
DEFAULT_TOL = 1e-7
DEFAULT_MAX = 80


class PairClass(str, Enum):
    ODD_ODD = "ODD_ODD"
    EVEN_EVEN = "EVEN_EVEN"
    CASE_C = "CASE_C"              # m odd, n even, n <= (m+1)/2
    MIXED_OPEN = "MIXED_OPEN"      # m odd, n even, n > (m+1)/2
    EVEN_M_ODD_N = "EVEN_M_ODD_N"


THEOREM_CLASSES = frozenset({PairClass.ODD_ODD, PairClass.EVEN_EVEN, PairClass.CASE_C})


class ScanVerdict(str, Enum):
    EQUAL = "EQUAL"
    STRICTLY_LESS = "STRICTLY_LESS"
    UNCERTAIN = "UNCERTAIN"


def classify(m: int, n: int) -> PairClass:
    if not (isinstance(m, int) and isinstance(n, int)) or not 2 <= n < m:
        raise RangeError(f"need integers 2 <= n < m, got m={m!r}, n={n!r}")
    if m % 2 == 1 and n % 2 == 1:
        return PairClass.ODD_ODD
    if m % 2 == 0 and n % 2 == 0:
        return PairClass.EVEN_EVEN
    if m % 2 == 0:
        return PairClass.EVEN_M_ODD_N
    return PairClass.CASE_C if 2 * n <= m + 1 else PairClass.MIXED_OPEN


def conjecture_predicate(m: int, n: int):
    """n < (4m+2)/5 for m odd, n even; None for other parities."""
    if m % 2 == 1 and n % 2 == 0:
        return 5 * n < 4 * m + 2
    return None


def judge(value: float, expected: Fraction, tol: float) -> ScanVerdict:
    e = float(expected)
    if abs(value - e) <= tol * max(1.0, e):
        return ScanVerdict.EQUAL
    if value < e - tol:
        return ScanVerdict.STRICTLY_LESS
    return ScanVerdict.UNCERTAIN


@dataclass(frozen=True)
class ScanRecord:
    m: int
    n: int
    pair_class: PairClass
    B_numeric: float
    expected: Fraction
    verdict: ScanVerdict
    argmin_t: float | str          # "0" / "pi" for endpoint limits
    margin: float
    theorem_covers: bool
    conjecture_predicts_equal: bool | None = field(default=None)

    # -- serialization -----------------------------------------------------
    def to_row(self) -> list:
        return [
            str(self.m), str(self.n), self.pair_class.value, _fmt(self.B_numeric),
            _fmt_frac(self.expected), self.verdict.value,
            self.argmin_t if isinstance(self.argmin_t, str) else _fmt(self.argmin_t),
            _fmt(self.margin), _fmt_bool(self.theorem_covers),
            "" if self.conjecture_predicts_equal is None else _fmt_bool(self.conjecture_predicts_equal),
        ]

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "class": self.pair_class.value,
            "B": self.B_numeric,
            "expected": _fmt_frac(self.expected),
            "verdict": self.verdict.value,
            "argmin_t": self.argmin_t,
            "margin": self.margin if math.isfinite(self.margin) else "inf",
            "theorem_covers": self.theorem_covers,
            "conjecture_predicts": self.conjecture_predicts_equal,
        }

    @classmethod
    def from_json(cls, d: dict) -> ScanRecord:
        argmin = d["argmin_t"]
        return cls(
            m=int(d["m"]),
            n=int(d["n"]),
            pair_class=PairClass(d["class"]),
            B_numeric=float(d["B"]),
            expected=Fraction(d["expected"]),
            verdict=ScanVerdict(d["verdict"]),
            argmin_t=argmin if isinstance(argmin, str) else float(argmin),
            margin=float(d["margin"]),
            theorem_covers=bool(d["theorem_covers"]),
            conjecture_predicts_equal=d["conjecture_predicts"],
        )

    @classmethod
    def from_row(cls, row: dict) -> ScanRecord:
        argmin = row["argmin_t"]
        pred = row["conjecture_predicts"]
        return cls(
            m=int(row["m"]),
            n=int(row["n"]),
            pair_class=PairClass(row["class"]),
            B_numeric=float(row["B"]),
            expected=Fraction(row["expected"]),
            verdict=ScanVerdict(row["verdict"]),
            argmin_t=argmin if argmin in ("0", "pi") else float(argmin),
            margin=float(row["margin"]),
            theorem_covers=row["theorem_covers"] == "true",
            conjecture_predicts_equal=None if pred == "" else pred == "true",
        )


def _fmt(x: float) -> str:
    return "inf" if x == math.inf else f"{x:.17g}"


def _fmt_frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _fmt_bool(b: bool) -> str:
    return "true" if b else "false"


def scan_pair(m: int, n: int, cfg: MinimizeConfig | None = None, tol: float = DEFAULT_TOL) -> ScanRecord:
    cls = classify(m, n)
    res = minimize_B(m, n, cfg)
    expected = Fraction(n**3 - n, m**3 - m)
    return ScanRecord(
        m=m,
        n=n,
        pair_class=cls,
        B_numeric=res.value,
        expected=expected,
        verdict=judge(res.value, expected, tol),
        argmin_t=res.endpoint if res.endpoint is not None else res.argmin,
        margin=res.margin,
        theorem_covers=cls in THEOREM_CLASSES,
        conjecture_predicts_equal=conjecture_predicate(m, n),
    )


def _scan_task(args):
    return scan_pair(*args)


def all_pairs(M: int):
    return [(m, n) for m in range(3, M + 1) for n in range(2, m)]


def scan(M: int = DEFAULT_MAX, cfg: MinimizeConfig | None = None, tol: float = DEFAULT_TOL,
         workers: int | None = 1) -> list:
    """One record per pair 2 <= n < m <= M, sorted by (m, n).

    ``workers`` > 1 distributes pairs over a process pool; None uses every
    available CPU.  Output does not depend on the worker count.
    """
    if M < 3:
        raise DomainError(f"need M >= 3, got {M}")
    cfg = cfg or MinimizeConfig()
    tasks = [(m, n, cfg, tol) for m, n in all_pairs(M)]
    workers = workers or os.cpu_count() or 1
    if workers == 1:
        records = [_scan_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_scan_task, tasks, chunksize=16))
    return sorted(records, key=lambda r: (r.m, r.n))


def records_to_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow(r.to_row())
    return buf.getvalue()


def records_from_csv(text: str) -> list:
    return [ScanRecord.from_row(row) for row in csv.DictReader(io.StringIO(text))]


def records_to_json(records) -> str:
    return json.dumps([r.to_json() for r in records], indent=1) + "\n"


def records_from_json(text: str) -> list:
    return [ScanRecord.from_json(d) for d in json.loads(text)]


@dataclass
class ConjectureSummary:
    """m odd / n even pairs split by the predicate n < (4m+2)/5.

    ``counterexamples`` are pairs where the predicate holds but B_mn was found
    strictly below (n^3-n)/(m^3-m); ``equal_beyond_line`` are pairs on or
    above the line where equality nevertheless holds.  Neither group is
    asserted against; both are reported.
    """
    agree: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)
    equal_beyond_line: list = field(default_factory=list)
    uncertain: list = field(default_factory=list)

    @property
    def disagreements(self) -> list:
        return self.counterexamples + self.equal_beyond_line

    def table(self) -> str:
        lines = [
            f"m-odd/n-even pairs: {len(self.agree) + len(self.disagreements) + len(self.uncertain)}",
            f"agree with predicate:           {len(self.agree)}",
            f"predicate true, B < expected:   {len(self.counterexamples)} {_pairs(self.counterexamples)}",
            f"predicate false, B == expected: {len(self.equal_beyond_line)} {_pairs(self.equal_beyond_line)}",
            f"uncertain:                      {len(self.uncertain)} {_pairs(self.uncertain)}",
        ]
        return "\n".join(lines)


def _pairs(records) -> str:
    return " ".join(f"({r.m},{r.n})" for r in records)


def conjecture_report(records) -> ConjectureSummary:
    records = list(records)
    if not records or max(r.m for r in records) < 9:
        raise DomainError("conjecture report needs a scan with M >= 9")
    out = ConjectureSummary()
    for r in records:
        pred = conjecture_predicate(r.m, r.n)
        if pred is None:
            continue
        if r.verdict is ScanVerdict.UNCERTAIN:
            out.uncertain.append(r)
        elif pred == (r.verdict is ScanVerdict.EQUAL):
            out.agree.append(r)
        elif pred:
            out.counterexamples.append(r)
        else:
            out.equal_beyond_line.append(r)
    return out
