"""Bounds table for two-colour Ramsey numbers R(m, n).

The table is keyed canonically with ``m <= n``; lookups are symmetric. Cells
with ``min(m, n) <= 2`` are never stored and always answer with their exact
value.
"""
from __future__ import annotations

import csv
import enum
import io
import json
import warnings
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterable, Iterator, NamedTuple, Optional


class RamseyError(Exception):
    """Base class for errors raised by this package."""


class MissingPremise(RamseyError):
    pass


class ArithmeticOverflow(RamseyError):
    """A fixed-width fast path was asked for an order it cannot evaluate exactly."""


class InconsistentSeed(RamseyError):
    pass


class MalformedRecord(RamseyError):
    pass


class InconsistencyDetected(RamseyError):
    """A bound fell below a known lower bound; the premises are wrong."""


class SeedWarning(UserWarning):
    pass


class RamseyPoint(NamedTuple):
    m: int
    n: int

    @classmethod
    def of(cls, m: int, n: int) -> "RamseyPoint":
        if m < 1 or n < 1:
            raise ValueError(f"Ramsey arguments must be >= 1, got ({m}, {n})")
        return cls(m, n) if m <= n else cls(n, m)

    def __str__(self) -> str:
        return f"R({self.m},{self.n})"


class Provenance(str, enum.Enum):
    BASE_CASE = "base"
    SEED = "seed"
    METHOD_A = "a"
    METHOD_B = "b"
    METHOD_C = "c"

    @property
    def is_method(self) -> bool:
        return self in (Provenance.METHOD_A, Provenance.METHOD_B, Provenance.METHOD_C)


METHOD_PROVENANCE = {
    "a": Provenance.METHOD_A,
    "b": Provenance.METHOD_B,
    "c": Provenance.METHOD_C,
}


@dataclass(frozen=True)
class BoundEntry:
    lower: int
    upper: int
    provenance: Provenance
    derivation: Optional[object] = None  # engine.DerivationRecord
    seed_upper: Optional[int] = None
    source: str = ""

    def __post_init__(self):
        if self.lower < 1 or self.upper < 1:
            raise InconsistencyDetected(f"bounds must be >= 1: {self.lower}..{self.upper}")
        if self.lower > self.upper:
            raise InconsistencyDetected(f"lower bound {self.lower} exceeds upper bound {self.upper}")

    @property
    def improved(self) -> bool:
        """True when a method beat the seeded upper bound."""
        return self.seed_upper is not None and self.upper < self.seed_upper

    @property
    def label(self) -> str:
        return self.provenance.value if self.provenance.is_method else ""


def base_value(m: int, n: int) -> Optional[int]:
    """Exact R(m, n) when min(m, n) <= 2, else None."""
    lo, hi = min(m, n), max(m, n)
    if lo < 1:
        raise ValueError(f"Ramsey arguments must be >= 1, got ({m}, {n})")
    if lo == 1:
        return 1
    if lo == 2:
        return hi
    return None


def _base_entry(m: int, n: int) -> BoundEntry:
    v = base_value(m, n)
    return BoundEntry(v, v, Provenance.BASE_CASE, source="base")


@dataclass(frozen=True)
class MethodParams:
    """Shifted upper bounds: U(m-2,n)-1, U(m,n-2)-1, U(m-1,n)-1, U(m,n-1)-1."""

    alpha: int
    beta: int
    gamma: int
    delta: int

    def __iter__(self):
        return iter((self.alpha, self.beta, self.gamma, self.delta))

    def shrink(self, which: str, by: int = 1) -> "MethodParams":
        return replace(self, **{which: getattr(self, which) - by})


def param_points(m: int, n: int) -> tuple[tuple[int, int], ...]:
    """Ordered cells whose upper bounds feed alpha, beta, gamma, delta."""
    return ((m - 2, n), (m, n - 2), (m - 1, n), (m, n - 1))


@dataclass
class BoundsTable:
    entries: dict[RamseyPoint, BoundEntry] = field(default_factory=dict)
    revision: str = ""

    def __contains__(self, key) -> bool:
        m, n = key
        return base_value(m, n) is not None or RamseyPoint.of(m, n) in self.entries

    def get(self, m: int, n: int) -> BoundEntry:
        if base_value(m, n) is not None:
            return _base_entry(m, n)
        try:
            return self.entries[RamseyPoint.of(m, n)]
        except KeyError:
            raise MissingPremise(f"no bound recorded for R({m},{n})") from None

    def upper(self, m: int, n: int) -> int:
        return self.get(m, n).upper

    def lower(self, m: int, n: int) -> int:
        return self.get(m, n).lower

    def set(self, m: int, n: int, entry: BoundEntry) -> None:
        if base_value(m, n) is not None:
            raise ValueError(f"R({m},{n}) is a base case and cannot be overwritten")
        self.entries[RamseyPoint.of(m, n)] = entry

    def points(self) -> list[RamseyPoint]:
        return sorted(self.entries, key=lambda pt: (pt.m + pt.n, pt.m))

    def copy(self) -> "BoundsTable":
        return BoundsTable(dict(self.entries), self.revision)

    def __iter__(self) -> Iterator[tuple[RamseyPoint, BoundEntry]]:
        for pt in self.points():
            yield pt, self.entries[pt]

    def values(self) -> dict[tuple[int, int], tuple[int, int]]:
        """Plain ``{(m, n): (lower, upper)}`` view used for comparisons."""
        return {(pt.m, pt.n): (e.lower, e.upper) for pt, e in self}


def get_params(table: BoundsTable, m: int, n: int) -> MethodParams:
    if m < 3 or n < 3:
        raise ValueError(f"parameters are defined for m, n >= 3, got ({m}, {n})")
    a, b, g, d = (table.upper(i, j) - 1 for i, j in param_points(m, n))
    return MethodParams(a, b, g, d)


class SeedRecord(NamedTuple):
    m: int
    n: int
    lower: int
    upper: int
    source: str = ""


def ingest_seeds(records: Iterable, revision: str = "") -> BoundsTable:
    """Build a table from seed records, merging symmetric duplicates."""
    merged: dict[RamseyPoint, list] = {}
    for rec in records:
        rec = SeedRecord(*rec)
        if rec.lower < 1 or rec.upper < rec.lower:
            raise MalformedRecord(f"bad bounds in seed record {tuple(rec)}")
        exact = base_value(rec.m, rec.n)
        if exact is not None:
            if not rec.lower <= exact <= rec.upper or rec.lower != rec.upper:
                warnings.warn(
                    f"seed for R({rec.m},{rec.n}) = [{rec.lower},{rec.upper}] "
                    f"ignored; base case is {exact}",
                    SeedWarning,
                    stacklevel=2,
                )
            continue
        pt = RamseyPoint.of(rec.m, rec.n)
        if pt in merged:
            cur = merged[pt]
            cur[0] = max(cur[0], rec.lower)
            cur[1] = min(cur[1], rec.upper)
            if rec.source and rec.source not in cur[2]:
                cur[2].append(rec.source)
        else:
            merged[pt] = [rec.lower, rec.upper, [rec.source] if rec.source else []]

    table = BoundsTable(revision=revision)
    for pt, (lo, up, sources) in merged.items():
        if lo > up:
            raise InconsistentSeed(f"merged seeds for {pt} give lower {lo} > upper {up}")
        table.entries[pt] = BoundEntry(lo, up, Provenance.SEED, seed_upper=up, source="+".join(sources))
    return table


def _parse_int(tok: str, what: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise MalformedRecord(f"line {lineno}: {what} {tok!r} is not an integer") from None


def parse_seed_csv(text: str) -> tuple[list[SeedRecord], str]:
    """Parse ``m,n,lower,upper,source`` lines. ``# revision: X`` sets the marker."""
    records: list[SeedRecord] = []
    revision = ""
    for lineno, line in enumerate(io.StringIO(text), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            body = stripped.lstrip("#").strip()
            if body.lower().startswith("revision:"):
                revision = body.split(":", 1)[1].strip()
            continue
        row = next(csv.reader([stripped]))
        if len(row) not in (4, 5):
            raise MalformedRecord(f"line {lineno}: expected 4 or 5 fields, got {len(row)}")
        m = _parse_int(row[0].strip(), "m", lineno)
        n = _parse_int(row[1].strip(), "n", lineno)
        lo_tok = row[2].strip()
        lower = 1 if lo_tok == "?" else _parse_int(lo_tok, "lower", lineno)
        upper = _parse_int(row[3].strip(), "upper", lineno)
        source = row[4].strip() if len(row) == 5 else ""
        if m < 1 or n < 1:
            raise MalformedRecord(f"line {lineno}: Ramsey arguments must be >= 1")
        if lower < 1 or upper < lower:
            raise MalformedRecord(f"line {lineno}: need 1 <= lower <= upper, got {lower}, {upper}")
        records.append(SeedRecord(m, n, lower, upper, source))
    return records, revision


def parse_seed_json(text: str) -> tuple[list[SeedRecord], str]:
    """Accept the JSON document written by ``compute --format json``."""
    try:
        doc = json.loads(text)
        cells = doc["cells"]
        records = [
            SeedRecord(int(c["m"]), int(c["n"]), int(c["lower"]), int(c["upper"]), str(c.get("source", "")))
            for c in cells
        ]
    except (ValueError, KeyError, TypeError) as exc:
        raise MalformedRecord(f"bad JSON seed document: {exc}") from None
    return records, str(doc.get("revision", ""))


def load_seeds(path) -> BoundsTable:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".json":
        records, revision = parse_seed_json(text)
    else:
        records, revision = parse_seed_csv(text)
    return ingest_seeds(records, revision)


def packaged_seed_path(name: str = "survey.csv") -> Path:
    return Path(__file__).parent / "data" / name
