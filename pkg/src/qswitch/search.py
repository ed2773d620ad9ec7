"""Search for constant quaternionic switches over finite coefficient grids.

Only ``(A, B)`` is enumerated; ``C`` and ``D`` are solved for, then the
candidate is verified in full and deduplicated up to the symmetry group
generated by signed rotations of ``(i, j, k)`` and the variant maps.
"""

from __future__ import annotations

import configparser
import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .rings import NonUnitError, Quaternion, format_rational
from .switch import Switch, check_yang_baxter, dagger, invert_switch, star

RING_FILTERS = ("none", "hurwitz", "integer")
JOBS_ENV = "QSWITCH_JOBS"


# necessary conditions and derived entries ------------------------------------------


def constraint_filter(a: Quaternion) -> bool:
    """Necessary conditions on ``A``: positive real part, ``|A|^2 < 4``, ``|1-A|^2 = 1``, not real."""
    return a.w > 0 and a.norm2() < 4 and (1 - a).norm2() == 1 and not a.is_real()


def derive_cd(a: Quaternion, b: Quaternion) -> tuple[Quaternion, Quaternion]:
    """The unique ``(C, D)`` making the first two entry equations hold."""
    ai, bi = a.inverse(), b.inverse()
    c = ai * bi * a * (1 - a)
    d = 1 - ai * bi * a * b
    return c, d


def theta_residual(a: Quaternion, b: Quaternion) -> Quaternion:
    ai, bi = a.inverse(), b.inverse()
    return b * ai * bi * a - ai * bi * a * b - a + bi * a * b


def is_integer_quaternion(q: Quaternion) -> bool:
    return all(c.denominator == 1 for c in q.coefficients())


def is_hurwitz(q: Quaternion) -> bool:
    """Membership in the Hurwitz order: all coefficients integral or all half-odd."""
    cs = q.coefficients()
    if all(c.denominator == 1 for c in cs):
        return True
    return all(c.denominator == 2 for c in cs)


def classify_budapest_type(s: Switch) -> tuple[Quaternion, Quaternion] | None:
    """Return ``(U, V)`` when ``S = (1+U, -V; V, 1+U)`` with orthogonal pure unit ``U, V``."""
    a, b, c, d = s.entries()
    if a != d or c != -b:
        return None
    u, v = a - 1, c
    if u.w != 0 or v.w != 0 or u.norm2() != 1 or v.norm2() != 1:
        return None
    if (u * v.conjugate()).w != 0:
        return None
    return u, v


# symmetry group ---------------------------------------------------------------------


def _rotations() -> list[tuple[tuple[int, int], ...]]:
    """The 24 signed permutations of ``(i, j, k)`` with determinant +1."""
    out = []
    for perm in itertools.permutations(range(3)):
        parity = sum(1 for x, y in itertools.combinations(perm, 2) if x > y) % 2
        for signs in itertools.product((1, -1), repeat=3):
            det = (-1) ** parity * signs[0] * signs[1] * signs[2]
            if det == 1:
                out.append(tuple(zip(perm, signs)))
    return out


ROTATIONS = _rotations()


def rotate(q: Quaternion, rot) -> Quaternion:
    v = (q.x, q.y, q.z)
    return Quaternion(q.w, *(sign * v[src] for src, sign in rot))


def _rotate_switch(s: Switch, rot) -> Switch:
    return Switch(*(rotate(q, rot) for q in s.entries()))


def variant_group(s: Switch) -> list[Switch]:
    """Closure of ``S`` under inverse, dagger and star (eight elements, possibly repeated)."""
    inv = invert_switch(s)
    base = [s, inv]
    base += [dagger(x) for x in base]
    base += [star(x) for x in base]
    return base


def orbit(s: Switch) -> Iterator[Switch]:
    for v in variant_group(s):
        for rot in ROTATIONS:
            yield _rotate_switch(v, rot)


def canonical_representative(s: Switch) -> Switch:
    """Orbit element with the smallest exact coefficient tuple ``(A, B, C, D)``."""
    best = min(orbit(s), key=Switch.key)
    return Switch(*best.entries())


# configuration ------------------------------------------------------------------------


def _parse_rationals(text: str) -> tuple[Fraction, ...]:
    items = [x.strip() for x in text.replace("\n", ",").split(",")]
    return tuple(sorted({Fraction(x) for x in items if x}))


@dataclass(frozen=True)
class SearchConfig:
    a_coefficients: tuple[Fraction, ...]
    b_coefficients: tuple[Fraction, ...]
    ring_filter: str = "none"
    dedup: bool = True
    min_integer_entries: int = 0
    name: str = ""

    def __post_init__(self):
        if not self.a_coefficients or not self.b_coefficients:
            raise ValueError("coefficient sets must be nonempty")
        if self.ring_filter not in RING_FILTERS:
            raise ValueError(f"unknown ring filter {self.ring_filter!r}; expected one of {RING_FILTERS}")
        if not 0 <= self.min_integer_entries <= 4:
            raise ValueError("min_integer_entries must lie in 0..4")

    @classmethod
    def from_mapping(cls, data, name: str = "") -> "SearchConfig":
        return cls(
            a_coefficients=_parse_rationals(data["a_coefficients"]),
            b_coefficients=_parse_rationals(data.get("b_coefficients", data["a_coefficients"])),
            ring_filter=data.get("ring_filter", "none").strip(),
            dedup=str(data.get("dedup", "yes")).strip().lower() in ("1", "yes", "true", "on"),
            min_integer_entries=int(data.get("min_integer_entries", 0)),
            name=data.get("name", name).strip(),
        )

    def describe(self) -> str:
        fmt = lambda cs: ",".join(format_rational(c) for c in cs)  # noqa: E731
        return (
            f"name={self.name or '-'} a={fmt(self.a_coefficients)} b={fmt(self.b_coefficients)} "
            f"ring_filter={self.ring_filter} min_integer_entries={self.min_integer_entries} "
            f"dedup={'yes' if self.dedup else 'no'}"
        )


def load_config(path: str | Path) -> SearchConfig:
    parser = configparser.ConfigParser()
    if not parser.read(path, encoding="utf-8"):
        raise FileNotFoundError(path)
    if "search" not in parser:
        raise ValueError(f"{path}: missing [search] section")
    return SearchConfig.from_mapping(parser["search"], name=Path(path).stem)


PRESETS = ("table1", "table2", "integer")


def preset_config(name: str) -> SearchConfig:
    if name not in PRESETS:
        raise KeyError(f"unknown preset {name!r}; expected one of {PRESETS}")
    text = resources.files("qswitch.presets").joinpath(f"{name}.ini").read_text(encoding="utf-8")
    parser = configparser.ConfigParser()
    parser.read_string(text)
    return SearchConfig.from_mapping(parser["search"], name=name)


# search -------------------------------------------------------------------------------


@dataclass(frozen=True)
class SwitchRecord:
    switch: Switch
    canonical: Switch
    source: tuple[Quaternion, Quaternion]
    budapest_type: bool
    hurwitz: bool
    integer: bool
    verified: bool = field(default=True)

    def serialize(self) -> str:
        flags = {
            "budapest_type": self.budapest_type,
            "hurwitz": self.hurwitz,
            "integer": self.integer,
            "verified": self.verified,
        }
        parts = [self.canonical.serialize()]
        parts += [f"{k}={'yes' if v else 'no'}" for k, v in flags.items()]
        parts.append(f"switch={self.switch.serialize()}")
        parts.append(f"source={self.source[0]};{self.source[1]}")
        return "\t".join(parts)


def grid(coefficients: Sequence[Fraction]) -> Iterator[Quaternion]:
    for w, x, y, z in itertools.product(coefficients, repeat=4):
        yield Quaternion(w, x, y, z)


def norm_constraints_hold(s: Switch) -> bool:
    a, b, c, d = s.entries()
    for q in (a, d):
        if not (q.w > 0 and q.norm2() < 4):
            return False
        if q.norm2() == 1 and q.w != Fraction(1, 2):
            return False
    return b.norm2() * c.norm2() == 1


def _passes_ring_filter(s: Switch, config: SearchConfig) -> bool:
    entries = s.entries()
    if config.ring_filter == "hurwitz" and not all(is_hurwitz(q) for q in entries):
        return False
    if config.ring_filter == "integer" and not all(is_integer_quaternion(q) for q in entries):
        return False
    return sum(is_integer_quaternion(q) for q in entries) >= config.min_integer_entries


def _candidates_for_a(a: Quaternion, config: SearchConfig) -> list[tuple[Quaternion, Switch]]:
    out = []
    for b in grid(config.b_coefficients):
        if not b:
            continue
        if theta_residual(a, b):
            continue
        c, d = derive_cd(a, b)
        if not (c and d):
            continue
        s = Switch(a, b, c, d)
        if not _passes_ring_filter(s, config):
            continue
        if not norm_constraints_hold(s):
            continue
        try:
            report = check_yang_baxter(s)
        except NonUnitError:
            continue
        if report.verdict and report.braid_3x3:
            out.append((b, s))
    return out


def _record(s: Switch, source, dedup: bool) -> SwitchRecord:
    canon = canonical_representative(s) if dedup else s
    return SwitchRecord(
        switch=s,
        canonical=canon,
        source=source,
        budapest_type=classify_budapest_type(s) is not None,
        hurwitz=all(is_hurwitz(q) for q in s.entries()),
        integer=all(is_integer_quaternion(q) for q in s.entries()),
    )


def _worker_count(jobs: int | None) -> int:
    if jobs is None:
        jobs = int(os.environ.get(JOBS_ENV, "1") or 1)
    return max(1, jobs)


def search(config: SearchConfig, jobs: int | None = None) -> list[SwitchRecord]:
    """Enumerate, verify and deduplicate; output order depends only on ``config``."""
    a_values = [a for a in grid(config.a_coefficients) if constraint_filter(a)]
    workers = _worker_count(jobs)
    if workers > 1 and len(a_values) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(_candidates_for_a, a_values, itertools.repeat(config), chunksize=4))
    else:
        batches = [_candidates_for_a(a, config) for a in a_values]

    records: dict[tuple, SwitchRecord] = {}
    for a, found in zip(a_values, batches):
        for b, s in found:
            rec = _record(s, (a, b), config.dedup)
            records.setdefault(rec.canonical.key(), rec)
    return [records[k] for k in sorted(records)]


def covered_rows(records: Iterable[SwitchRecord], rows: Sequence[Switch]) -> list[bool]:
    """For each table row, whether its canonical orbit appears among ``records``."""
    keys = {r.canonical.key() for r in records}
    return [canonical_representative(s).key() in keys for s in rows]


def write_records(records: Iterable[SwitchRecord], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for r in records:
            fh.write(r.serialize() + "\n")
