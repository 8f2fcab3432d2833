"""Finite ranked meet semi-lattices: validation and elementary queries.

Elements are opaque string ids. All order information comes from the cover
relation; ranks are stored explicitly and cross-checked against covers at
load time. The reachability order is materialized as bitmask rows (one int
per element), so comparability tests are O(1) and meets/joins are cheap bit
scans. Instances are immutable after validation and safe to share.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import PosetError


class _Top:
    """Synthetic maximum adjoined when a join has no upper bound in the poset."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "TOP"


TOP = _Top()


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class FVector:
    """Rank-level counts, entries[0] holding the count for index -1 (always 1)."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries or self.entries[0] != 1:
            raise ValueError("f-vector must start with 1 at index -1")
        if any(e < 0 for e in self.entries):
            raise ValueError("f-vector entries must be non-negative")

    @classmethod
    def parse(cls, text: str) -> "FVector":
        try:
            entries = tuple(int(t) for t in text.split(","))
        except ValueError as exc:
            raise ValueError(f"bad f-vector {text!r}") from exc
        return cls(entries)

    def at(self, k: int) -> int:
        """Entry f_k; zero beyond the stored range, undefined below -1."""
        if k < -1:
            raise IndexError("f-vector indices start at -1")
        pos = k + 1
        return self.entries[pos] if pos < len(self.entries) else 0

    @property
    def max_index(self) -> int:
        return len(self.entries) - 2

    def __str__(self) -> str:
        return ",".join(str(e) for e in self.entries)

    def __iter__(self):
        return iter(self.entries)


class RankedPoset:
    """A validated finite ranked meet semi-lattice.

    Construct through `load_poset` / `from_data`; the constructor assumes its
    arguments already passed validation.
    """

    __slots__ = (
        "ids",
        "bottom",
        "covers",
        "_rank",
        "_idx",
        "_down",
        "_up",
        "_lower",
        "_upper",
        "_cache",
    )

    def __init__(self, ids, bottom, covers, rank, idx, down, up, lower, upper):
        self.ids: tuple[str, ...] = ids
        self.bottom: str = bottom
        self.covers: tuple[tuple[str, str], ...] = covers
        self._rank: tuple[int, ...] = rank
        self._idx: dict[str, int] = idx
        self._down: tuple[int, ...] = down
        self._up: tuple[int, ...] = up
        self._lower: tuple[tuple[int, ...], ...] = lower
        self._upper: tuple[tuple[int, ...], ...] = upper
        self._cache: dict = {}

    # -- construction ---------------------------------------------------

    @classmethod
    def from_data(
        cls,
        ranks: Mapping[str, int],
        covers: Iterable[tuple[str, str]],
    ) -> "RankedPoset":
        """Validate and build. Raises PosetError with witnesses on any defect."""
        if not ranks:
            raise PosetError("empty", "poset needs at least one element")
        for e, r in ranks.items():
            if not isinstance(r, int) or r < 0:
                raise PosetError("bad-rank", f"element {e!r} has invalid rank {r!r}", (e,))
        bottoms = sorted(e for e, r in ranks.items() if r == 0)
        if len(bottoms) != 1:
            raise PosetError(
                "bottom",
                f"exactly one rank-0 element required, found {len(bottoms)}",
                tuple(bottoms),
            )
        bottom = bottoms[0]

        cover_list: list[tuple[str, str]] = []
        seen = set()
        for lo, hi in covers:
            if lo not in ranks or hi not in ranks:
                missing = lo if lo not in ranks else hi
                raise PosetError("unknown-element", f"cover names unknown element {missing!r}", (missing,))
            if (lo, hi) in seen:
                continue
            seen.add((lo, hi))
            if ranks[hi] != ranks[lo] + 1:
                raise PosetError(
                    "cover-step",
                    f"cover ({lo!r},{hi!r}) violates rank step: {ranks[lo]} -> {ranks[hi]}",
                    (lo, hi),
                )
            cover_list.append((lo, hi))

        ids = tuple(sorted(ranks, key=lambda e: (ranks[e], e)))
        idx = {e: i for i, e in enumerate(ids)}
        n = len(ids)
        rank = tuple(ranks[e] for e in ids)

        lower = [[] for _ in range(n)]
        upper = [[] for _ in range(n)]
        for lo, hi in cover_list:
            lower[idx[hi]].append(idx[lo])
            upper[idx[lo]].append(idx[hi])

        # Covers raise rank by exactly 1, so processing in index order (sorted
        # by rank) completes each down-set before it is consumed.
        down = [1 << i for i in range(n)]
        for i in range(n):
            for j in lower[i]:
                down[i] |= down[j]
        up = [1 << i for i in range(n)]
        for i in range(n - 1, -1, -1):
            for j in upper[i]:
                up[i] |= up[j]

        bot = idx[bottom]
        for i in range(n):
            if not (down[i] >> bot) & 1:
                raise PosetError(
                    "meet-failure",
                    f"elements {ids[i]!r} and {bottom!r} have no common lower bound",
                    (ids[i], bottom),
                )

        for i in range(n):
            for j in range(i + 1, n):
                common = down[i] & down[j]
                maximal = [z for z in _bits(common) if up[z] & common == 1 << z]
                if len(maximal) != 1:
                    raise PosetError(
                        "meet-failure",
                        f"elements {ids[i]!r} and {ids[j]!r} have {len(maximal)} maximal "
                        f"common lower bounds: {[ids[z] for z in maximal]}",
                        (ids[i], ids[j]) + tuple(ids[z] for z in maximal),
                    )

        return cls(
            ids,
            bottom,
            tuple(cover_list),
            rank,
            idx,
            tuple(down),
            tuple(up),
            tuple(tuple(sorted(v)) for v in lower),
            tuple(tuple(sorted(v)) for v in upper),
        )

    # -- basic queries ---------------------------------------------------

    def __len__(self) -> int:
        return len(self.ids)

    def __contains__(self, e: str) -> bool:
        return e in self._idx

    def index(self, e: str) -> int:
        try:
            return self._idx[e]
        except KeyError:
            raise PosetError("unknown-element", f"unknown element {e!r}", (e,)) from None

    def rank(self, e: str) -> int:
        return self._rank[self.index(e)]

    @property
    def max_rank(self) -> int:
        return self._rank[-1] if self.ids else 0

    def elements_of_rank(self, r: int) -> tuple[str, ...]:
        return tuple(e for e, rr in zip(self.ids, self._rank) if rr == r)

    @property
    def atoms(self) -> tuple[str, ...]:
        return self.elements_of_rank(1)

    def leq(self, x: str, y: str) -> bool:
        return bool((self._down[self.index(y)] >> self.index(x)) & 1)

    def lt(self, x: str, y: str) -> bool:
        return x != y and self.leq(x, y)

    def down_mask(self, e: str) -> int:
        return self._down[self.index(e)]

    def up_mask(self, e: str) -> int:
        return self._up[self.index(e)]

    def ids_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.ids[i] for i in _bits(mask))

    def lower_covers(self, e: str) -> tuple[str, ...]:
        return tuple(self.ids[i] for i in self._lower[self.index(e)])

    def upper_covers(self, e: str) -> tuple[str, ...]:
        return tuple(self.ids[i] for i in self._upper[self.index(e)])

    # -- spec operations ---------------------------------------------------

    def meet(self, x: str, y: str) -> str:
        """Unique maximum of the common lower bounds (exists by validation)."""
        common = self._down[self.index(x)] & self._down[self.index(y)]
        for z in _bits(common):
            if self._up[z] & common == 1 << z:
                return self.ids[z]
        raise AssertionError("validated poset lost its meets")

    def join(self, elems: Iterable[str]):
        """Least common upper bound, or TOP when none exists in the poset."""
        items = list(elems)
        if not items:
            raise ValueError("join of an empty set is not defined here")
        common = self._up[self.index(items[0])]
        for e in items[1:]:
            common &= self._up[self.index(e)]
        if common == 0:
            return TOP
        minimal = [z for z in _bits(common) if self._down[z] & common == 1 << z]
        assert len(minimal) == 1, "two minimal upper bounds in a meet semi-lattice"
        return self.ids[minimal[0]]

    def f_vector(self) -> FVector:
        counts = [0] * (self.max_rank + 1)
        for r in self._rank:
            counts[r] += 1
        assert counts[0] == 1
        return FVector((1, *counts[1:]))

    def up_set(self, e: str) -> "RankedPoset":
        """Induced poset on {x : e <= x}, ranks re-based so e sits at 0."""
        base = self.rank(e)
        mask = self.up_mask(e)
        members = set(_bits(mask))
        ranks = {self.ids[i]: self._rank[i] - base for i in members}
        covers = [
            (lo, hi)
            for lo, hi in self.covers
            if self._idx[lo] in members and self._idx[hi] in members
        ]
        return RankedPoset.from_data(ranks, covers)

    def shadow(self, k: int) -> frozenset[str]:
        """Elements covered by some rank-(k+1) element."""
        out = set()
        for e in self.elements_of_rank(k + 1):
            out.update(self.lower_covers(e))
        return frozenset(out)

    def interval(self, x: str, y: str) -> tuple[frozenset[str], bool]:
        """Closed interval [x, y] plus a flag telling whether it is a chain."""
        if not self.leq(x, y):
            raise PosetError("not-comparable", f"{x!r} is not below {y!r}", (x, y))
        mask = self.up_mask(x) & self.down_mask(y)
        size = mask.bit_count()
        is_chain = size == self.rank(y) - self.rank(x) + 1
        return frozenset(self.ids_of(mask)), is_chain

    def is_chain_interval(self, x: str, y: str) -> bool:
        """True when [x, y] is totally ordered (x <= y required)."""
        mask = self.up_mask(x) & self.down_mask(y)
        return mask.bit_count() == self.rank(y) - self.rank(x) + 1

    def subposet(self, keep: Iterable[str]) -> "RankedPoset":
        """Induced poset on a down-closed-by-rank subset (ranks preserved)."""
        members = set(keep)
        ranks = {e: self.rank(e) for e in members}
        covers = [(lo, hi) for lo, hi in self.covers if lo in members and hi in members]
        return RankedPoset.from_data(ranks, covers)

    # -- serialization ---------------------------------------------------

    def to_doc(self) -> dict:
        return {
            "elements": [{"id": e, "rank": self.rank(e)} for e in self.ids],
            "covers": [list(c) for c in self.covers],
        }

    def __repr__(self) -> str:
        return f"RankedPoset({len(self.ids)} elements, f={self.f_vector()})"


def load_poset(document) -> RankedPoset:
    """Parse the JSON poset interchange format (text or already-parsed dict)."""
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise PosetError("parse", f"invalid JSON: {exc}") from exc
    if not isinstance(document, dict):
        raise PosetError("parse", "poset document must be a JSON object")
    try:
        raw_elements = document["elements"]
        raw_covers = document["covers"]
    except (KeyError, TypeError) as exc:
        raise PosetError("parse", "poset document needs 'elements' and 'covers'") from exc

    ranks: dict[str, int] = {}
    for item in raw_elements:
        try:
            e, r = item["id"], item["rank"]
        except (KeyError, TypeError) as exc:
            raise PosetError("parse", f"bad element entry {item!r}") from exc
        if not isinstance(e, str):
            raise PosetError("parse", f"element id must be a string, got {e!r}")
        if e in ranks:
            raise PosetError("duplicate-id", f"duplicate element id {e!r}", (e,))
        ranks[e] = r

    covers = []
    for pair in raw_covers:
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise PosetError("parse", f"bad cover entry {pair!r}")
        covers.append((pair[0], pair[1]))

    return RankedPoset.from_data(ranks, covers)
