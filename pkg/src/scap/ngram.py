"""Byte-level n-gram extraction, Simplified Profiles and profile intersection.

An n-gram here is a raw window of ``n`` bytes; nothing is decoded or
normalized, so whitespace, tabs, newlines and non-printing bytes all
participate.  A Simplified Profile is the list of distinct n-grams ordered
by descending frequency, truncated to the ``L`` most frequent.  Equal counts
are ordered by ascending byte value so that truncation is deterministic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import IO, Iterable, Mapping

from .errors import ParameterError

MIN_N = 1
MAX_N = 16

PROFILE_MAGIC = "scap-profile"
PROFILE_VERSION = "v1"


def check_n(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or not MIN_N <= n <= MAX_N:
        raise ParameterError(f"n-gram length must be an integer in [{MIN_N}, {MAX_N}], got {n!r}")


def check_L(L: int) -> None:
    if isinstance(L, bool) or not isinstance(L, int) or L < 1:
        raise ParameterError(f"profile length L must be a positive integer, got {L!r}")


@dataclass(frozen=True)
class FrequencyTable:
    """Occurrence counts of every distinct n-gram of one byte source."""

    n: int
    counts: Mapping[bytes, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.counts)

    def total(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class SimplifiedProfile:
    """Ranked, truncated n-gram list; most frequent first.

    ``L`` is the cutoff that produced the profile (``None`` if untruncated);
    ``len(profile)`` is the actual number of entries, which is smaller than
    ``L`` when the source had fewer distinct n-grams.
    """

    n: int
    entries: tuple[tuple[bytes, int], ...]
    L: int | None = None

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @cached_property
    def grams(self) -> frozenset[bytes]:
        return frozenset(g for g, _ in self.entries)

    def prefix(self, L: int) -> SimplifiedProfile:
        """The profile this one would have been had it been cut at ``L``."""
        check_L(L)
        return SimplifiedProfile(self.n, self.entries[:L], L)


def extract_ngrams(data: bytes, n: int) -> FrequencyTable:
    """Count every contiguous ``n``-byte window of ``data``.

    >>> sorted(extract_ngrams(b"aaaa", 2).counts.items())
    [(b'aa', 3)]
    """
    check_n(n)
    data = bytes(data)
    if len(data) < n:
        return FrequencyTable(n, {})
    counts = Counter(data[i:i + n] for i in range(len(data) - n + 1))
    return FrequencyTable(n, dict(counts))


def _rank_key(item: tuple[bytes, int]):
    gram, count = item
    return (-count, gram)


def rank(table: FrequencyTable) -> SimplifiedProfile:
    """Order the whole table by (count descending, bytes ascending), no cutoff."""
    entries = tuple(sorted(table.counts.items(), key=_rank_key))
    return SimplifiedProfile(table.n, entries, None)


def rank_and_truncate(table: FrequencyTable, L: int) -> SimplifiedProfile:
    """Keep the ``L`` most frequent n-grams of ``table``."""
    check_L(L)
    full = rank(table)
    return SimplifiedProfile(table.n, full.entries[:L], L)


def spi(a: SimplifiedProfile, b: SimplifiedProfile) -> int:
    """Number of n-grams common to both profiles; counts are ignored."""
    if a.n != b.n:
        raise ParameterError(f"cannot intersect profiles with n={a.n} and n={b.n}")
    small, large = (a, b) if len(a) <= len(b) else (b, a)
    return len(small.grams & large.grams)


def write_profile(profile: SimplifiedProfile, fp: IO[str]) -> None:
    """Serialize as ``scap-profile v1`` text: a header, then rank/count/hex lines."""
    L = profile.L if profile.L is not None else len(profile)
    fp.write(f"{PROFILE_MAGIC} {PROFILE_VERSION} n={profile.n} L={L} len={len(profile)}\n")
    for rank_no, (gram, count) in enumerate(profile.entries, start=1):
        fp.write(f"{rank_no}\t{count}\t{gram.hex()}\n")


def dumps_profile(profile: SimplifiedProfile) -> str:
    import io

    buf = io.StringIO()
    write_profile(profile, buf)
    return buf.getvalue()


def _parse_header(line: str) -> dict[str, int]:
    parts = line.split()
    if len(parts) != 5 or parts[0] != PROFILE_MAGIC or parts[1] != PROFILE_VERSION:
        raise ParameterError(f"not a {PROFILE_MAGIC} {PROFILE_VERSION} header: {line!r}")
    fields = {}
    for part in parts[2:]:
        key, sep, value = part.partition("=")
        if not sep or key not in ("n", "L", "len"):
            raise ParameterError(f"bad header field {part!r}")
        try:
            fields[key] = int(value)
        except ValueError:
            raise ParameterError(f"bad header value {part!r}") from None
    if set(fields) != {"n", "L", "len"}:
        raise ParameterError(f"incomplete header: {line!r}")
    return fields


def read_profile(lines: Iterable[str]) -> SimplifiedProfile:
    """Inverse of :func:`write_profile`."""
    it = iter(lines)
    try:
        header = _parse_header(next(it).rstrip("\n"))
    except StopIteration:
        raise ParameterError("empty profile file") from None
    n = header["n"]
    check_n(n)
    entries = []
    for lineno, line in enumerate(it, start=2):
        line = line.rstrip("\n")
        if not line:
            continue
        try:
            rank_str, count_str, hex_str = line.split("\t")
            rank_no, count, gram = int(rank_str), int(count_str), bytes.fromhex(hex_str)
        except ValueError:
            raise ParameterError(f"line {lineno}: malformed profile entry {line!r}") from None
        if rank_no != len(entries) + 1 or len(gram) != n or count < 1:
            raise ParameterError(f"line {lineno}: inconsistent profile entry {line!r}")
        entries.append((gram, count))
    if len(entries) != header["len"]:
        raise ParameterError(f"header declares {header['len']} entries, found {len(entries)}")
    return SimplifiedProfile(n, tuple(entries), header["L"])


def loads_profile(text: str) -> SimplifiedProfile:
    return read_profile(text.splitlines())
