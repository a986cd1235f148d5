"""Author profiles and nearest-profile attribution."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import CorpusError, ParameterError
from .ngram import SimplifiedProfile, check_L, check_n, extract_ngrams, rank_and_truncate, spi

FILE_SEPARATOR = b"\n"


def join_files(files: Sequence[bytes]) -> bytes:
    """Concatenate files in order with one newline byte between neighbours."""
    return FILE_SEPARATOR.join(bytes(f) for f in files)


@dataclass(frozen=True)
class AuthorProfile:
    author_id: str
    profile: SimplifiedProfile
    source_byte_count: int

    def __post_init__(self):
        if not self.author_id:
            raise ParameterError("author_id must be non-empty")


@dataclass(frozen=True)
class Attribution:
    test_id: str
    chosen_author: str
    scores: Mapping[str, int]
    tie: bool

    def to_record(self) -> str:
        """``<test_id>\\t<chosen>\\t<tie 0|1>\\t<author:score,...>`` with authors sorted."""
        scores = ",".join(f"{a}:{self.scores[a]}" for a in sorted(self.scores))
        return f"{self.test_id}\t{self.chosen_author}\t{int(self.tie)}\t{scores}"

    @classmethod
    def from_record(cls, line: str) -> Attribution:
        try:
            test_id, chosen, tie, scores = line.rstrip("\n").split("\t")
            pairs = (item.rsplit(":", 1) for item in scores.split(",") if item)
            score_map = {a: int(s) for a, s in pairs}
        except ValueError:
            raise ParameterError(f"malformed attribution record {line!r}") from None
        if tie not in ("0", "1"):
            raise ParameterError(f"tie flag must be 0 or 1 in {line!r}")
        return cls(test_id, chosen, score_map, tie == "1")


def build_author_profile(author_id: str, training_files: Sequence[bytes], n: int, L: int) -> AuthorProfile:
    if not training_files:
        raise CorpusError(f"author {author_id!r} has no training files")
    check_n(n)
    check_L(L)
    data = join_files(training_files)
    return AuthorProfile(author_id, rank_and_truncate(extract_ngrams(data, n), L), len(data))


def build_test_profile(test_id: str, file: bytes, n: int, L: int) -> SimplifiedProfile:
    # test_id is carried by the caller's Attribution; the profile itself is anonymous
    return rank_and_truncate(extract_ngrams(file, n), L)


def attribute(test: SimplifiedProfile, candidates: Mapping[str, AuthorProfile], test_id: str = "") -> Attribution:
    """Pick the candidate whose profile shares the most n-grams with ``test``.

    Ties go to the lexicographically least author id and set ``tie``.
    """
    if not candidates:
        raise ParameterError("attribute() needs at least one candidate author")
    scores = {}
    for author_id, cand in candidates.items():
        if cand.profile.n != test.n:
            raise ParameterError(
                f"candidate {author_id!r} has n={cand.profile.n}, test profile has n={test.n}"
            )
        scores[author_id] = spi(test, cand.profile)
    best = max(scores.values())
    winners = sorted(a for a, s in scores.items() if s == best)
    return Attribution(test_id, winners[0], scores, len(winners) > 1)
